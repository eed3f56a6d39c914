"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria that do not hold are still run as stated; their failures are
recorded in the decisions ledger rather than relaxed here.
"""

import json
import random
import time

import pytest

from oracles import all_maps, signed_graph_class_reps, valid_maps
from signedhom.bound10 import swapped_dagger, verify_extension_lemmas
from signedhom.cli import main
from signedhom.core import POS, canonical_form, classify_vertex, find_induced_copies, flip_signs, from_pairs
from signedhom.harness import (
    SurveyOptions,
    components_properly_subcubic,
    is_properly_subcubic,
    random_properly_subcubic,
    run_survey,
)
from signedhom.homsearch import count_homomorphisms, find_homomorphism
from signedhom.targets import all_subdivided_k4_signatures, build_sp9, verify_sp9_adjacency

SEED = 20191


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")


def check(capsys, number, ok, detail, elapsed, limit):
    in_time = elapsed < limit
    report(capsys, number, ok and in_time, f"{detail} ({elapsed:.2f}s, limit {limit}s)")
    assert in_time, f"criterion {number} took {elapsed:.1f}s"
    assert ok, detail


@pytest.fixture(scope="module")
def sweep(star_catalog):
    start = time.perf_counter()
    opts = SurveyOptions(max_n=10, sp9star=True, sample_n10=1000, seed=SEED, timings=False)
    summary, reports = run_survey(opts, star_catalog)
    return summary, reports, time.perf_counter() - start


def test_criterion_1_adjacency(capsys):
    start = time.perf_counter()
    sp9 = build_sp9()
    adj = verify_sp9_adjacency(sp9)
    # x-k-y with x, y pinned to the edge ends; the count is the number of k
    paths = {k: from_pairs(3, [(0, 1), (1, 2)], k) for k in ("++", "+-", "-+", "--")}
    bad = []
    for u, v, s in sp9.edges:
        counts = tuple(count_homomorphisms(paths[k], sp9, {0: u, 2: v}) for k in ("++", "+-", "-+", "--"))
        want = (1, 2, 2, 2) if s is POS else (2, 2, 2, 1)
        if counts != want:
            bad.append((u, v, counts))
    ok = adj.ok and len(adj.counts) == 36 and len(adj.bullets) == 8 and not bad
    check(capsys, 1, ok, f"{sum(adj.bullets.values())}/8 bullets, {36 - len(bad)}/36 edges by hom count",
          time.perf_counter() - start, 1)


def test_criterion_2_self_complementary(capsys):
    start = time.perf_counter()
    sp9 = build_sp9()
    ok = canonical_form(sp9) == canonical_form(flip_signs(sp9))
    check(capsys, 2, ok, "SP9 isomorphic to its sign flip", time.perf_counter() - start, 1)


def test_criterion_3_obstructions(capsys, catalog):
    start = time.perf_counter()
    sp9 = catalog.sp9
    failing = {canonical_form(g) for g in all_subdivided_k4_signatures() if not valid_maps(g, sp9).any()}
    derived = {canonical_form(p.graph) for p in catalog.obstructions}
    flip_ok = canonical_form(flip_signs(catalog.k4s_plus.graph)) == canonical_form(catalog.k4s_minus.graph)
    same_sign = []
    for p in catalog.obstructions:
        kinds = [classify_vertex(p.graph, v) for v in range(p.graph.n)]
        same_sign.append(max(kinds.count(k) for k in set(kinds) if k.name.startswith("ALL")))
    ok = failing == derived and len(derived) == 2 and flip_ok and min(same_sign) >= 3
    check(capsys, 3, ok,
          f"{len(failing)} failing classes, flip {'ok' if flip_ok else 'broken'}, same-sign vertices {same_sign}",
          time.perf_counter() - start, 10)


def test_criterion_4_extension_lemmas(capsys, catalog):
    start = time.perf_counter()
    main_report = verify_extension_lemmas(catalog)
    swapped = verify_extension_lemmas(catalog, swapped_dagger(catalog), catalog.dagger.z)
    plain = verify_extension_lemmas(catalog, catalog.sp9, 0)
    swapped_teeth = any(c.pattern == "k4s+" for c in swapped.failures)
    plain_teeth = any(c.pattern == "k4s+" for c in plain.failures)
    passed = sum(c.ok for c in main_report.cases)
    ok = main_report.ok and swapped_teeth and plain_teeth
    fails = ", ".join(f"{c.pattern} pin={c.pin} edge={c.edge_sign.symbol}" for c in main_report.failures)
    detail = (f"{passed}/{len(main_report.cases)} cases pass"
              + (f" (failing: {fails})" if fails else "")
              + f"; controls fail as expected: swapped={swapped_teeth}, plain={plain_teeth}")
    check(capsys, 4, ok, detail, time.perf_counter() - start, 10)


def test_criterion_5_lemma2_desk_scale(capsys, catalog):
    start = time.perf_counter()
    sp9 = catalog.sp9

    def screened(g):
        return not any(find_induced_copies(g, p.graph) for p in catalog.obstructions)

    exhaustive = failures = 0
    witnesses = []
    componentwise_failures = 0
    for n in range(1, 6):
        for g in signed_graph_class_reps(n):
            if not is_properly_subcubic(g) or not screened(g):
                continue
            exhaustive += 1
            if find_homomorphism(g, sp9) is None:
                failures += 1
                witnesses.append(g)
                componentwise_failures += components_properly_subcubic(g)
    rng = random.Random(SEED)
    sampled = 0
    while sampled < 1000:
        g = random_properly_subcubic(rng, max_n=14)
        if not screened(g):
            continue
        sampled += 1
        if find_homomorphism(g, sp9) is None:
            failures += 1
            witnesses.append(g)
            componentwise_failures += components_properly_subcubic(g)
    ok = failures == 0
    detail = f"{exhaustive} exhaustive + {sampled} random instances, {failures} do not map"
    if witnesses:
        detail += (f"; {len(witnesses) - componentwise_failures} of them have a component"
                   f" with no vertex of degree <= 2, e.g. "
                   f"{' '.join(f'{u}{v}{s.symbol}' for u, v, s in witnesses[0].edges)} on {witnesses[0].n} vertices")
    check(capsys, 5, ok, detail, time.perf_counter() - start, 300)


def test_criterion_6_main_sweep(capsys, sweep):
    summary, reports, elapsed = sweep
    bad = [r for r in reports if not r.bound10_ok or r.colours > 10 or r.chi is None or r.chi > 10]
    by_n = {n: sum(r.n == n for r in reports) for n in (4, 6, 8, 10)}
    ok = not bad and summary.falsifications == 0 and by_n == {4: 11, 6: 100, 8: 2581, 10: 1000}
    check(capsys, 6, ok,
          f"instances per n {by_n}, falsifications {summary.falsifications}, "
          f"fallbacks {summary.fallbacks}, branches {summary.branches}",
          elapsed, 900)


def test_criterion_7_sp9star(capsys, sweep):
    summary, reports, elapsed = sweep
    small = [r for r in reports if r.n <= 8]
    failures = [r.id for r in small if r.sp9star_ok is not True]
    check(capsys, 7, not failures, f"{len(small) - len(failures)}/{len(small)} instances map to SP9-star",
          elapsed, 600)


def test_criterion_8_bounds(capsys, sweep):
    summary, _, _ = sweep
    ok = summary.max_chi is not None and 4 <= summary.max_chi <= 10
    lit = "reached" if summary.literature_lower_bound_reached else "not reached"
    report(capsys, 8, ok,
           f"chi histogram {summary.chi_histogram}, max {summary.max_chi} "
           f"(witness {summary.max_chi_witness}); literature lower bound 8 {lit}")
    assert ok


def test_criterion_9_oracle_equivalence(capsys, catalog):
    start = time.perf_counter()
    targets = (catalog.sp9, catalog.dagger.graph)
    disagreements = checked = 0
    for n in range(1, 6):
        for g in signed_graph_class_reps(n):
            for h in targets:
                maps = all_maps(g.n, h.n)
                mask = valid_maps(g, h, maps)
                checked += 1
                disagreements += (find_homomorphism(g, h) is not None) != bool(mask.any())
                for a in range(h.n):
                    checked += 1
                    want = bool((mask & (maps[:, 0] == a)).any())
                    disagreements += (find_homomorphism(g, h, {0: a}) is not None) != want
                if g.n >= 2:
                    for a, b in ((0, 1), (0, 4), (0, h.n - 1), (2, 2)):
                        checked += 1
                        want = bool((mask & (maps[:, 0] == a) & (maps[:, g.n - 1] == b)).any())
                        got = find_homomorphism(g, h, {0: a, g.n - 1: b}) is not None
                        disagreements += got != want
    check(capsys, 9, disagreements == 0, f"{checked} queries, {disagreements} disagreements",
          time.perf_counter() - start, 300)


def test_criterion_10_determinism(capsys, tmp_path):
    def run(name):
        out = tmp_path / name
        assert main(["survey", "--max-n", "6", "--out", str(out)]) == 0
        capsys.readouterr()
        lines = []
        for line in out.read_text().splitlines():
            obj = json.loads(line)
            obj.pop("seconds", None)
            lines.append(json.dumps(obj, sort_keys=True))
        return "\n".join(lines).encode()

    a, b = run("a.jsonl"), run("b.jsonl")
    ok = a == b and len(a) > 0
    report(capsys, 10, ok, f"two survey runs, {len(a)} bytes each after removing timings, identical={a == b}")
    assert ok

