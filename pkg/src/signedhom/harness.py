"""Instance supply and sweeps over connected cubic signed graphs."""

from __future__ import annotations

import json
import logging
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .core import NEG, POS, SignedGraph, automorphisms, canonical_form, canonical_labelling, to_graph6

log = logging.getLogger(__name__)

SUPPORTED_N = (4, 6, 8, 10)


def _bfs_labelled_cubic(n: int) -> Iterator[list[tuple[int, int]]]:
    """Connected cubic graphs labelled in breadth-first order.

    Vertex ``i`` is completed before ``i + 1``; any neighbour it still needs
    is either an already discovered vertex or the next fresh label.
    """
    adj: list[set[int]] = [set() for _ in range(n)]

    def rec(i: int, nxt: int) -> Iterator[list[tuple[int, int]]]:
        if i == n:
            yield sorted((u, v) for u in range(n) for v in adj[u] if u < v)
            return
        if i >= nxt:
            return
        need = 3 - len(adj[i])
        pool = [j for j in range(i + 1, nxt) if len(adj[j]) < 3 and j not in adj[i]]
        for fresh in range(need + 1):
            if nxt + fresh > n:
                break
            for old in combinations(pool, need - fresh):
                new = list(old) + list(range(nxt, nxt + fresh))
                for j in new:
                    adj[i].add(j)
                    adj[j].add(i)
                yield from rec(i + 1, nxt + fresh)
                for j in new:
                    adj[i].discard(j)
                    adj[j].discard(i)

    yield from rec(0, 1)


@lru_cache(maxsize=None)
def enumerate_cubic_graphs(n: int) -> tuple[SignedGraph, ...]:
    """All connected 3-regular simple graphs on ``n`` vertices up to
    isomorphism, as all-positive signed graphs in canonical labelling."""
    if n not in SUPPORTED_N:
        raise ValueError(f"n must be one of {SUPPORTED_N}, got {n}")
    found: dict[bytes, SignedGraph] = {}
    for pairs in _bfs_labelled_cubic(n):
        g = SignedGraph(n, tuple((u, v, POS) for u, v in pairs))
        code, perm = canonical_labelling(g)
        if code not in found:
            found[code] = g.relabel(perm)
    return tuple(found[k] for k in sorted(found))


def edge_permutations(g: SignedGraph) -> list[list[int]]:
    """Automorphisms of the underlying graph acting on edge indices."""
    topo = SignedGraph(g.n, tuple((u, v, POS) for u, v, _ in g.edges))
    index = {(u, v): i for i, (u, v, _) in enumerate(topo.edges)}
    perms = []
    for a in automorphisms(topo):
        perms.append([index[tuple(sorted((a[u], a[v])))] for u, v, _ in topo.edges])
    return perms


def signature_orbits(g: SignedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Orbit representatives of sign vectors under the topology's
    automorphisms, and the size of each orbit.

    A sign vector is an integer whose bit ``j`` marks edge ``j`` negative;
    the representative of an orbit is its least element.
    """
    m = g.m
    masks = np.arange(1 << m, dtype=np.int64)
    canon = masks.copy()
    for pe in edge_permutations(g):
        image = np.zeros_like(masks)
        for j, t in enumerate(pe):
            image |= ((masks >> j) & 1) << t
        np.minimum(canon, image, out=canon)
    reps = masks[canon == masks]
    sizes = np.bincount(canon, minlength=1 << m)[reps]
    return reps, sizes


def apply_signature(g: SignedGraph, mask: int) -> SignedGraph:
    return SignedGraph(
        g.n,
        tuple((u, v, NEG if mask >> j & 1 else POS) for j, (u, v, _) in enumerate(g.edges)),
    )


def enumerate_signatures(g: SignedGraph, reduce: bool = True) -> Iterator[SignedGraph]:
    """Every sign assignment on ``g``'s edges, or one per automorphism orbit."""
    if reduce:
        reps, _ = signature_orbits(g)
        masks = (int(r) for r in reps)
    else:
        masks = iter(range(1 << g.m))
    for mask in masks:
        yield apply_signature(g, mask)


@lru_cache(maxsize=None)
def cubic_instances(n: int, reduce: bool = True) -> tuple[tuple[SignedGraph, int], ...]:
    """``(signed graph, weight)`` for every connected cubic topology on ``n``
    vertices and every signature (orbit); weight is the orbit size."""
    out = []
    for topo in enumerate_cubic_graphs(n):
        if reduce:
            reps, sizes = signature_orbits(topo)
            out.extend((apply_signature(topo, int(r)), int(s)) for r, s in zip(reps, sizes))
        else:
            out.extend((apply_signature(topo, mask), 1) for mask in range(1 << topo.m))
    return tuple(out)


def sample_instances(n: int, size: int, seed: int) -> list[tuple[SignedGraph, int]]:
    """A fixed-seed sample of signature orbits over all cubic topologies on
    ``n`` vertices, drawn uniformly from the orbit list."""
    pool: list[tuple[int, int, int]] = []
    topos = enumerate_cubic_graphs(n)
    for t, topo in enumerate(topos):
        reps, sizes = signature_orbits(topo)
        pool.extend((t, int(r), int(s)) for r, s in zip(reps, sizes))
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(len(pool)), min(size, len(pool))))
    return [(apply_signature(topos[pool[i][0]], pool[i][1]), pool[i][2]) for i in picked]


def canonical_id(g: SignedGraph) -> str:
    """``graph6:signs`` of the canonically relabelled signed graph."""
    c = g.relabel(canonical_labelling(g)[1])
    return f"{to_graph6(c)}:{c.signature()}"


# -- survey ----------------------------------------------------------------


@dataclass
class SurveyOptions:
    max_n: int = 8
    reduce: bool = True
    exact_chi: bool = True
    exact_chi_max_n: int = 10
    sp9star: bool = False
    sample_n10: int = 1000
    seed: int = 20191
    timings: bool = True


@dataclass
class InstanceReport:
    id: str
    n: int
    signature: str
    weight: int
    chi: int | None
    colours: int
    bound10_ok: bool
    branch: str
    fallback: bool
    sp9star_ok: bool | None
    falsification: str | None = None
    seconds: float | None = None


@dataclass
class SweepSummary:
    instances: int = 0
    weighted_instances: int = 0
    chi_histogram: dict[int, int] = field(default_factory=dict)
    weighted_chi_histogram: dict[int, int] = field(default_factory=dict)
    max_chi: int | None = None
    max_chi_witness: str | None = None
    falsifications: int = 0
    fallbacks: int = 0
    branches: dict[str, int] = field(default_factory=dict)
    sp9star_failures: int = 0
    seed: int | None = None
    literature_lower_bound: int = 8
    literature_lower_bound_reached: bool = False

    @property
    def ok(self) -> bool:
        return self.falsifications == 0 and self.sp9star_failures == 0


def survey_instance(g: SignedGraph, weight: int, opts: SurveyOptions, catalog) -> InstanceReport:
    from .bound10 import InternalFalsification, ten_colouring
    from .colouring import chromatic_number, validate_colouring
    from .homsearch import find_homomorphism

    start = time.perf_counter()
    falsification = None
    try:
        col, trace = ten_colouring(g, catalog)
        ok = validate_colouring(g, col) and col.k <= 10
        colours, branch, fallback = col.used, trace.name, trace.fallback
    except InternalFalsification as exc:
        ok, colours, branch, fallback = False, 0, "none", False
        falsification = str(exc)
    chi = chromatic_number(g) if opts.exact_chi and g.n <= opts.exact_chi_max_n else None
    if chi is not None and ok and chi > colours:
        falsification = f"exact chi {chi} exceeds constructed colouring size {colours}"
    if chi is not None and chi > 10:
        falsification = f"exact chi {chi} exceeds 10"
    star_ok = None
    if opts.sp9star:
        star_ok = find_homomorphism(g, catalog.star.graph) is not None
    if not ok and falsification is None:
        falsification = "colouring failed validation"
    return InstanceReport(
        id=canonical_id(g),
        n=g.n,
        signature=g.signature(),
        weight=weight,
        chi=chi,
        colours=colours,
        bound10_ok=ok,
        branch=branch,
        fallback=fallback,
        sp9star_ok=star_ok,
        falsification=falsification,
        seconds=round(time.perf_counter() - start, 6) if opts.timings else None,
    )


def survey_instances(opts: SurveyOptions) -> list[tuple[SignedGraph, int]]:
    out: list[tuple[SignedGraph, int]] = []
    for n in SUPPORTED_N:
        if n > opts.max_n:
            break
        if n == 10:
            out.extend(sample_instances(10, opts.sample_n10, opts.seed))
        else:
            out.extend(cubic_instances(n, opts.reduce))
    return out


def summarise(reports: list[InstanceReport], seed: int | None = None) -> SweepSummary:
    s = SweepSummary(seed=seed)
    hist: Counter[int] = Counter()
    whist: Counter[int] = Counter()
    branches: Counter[str] = Counter()
    for r in reports:
        s.instances += 1
        s.weighted_instances += r.weight
        s.falsifications += r.falsification is not None
        s.fallbacks += r.fallback
        s.sp9star_failures += r.sp9star_ok is False
        branches[r.branch] += 1
        if r.chi is not None:
            hist[r.chi] += 1
            whist[r.chi] += r.weight
            if s.max_chi is None or r.chi > s.max_chi:
                s.max_chi, s.max_chi_witness = r.chi, r.id
    s.chi_histogram = dict(sorted(hist.items()))
    s.weighted_chi_histogram = dict(sorted(whist.items()))
    s.branches = dict(sorted(branches.items()))
    s.literature_lower_bound_reached = s.max_chi is not None and s.max_chi >= 8
    return s


def run_survey(
    opts: SurveyOptions | None = None, catalog=None, jobs: int = 1
) -> tuple[SweepSummary, list[InstanceReport]]:
    """Colour every instance, cross-check it, and aggregate.

    Reports come back sorted by canonical id, so the output does not depend
    on ``jobs``.
    """
    from .targets import build_catalog

    opts = opts or SurveyOptions()
    catalog = catalog or build_catalog(with_star=opts.sp9star)
    instances = survey_instances(opts)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(survey_instance, g, w, opts, catalog) for g, w in instances]
            reports = [f.result() for f in futures]
    else:
        reports = [survey_instance(g, w, opts, catalog) for g, w in instances]
    reports.sort(key=lambda r: (r.n, r.id))
    summary = summarise(reports, opts.seed if opts.max_n >= 10 else None)
    log.info("survey: %d instances, %d falsifications", summary.instances, summary.falsifications)
    return summary, reports


def write_report(path, summary: SweepSummary, reports: list[InstanceReport]) -> None:
    """Line-delimited JSON: one object per instance, then the summary."""
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(json.dumps(asdict(r), sort_keys=True) + "\n")
        fh.write(json.dumps({"summary": asdict(summary)}, sort_keys=True) + "\n")


def random_properly_subcubic(rng: random.Random, max_n: int = 14) -> SignedGraph:
    """A random signed graph of maximum degree 3 in which every component
    has a vertex of degree at most 2."""
    n = rng.randint(1, max_n)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    density = rng.random()
    deg = [0] * n
    chosen = []
    for u, v in pairs:
        if deg[u] < 3 and deg[v] < 3 and rng.random() < density:
            chosen.append((u, v))
            deg[u] += 1
            deg[v] += 1
    g = SignedGraph(n, tuple((u, v, POS) for u, v in chosen))
    drop = set()
    for comp in g.components():
        if all(deg[v] == 3 for v in comp):
            inside = [e for e in chosen if e[0] in comp]
            drop.add(rng.choice(inside))
    return SignedGraph(
        n,
        tuple((u, v, rng.choice((POS, NEG))) for u, v in chosen if (u, v) not in drop),
    )


def is_properly_subcubic(g: SignedGraph) -> bool:
    degs = g.degrees()
    return bool(degs) and max(degs) <= 3 and min(degs) <= 2


def components_properly_subcubic(g: SignedGraph) -> bool:
    degs = g.degrees()
    return all(max(degs[v] for v in c) <= 3 and min(degs[v] for v in c) <= 2
               for c in g.components())
