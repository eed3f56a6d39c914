"""Command line entry point ``sg``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .core import format_signed_graph, parse_signed_graph

EXIT_INPUT = 2
EXIT_FALSIFIED = 3


def _read_graph(path: str):
    return parse_signed_graph(Path(path).read_text(encoding="utf-8"))


def _parse_pin(text: str) -> tuple[int, int]:
    try:
        u, a = text.split("=")
        return int(u), int(a)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pin must look like u=a, got {text!r}") from None


def cmd_targets(args) -> int:
    from .targets import build_catalog

    cat = build_catalog(with_star=args.which == "sp9star")
    if args.which == "sp9":
        out = format_signed_graph(cat.sp9, ["SP9: vertex 3r+c sits at row r, column c",
                                            "positive iff same row or same column"])
    elif args.which == "sp9dagger":
        d = cat.dagger
        notes = [f"SP9-dagger: z={d.z}", f"z positive to {list(d.nplus)}",
                 f"z negative to {list(d.nminus)}"]
        notes += [f"extension case fails: {c.pattern} pin={c.pin} edge={c.edge_sign.symbol}"
                  for c in d.failed]
        out = format_signed_graph(d.graph, notes)
    elif args.which == "sp9star":
        st = cat.star
        a, b, e = st.base
        out = format_signed_graph(st.graph, [
            f"SP9-star: zero_prime={st.zero_prime} one_prime={st.one_prime}",
            f"roles: 0 -> {a}, 1 -> {b}, 8 -> {e}",
        ])
    else:
        pat = cat.k4s_plus if args.which == "k4s+" else cat.k4s_minus
        out = format_signed_graph(pat.graph, [
            f"{pat.name}: vertex i has role x(i+1); x1 is the degree-2 vertex",
            "signature derived by search, not transcribed from a drawing",
        ])
    sys.stdout.write(out)
    return 0


def cmd_hom(args) -> int:
    from .homsearch import count_homomorphisms, find_homomorphism

    g, h = _read_graph(args.source), _read_graph(args.target)
    pins = dict(args.pin or [])
    if args.count:
        k = count_homomorphisms(g, h, pins)
        print(k)
        return 0 if k else 1
    phi = find_homomorphism(g, h, pins)
    if phi is None:
        print("not found")
        return 1
    print(" ".join(map(str, phi)))
    return 0


def cmd_chi(args) -> int:
    from .colouring import Colouring, chromatic_colouring, validate_colouring

    g = _read_graph(args.graph)
    if args.check:
        labels = json.loads(Path(args.check).read_text(encoding="utf-8"))
        if isinstance(labels, dict):
            labels = labels["labels"]
        ok = validate_colouring(g, labels)
        print("valid" if ok else "invalid")
        return 0 if ok else 1
    c = chromatic_colouring(g)
    print(json.dumps({"chi": c.k, "labels": list(c.labels)}))
    return 0


def cmd_bound10(args) -> int:
    from .bound10 import InternalFalsification, ten_colouring

    g = _read_graph(args.graph)
    try:
        c, trace = ten_colouring(g)
    except InternalFalsification as exc:
        print(f"internal falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    payload = {"k": c.k, "labels": list(c.labels)}
    if args.trace:
        payload["trace"] = trace.to_dict()
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_survey(args) -> int:
    from dataclasses import asdict

    from .harness import SurveyOptions, run_survey, write_report

    opts = SurveyOptions(
        max_n=args.max_n,
        reduce=args.reduce,
        exact_chi=args.exact_chi,
        sp9star=args.sp9star,
        sample_n10=args.sample,
        seed=args.seed,
        timings=args.timings,
    )
    summary, reports = run_survey(opts, jobs=args.jobs)
    if args.out:
        write_report(args.out, summary, reports)
    print(json.dumps(asdict(summary), sort_keys=True))
    return 0 if summary.ok else EXIT_FALSIFIED


def cmd_verify(args) -> int:
    from .bound10 import verify_extension_lemmas
    from .core import canonical_form, flip_signs
    from .targets import build_catalog, verify_sp9_adjacency

    cat = build_catalog()
    results = {}
    adj = verify_sp9_adjacency(cat.sp9)
    results["adjacency"] = adj.ok
    results["self-complementary"] = canonical_form(cat.sp9) == canonical_form(flip_signs(cat.sp9))
    results["obstructions flip"] = canonical_form(flip_signs(cat.k4s_plus.graph)) == canonical_form(
        cat.k4s_minus.graph
    )
    ext = verify_extension_lemmas(cat)
    results["extension lemmas"] = ext.ok
    for name, ok in results.items():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    for c in ext.failures:
        print(f"      failing case: {c.pattern} pin={c.pin} edge={c.edge_sign.symbol}")
    return 0 if all(results.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sg", description="2-edge-coloured graph homomorphisms")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("targets", help="fixed target graphs")
    tsub = t.add_subparsers(dest="action", required=True)
    dump = tsub.add_parser("dump", help="print a target in .sg format")
    dump.add_argument("--which", required=True,
                      choices=["sp9", "sp9dagger", "sp9star", "k4s+", "k4s-"])
    dump.set_defaults(func=cmd_targets)

    h = sub.add_parser("hom", help="search for a homomorphism G -> H")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--pin", action="append", type=_parse_pin, metavar="u=a")
    h.add_argument("--count", action="store_true")
    h.set_defaults(func=cmd_hom)

    c = sub.add_parser("chi", help="exact chromatic number, or check a colouring")
    c.add_argument("--check", metavar="COLOURS_JSON")
    c.add_argument("graph")
    c.set_defaults(func=cmd_chi)

    b = sub.add_parser("bound10", help="10-colour a connected cubic graph")
    b.add_argument("graph")
    b.add_argument("--trace", action="store_true")
    b.set_defaults(func=cmd_bound10)

    s = sub.add_parser("survey", help="sweep connected cubic signed graphs")
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--no-reduce", dest="reduce", action="store_false")
    s.add_argument("--exact-chi", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--sp9star", action="store_true")
    s.add_argument("--sample", type=int, default=1000, help="instances drawn at n=10")
    s.add_argument("--seed", type=int, default=20191)
    s.add_argument("--timings", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_survey)

    v = sub.add_parser("verify", help="run the target/lemma checks")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
