"""The fixed target graphs and obstruction patterns.

``SP9`` is the complete graph on the 3x3 grid with an edge positive when
its endpoints share a row or a column (the rook's graph K3 x K3) and
negative otherwise.  Everything else here is built on top of it, and the
details that depend on a particular drawing of SP9 (which vertices the
extra vertices attach to, the exact obstruction signatures) are found by
search rather than hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    NEG,
    POS,
    Sign,
    SignedGraph,
    VertexKind,
    canonical_form,
    classify_vertex,
    flip_signs,
)
from .homsearch import find_homomorphism

ROLES = ("x1", "x2", "x3", "x4", "x5")

# K4 with edge x2x3 subdivided by x1; vertex i plays role ROLES[i]
SUBDIVIDED_K4_PAIRS = ((0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def build_sp9() -> SignedGraph:
    edges = []
    for i, j in combinations(range(9), 2):
        same_line = i // 3 == j // 3 or i % 3 == j % 3
        edges.append((i, j, POS if same_line else NEG))
    return SignedGraph(9, tuple(edges))


def _pattern_counts(g: SignedGraph, u: int, v: int) -> dict[str, int]:
    counts = {"++": 0, "+-": 0, "-+": 0, "--": 0}
    for w in range(g.n):
        if w in (u, v):
            continue
        a, b = g.sign(u, w), g.sign(v, w)
        if a is None or b is None:
            raise ValueError("graph is not complete")
        counts[a.symbol + b.symbol] += 1
    return counts


@dataclass
class AdjacencyReport:
    bullets: dict[str, bool]
    counts: dict[tuple[int, int], dict[str, int]]

    @property
    def ok(self) -> bool:
        return all(self.bullets.values())


def verify_sp9_adjacency(sp9: SignedGraph) -> AdjacencyReport:
    """Check the common-neighbour sign counts of every edge of a complete
    9-vertex signed graph.

    Positive edges need exactly (1, 2, 2, 2) common neighbours of types
    (++, +-, -+, --); negative edges need (2, 2, 2, 1).
    """
    if sp9.n != 9 or sp9.m != 36:
        raise ValueError("expected a complete signed graph on 9 vertices")
    bullets = {
        "pos: unique ++": True,
        "pos: two +-": True,
        "pos: two -+": True,
        "pos: two --": True,
        "neg: unique --": True,
        "neg: two -+": True,
        "neg: two +-": True,
        "neg: two ++": True,
    }
    want = {
        POS: (("pos: unique ++", "++", 1), ("pos: two +-", "+-", 2),
              ("pos: two -+", "-+", 2), ("pos: two --", "--", 2)),
        NEG: (("neg: unique --", "--", 1), ("neg: two -+", "-+", 2),
              ("neg: two +-", "+-", 2), ("neg: two ++", "++", 2)),
    }
    counts = {}
    for u, v, s in sp9.edges:
        c = _pattern_counts(sp9, u, v)
        counts[(u, v)] = c
        for name, key, k in want[s]:
            if c[key] != k:
                bullets[name] = False
    return AdjacencyReport(bullets, counts)


# -- obstructions ----------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """A 5-vertex obstruction; vertex ``i`` has role ``ROLES[i]``."""

    name: str
    graph: SignedGraph

    def role(self, name: str) -> int:
        return ROLES.index(name)

    def gadget(self, sign: Sign) -> SignedGraph:
        """The pattern plus a pendant vertex ``v = 5`` joined to ``x1``."""
        return self.graph.with_edges([(5, 0, sign)], n=6)


def subdivided_k4(signs: Sequence[Sign]) -> SignedGraph:
    return SignedGraph(5, tuple((u, v, s) for (u, v), s in zip(SUBDIVIDED_K4_PAIRS, signs)))


def all_subdivided_k4_signatures() -> list[SignedGraph]:
    """All 128 signatures; bit ``i`` of the index makes edge ``i`` negative."""
    return [
        subdivided_k4([NEG if mask >> i & 1 else POS for i in range(7)])
        for mask in range(1 << 7)
    ]


def _count_kind(g: SignedGraph, kind: VertexKind) -> int:
    return sum(classify_vertex(g, v) is kind for v in range(g.n))


def derive_k4s_obstructions(sp9: SignedGraph) -> tuple[Pattern, Pattern]:
    """Find the signatures of the subdivided K4 that do not map to ``sp9``.

    They must form exactly two isomorphism classes, one with at least three
    all-positive vertices and one with at least three all-negative vertices.
    Within a class the first signature in enumeration order is returned.
    """
    classes: dict[bytes, SignedGraph] = {}
    for g in all_subdivided_k4_signatures():
        if find_homomorphism(g, sp9) is None:
            classes.setdefault(canonical_form(g), g)
    plus = [g for g in classes.values() if _count_kind(g, VertexKind.ALL_POSITIVE) >= 3]
    minus = [g for g in classes.values() if _count_kind(g, VertexKind.ALL_NEGATIVE) >= 3]
    if len(classes) != 2 or len(plus) != 1 or len(minus) != 1:
        raise RuntimeError(
            f"expected one positive and one negative obstruction class, got {len(classes)} classes"
        )
    return Pattern("k4s+", plus[0]), Pattern("k4s-", minus[0])


# -- the 10-vertex target --------------------------------------------------


def attach_vertex(
    sp9: SignedGraph, plus: Iterable[int], minus: Iterable[int]
) -> SignedGraph:
    z = sp9.n
    extra = [(z, u, POS) for u in plus] + [(z, u, NEG) for u in minus]
    return sp9.with_edges(extra, n=z + 1)


@dataclass(frozen=True)
class ExtensionCase:
    pattern: str
    pin: int
    edge_sign: Sign
    witness: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.witness is not None


def extension_cases(
    target: SignedGraph,
    z: int,
    patterns: Iterable[Pattern],
    pins: Iterable[int] = range(9),
    max_failures: int | None = None,
) -> list[ExtensionCase]:
    """For each pattern, pendant-edge sign and pin ``i``: map the gadget into
    ``target`` with ``v -> i`` and ``x5 -> z``.

    With ``max_failures`` set, stops once more failures than that were seen.
    """
    out = []
    failures = 0
    pins = list(pins)
    for pat in patterns:
        x5 = pat.role("x5")
        for sign in (POS, NEG):
            gadget = pat.gadget(sign)
            for i in pins:
                phi = find_homomorphism(gadget, target, {5: i, x5: z})
                out.append(ExtensionCase(pat.name, i, sign, phi))
                if phi is None:
                    failures += 1
                    if max_failures is not None and failures > max_failures:
                        return out
    return out


@dataclass(frozen=True)
class Dagger:
    graph: SignedGraph
    z: int
    nplus: tuple[int, ...]
    nminus: tuple[int, ...]
    failed: tuple[ExtensionCase, ...] = ()


def build_sp9_dagger(
    sp9: SignedGraph, obstructions: tuple[Pattern, Pattern], strict: bool = False
) -> Dagger:
    """SP9 plus a vertex ``z`` with three positive and three negative edges.

    The attachment sets are the lexicographically least disjoint pair of
    3-sets for which every extension case succeeds.  No such pair exists:
    the plus cases need ``nplus`` to be a positive triangle, the minus cases
    need ``nminus`` to be a negative triangle, and in SP9 those always
    intersect.  Unless ``strict`` is set, the least pair with the fewest
    failing cases is returned and its failures are kept in ``Dagger.failed``.
    """
    z = sp9.n
    best: Dagger | None = None
    for nplus in combinations(range(9), 3):
        rest = [v for v in range(9) if v not in nplus]
        for nminus in combinations(rest, 3):
            g = attach_vertex(sp9, nplus, nminus)
            budget = None if best is None else len(best.failed) - 1
            cases = extension_cases(g, z, obstructions, max_failures=budget)
            failed = tuple(c for c in cases if not c.ok)
            if budget is not None and len(failed) > budget:
                continue
            cand = Dagger(g, z, nplus, nminus, failed)
            if not failed:
                return cand
            best = cand
    if strict or best is None:
        raise RuntimeError("no attachment of z satisfies the extension property")
    return best


# -- the 11-vertex target --------------------------------------------------


@dataclass(frozen=True)
class Star:
    graph: SignedGraph
    zero_prime: int
    one_prime: int
    base: tuple[int, int, int]  # vertices playing the roles of 0, 1 and 8


def star_from_base(sp9: SignedGraph, a: int, b: int, e: int) -> Star:
    """Attach ``0'`` (copying ``a``) and ``1'`` (copying ``b``) to SP9.

    ``0'a`` and ``0'1'`` are negative, ``1'b`` is positive, and on the six
    vertices other than ``a``, ``b``, ``e`` the new vertices copy the signs of
    ``a`` and ``b``.  Nothing else is adjacent to them.
    """
    zp, op = sp9.n, sp9.n + 1
    extra = [(zp, a, NEG), (zp, op, NEG), (op, b, POS)]
    for k in range(9):
        if k in (a, b, e):
            continue
        extra.append((zp, k, sp9.sign(a, k)))
        extra.append((op, k, sp9.sign(b, k)))
    return Star(sp9.with_edges(extra, n=sp9.n + 2), zp, op, (a, b, e))


def star_candidates(sp9: SignedGraph) -> list[Star]:
    """One construction per isomorphism class of the result, in
    lexicographic order of the base triple."""
    seen = set()
    out = []
    for a in range(9):
        for b in range(9):
            for e in range(9):
                if len({a, b, e}) < 3:
                    continue
                st = star_from_base(sp9, a, b, e)
                key = canonical_form(st.graph)
                if key not in seen:
                    seen.add(key)
                    out.append(st)
    return out


def build_sp9_star(sp9: SignedGraph, instances: Iterable[SignedGraph] | None = None) -> Star:
    """Pick the first candidate that every cubic instance maps to.

    ``instances`` defaults to every connected cubic signed graph on at most
    8 vertices (one per signature orbit).
    """
    if instances is None:
        from .harness import cubic_instances

        instances = [g for n in (4, 6, 8) for g, _ in cubic_instances(n)]
    instances = list(instances)
    for st in star_candidates(sp9):
        if all(find_homomorphism(g, st.graph) is not None for g in instances):
            return st
    raise RuntimeError("no SP9* construction receives every cubic instance")


# -- catalogue -------------------------------------------------------------


@dataclass(frozen=True)
class TargetCatalog:
    sp9: SignedGraph
    k4s_plus: Pattern
    k4s_minus: Pattern
    dagger: Dagger
    star: Star | None = field(default=None)

    @property
    def obstructions(self) -> tuple[Pattern, Pattern]:
        return self.k4s_plus, self.k4s_minus


@lru_cache(maxsize=None)
def build_catalog(with_star: bool = False) -> TargetCatalog:
    sp9 = build_sp9()
    plus, minus = derive_k4s_obstructions(sp9)
    dagger = build_sp9_dagger(sp9, (plus, minus))
    star = build_sp9_star(sp9) if with_star else None
    return TargetCatalog(sp9, plus, minus, dagger, star)


def flipped_catalog_check(cat: TargetCatalog) -> bool:
    """The minus obstruction is the sign-flip of the plus obstruction."""
    return canonical_form(flip_signs(cat.k4s_plus.graph)) == canonical_form(cat.k4s_minus.graph)
