"""Constructive 10-colouring of connected cubic 2-edge-coloured graphs.

The dispatcher follows the case analysis of the upper-bound argument:

1. induced copies of an obstruction: colour the rest into SP9, then extend
   into each copy through the extra vertex ``z`` of SP9-dagger;
2. a vertex whose three edges share a sign: colour the rest into SP9 and
   give that vertex the tenth colour;
3. a triangle: split one of its negative edges through a new vertex, map
   into SP9 and repair;
4. otherwise an edge joins a vertex with two positive edges to one with two
   negative edges; delete the latter, join the former's positive
   neighbours by a negative edge, map into SP9 and repair.

Colours 0..8 are SP9 vertices and colour 9 is ``z`` / the fresh colour.
Every candidate is accepted only through :func:`validate_colouring`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product

from .colouring import Colouring, find_k_colouring, validate_colouring
from .core import (
    NEG,
    POS,
    Embedding,
    SignedGraph,
    VertexKind,
    _bits,
    automorphisms,
    classify_vertex,
    find_induced_copies,
    find_triangles,
    flip_signs,
)
from .homsearch import find_homomorphism, iter_homomorphisms
from .targets import ExtensionCase, TargetCatalog, attach_vertex, build_catalog, extension_cases

FRESH = 9
K = 10
# maps into SP9 tried per branch before giving up
WITNESS_LIMIT = 64


class NotCubic(ValueError):
    pass


class NotConnected(ValueError):
    pass


class InternalFalsification(RuntimeError):
    """A step that the upper-bound argument guarantees has failed."""


@dataclass
class BranchTrace:
    branch: str
    flipped: bool = False
    surgery: list[str] = field(default_factory=list)
    maps: dict[str, list[int]] = field(default_factory=dict)
    fallback: bool = False
    witnesses_tried: int = 0

    @property
    def name(self) -> str:
        return f"Flipped+{self.branch}" if self.flipped else self.branch

    def to_dict(self) -> dict:
        d = asdict(self)
        d["name"] = self.name
        return d


# -- extension lemmas ------------------------------------------------------


@dataclass
class ExtensionReport:
    cases: list[ExtensionCase]

    @property
    def ok(self) -> bool:
        return len(self.cases) == 36 and all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[ExtensionCase]:
        return [c for c in self.cases if not c.ok]


def verify_extension_lemmas(
    catalog: TargetCatalog, target: SignedGraph | None = None, z: int | None = None
) -> ExtensionReport:
    """Run all 2 x 9 x 2 pinned gadget cases against SP9-dagger (or against
    ``target`` with ``z`` as the distinguished vertex)."""
    if target is None:
        target, z = catalog.dagger.graph, catalog.dagger.z
    return ExtensionReport(extension_cases(target, z, catalog.obstructions))


def swapped_dagger(catalog: TargetCatalog) -> SignedGraph:
    d = catalog.dagger
    return attach_vertex(catalog.sp9, d.nminus, d.nplus)


# -- helpers ---------------------------------------------------------------


def _check_input(g: SignedGraph) -> None:
    if g.n == 0 or not g.is_cubic():
        raise NotCubic("graph is not 3-regular")
    if not g.is_connected():
        raise NotConnected("graph is not connected")


def _map_to_sp9(h: SignedGraph, sp9: SignedGraph, what: str) -> tuple[int, ...]:
    phi = find_homomorphism(h, sp9)
    if phi is None:
        raise InternalFalsification(f"{what} has no homomorphism to SP9")
    return phi


def _remove_vertices(g: SignedGraph, gone: set[int]) -> tuple[SignedGraph, list[int]]:
    keep = [v for v in range(g.n) if v not in gone]
    return g.induced(keep), keep


def _copies(g: SignedGraph, cat: TargetCatalog) -> list[Embedding]:
    out = []
    for pat in cat.obstructions:
        out.extend(find_induced_copies(g, pat.graph, pat.name))
    return out


# -- branches --------------------------------------------------------------


def _direct_dagger(g: SignedGraph, cat: TargetCatalog, trace: BranchTrace) -> Colouring:
    trace.fallback = True
    trace.surgery.append("direct search G -> SP9-dagger")
    phi = find_homomorphism(g, cat.dagger.graph)
    if phi is None:
        raise InternalFalsification("no homomorphism G -> SP9-dagger")
    trace.maps["G->dagger"] = list(phi)
    return Colouring(K, phi)


def branch_copies(
    g: SignedGraph,
    embeddings: list[Embedding],
    catalog: TargetCatalog | None = None,
    trace: BranchTrace | None = None,
) -> Colouring:
    """Map ``g`` into SP9-dagger through its obstruction copies.

    The rest of the graph goes into SP9; each copy is then filled in by a
    pinned search with its outside neighbour fixed and ``x5 -> z``.  The
    rest map is composed with SP9 automorphisms until every copy extends.
    Overlapping copies, copies touching each other or an empty rest fall
    back to a direct search into SP9-dagger.
    """
    cat = catalog or build_catalog()
    trace = trace if trace is not None else BranchTrace("Copies")
    if not embeddings:
        raise ValueError("branch_copies needs at least one obstruction copy")
    patterns = {p.name: p for p in cat.obstructions}
    covered: set[int] = set()
    disjoint = True
    for e in embeddings:
        if covered & e.vertices:
            disjoint = False
        covered |= e.vertices
    rest, keep = _remove_vertices(g, covered)
    attach = []
    for e in embeddings:
        x1 = e.image[0]
        outside = [w for w in g.neighbours(x1) if w not in e.vertices]
        attach.append(outside[0] if len(outside) == 1 else None)
    if not disjoint or not keep or any(a is None or a in covered for a in attach):
        trace.surgery.append("copies overlap, touch, or cover G")
        return _direct_dagger(g, cat, trace)

    trace.surgery.append(f"removed {len(embeddings)} copies: {sorted(covered)}")
    phi_rest = _map_to_sp9(rest, cat.sp9, "G minus copies")
    trace.witnesses_tried = 1
    index = {v: i for i, v in enumerate(keep)}
    z = cat.dagger.z
    for sigma in automorphisms(cat.sp9):
        labels = [-1] * g.n
        for v, i in index.items():
            labels[v] = sigma[phi_rest[i]]
        ok = True
        for e, a in zip(embeddings, attach):
            pat = patterns[e.pattern]
            gadget = pat.gadget(g.sign(e.image[0], a))
            ext = find_homomorphism(gadget, cat.dagger.graph, {5: labels[a], pat.role("x5"): z})
            if ext is None:
                ok = False
                break
            for role_vertex, host in enumerate(e.image):
                labels[host] = ext[role_vertex]
        if ok:
            trace.maps["rest->SP9"] = list(phi_rest)
            trace.maps["automorphism"] = list(sigma)
            trace.maps["G->dagger"] = labels
            return Colouring(K, labels)
    trace.surgery.append("no automorphism of the rest map extends into every copy")
    return _direct_dagger(g, cat, trace)


def branch_unbalanced_vertex(
    g: SignedGraph,
    v: int,
    catalog: TargetCatalog | None = None,
    trace: BranchTrace | None = None,
) -> Colouring:
    """Map ``g - v`` into SP9 and give ``v`` the fresh colour."""
    cat = catalog or build_catalog()
    trace = trace if trace is not None else BranchTrace("UnbalancedVertex")
    if classify_vertex(g, v) not in (VertexKind.ALL_POSITIVE, VertexKind.ALL_NEGATIVE):
        raise ValueError(f"vertex {v} has edges of both signs")
    rest, keep = _remove_vertices(g, {v})
    phi = _map_to_sp9(rest, cat.sp9, "G - v")
    trace.witnesses_tried = 1
    trace.surgery.append(f"deleted vertex {v}")
    labels = [FRESH] * g.n
    for i, w in enumerate(keep):
        labels[w] = phi[i]
    trace.maps["G-v->SP9"] = list(phi)
    return Colouring(K, labels)


def _triangle_candidates(
    g: SignedGraph, sp9: SignedGraph, base: list[int], u: int, v: int, w: int
):
    """Recolourings tried in order after splitting ``uv``."""
    a = list(base)
    a[v] = FRESH
    yield "v fresh", a
    b = list(base)
    b[u] = FRESH
    yield "u fresh", b
    u_out = [(x, g.sign(u, x)) for x in g.neighbours(u) if x not in (v, w)]
    v_out = [(x, g.sign(v, x)) for x in g.neighbours(v) if x not in (u, w)]
    for cu, cv in product(range(9), repeat=2):
        if sp9.sign(cu, cv) is not NEG:
            continue
        if any(sp9.sign(cu, base[x]) != s for x, s in u_out):
            continue
        if any(sp9.sign(cv, base[x]) != s for x, s in v_out):
            continue
        c = list(base)
        c[u], c[v], c[w] = cu, cv, FRESH
        yield f"u->{cu}, v->{cv}, w fresh", c


def branch_triangle(
    g: SignedGraph,
    triangle: Embedding,
    catalog: TargetCatalog | None = None,
    trace: BranchTrace | None = None,
) -> Colouring:
    """Split a negative triangle edge ``uv`` by a vertex ``z`` (``zu``
    positive, ``zv`` negative), map into SP9 and recolour one of ``u``, ``v``,
    ``w`` with the fresh colour.  An all-positive triangle is handled on
    the sign-flipped graph."""
    cat = catalog or build_catalog()
    trace = trace if trace is not None else BranchTrace("Triangle")
    t = triangle.image
    pairs = [(t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])]
    neg = [(u, v, w) for u, v, w in pairs if g.sign(u, v) is NEG]
    if not neg:
        trace.flipped = not trace.flipped
        trace.surgery.append("all-positive triangle: working on the flipped graph")
        return branch_triangle(flip_signs(g), triangle, cat, trace)
    u, v, w = neg[0]
    z = g.n
    split = SignedGraph(
        g.n + 1,
        tuple(e for e in g.edges if {e[0], e[1]} != {u, v}) + ((z, u, POS), (z, v, NEG)),
    )
    trace.surgery.append(f"removed edge {u}{v}, added z={z} with {z}{u}+ and {z}{v}-")
    tried = 0
    for phi in iter_homomorphisms(split, cat.sp9):
        tried += 1
        base = list(phi[: g.n])
        for how, labels in _triangle_candidates(g, cat.sp9, base, u, v, w):
            if validate_colouring(g, labels):
                trace.witnesses_tried = tried
                trace.surgery.append(how)
                trace.maps["G'->SP9"] = list(phi)
                return Colouring(K, labels)
        if tried >= WITNESS_LIMIT:
            break
    trace.witnesses_tried = tried
    if not tried:
        raise InternalFalsification("split graph has no homomorphism to SP9")
    raise InternalFalsification("no recolouring of the triangle validates")


def partition_by_majority(g: SignedGraph) -> tuple[list[int], list[int]]:
    """Vertices with two positive edges, and vertices with two negative edges."""
    p = [v for v in range(g.n) if g.pos_mask[v].bit_count() == 2]
    n = [v for v in range(g.n) if g.neg_mask[v].bit_count() == 2]
    return p, n


def branch_cross_edge(
    g: SignedGraph,
    catalog: TargetCatalog | None = None,
    trace: BranchTrace | None = None,
) -> Colouring:
    """Handle a negative edge ``uv`` with ``u`` in P and ``v`` in N.

    ``v`` is deleted and ``u``'s positive neighbours ``u1``, ``u2`` are
    joined by a negative edge.  After mapping into SP9, ``u`` is moved to
    one of the two common positive neighbours of the images of ``u1``,
    ``u2`` and ``v`` takes the fresh colour.
    """
    cat = catalog or build_catalog()
    trace = trace if trace is not None else BranchTrace("CrossEdge")
    p_side, n_side = partition_by_majority(g)
    if len(p_side) + len(n_side) != g.n:
        raise ValueError("every vertex needs a 2+1 sign split")
    in_p = set(p_side)
    cross = [(u, v) if u in in_p else (v, u) for u, v, s in g.edges
             if s is NEG and (u in in_p) != (v in in_p)]
    if not cross:
        if any((u in in_p) != (v in in_p) for u, v, _ in g.edges):
            trace.flipped = not trace.flipped
            trace.surgery.append("only positive cross edges: working on the flipped graph")
            return branch_cross_edge(flip_signs(g), cat, trace)
        raise InternalFalsification("no edge between P and N although both are nonempty")

    last_error = "no cross edge"
    for u, v in cross:
        u1, u2 = list(_bits(g.pos_mask[u]))
        if g.has_edge(u1, u2):
            last_error = f"{u1}{u2} already adjacent"
            continue
        w = next(_bits(g.pos_mask[v]))
        rest, keep = _remove_vertices(g, {v})
        index = {x: i for i, x in enumerate(keep)}
        star = rest.with_edges([(index[u1], index[u2], NEG)])
        tried = 0
        for phi in iter_homomorphisms(star, cat.sp9):
            tried += 1
            base = [FRESH] * g.n
            for x, i in index.items():
                base[x] = phi[i]
            a1, a2 = base[u1], base[u2]
            options = [c for c in range(9)
                       if cat.sp9.sign(c, a1) is POS and cat.sp9.sign(c, a2) is POS]
            options.sort(key=lambda c: c == base[w])
            for c in options:
                labels = list(base)
                labels[u] = c
                if validate_colouring(g, labels):
                    trace.surgery.append(
                        f"deleted {v}, joined {u1}{u2} negatively, moved {u} to {c}, {v} fresh"
                    )
                    trace.witnesses_tried = tried
                    trace.maps["G*->SP9"] = list(phi)
                    return Colouring(K, labels)
            if tried >= WITNESS_LIMIT:
                break
        trace.witnesses_tried = max(trace.witnesses_tried, tried)
        last_error = f"cross edge {u}{v}: no candidate validates"
    raise InternalFalsification(last_error)


def branch_uniform(
    g: SignedGraph,
    catalog: TargetCatalog | None = None,
    trace: BranchTrace | None = None,
) -> Colouring:
    """Every vertex has the same majority sign, so no P-N edge exists and
    the cross-edge step has nothing to act on.  Solved by search: first into
    SP9-dagger, then by an exact 10-colouring search."""
    cat = catalog or build_catalog()
    trace = trace if trace is not None else BranchTrace("UniformMajority")
    try:
        return _direct_dagger(g, cat, trace)
    except InternalFalsification:
        pass
    trace.surgery.append("exact search for a 10-colouring")
    c = find_k_colouring(g, K)
    if c is None:
        raise InternalFalsification("no 10-colouring exists")
    return c


def ten_colouring(
    g: SignedGraph, catalog: TargetCatalog | None = None
) -> tuple[Colouring, BranchTrace]:
    """A colouring of a connected cubic signed graph with at most 10 colours."""
    _check_input(g)
    cat = catalog or build_catalog()
    copies = _copies(g, cat)
    if copies:
        trace = BranchTrace("Copies")
        c = branch_copies(g, copies, cat, trace)
    else:
        unbalanced = [
            v for v in range(g.n)
            if classify_vertex(g, v) in (VertexKind.ALL_POSITIVE, VertexKind.ALL_NEGATIVE)
        ]
        triangles = find_triangles(g)
        if unbalanced:
            trace = BranchTrace("UnbalancedVertex")
            c = branch_unbalanced_vertex(g, unbalanced[0], cat, trace)
        elif triangles:
            trace = BranchTrace("Triangle")
            c = branch_triangle(g, triangles[0], cat, trace)
        elif all(len(side) for side in partition_by_majority(g)):
            trace = BranchTrace("CrossEdge")
            c = branch_cross_edge(g, cat, trace)
        else:
            trace = BranchTrace("UniformMajority")
            c = branch_uniform(g, cat, trace)
    if c.k > K or not validate_colouring(g, c):
        raise InternalFalsification(f"{trace.name} produced an invalid colouring")
    return c, trace
