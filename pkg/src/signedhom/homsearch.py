"""Sign-preserving homomorphism search.

Backtracking with forward checking.  Every unassigned source vertex keeps a
bitmask of target vertices still compatible with its assigned neighbours;
assigning ``u -> h`` ANDs each neighbour's domain with the positive or
negative row of ``h``.  Variables are picked most-constrained first (ties
by index) and values are tried in ascending order, so results are fully
deterministic.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping, Sequence

from .core import SignedGraph, _bits

VertexMap = tuple[int, ...]
Pins = Mapping[int, int]


def check_homomorphism(g: SignedGraph, h: SignedGraph, phi: Sequence[int]) -> bool:
    """True iff ``phi`` sends every edge of ``g`` to an edge of ``h`` of the same sign."""
    if len(phi) != g.n:
        raise ValueError(f"map has {len(phi)} entries, source has {g.n} vertices")
    for x in phi:
        if not (isinstance(x, int) and 0 <= x < h.n):
            raise ValueError(f"image {x!r} outside target range 0..{h.n - 1}")
    return all(h.sign(phi[u], phi[v]) == s for u, v, s in g.edges)


def _initial_domains(g: SignedGraph, h: SignedGraph, pins: Pins | None) -> list[int] | None:
    full = (1 << h.n) - 1
    dom = [full] * g.n
    for u, a in (pins or {}).items():
        if not 0 <= u < g.n:
            raise ValueError(f"pinned vertex {u} out of range")
        if not 0 <= a < h.n:
            raise ValueError(f"pin target {a} out of range")
        dom[u] = 1 << a
    return dom


def _search(
    g: SignedGraph, h: SignedGraph, vertices: Sequence[int], dom: list[int]
) -> Iterator[None]:
    """Yield once per complete assignment of ``vertices``; the assignment is
    read off ``dom`` (all singletons) by the caller before resuming."""
    gpos, gneg = g.pos_mask, g.neg_mask
    hpos, hneg = h.pos_mask, h.neg_mask
    unassigned = set(vertices)

    def rec() -> Iterator[None]:
        if not unassigned:
            yield None
            return
        u = min(unassigned, key=lambda x: (dom[x].bit_count(), x))
        unassigned.discard(u)
        live_pos = [w for w in _bits(gpos[u]) if w in unassigned]
        live_neg = [w for w in _bits(gneg[u]) if w in unassigned]
        saved = dom[u]
        for a in _bits(saved):
            dom[u] = 1 << a
            undo = []
            ok = True
            row = hpos[a]
            for w in live_pos:
                nd = dom[w] & row
                undo.append((w, dom[w]))
                dom[w] = nd
                if not nd:
                    ok = False
                    break
            if ok:
                row = hneg[a]
                for w in live_neg:
                    nd = dom[w] & row
                    undo.append((w, dom[w]))
                    dom[w] = nd
                    if not nd:
                        ok = False
                        break
            if ok:
                yield from rec()
            for w, d in reversed(undo):
                dom[w] = d
        dom[u] = saved
        unassigned.add(u)

    # a pinned vertex constrains its neighbours before branching starts
    for u in vertices:
        if dom[u].bit_count() == 1:
            a = dom[u].bit_length() - 1
            for w in _bits(gpos[u]):
                dom[w] &= hpos[a]
            for w in _bits(gneg[u]):
                dom[w] &= hneg[a]
    if any(not dom[u] for u in vertices):
        return
    yield from rec()


def iter_homomorphisms(
    g: SignedGraph, h: SignedGraph, pins: Pins | None = None
) -> Iterator[VertexMap]:
    """All homomorphisms ``g -> h`` honouring ``pins``, in search order."""
    dom = _initial_domains(g, h, pins)
    for _ in _search(g, h, range(g.n), dom):
        yield tuple(d.bit_length() - 1 for d in dom)


def find_homomorphism(
    g: SignedGraph, h: SignedGraph, pins: Pins | None = None
) -> VertexMap | None:
    """A homomorphism ``g -> h`` honouring ``pins``, or ``None`` if none exists.

    Components of ``g`` are solved independently.
    """
    dom = _initial_domains(g, h, pins)
    phi = [0] * g.n
    for comp in g.components():
        search = _search(g, h, comp, dom)
        if next(search, False) is False:
            return None
        for u in comp:
            phi[u] = dom[u].bit_length() - 1
        search.close()
    return tuple(phi)


def count_homomorphisms(g: SignedGraph, h: SignedGraph, pins: Pins | None = None) -> int:
    total = 1
    for comp in g.components():
        dom = _initial_domains(g, h, pins)
        total *= sum(1 for _ in _search(g, h, comp, dom))
        if not total:
            return 0
    return total


def naive_homomorphisms(
    g: SignedGraph, h: SignedGraph, pins: Pins | None = None
) -> Iterator[VertexMap]:
    """Plain enumeration of all ``|h|^|g|`` maps; used as a test oracle."""
    pins = dict(pins or {})
    for phi in product(range(h.n), repeat=g.n):
        if any(phi[u] != a for u, a in pins.items()):
            continue
        if all(h.sign(phi[u], phi[v]) == s for u, v, s in g.edges):
            yield phi


def compose(phi: Sequence[int], psi: Sequence[int]) -> VertexMap:
    """The map ``psi o phi``."""
    return tuple(psi[x] for x in phi)


def maps_to(g: SignedGraph, h: SignedGraph) -> bool:
    return find_homomorphism(g, h) is not None


__all__ = [
    "VertexMap",
    "check_homomorphism",
    "compose",
    "count_homomorphisms",
    "find_homomorphism",
    "iter_homomorphisms",
    "maps_to",
    "naive_homomorphisms",
]
