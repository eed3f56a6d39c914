"""Colourings of 2-edge-coloured graphs and exact chromatic number.

A k-colouring is a proper labelling in which every unordered pair of
colours carries edges of one sign only.  Any such labelling is a
homomorphism onto the k-vertex graph it induces (:func:`implicit_target`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import SignedGraph, _bits


@dataclass(frozen=True)
class Colouring:
    k: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        for x in self.labels:
            if not 0 <= x < self.k:
                raise ValueError(f"label {x} outside 0..{self.k - 1}")

    @property
    def used(self) -> int:
        return len(set(self.labels))


def validate_colouring(g: SignedGraph, c: Colouring | Sequence[int]) -> bool:
    labels = c.labels if isinstance(c, Colouring) else tuple(c)
    if len(labels) != g.n:
        return False
    seen: dict[tuple[int, int], int] = {}
    for u, v, s in g.edges:
        a, b = labels[u], labels[v]
        if a == b:
            return False
        key = (a, b) if a < b else (b, a)
        if seen.setdefault(key, s) != s:
            return False
    return True


def implicit_target(g: SignedGraph, c: Colouring) -> SignedGraph:
    """The k-vertex graph whose edge ``ij`` has the sign shared by every
    ``g``-edge coloured ``{i, j}``."""
    if not validate_colouring(g, c):
        raise ValueError("not a valid colouring")
    pairs = {}
    for u, v, s in g.edges:
        a, b = sorted((c.labels[u], c.labels[v]))
        pairs[(a, b)] = s
    return SignedGraph(c.k, tuple((a, b, s) for (a, b), s in pairs.items()))


def _colouring_order(g: SignedGraph) -> list[int]:
    # highest degree first, then repeatedly the vertex with most coloured neighbours
    order: list[int] = []
    placed = 0
    left = set(range(g.n))
    while left:
        v = max(left, key=lambda x: ((g.adj_mask[x] & placed).bit_count(), g.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    return order


def find_k_colouring(g: SignedGraph, k: int) -> Colouring | None:
    """Exact search for a colouring with at most ``k`` colours.

    New colours are opened in increasing order, which removes the colour
    permutation symmetry.  The sign carried by each colour pair is recorded
    as the search goes, so a label that would give a pair both signs is
    rejected immediately.
    """
    if k <= 0:
        return Colouring(max(k, 0), ()) if g.n == 0 else None
    n = g.n
    order = _colouring_order(g)
    pos_in = {v: i for i, v in enumerate(order)}
    earlier = [
        [(w, g.sign(v, w)) for w in _bits(g.adj_mask[v]) if pos_in[w] < pos_in[v]] for v in order
    ]
    labels = [-1] * n
    pair_sign = [0] * (k * k)
    pair_refs = [0] * (k * k)

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for col in range(min(used + 1, k)):
            local: dict[int, int] = {}
            ok = True
            for w, s in earlier[i]:
                d = labels[w]
                if d == col:
                    ok = False
                    break
                idx = col * k + d if col < d else d * k + col
                want = pair_sign[idx] if pair_refs[idx] else local.get(idx, s)
                if want != s:
                    ok = False
                    break
                local[idx] = s
            if not ok:
                continue
            bumped = []
            for w, s in earlier[i]:
                d = labels[w]
                idx = col * k + d if col < d else d * k + col
                pair_sign[idx] = s
                pair_refs[idx] += 1
                bumped.append(idx)
            labels[v] = col
            if rec(i + 1, max(used, col + 1)):
                return True
            labels[v] = -1
            for idx in bumped:
                pair_refs[idx] -= 1
        return False

    if rec(0, 0):
        return Colouring(k, tuple(labels))
    return None


def greedy_clique(g: SignedGraph) -> list[int]:
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj_mask[start]
        while cand:
            v = max(_bits(cand), key=lambda x: ((g.adj_mask[x] & cand).bit_count(), -x))
            clique.append(v)
            cand &= g.adj_mask[v]
        if len(clique) > len(best):
            best = clique
    return best


def chromatic_number(g: SignedGraph) -> int:
    return chromatic_colouring(g).k


def chromatic_colouring(g: SignedGraph) -> Colouring:
    """An optimal colouring; ``k`` equals the chromatic number."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined here")
    k = max(1, len(greedy_clique(g)))
    while True:
        c = find_k_colouring(g, k)
        if c is not None:
            return c
        k += 1
