"""2-edge-coloured graphs: data model, text formats and structural queries.

Vertices are the integers ``0..n-1``.  Every edge carries a :class:`Sign`.
Adjacency is kept as two bitmask rows per vertex (positive and negative
neighbours) so that searches can filter candidates with a couple of ANDs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx


class Sign(enum.IntEnum):
    POS = 1
    NEG = -1

    def flip(self) -> "Sign":
        return Sign.NEG if self is Sign.POS else Sign.POS

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POS else "-"

    @classmethod
    def from_symbol(cls, ch: str) -> "Sign":
        if ch == "+":
            return cls.POS
        if ch == "-":
            return cls.NEG
        raise ValueError(f"not a sign symbol: {ch!r}")


POS, NEG = Sign.POS, Sign.NEG

Edge = tuple[int, int, Sign]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SignedGraph:
    """A simple graph with a sign on every edge.

    ``edges`` is normalised on construction to a sorted tuple of
    ``(u, v, sign)`` with ``u < v``.  Loops, repeated pairs and
    out-of-range endpoints raise :class:`ValueError`.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        norm = []
        for u, v, s in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v, Sign(s)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    # -- adjacency -------------------------------------------------------
    @cached_property
    def _masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        pos = [0] * self.n
        neg = [0] * self.n
        for u, v, s in self.edges:
            rows = pos if s is POS else neg
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(pos), tuple(neg)

    @property
    def pos_mask(self) -> tuple[int, ...]:
        return self._masks[0]

    @property
    def neg_mask(self) -> tuple[int, ...]:
        return self._masks[1]

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(p | q for p, q in zip(*self._masks))

    @cached_property
    def _sign_of(self) -> dict[tuple[int, int], Sign]:
        return {(u, v): s for u, v, s in self.edges}

    @property
    def m(self) -> int:
        return len(self.edges)

    def sign(self, u: int, v: int) -> Sign | None:
        """Sign of edge ``uv`` or ``None`` if ``u`` and ``v`` are not adjacent."""
        if u > v:
            u, v = v, u
        return self._sign_of.get((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj_mask[v]))

    def degree(self, v: int) -> int:
        return self.adj_mask[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj_mask]

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj_mask[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    # -- derived graphs --------------------------------------------------
    def relabel(self, perm: Sequence[int]) -> "SignedGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return SignedGraph(self.n, tuple((perm[u], perm[v], s) for u, v, s in self.edges))

    def induced(self, vertices: Sequence[int]) -> "SignedGraph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return SignedGraph(
            len(vertices),
            tuple(
                (index[u], index[v], s)
                for u, v, s in self.edges
                if u in index and v in index
            ),
        )

    def with_edges(self, extra: Iterable[Edge], n: int | None = None) -> "SignedGraph":
        return SignedGraph(self.n if n is None else n, self.edges + tuple(extra))

    def topology(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((u, v) for u, v, _ in self.edges)
        return g

    def signature(self) -> str:
        """Signs in edge order as a ``+``/``-`` string."""
        return "".join(s.symbol for _, _, s in self.edges)


# -- text formats ----------------------------------------------------------


def parse_signed_graph(text: str) -> SignedGraph:
    """Parse the ``.sg`` edge-list format.

    ::

        # comment
        p sg <n> <m>
        e <u> <v> <+|->
    """
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ValueError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "sg":
                raise ValueError(f"line {lineno}: malformed header {raw!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ValueError(f"line {lineno}: malformed header {raw!r}") from None
        elif parts[0] == "e":
            if header is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: malformed edge {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
                s = Sign.from_symbol(parts[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge {raw!r}") from None
            edges.append((u, v, s))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise ValueError("missing 'p sg' header")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return SignedGraph(n, tuple(edges))


def format_signed_graph(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p sg {g.n} {g.m}")
    lines.extend(f"e {u} {v} {s.symbol}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6_with_signs(g6: str, signs: str) -> SignedGraph:
    """Combine a graph6 topology with a sign string.

    The i-th character of ``signs`` is the sign of the i-th edge in
    lexicographic ``(u, v)`` order, ``u < v``.
    """
    s = g6.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        topo = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise ValueError(f"bad graph6 string {g6!r}: {exc}") from None
    pairs = sorted((min(u, v), max(u, v)) for u, v in topo.edges())
    if len(signs) != len(pairs):
        raise ValueError(f"graph has {len(pairs)} edges but {len(signs)} signs were given")
    return SignedGraph(
        topo.number_of_nodes(),
        tuple((u, v, Sign.from_symbol(c)) for (u, v), c in zip(pairs, signs)),
    )


def to_graph6(g: SignedGraph) -> str:
    return nx.to_graph6_bytes(g.topology(), header=False).decode("ascii").strip()


# -- structural queries ----------------------------------------------------


def flip_signs(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, tuple((u, v, s.flip()) for u, v, s in g.edges))


class VertexKind(enum.Enum):
    ALL_POSITIVE = "all_positive"
    ALL_NEGATIVE = "all_negative"
    MIXED = "mixed"
    ISOLATED = "isolated"


def classify_vertex(g: SignedGraph, v: int) -> VertexKind:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    p, q = g.pos_mask[v], g.neg_mask[v]
    if not p and not q:
        return VertexKind.ISOLATED
    if not q:
        return VertexKind.ALL_POSITIVE
    if not p:
        return VertexKind.ALL_NEGATIVE
    return VertexKind.MIXED


@dataclass(frozen=True)
class Embedding:
    """Image of a pattern inside a host: pattern vertex ``i`` sits at ``image[i]``."""

    pattern: str
    image: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.image)


def find_triangles(g: SignedGraph) -> list[Embedding]:
    out = []
    adj = g.adj_mask
    for u in range(g.n):
        later = adj[u] >> (u + 1) << (u + 1)
        for v in _bits(later):
            for w in _bits(later & adj[v] & ~((1 << (v + 1)) - 1)):
                out.append(Embedding("K3", (u, v, w)))
    return out


def _search_order(p: SignedGraph) -> list[int]:
    # each next vertex has as many already-placed neighbours as possible
    order: list[int] = []
    placed = 0
    remaining = set(range(p.n))
    while remaining:
        v = max(
            remaining,
            key=lambda x: ((p.adj_mask[x] & placed).bit_count(), p.degree(x), -x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _iter_induced_maps(host: SignedGraph, pattern: SignedGraph) -> Iterator[tuple[int, ...]]:
    k = pattern.n
    if k > host.n:
        return
    order = _search_order(pattern)
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    image = [-1] * k
    full = (1 << host.n) - 1

    def rec(depth: int, used: int) -> Iterator[tuple[int, ...]]:
        if depth == k:
            yield tuple(image)
            return
        a = order[depth]
        cand = full & ~used
        for b in order[:depth]:
            hb = image[b]
            s = pattern.sign(a, b)
            if s is POS:
                cand &= host.pos_mask[hb]
            elif s is NEG:
                cand &= host.neg_mask[hb]
            else:
                cand &= ~host.adj_mask[hb]
            if not cand:
                return
        for h in _bits(cand):
            if hdeg[h] < pdeg[a]:
                continue
            image[a] = h
            yield from rec(depth + 1, used | (1 << h))
        image[a] = -1

    yield from rec(0, 0)


def automorphisms(g: SignedGraph) -> list[tuple[int, ...]]:
    """All sign-preserving automorphisms, as image tuples."""
    return list(_iter_induced_maps(g, g))


def find_induced_copies(
    host: SignedGraph,
    pattern: SignedGraph,
    pattern_id: str = "pattern",
    all_roles: bool = False,
) -> list[Embedding]:
    """Induced, sign-exact occurrences of ``pattern`` in ``host``.

    By default one embedding is reported per occurrence (the
    lexicographically least among those related by a pattern
    automorphism).  ``all_roles=True`` returns every role assignment.
    """
    if pattern.n == 0:
        raise ValueError("pattern must be nonempty")
    maps = list(_iter_induced_maps(host, pattern))
    if not all_roles:
        auts = automorphisms(pattern)
        maps = [
            img
            for img in maps
            if img == min(tuple(img[a[i]] for i in range(pattern.n)) for a in auts)
        ]
    return [Embedding(pattern_id, img) for img in sorted(maps)]


def is_induced_copy(host: SignedGraph, pattern: SignedGraph, image: Sequence[int]) -> bool:
    if len(set(image)) != len(image) or len(image) != pattern.n:
        return False
    return all(
        host.sign(image[i], image[j]) == pattern.sign(i, j)
        for i, j in combinations(range(pattern.n), 2)
    )


# -- canonical labelling ---------------------------------------------------


def _refine(g: SignedGraph, colour: list[int]) -> list[int]:
    """Equitable refinement; colours are re-ranked so that the result is
    independent of vertex names."""
    n = g.n
    pos, neg = g.pos_mask, g.neg_mask
    ncol = len(set(colour))
    while True:
        keys = []
        for v in range(n):
            prof = sorted(
                [(colour[w], 1) for w in _bits(pos[v])] + [(colour[w], 2) for w in _bits(neg[v])]
            )
            keys.append((colour[v], tuple(prof)))
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(ranks) == ncol:
            return new
        colour, ncol = new, len(ranks)


def _encode(g: SignedGraph, colour: list[int]) -> bytes:
    # colour is discrete: vertex v gets canonical label colour[v]
    order = sorted(range(g.n), key=colour.__getitem__)
    out = bytearray(g.n.to_bytes(2, "big"))
    for i in range(g.n):
        for j in range(i + 1, g.n):
            s = g.sign(order[i], order[j])
            out.append(0 if s is None else (1 if s is POS else 2))
    return bytes(out)


def canonical_labelling(g: SignedGraph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical encoding and a relabelling ``perm`` achieving it.

    Individualisation-refinement with automorphism pruning: leaves that
    reproduce the best encoding yield automorphisms, which are used to skip
    equivalent branches.
    """
    n = g.n
    if n == 0:
        return _encode(g, []), ()
    init = [(g.pos_mask[v].bit_count(), g.neg_mask[v].bit_count()) for v in range(n)]
    ranks = {k: i for i, k in enumerate(sorted(set(init)))}
    root = _refine(g, [ranks[k] for k in init])

    best: list = [None, None]  # encoding, colour
    gens: list[tuple[int, ...]] = []

    def leaf(colour: list[int]) -> None:
        code = _encode(g, colour)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, colour
        elif code == best[0]:
            # vertex with label c in this leaf -> vertex with label c in best
            inv = [0] * n
            for v, c in enumerate(best[1]):
                inv[c] = v
            gens.append(tuple(inv[colour[v]] for v in range(n)))

    def rec(colour: list[int], fixed: tuple[int, ...]) -> None:
        counts: dict[int, int] = {}
        for c in colour:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            leaf(colour)
            return
        cell = [v for v in range(n) if colour[v] == target]
        tried: list[int] = []
        for v in cell:
            if tried:
                stab = [a for a in gens if all(a[f] == f for f in fixed)]
                if any(_same_orbit(v, t, stab) for t in tried):
                    continue
                if any(_twins(g, v, t) for t in tried):
                    continue
            tried.append(v)
            child = [2 * c + (0 if (c == target and w == v) else 1) for w, c in enumerate(colour)]
            rec(_refine(g, child), fixed + (v,))

    rec(root, ())
    return best[0], tuple(best[1])


def _same_orbit(a: int, b: int, gens: list[tuple[int, ...]]) -> bool:
    if not gens:
        return False
    seen = {a}
    frontier = [a]
    while frontier:
        x = frontier.pop()
        for gen in gens:
            y = gen[x]
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return False


def _twins(g: SignedGraph, u: int, w: int) -> bool:
    clear = ~((1 << u) | (1 << w))
    return (g.pos_mask[u] & clear) == (g.pos_mask[w] & clear) and (
        g.neg_mask[u] & clear
    ) == (g.neg_mask[w] & clear)


def canonical_form(g: SignedGraph) -> bytes:
    """Byte string equal for two graphs iff they are sign-preserving isomorphic."""
    return canonical_labelling(g)[0]


def canonical_graph(g: SignedGraph) -> SignedGraph:
    return g.relabel(canonical_labelling(g)[1])


def is_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def complete_graph(n: int, sign: Sign = POS) -> SignedGraph:
    return SignedGraph(n, tuple((u, v, sign) for u, v in combinations(range(n), 2)))


def from_pairs(n: int, pairs: Iterable[tuple[int, int]], signs: str | None = None) -> SignedGraph:
    """Build a graph from unsigned pairs; ``signs`` follows sorted edge order
    (all positive when omitted)."""
    norm = sorted((min(u, v), max(u, v)) for u, v in pairs)
    if signs is None:
        signs = "+" * len(norm)
    if len(signs) != len(norm):
        raise ValueError("sign string length mismatch")
    return SignedGraph(n, tuple((u, v, Sign.from_symbol(c)) for (u, v), c in zip(norm, signs)))
