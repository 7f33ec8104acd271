"""Ground-truth matching counts computed directly from a graph.

:class:`MatchCounter` is the workhorse.  It splits the surviving vertex set
into connected components (the count of a disjoint union is the product of
the component series) and expands each component at a vertex ``v`` of
maximum degree: a matching either leaves ``v`` uncovered or uses exactly one
edge ``vu``, so

    p(G) = p(G - v) + t * sum_{u in N(v)} p(G - v - u).

That is the edge recurrence applied to every edge at ``v`` in turn.  Results
are memoised on the surviving-vertex bitmask, so one counter answers many
vertex-deleted subgraph queries on the same root graph cheaply.

:func:`match_series_naive` is a second, structurally unrelated oracle that
enumerates edge subsets; it exists to police the first one in tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidPairError, TooLargeError
from .graph import Graph, Label
from .series import CoeffSeries, _mul

NAIVE_EDGE_LIMIT = 24


class MatchCounter:
    """Memoised matching series of ``g`` and of its vertex-deleted subgraphs."""

    def __init__(self, g: Graph, k: int):
        if k < 0:
            raise ValueError(f"size bound must be non-negative, got {k}")
        self.graph = g
        self.k = k
        self._adj = g.adjacency_masks()
        self._full = (1 << g.n) - 1
        self._one = (1,) + (0,) * k
        self._memo: dict[int, tuple[int, ...]] = {0: self._one}

    def mask_of(self, removed: Iterable[Label]) -> int:
        mask = self._full
        for v in removed:
            mask &= ~(1 << self.graph.index(v))
        return mask

    def series(self, removed: Iterable[Label] = ()) -> CoeffSeries:
        """Matching series of ``g - removed`` truncated at degree ``k``."""
        return CoeffSeries(self._count(self.mask_of(removed)))

    def _component(self, mask: int) -> int:
        # BFS over bitmasks from the lowest surviving vertex
        low = mask & -mask
        comp = frontier = low
        adj = self._adj
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                nxt |= adj[bit.bit_length() - 1]
                f ^= bit
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def _count(self, mask: int) -> tuple[int, ...]:
        memo = self._memo
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comp = self._component(mask)
        if comp != mask:
            res = _mul(self._count(comp), self._count(mask & ~comp))
            res = tuple(res)
        else:
            res = self._expand(mask)
        memo[mask] = res
        return res

    def _expand(self, mask: int) -> tuple[int, ...]:
        adj = self._adj
        best, best_deg = -1, -1
        m = mask
        while m:
            bit = m & -m
            i = bit.bit_length() - 1
            d = (adj[i] & mask).bit_count()
            if d > best_deg:
                best, best_deg = i, d
            m ^= bit
        if best_deg == 0:
            # single isolated vertex (mask is connected)
            return self._one
        rest = mask & ~(1 << best)
        acc = list(self._count(rest))
        if self.k == 0:
            return tuple(acc)
        nbrs = adj[best] & mask
        covered = [0] * (self.k + 1)
        while nbrs:
            bit = nbrs & -nbrs
            sub = self._count(rest & ~bit)
            covered = [c + s for c, s in zip(covered, sub)]
            nbrs ^= bit
        for i in range(1, self.k + 1):
            acc[i] += covered[i - 1]
        return tuple(acc)


def match_series(g: Graph, k: int) -> CoeffSeries:
    """Number of ``i``-matchings of ``g`` for ``0 <= i <= k``."""
    return MatchCounter(g, k).series()


def match_series_naive(g: Graph, k: int) -> CoeffSeries:
    """Same contract as :func:`match_series`, by enumerating edge subsets.

    Every subset of at most ``k`` edges is tested for pairwise disjointness.
    Limited to graphs with at most 24 edges.
    """
    if k < 0:
        raise ValueError(f"size bound must be non-negative, got {k}")
    edges = g.edges()
    if len(edges) > NAIVE_EDGE_LIMIT:
        raise TooLargeError(f"naive enumeration takes at most {NAIVE_EDGE_LIMIT} edges, got {len(edges)}")
    counts = [0] * (k + 1)
    for size in range(0, min(k, len(edges)) + 1):
        for subset in combinations(edges, size):
            ends = [v for e in subset for v in e]
            if len(set(ends)) == len(ends):
                counts[size] += 1
    return CoeffSeries(tuple(counts))


def hosoya(g: Graph) -> int:
    """Total number of matchings, the empty one included."""
    return match_series(g, g.n // 2).total()


@dataclass(frozen=True, slots=True)
class KVector:
    """Matching series of ``G``, ``G-a``, ``G-b`` and ``G-a-b`` for a pair ``(a, b)``."""

    k: int
    pair: tuple[Label, Label]
    blocks: tuple[CoeffSeries, CoeffSeries, CoeffSeries, CoeffSeries]

    def __post_init__(self):
        if len(self.blocks) != 4:
            raise ValueError("a k-matching vector has exactly four blocks")
        for b in self.blocks:
            if b.k != self.k:
                raise ValueError(f"block bound k={b.k} differs from vector bound k={self.k}")

    @property
    def g(self) -> CoeffSeries:
        return self.blocks[0]

    @property
    def g_minus_a(self) -> CoeffSeries:
        return self.blocks[1]

    @property
    def g_minus_b(self) -> CoeffSeries:
        return self.blocks[2]

    @property
    def g_minus_ab(self) -> CoeffSeries:
        return self.blocks[3]

    def descending(self) -> list[int]:
        """Flattened ``4(k+1)`` vector, each block from degree ``k`` down to 0."""
        return [c for b in self.blocks for c in b.descending()]

    def ascending(self) -> list[int]:
        return [c for b in self.blocks for c in b.coeffs]


def k_vector_direct(g: Graph, a: Label, b: Label, k: int) -> KVector:
    """k-matching vector of ``g`` with respect to ``(a, b)``, straight from the oracle."""
    if a == b:
        raise InvalidPairError(f"pair needs two distinct vertices, got {a!r} twice")
    for v in (a, b):
        if v not in g:
            raise InvalidPairError(f"pair vertex {v!r} is not in the graph")
    counter = MatchCounter(g, k)
    blocks = (counter.series(), counter.series([a]), counter.series([b]), counter.series([a, b]))
    return KVector(k, (a, b), blocks)

