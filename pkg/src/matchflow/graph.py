"""Immutable simple undirected graphs with string vertex labels.

Vertices keep the order in which they were given; that order defines the
dense internal index ``0..n-1`` used for bitmask work in the oracle.  Every
operation that removes or adds vertices returns a fresh graph and re-derives
the indices from the surviving label order.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping

from .errors import GraphError, IllegalCrossEdgeError, InvalidPairError, NotFoundError

Label = str
Edge = tuple[Label, Label]


class Graph:
    """A simple graph: no loops, no parallel edges, labels unique."""

    __slots__ = ("_labels", "_index", "_adj")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[Edge] = ()):
        labels = tuple(vertices)
        index: dict[Label, int] = {}
        for i, v in enumerate(labels):
            if v in index:
                raise GraphError(f"duplicate vertex label {v!r}")
            index[v] = i
        adj: dict[Label, set[Label]] = {v: set() for v in labels}
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError(f"edge {e!r} is not a pair") from None
            if u == v:
                raise GraphError(f"loop at {u!r}")
            for w in (u, v):
                if w not in index:
                    raise NotFoundError(f"edge {u!r}-{v!r} uses unknown vertex {w!r}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._labels = labels
        self._index = index
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @classmethod
    def _trusted(cls, labels: tuple[Label, ...], adj: Mapping[Label, frozenset]) -> Graph:
        g = cls.__new__(cls)
        g._labels = labels
        g._index = {v: i for i, v in enumerate(labels)}
        g._adj = dict(adj)
        return g

    # -- accessors ---------------------------------------------------------

    @property
    def labels(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[Label]:
        return iter(self._labels)

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise NotFoundError(f"unknown vertex {v!r}") from None

    def neighbors(self, v: Label) -> frozenset[Label]:
        try:
            return self._adj[v]
        except KeyError:
            raise NotFoundError(f"unknown vertex {v!r}") from None

    def degree(self, v: Label) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Label, v: Label) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u`` before ``v`` in vertex order."""
        out = []
        for i, u in enumerate(self._labels):
            for v in self._adj[u]:
                if self._index[v] > i:
                    out.append((u, v))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def adjacency_masks(self) -> list[int]:
        """Neighbourhood of vertex ``i`` as a bitmask over dense indices."""
        masks = []
        for v in self._labels:
            bits = 0
            for u in self._adj[v]:
                bits |= 1 << self._index[u]
            masks.append(bits)
        return masks

    def edge_set(self) -> frozenset[frozenset[Label]]:
        return frozenset(frozenset(e) for e in self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._labels) == set(other._labels) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((frozenset(self._labels), self.edge_set()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------

    def induced(self, keep: Iterable[Label]) -> Graph:
        """Induced subgraph on ``keep``; original vertex order is preserved."""
        keep_set = set(keep)
        for v in keep_set:
            if v not in self._index:
                raise NotFoundError(f"unknown vertex {v!r}")
        labels = tuple(v for v in self._labels if v in keep_set)
        adj = {v: self._adj[v] & keep_set for v in labels}
        return Graph._trusted(labels, adj)

    def to_dict(self) -> dict:
        return {"vertices": list(self._labels), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> Graph:
        if "vertices" not in data or "edges" not in data:
            raise GraphError("graph fragment needs 'vertices' and 'edges'")
        vertices = [str(v) for v in data["vertices"]]
        edges = []
        for e in data["edges"]:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            edges.append((str(e[0]), str(e[1])))
        return cls(vertices, edges)


def delete_vertices(g: Graph, s: Iterable[Label]) -> Graph:
    """Return ``g - s``; the input graph is left untouched."""
    drop = set(s)
    for v in drop:
        if v not in g:
            raise NotFoundError(f"cannot delete unknown vertex {v!r}")
    return g.induced(v for v in g.labels if v not in drop)


def neighbor_partition(g: Graph, x: Label, y: Label) -> tuple[set[Label], set[Label], set[Label]]:
    """Split the neighbours of ``x`` and ``y`` (excluding the pair itself).

    Returns ``(X, Y, Z)``: adjacent to ``x`` only, to ``y`` only, to both.
    """
    if x == y:
        raise InvalidPairError(f"pair needs two distinct vertices, got {x!r} twice")
    nx_, ny_ = g.neighbors(x) - {y}, g.neighbors(y) - {x}
    return set(nx_ - ny_), set(ny_ - nx_), set(nx_ & ny_)


def components(g: Graph) -> list[Graph]:
    """Connected components as induced subgraphs, ordered by least label."""
    seen: set[Label] = set()
    parts: list[list[Label]] = []
    for start in g.labels:
        if start in seen:
            continue
        seen.add(start)
        part = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    queue.append(w)
        parts.append(part)
    parts.sort(key=min)
    return [g.induced(p) for p in parts]


def union_glue(g: Graph, block_vertices: Iterable[Label], block_edges: Iterable[Edge]) -> Graph:
    """Glue a fragment onto ``g``.

    ``block_vertices`` are new labels; block edges may also touch existing
    vertices.  An edge between two existing vertices is only tolerated when
    ``g`` already has it (it collapses); anything else would change the old
    graph and raises :class:`IllegalCrossEdgeError`.
    """
    new = list(block_vertices)
    if len(set(new)) != len(new):
        raise GraphError("block vertex labels repeat")
    for v in new:
        if v in g:
            raise GraphError(f"block vertex {v!r} already exists in the graph")
    labels = g.labels + tuple(new)
    known = set(labels)
    adj = {v: set(g.neighbors(v)) for v in g.labels}
    adj.update({v: set() for v in new})
    for u, v in block_edges:
        if u == v:
            raise GraphError(f"loop at {u!r}")
        for w in (u, v):
            if w not in known:
                raise NotFoundError(f"block edge {u!r}-{v!r} uses unknown vertex {w!r}")
        if u in g and v in g and not g.has_edge(u, v):
            raise IllegalCrossEdgeError(f"block edge {u!r}-{v!r} joins two existing vertices")
        adj[u].add(v)
        adj[v].add(u)
    return Graph._trusted(labels, {v: frozenset(ns) for v, ns in adj.items()})
