"""Transfer matrices for gluing a block onto a distinguished vertex pair.

A block is attached over a pair ``(x, y)`` of the existing graph ``G'`` and
introduces new material ``H''`` (the block minus its attach pair).  The new
graph ``G`` gets a distinguished output pair ``(a, b)``.  Every matching of
``G`` uses at most one edge from ``x`` into ``H''`` and at most one from ``y``,
which gives a 4x4 matrix ``A`` over the truncated ring with

    kvec(G; a, b) = A . kvec(G'; x, y).

Rows are indexed by the output vector blocks (``G``, ``G-a``, ``G-b``,
``G-a-b``) and columns by the input blocks (``G'``, ``G'-x``, ``G'-y``,
``G'-x-y``).  Each cell is a single :class:`CoeffSeries`: the first row of an
upper-triangular Toeplitz block.

With ``X``/``Y``/``Z`` the interior neighbours of ``x`` only, ``y`` only and
both, and ``S`` the output vertices removed in a row, the ordinary row is

    [h(S), t P(S, X|Z), t P(S, Y|Z), t^2 PP(S, X, Y, Z)]

where every set is taken minus ``S``.  When an output vertex coincides with
``x`` (or ``y``), rows deleting it keep ``x`` (or ``y``) out of every
matching and collapse to a shifted two-term row.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, InvalidPairError, InvalidProfileError, InvalidSetsError, NotFoundError
from .graph import Graph, Label, delete_vertices, neighbor_partition
from .oracle import KVector, MatchCounter
from .series import CoeffSeries, _mul, shift

Pair = tuple[Label, Label]
Cells = tuple[tuple[CoeffSeries, ...], ...]

GENERAL, A_IS_X, A_IS_Y, B_IS_X, B_IS_Y = "general", "a=x", "a=y", "b=x", "b=y"
CASES = (GENERAL, A_IS_X, A_IS_Y, B_IS_X, B_IS_Y)


# -- aggregators ---------------------------------------------------------------


def _p_single(counter: MatchCounter, removed: frozenset, verts: Iterable[Label]) -> CoeffSeries:
    acc = [0] * (counter.k + 1)
    for v in verts:
        if v in removed:
            continue
        s = counter.series(removed | {v})
        acc = [p + q for p, q in zip(acc, s.coeffs)]
    return CoeffSeries(tuple(acc))


def _p_pairs(counter: MatchCounter, removed: frozenset, X, Y, Z) -> CoeffSeries:
    x_side = [u for u in (*X, *Z) if u not in removed]
    y_side = [v for v in (*Y, *Z) if v not in removed]
    acc = [0] * (counter.k + 1)
    for u in x_side:
        for v in y_side:
            if u == v:
                continue
            s = counter.series(removed | {u, v})
            acc = [p + q for p, q in zip(acc, s.coeffs)]
    return CoeffSeries(tuple(acc))


def p_single_series(h: Graph, s: Iterable[Label], k: int) -> CoeffSeries:
    """Coefficientwise sum of the series of ``h - v`` over ``v`` in ``s``."""
    s = list(s)
    for v in s:
        if v not in h:
            raise NotFoundError(f"unknown vertex {v!r}")
    return _p_single(MatchCounter(h, k), frozenset(), s)


def p_pairs_series(h: Graph, X: Iterable[Label], Y: Iterable[Label], Z: Iterable[Label], k: int) -> CoeffSeries:
    """Sum of the series of ``h - u - v`` over ordered pairs ``u != v``.

    ``u`` ranges over ``X | Z`` (partners of ``x``) and ``v`` over ``Y | Z``
    (partners of ``y``).  Pairs of two distinct ``Z`` vertices are included:
    ``x`` may be matched to one common neighbour and ``y`` to another.
    """
    X, Y, Z = set(X), set(Y), set(Z)
    if X & Y or X & Z or Y & Z:
        raise InvalidSetsError("X, Y and Z must be pairwise disjoint")
    missing = (X | Y | Z) - set(h.labels)
    if missing:
        raise InvalidSetsError(f"vertices not in graph: {sorted(missing)}")
    return _p_pairs(MatchCounter(h, k), frozenset(), sorted(X), sorted(Y), sorted(Z))


# -- attach profile ------------------------------------------------------------


@dataclass(frozen=True)
class AttachProfile:
    """Everything the transfer matrix needs to know about one block."""

    hpp: Graph
    x: Label
    y: Label
    X: frozenset
    Y: frozenset
    Z: frozenset
    a: Label
    b: Label
    case: str = field(init=False)

    def __post_init__(self):
        x, y, a, b = self.x, self.y, self.a, self.b
        if x == y:
            raise InvalidProfileError(f"attach pair repeats {x!r}")
        if a == b:
            raise InvalidProfileError(f"output pair repeats {a!r}")
        if {a, b} == {x, y}:
            raise InvalidProfileError("output pair equals the attach pair")
        for v in (x, y):
            if v in self.hpp:
                raise InvalidProfileError(f"attach vertex {v!r} lies inside the block interior")
        for v in (a, b):
            if v not in self.hpp and v not in (x, y):
                raise InvalidProfileError(f"output vertex {v!r} is neither interior nor an attach vertex")
        if self.X & self.Y or self.X & self.Z or self.Y & self.Z:
            raise InvalidProfileError("X, Y and Z overlap")
        if not (self.X | self.Y | self.Z) <= set(self.hpp.labels):
            raise InvalidProfileError("neighbour classes leave the block interior")
        case = {x: {0: A_IS_X, 1: B_IS_X}, y: {0: A_IS_Y, 1: B_IS_Y}}
        tag = GENERAL
        for pos, v in enumerate((a, b)):
            if v in case:
                tag = case[v][pos]
        object.__setattr__(self, "case", tag)

    @classmethod
    def from_fragment(
        cls,
        vertices: Sequence[Label],
        edges: Iterable[tuple[Label, Label]],
        attach: Pair,
        out: Pair,
    ) -> AttachProfile:
        """Profile of a block given by its new vertices and its edges.

        ``edges`` may touch the attach vertices but never join them.
        """
        x, y = attach
        if x == y:
            raise InvalidProfileError(f"attach pair repeats {x!r}")
        h = Graph([*vertices, x, y], edges)
        X, Y, Z = neighbor_partition(h, x, y)
        return cls(delete_vertices(h, (x, y)), x, y, frozenset(X), frozenset(Y), frozenset(Z), *out)


# -- matrices ------------------------------------------------------------------


@dataclass(frozen=True)
class TransferMatrix:
    """4x4 matrix over the truncated ring; ``attach``/``out`` record the pairs."""

    k: int
    cells: Cells
    attach: Pair | None = None
    out: Pair | None = None

    def __post_init__(self):
        if len(self.cells) != 4 or any(len(r) != 4 for r in self.cells):
            raise DimensionError("transfer matrix must be 4x4")
        for row in self.cells:
            for c in row:
                if c.k != self.k:
                    raise DimensionError(f"cell bound k={c.k} differs from matrix bound k={self.k}")

    @classmethod
    def identity(cls, k: int) -> TransferMatrix:
        one, zero = CoeffSeries.one(k), CoeffSeries.zero(k)
        return cls(k, tuple(tuple(one if i == j else zero for j in range(4)) for i in range(4)))

    def cell(self, i: int, j: int) -> CoeffSeries:
        return self.cells[i][j]

    def first_rows(self) -> list[list[list[int]]]:
        """Cells as plain ascending coefficient lists."""
        return [[list(c.coeffs) for c in row] for row in self.cells]

    def to_dense(self) -> list[list[int]]:
        """Full ``4(k+1)`` square matrix of Toeplitz blocks, for the descending vector layout."""
        n = self.k + 1
        dense = [[0] * (4 * n) for _ in range(4 * n)]
        for bi, row in enumerate(self.cells):
            for bj, c in enumerate(row):
                for i in range(n):
                    for j in range(i, n):
                        dense[bi * n + i][bj * n + j] = c.coeffs[j - i]
        return dense


def build_transfer(profile: AttachProfile, k: int) -> TransferMatrix:
    """Transfer matrix of one block, from matching counts of its interior."""
    if k < 0:
        raise ValueError(f"size bound must be non-negative, got {k}")
    p = profile
    counter = MatchCounter(p.hpp, k)
    zero = CoeffSeries.zero(k)
    XZ, YZ = p.X | p.Z, p.Y | p.Z

    def general(removed: frozenset) -> tuple[CoeffSeries, ...]:
        return (
            counter.series(removed),
            shift(_p_single(counter, removed, XZ), 1),
            shift(_p_single(counter, removed, YZ), 1),
            shift(_p_pairs(counter, removed, p.X, p.Y, p.Z), 2),
        )

    def pinned(which: Label, removed: frozenset) -> tuple[CoeffSeries, ...]:
        # the row deletes attach vertex `which`; only the other attach vertex can reach H''
        h = counter.series(removed)
        if which == p.x:
            return (zero, h, zero, shift(_p_single(counter, removed, YZ), 1))
        return (zero, zero, h, shift(_p_single(counter, removed, XZ), 1))

    rows = []
    for deleted in ((), (p.a,), (p.b,), (p.a, p.b)):
        hit = [v for v in deleted if v in (p.x, p.y)]
        removed = frozenset(v for v in deleted if v not in (p.x, p.y))
        rows.append(pinned(hit[0], removed) if hit else general(removed))
    return TransferMatrix(k, tuple(rows), attach=(p.x, p.y), out=(p.a, p.b))


def _check_k(k1: int, k2: int) -> None:
    if k1 != k2:
        raise DimensionError(f"bounds differ: k={k1} vs k={k2}")


def apply(tm: TransferMatrix, v: KVector) -> KVector:
    """``tm . v``; the result carries the matrix's output pair."""
    _check_k(tm.k, v.k)
    if tm.attach is not None and tuple(v.pair) != tuple(tm.attach):
        raise InvalidPairError(f"vector pair {v.pair} does not match attach pair {tm.attach}")
    blocks = []
    n = tm.k + 1
    for row in tm.cells:
        acc = [0] * n
        for c, vec in zip(row, v.blocks):
            if any(c.coeffs):
                acc = [s + t for s, t in zip(acc, _mul(c.coeffs, vec.coeffs))]
        blocks.append(CoeffSeries(tuple(acc)))
    pair = tm.out if tm.out is not None else v.pair
    return KVector(tm.k, pair, tuple(blocks))


def compose(tm2: TransferMatrix, tm1: TransferMatrix) -> TransferMatrix:
    """Matrix product ``tm2 . tm1``: apply ``tm1`` first, then ``tm2``."""
    _check_k(tm2.k, tm1.k)
    if tm2.attach is not None and tm1.out is not None and tuple(tm2.attach) != tuple(tm1.out):
        raise InvalidPairError(f"cannot chain: {tm1.out} feeds a matrix attached at {tm2.attach}")
    n = tm1.k + 1
    cells = []
    for i in range(4):
        row = []
        for j in range(4):
            acc = [0] * n
            for l in range(4):
                a, b = tm2.cells[i][l].coeffs, tm1.cells[l][j].coeffs
                if any(a) and any(b):
                    acc = [s + t for s, t in zip(acc, _mul(a, b))]
            row.append(CoeffSeries(tuple(acc)))
        cells.append(tuple(row))
    return TransferMatrix(tm1.k, tuple(cells), attach=tm1.attach, out=tm2.out)


def build_all(profiles: Sequence[AttachProfile], k: int, workers: int = 1) -> list[TransferMatrix]:
    """Transfer matrices for many blocks, in order; optionally on a thread pool."""
    if workers <= 1 or len(profiles) < 2:
        return [build_transfer(p, k) for p in profiles]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: build_transfer(p, k), profiles))
