"""Constructors for standard graphs, chain families and the bundled fixtures."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from .chain import Block, Chain
from .graph import Graph, Label

FIXTURES = ("sporadic-912", "molecule-74816")
CHAIN_KINDS = ("cyclic-chain", "benzenoid", "fixture")


def gen_basic(kind: str, n: int) -> Graph:
    """Path, cycle, complete graph or star on ``n`` vertices labelled ``"0".."n-1"``.

    The star has vertex ``"0"`` as centre.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    labels = [str(i) for i in range(n)]
    if kind == "path":
        edges = [(labels[i], labels[i + 1]) for i in range(n - 1)]
    elif kind == "cycle":
        if n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
        edges = [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    elif kind == "complete":
        edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    elif kind == "star":
        edges = [(labels[0], labels[i]) for i in range(1, n)]
    else:
        raise ValueError(f"unknown graph kind {kind!r}")
    return Graph(labels, edges)


@dataclass(frozen=True)
class ChainSpec:
    """What :func:`gen_chain` should build.

    ``cyclic-chain`` takes a list of ``(cycle length, offset)`` pairs,
    ``benzenoid`` an L/R string and ``fixture`` a fixture name.
    """

    kind: str
    params: Any

    def __post_init__(self):
        if self.kind not in CHAIN_KINDS:
            raise ValueError(f"unknown chain kind {self.kind!r}")
        if self.kind == "cyclic-chain":
            for length, offset in self.params:
                if length < 3:
                    raise ValueError(f"cycle length must be at least 3, got {length}")
                if not 1 <= offset <= length - 1:
                    raise ValueError(f"offset {offset} outside 1..{length - 1} for a {length}-cycle")
        elif self.kind == "benzenoid":
            bad = set(self.params) - {"L", "R"}
            if bad:
                raise ValueError(f"benzenoid strings use only L and R, got {sorted(bad)}")
        elif self.params not in FIXTURES:
            raise ValueError(f"unknown fixture {self.params!r}; choose from {', '.join(FIXTURES)}")


def parse_cyclic(text: str) -> list[tuple[int, int]]:
    """``"6:1,5:2"`` -> ``[(6, 1), (5, 2)]``."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            length, offset = item.split(":")
            out.append((int(length), int(offset)))
        except ValueError:
            raise ValueError(f"bad cycle item {item!r}; expected LENGTH:OFFSET") from None
    if not out:
        raise ValueError("empty cyclic-chain description")
    return out


def _edge_base() -> tuple[Graph, tuple[Label, Label]]:
    return Graph(["u0", "u1"], [("u0", "u1")]), ("u0", "u1")


def cycle_block(name: str, attach: tuple[Label, Label], length: int, offset: int, prefix: str) -> Block:
    """A ``length``-cycle closed through the attach edge.

    Going round the cycle as ``x, w1, ..., w_{length-2}, y``, the output pair
    is the ``offset``-th edge after ``x``: offset 1 gives ``(x, w1)``, offset
    ``length - 1`` gives ``(w_{length-2}, y)``.
    """
    x, y = attach
    new = [f"{prefix}{j}" for j in range(1, length - 1)]
    ring = [x, *new, y]
    edges = tuple((ring[j], ring[j + 1]) for j in range(length - 1))
    return Block(name, attach, (ring[offset - 1], ring[offset]), tuple(new), edges, attach_edge=True)


def _cyclic_chain(items: list[tuple[int, int]]) -> Chain:
    base, pair = _edge_base()
    blocks = []
    attach = pair
    for i, (length, offset) in enumerate(items):
        blk = cycle_block(f"C{length}#{i}", attach, length, offset, prefix=f"c{i}_")
        blocks.append(blk)
        attach = blk.out
    return Chain(base, pair, tuple(blocks))


def _benzenoid(word: str) -> list[tuple[int, int]]:
    # kinks use the edges one step from the para edge; the last ring exits para
    return [(6, 2 if c == "L" else 4) for c in word] + [(6, 3)]


def gen_chain(spec: ChainSpec) -> Chain:
    if spec.kind == "cyclic-chain":
        return _cyclic_chain(list(spec.params))
    if spec.kind == "benzenoid":
        return _cyclic_chain(_benzenoid(spec.params))
    return fixture_chain(spec.params)


def fixture_chain(name: str) -> Chain:
    if name == "sporadic-912":
        return _sporadic()
    if name == "molecule-74816":
        return _molecule()
    raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def _sporadic() -> Chain:
    # 13-vertex graph: pentagon on the edge v3v4, then T, then a hexagon
    base = Graph(["v3", "v4"], [("v3", "v4")])
    pentagon = Block(
        "pentagon", ("v3", "v4"), ("x", "y"), ("x", "y", "u"),
        (("v3", "x"), ("x", "y"), ("y", "u"), ("u", "v4")), attach_edge=True,
    )
    t_block = Block(
        "T", ("x", "y"), ("a", "b"), ("z", "c", "a", "b"),
        (("x", "z"), ("y", "z"), ("z", "c"), ("c", "a"), ("c", "b"), ("a", "b")), attach_edge=True,
    )
    hexagon = Block(
        "hexagon", ("a", "b"), ("v1", "v2"), ("h1", "v1", "v2", "h2"),
        (("a", "h1"), ("h1", "v1"), ("v1", "v2"), ("v2", "h2"), ("h2", "b")), attach_edge=True,
    )
    return Chain(base, ("v3", "v4"), (pentagon, t_block, hexagon), k=6)


def _molecule() -> Chain:
    # 22-vertex molecular graph: phenalene + cyclopentane + methyl-substituted cyclopentene
    base = Graph(["x", "y"], [("x", "y")])
    dimethylcyclopentene = Block(
        "1,2-dimethylcyclopentene", ("x", "y"), ("h", "i"), ("v19", "v20", "i", "h", "v18"),
        (("x", "v19"), ("v19", "i"), ("i", "v20"), ("v20", "y"), ("v19", "v18"), ("i", "h")),
        attach_edge=True,
    )
    methylcyclopentane = Block(
        "methylcyclopentane", ("h", "i"), ("f", "g"), ("v14", "v15", "f", "g"),
        (("h", "v14"), ("v14", "f"), ("f", "g"), ("g", "v15"), ("v15", "h")),
        attach_edge=True,
    )
    path_fg = Block(
        "P5 (f,g)->(e,d)", ("f", "g"), ("e", "d"), ("e", "v11", "d"),
        (("f", "e"), ("g", "v11"), ("v11", "d")),
        attach_edge=True,
    )
    toluene = Block(
        "toluene", ("e", "d"), ("c", "d"), ("v7", "v9", "v6", "v3", "c"),
        (("e", "v9"), ("v9", "v6"), ("v6", "v3"), ("v3", "c"), ("c", "v7"), ("v7", "e"), ("v7", "d")),
    )
    path_cd = Block(
        "P5 (c,d)->(a,b)", ("c", "d"), ("a", "b"), ("a", "b", "v5"),
        (("c", "a"), ("a", "b"), ("b", "v5"), ("v5", "d")),
    )
    return Chain(base, ("x", "y"), (dimethylcyclopentene, methylcyclopentane, path_fg, toluene, path_cd), k=11)


def synthetic_chain(blocks: int) -> Chain:
    """Deterministic ``blocks``-long chain cycling through small ring blocks of every case."""
    pattern = [(6, 3), (5, 2), (3, 2), (6, 1), (4, 2), (5, 4), (3, 1)]
    return _cyclic_chain([pattern[i % len(pattern)] for i in range(blocks)])


def gen_random_chain(seed: int, max_blocks: int = 4, max_block_size: int = 4, max_vertices: int = 16) -> Chain:
    """Pseudorandom valid chain; the same seed always yields the same chain.

    Blocks draw their output pair from all five positions relative to the
    attach pair, and now and then carry two common neighbours of the attach
    vertices.  The realised graph never exceeds ``max_vertices``.
    """
    if max_blocks < 1 or max_block_size < 1 or max_vertices < 3:
        raise ValueError("bounds must be at least 1 (max_vertices at least 3)")
    rng = random.Random(seed)
    n0 = rng.randint(2, 4)
    base_labels = [f"p{j}" for j in range(n0)]
    base_edges = [(base_labels[i], base_labels[j]) for i in range(n0) for j in range(i + 1, n0) if rng.random() < 0.5]
    base = Graph(base_labels, base_edges)
    pair = tuple(rng.sample(base_labels, 2))

    total = n0
    attach = pair
    blocks = []
    for i in range(rng.randint(1, max_blocks)):
        room = min(max_block_size, max_vertices - total)
        if room < 1:
            break
        m = rng.randint(1, room)
        x, y = attach
        new = [f"r{i}v{j}" for j in range(m)]
        edges = []
        for j in range(m):
            for l in range(j + 1, m):
                if rng.random() < 0.4:
                    edges.append((new[j], new[l]))
        forced_z = set(rng.sample(new, 2)) if m >= 2 and rng.random() < 0.25 else set()
        X = []
        for v in new:
            side = "xy" if v in forced_z else rng.choice(["", "x", "y", "xy", "x", "y"])
            if "x" in side:
                edges.append((x, v))
                if side == "x":
                    X.append(v)
            if "y" in side:
                edges.append((y, v))

        case = rng.choice(["general", "general", "a=x", "a=y", "b=x", "b=y"])
        if case == "general" and m < 2:
            case = rng.choice(["a=x", "a=y", "b=x", "b=y"])
        if case == "general":
            if X and rng.random() < 0.5:
                a = rng.choice(X)
                b = rng.choice([v for v in new if v != a])
            else:
                a, b = rng.sample(new, 2)
        else:
            inner = rng.choice(new)
            pinned = x if case.endswith("x") else y
            a, b = (pinned, inner) if case.startswith("a") else (inner, pinned)
        rng.shuffle(edges)
        blk = Block(f"rand{i}", attach, (a, b), tuple(new), tuple(edges))
        blocks.append(blk)
        total += m
        attach = blk.out
    return Chain(base, pair, tuple(blocks))
