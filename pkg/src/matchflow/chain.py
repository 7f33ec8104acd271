"""Chains of blocks glued successively over vertex pairs.

A chain starts from a base graph with a distinguished pair and glues blocks
one after another; block ``i`` attaches over the output pair of block
``i - 1``.  :func:`evaluate` folds the base k-matching vector through the
blocks' transfer matrices, :func:`realize` builds the actual graph so the
oracle can check the result.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .errors import ChainValidationError, GraphError
from .graph import Graph, Label, components, delete_vertices, union_glue
from .oracle import KVector, k_vector_direct
from .transfer import AttachProfile, TransferMatrix, apply, build_all, compose

Pair = tuple[Label, Label]

ERROR, WARNING = "error", "warning"


@dataclass(frozen=True)
class Block:
    name: str
    attach: Pair
    out: Pair
    vertices: tuple[Label, ...]
    edges: tuple[tuple[Label, Label], ...]
    # the source drawing has an edge between the attach vertices
    attach_edge: bool = False

    def profile(self) -> AttachProfile:
        return AttachProfile.from_fragment(self.vertices, self.edges, self.attach, self.out)

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "name": self.name,
            "attach": list(self.attach),
            "out": list(self.out),
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }
        if self.attach_edge:
            d["attach_edge"] = True
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> Block:
        try:
            return cls(
                name=str(data.get("name", "")),
                attach=_pair(data["attach"]),
                out=_pair(data["out"]),
                vertices=tuple(str(v) for v in data["vertices"]),
                edges=tuple(_pair(e) for e in data["edges"]),
                attach_edge=bool(data.get("attach_edge", False)),
            )
        except KeyError as exc:
            raise GraphError(f"block is missing field {exc.args[0]!r}") from None


@dataclass(frozen=True)
class Chain:
    base: Graph
    pair: Pair
    blocks: tuple[Block, ...] = ()
    k: int | None = None

    @property
    def out(self) -> Pair:
        return self.blocks[-1].out if self.blocks else self.pair

    @property
    def n_vertices(self) -> int:
        return self.base.n + sum(len(b.vertices) for b in self.blocks)

    def default_k(self) -> int:
        return self.k if self.k is not None else self.n_vertices // 2

    def to_dict(self) -> dict:
        d: dict[str, Any] = {}
        if self.k is not None:
            d["k"] = self.k
        base = self.base.to_dict()
        base["pair"] = list(self.pair)
        d["base"] = base
        d["blocks"] = [b.to_dict() for b in self.blocks]
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> Chain:
        if "base" not in data:
            raise GraphError("chain file needs a 'base' fragment")
        base = data["base"]
        if "pair" not in base:
            raise GraphError("base fragment needs a 'pair'")
        k = data.get("k")
        if k is not None and (not isinstance(k, int) or k < 0):
            raise GraphError(f"'k' must be a non-negative integer, got {k!r}")
        return cls(
            base=Graph.from_dict(base),
            pair=_pair(base["pair"]),
            blocks=tuple(Block.from_dict(b) for b in data.get("blocks", [])),
            k=k,
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _pair(value) -> Pair:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise GraphError(f"expected a pair, got {value!r}")
    return (str(value[0]), str(value[1]))


def load_chain(path: str | os.PathLike) -> Chain:
    with open(path) as fh:
        return Chain.from_dict(json.load(fh))


def save_chain(chain: Chain, path: str | os.PathLike) -> None:
    Path(path).write_text(chain.dumps())


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    level: str
    code: str
    message: str
    block: int | None = None

    def __str__(self) -> str:
        where = "base" if self.block is None else f"block {self.block}"
        return f"{self.level} {self.code} ({where}): {self.message}"


def validate(chain: Chain, strict: bool = False, deep: bool = True) -> list[Diagnostic]:
    """Check a chain; returns diagnostics, empty when the chain is clean.

    Structural problems are errors and are found in one linear pass.  With
    ``deep`` the chain is also realised step by step to look for softer
    findings, reported as warnings (errors under ``strict``): a block whose
    interior is disconnected, the graph minus the attach pair not splitting
    into exactly two components, and a flagged attach edge missing from the
    graph built so far.
    """
    diags: list[Diagnostic] = []

    def report(level, code, msg, idx=None):
        diags.append(Diagnostic(level, code, msg, idx))

    p, q = chain.pair
    if p == q:
        report(ERROR, "DegeneratePair", f"base pair repeats {p!r}")
    for v in (p, q):
        if v not in chain.base:
            report(ERROR, "PairNotInBase", f"base pair vertex {v!r} missing from base graph")
    if diags:
        return diags

    seen = set(chain.base.labels)
    prev_out = chain.pair
    for idx, blk in enumerate(chain.blocks):
        x, y = blk.attach
        a, b = blk.out
        if tuple(blk.attach) != tuple(prev_out):
            report(ERROR, "AttachPairMismatch", f"attaches at {blk.attach}, previous output is {prev_out}", idx)
        if x == y:
            report(ERROR, "DegeneratePair", f"attach pair repeats {x!r}", idx)
        if a == b:
            report(ERROR, "DegeneratePair", f"output pair repeats {a!r}", idx)
        elif {a, b} == {x, y}:
            report(ERROR, "OutEqualsAttach", "output pair equals the attach pair", idx)
        local = set()
        for v in blk.vertices:
            if v in seen or v in local:
                report(ERROR, "DuplicateLabel", f"vertex label {v!r} is not fresh", idx)
            local.add(v)
        allowed = local | {x, y}
        for v in (a, b):
            if v not in allowed:
                report(ERROR, "OutVertexNotInBlock", f"output vertex {v!r} is not in the block", idx)
        edge_keys = set()
        for u, v in blk.edges:
            key = frozenset((u, v))
            if u == v:
                report(ERROR, "SelfLoop", f"loop at {u!r}", idx)
            elif key == frozenset((x, y)):
                report(ERROR, "AttachEdgeInBlock", f"edge {u!r}-{v!r} joins the attach pair", idx)
            elif u not in allowed or v not in allowed:
                report(ERROR, "EdgeOutsideBlock", f"edge {u!r}-{v!r} leaves the block", idx)
            elif u not in local and v not in local:
                report(ERROR, "AttachEdgeInBlock", f"edge {u!r}-{v!r} has no new endpoint", idx)
            if key in edge_keys:
                report(ERROR, "DuplicateEdge", f"edge {u!r}-{v!r} listed twice", idx)
            edge_keys.add(key)
        seen |= local
        prev_out = blk.out

    if deep and not diags:
        diags.extend(_soft_checks(chain, ERROR if strict else WARNING))
    return diags


def _soft_checks(chain: Chain, level: str) -> list[Diagnostic]:
    diags = []
    g = chain.base
    for idx, blk in enumerate(chain.blocks):
        x, y = blk.attach
        if blk.attach_edge and not g.has_edge(x, y):
            diags.append(Diagnostic(level, "MissingAttachEdge",
                                    f"attach edge {x!r}-{y!r} absent from the graph built so far", idx))
        interior = Graph(blk.vertices, [e for e in blk.edges if x not in e and y not in e])
        if len(components(interior)) > 1:
            diags.append(Diagnostic(level, "DisconnectedInterior",
                                    "block minus its attach pair is disconnected", idx))
        g = union_glue(g, blk.vertices, blk.edges)
        parts = components(delete_vertices(g, (x, y)))
        if len(parts) != 2:
            diags.append(Diagnostic(level, "NotTwoComponents",
                                    f"graph minus {{{x}, {y}}} has {len(parts)} components instead of 2", idx))
    return diags


def _raise_on_errors(chain: Chain) -> None:
    errors = [d for d in validate(chain, deep=False) if d.level == ERROR]
    if errors:
        raise ChainValidationError(errors)


# -- realisation and evaluation ------------------------------------------------


def realize(chain: Chain) -> Graph:
    """The amalgamated graph described by ``chain``."""
    _raise_on_errors(chain)
    g = chain.base
    for blk in chain.blocks:
        g = union_glue(g, blk.vertices, blk.edges)
    return g


def _workers() -> int:
    raw = os.environ.get("MATCHFLOW_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def transfer_matrices(chain: Chain, k: int, workers: int | None = None) -> list[TransferMatrix]:
    _raise_on_errors(chain)
    profiles = [blk.profile() for blk in chain.blocks]
    return build_all(profiles, k, workers if workers is not None else _workers())


def evaluate(chain: Chain, k: int | None = None, workers: int | None = None) -> KVector:
    """k-matching vector of the realised graph at the chain's final output pair."""
    if k is None:
        k = chain.default_k()
    if k < 0:
        raise ValueError(f"size bound must be non-negative, got {k}")
    mats = transfer_matrices(chain, k, workers)
    vec = k_vector_direct(chain.base, *chain.pair, k)
    for tm in mats:
        vec = apply(tm, vec)
    return vec


def evaluate_composed(chain: Chain, k: int | None = None) -> KVector:
    """Same as :func:`evaluate`, multiplying all matrices together before one apply."""
    if k is None:
        k = chain.default_k()
    mats = transfer_matrices(chain, k, workers=1)
    vec = k_vector_direct(chain.base, *chain.pair, k)
    if not mats:
        return vec
    total = mats[0]
    for tm in mats[1:]:
        total = compose(tm, total)
    return apply(total, vec)


def hosoya_of_chain(chain: Chain) -> int:
    """Hosoya index of the realised graph."""
    return evaluate(chain, chain.n_vertices // 2).g.total()

