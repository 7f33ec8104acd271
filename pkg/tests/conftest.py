from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from matchflow.graph import Graph

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def cycle(n: int, prefix: str = "c") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path(n: int, prefix: str = "p") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return Graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def t_graph() -> Graph:
    """Two triangles {x,y,z} and {a,b,c} joined by the bridge z-c."""
    return Graph(
        ["a", "b", "c", "z", "x", "y"],
        [("a", "b"), ("b", "c"), ("c", "a"), ("z", "x"), ("x", "y"), ("y", "z"), ("c", "z")],
    )


def sporadic_graph() -> Graph:
    """The 13-vertex graph, transcribed edge by edge from its drawing."""
    edges = [
        ("a", "b"), ("b", "c"), ("c", "a"),          # left triangle
        ("z", "x"), ("x", "y"), ("y", "z"),          # right triangle
        ("c", "z"),                                  # bridge
        ("a", "h1"), ("h1", "v1"), ("v1", "v2"), ("v2", "h2"), ("h2", "b"),  # hexagon
        ("x", "v3"), ("v3", "v4"), ("v4", "u"), ("u", "y"),                  # pentagon
    ]
    labels = sorted({v for e in edges for v in e})
    return Graph(labels, edges)


def molecule_graph() -> Graph:
    """The 22-vertex molecular graph, transcribed ring by ring from its drawing."""
    rings = [
        ["v1", "v2", "v5", "v8", "v7", "v4"],
        ["v4", "v3", "v6", "v9", "v10", "v7"],
        ["v7", "v10", "v12", "v13", "v11", "v8"],
        ["v12", "v14", "v16", "v15", "v13"],
        ["v17", "v19", "v21", "v22", "v20"],
    ]
    edges = set()
    for ring in rings:
        for i in range(len(ring)):
            edges.add(frozenset((ring[i], ring[(i + 1) % len(ring)])))
    edges |= {frozenset(("v16", "v17")), frozenset(("v18", "v19"))}
    labels = [f"v{i}" for i in range(1, 23)]
    return Graph(labels, [tuple(sorted(e)) for e in edges])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    labels = [f"g{i}" for i in range(n)]
    edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(labels, edges)


@st.composite
def graphs(draw, max_vertices: int = 8, max_edges: int | None = None):
    n = draw(st.integers(0, max_vertices))
    labels = [f"v{i}" for i in range(n)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges) if pairs else st.just([]))
    return Graph(labels, chosen)


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
