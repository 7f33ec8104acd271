import re

import pytest
from hypothesis import given, strategies as st

from matchflow import transfer
from matchflow.chain import Block, Chain, evaluate, realize
from matchflow.errors import DimensionError, InvalidPairError, InvalidProfileError, InvalidSetsError
from matchflow.generators import fixture_chain, gen_random_chain
from matchflow.graph import Graph, delete_vertices
from matchflow.oracle import KVector, k_vector_direct, match_series
from matchflow.series import CoeffSeries
from matchflow.transfer import (
    AttachProfile,
    TransferMatrix,
    apply,
    build_transfer,
    compose,
    p_pairs_series,
    p_single_series,
)

from conftest import cycle, path, t_graph


def S(*c):
    return CoeffSeries(tuple(c))


def printed(text: str, k: int) -> CoeffSeries:
    """Series for the printed cell notation: 'M(1,4,1)', '0M(1,3,0)', '00M(1,0,0)' or '0'."""
    text = text.strip()
    if text == "0":
        return CoeffSeries.zero(k)
    m = re.fullmatch(r"(0*)M\(([\d,]+)\)", text)
    lead, body = m.group(1), [int(c) for c in m.group(2).split(",")]
    return CoeffSeries.of([0] * len(lead) + body, k)


def printed_matrix(rows: list[str], k: int) -> list[list[CoeffSeries]]:
    return [[printed(c, k) for c in row.split("|")] for row in rows]


def block_of(chain, name):
    return next(b for b in chain.blocks if b.name == name)


# -- aggregators ---------------------------------------------------------------


def test_p_single_examples():
    tpp = delete_vertices(t_graph(), {"x", "y"})
    assert p_single_series(tpp, {"z"}, 2) == S(1, 3, 0)
    assert p_single_series(tpp, set(), 2) == S(0, 0, 0)
    c4 = cycle(4)
    assert p_single_series(c4, c4.labels, 2) == S(4, 8, 0)


def test_p_pairs_examples():
    tpp = delete_vertices(t_graph(), {"x", "y"})
    assert p_pairs_series(tpp, set(), set(), {"z"}, 2) == S(0, 0, 0)
    g = cycle(6)
    assert p_pairs_series(g, {"c0"}, {"c3"}, set(), 3) == match_series(delete_vertices(g, {"c0", "c3"}), 3)
    with pytest.raises(InvalidSetsError):
        p_pairs_series(g, {"c0"}, {"c0"}, set(), 3)


def _three_family_pairs(counter, removed, X, Y, Z):
    # pair families (X,Y), (X,Z), (Z,Y) only, without two distinct common neighbours
    acc = CoeffSeries.zero(counter.k)
    for us, vs in ((X, Y), (X, Z), (Z, Y)):
        for u in us:
            for v in vs:
                if u not in removed and v not in removed:
                    acc = acc + counter.series(removed | {u, v})
    return acc


def test_common_neighbour_pairs_are_needed_when_two_exist(monkeypatch):
    # x and y both adjacent to u and v: the glued graph is K4
    base = Graph(["x", "y"], [("x", "y")])
    blk = Block("K4 fragment", ("x", "y"), ("u", "v"), ("u", "v"),
                (("x", "u"), ("x", "v"), ("y", "u"), ("y", "v"), ("u", "v")))
    chain = Chain(base, ("x", "y"), (blk,))
    g = realize(chain)
    direct = k_vector_direct(g, "u", "v", 2)
    assert direct.g == S(1, 6, 3)

    h = blk.profile().hpp
    three = _three_family_pairs(transfer.MatchCounter(h, 2), frozenset(), set(), set(), {"u", "v"})
    full = p_pairs_series(h, set(), set(), {"u", "v"}, 2)
    assert full == three + 2 * match_series(delete_vertices(h, {"u", "v"}), 2)

    assert evaluate(chain, 2) == direct
    monkeypatch.setattr(transfer, "_p_pairs", _three_family_pairs)
    assert evaluate(chain, 2) != direct


# -- the matrices of the sporadic example ---------------------------------------

K = 6


def test_t_matrix_matches_printed_cells():
    tm = build_transfer(block_of(fixture_chain("sporadic-912"), "T").profile(), K)
    expected = printed_matrix([
        "M(1,4,1) | 0M(1,3,0) | 0M(1,3,0) | 0",
        "M(1,2,0) | 0M(1,1,0) | 0M(1,1,0) | 0",
        "M(1,2,0) | 0M(1,1,0) | 0M(1,1,0) | 0",
        "M(1,1,0) | 0M(1,0,0) | 0M(1,0,0) | 0",
    ], K)
    assert [list(r) for r in tm.cells] == expected


def test_hexagon_matrix_matches_printed_cells():
    tm = build_transfer(block_of(fixture_chain("sporadic-912"), "hexagon").profile(), K)
    expected = printed_matrix([
        "M(1,3,1) | 0M(1,2,0) | 0M(1,2,0) | 00M(1,1,0)",
        "M(1,1,0) | 0M(1,1,0) | 0M(1,0,0) | 00M(1,0,0)",
        "M(1,1,0) | 0M(1,0,0) | 0M(1,1,0) | 00M(1,0,0)",
        "M(1,0,0) | 0M(1,0,0) | 0M(1,0,0) | 00M(1,0,0)",
    ], K)
    assert [list(r) for r in tm.cells] == expected


def test_pentagon_matrix_matches_printed_cells():
    tm = build_transfer(block_of(fixture_chain("sporadic-912"), "pentagon").profile(), K)
    expected = printed_matrix([
        "M(1,2,0) | 0M(1,1,0) | 0M(1,1,0) | 00M(1,0,0)",
        "M(1,1,0) | 0 | 0M(1,0,0) | 0",
        "M(1,0,0) | 0M(1,0,0) | 0M(1,0,0) | 00M(1,0,0)",
        "M(1,0,0) | 0 | 0M(1,0,0) | 0",
    ], K)
    assert [list(r) for r in tm.cells] == expected


def test_sporadic_pipeline_sequential_and_composed():
    chain = fixture_chain("sporadic-912")
    mats = [build_transfer(b.profile(), K) for b in chain.blocks]
    base = k_vector_direct(chain.base, "v3", "v4", K)
    seq = base
    for tm in mats:
        seq = apply(tm, seq)
    total = compose(mats[2], compose(mats[1], mats[0]))
    assert apply(total, base) == seq
    assert seq.g.descending() == [26, 177, 336, 261, 95, 16, 1]
    assert seq.pair == ("v1", "v2")


# -- single-block checks -------------------------------------------------------


def test_pentagon_on_edge_equals_direct_c5_vector():
    chain = fixture_chain("sporadic-912")
    blk = block_of(chain, "pentagon")
    tm = build_transfer(blk.profile(), 6)
    got = apply(tm, k_vector_direct(chain.base, "v3", "v4", 6))
    c5 = Graph(["v3", "x", "y", "u", "v4"], [("v3", "x"), ("x", "y"), ("y", "u"), ("u", "v4"), ("v4", "v3")])
    assert got == k_vector_direct(c5, "x", "y", 6)


def _glue_and_check(base, pair, blk, k=None):
    chain = Chain(base, pair, (blk,))
    g = realize(chain)
    k = g.n // 2 if k is None else k
    assert apply(build_transfer(blk.profile(), k), k_vector_direct(base, *pair, k)) == \
        k_vector_direct(g, *blk.out, k)


BASES = [
    (Graph(["x", "y"], [("x", "y")]), ("x", "y")),
    (Graph(["x", "y"], []), ("x", "y")),
    (Graph(["x", "m", "y"], [("x", "m"), ("m", "y")]), ("x", "y")),
    (Graph(["x", "y", "m", "n"], [("x", "y"), ("y", "m"), ("m", "n"), ("n", "x"), ("x", "m")]), ("x", "y")),
]

FRAGMENT = (("p", "q", "r", "s"),
            (("x", "p"), ("x", "q"), ("y", "q"), ("y", "r"), ("p", "q"), ("q", "r"), ("r", "s"), ("s", "p"), ("x", "s")))


@pytest.mark.parametrize("base,pair", BASES)
@pytest.mark.parametrize("out", [
    ("p", "r"),   # a in X, b in Y
    ("q", "s"),   # a in Z, b in X
    ("r", "q"),
    ("x", "r"), ("y", "p"), ("s", "x"), ("q", "y"),
])
def test_each_output_position(base, pair, out):
    verts, edges = FRAGMENT
    _glue_and_check(base, pair, Block("frag", pair, out, verts, edges))


def test_case_tags():
    verts, edges = FRAGMENT
    tags = {out: AttachProfile.from_fragment(verts, edges, ("x", "y"), out).case
            for out in [("p", "r"), ("x", "r"), ("y", "r"), ("r", "x"), ("r", "y")]}
    assert tags == {("p", "r"): "general", ("x", "r"): "a=x", ("y", "r"): "a=y",
                    ("r", "x"): "b=x", ("r", "y"): "b=y"}


def test_invalid_profiles():
    verts, edges = FRAGMENT
    for out in [("x", "y"), ("y", "x"), ("p", "p"), ("p", "nowhere")]:
        with pytest.raises(InvalidProfileError):
            AttachProfile.from_fragment(verts, edges, ("x", "y"), out)


def test_corner_cells():
    for seed in range(40):
        chain = gen_random_chain(seed)
        for blk in chain.blocks:
            p = blk.profile()
            tm = build_transfer(p, 5)
            assert tm.cell(0, 0) == match_series(p.hpp, 5)
            assert tm.cell(0, 3)[0] == 0 and tm.cell(0, 3)[1] == 0


def test_general_rows_are_row_one_on_smaller_interiors():
    for seed in range(60):
        for blk in gen_random_chain(seed).blocks:
            p = blk.profile()
            if p.case != "general":
                continue
            tm = build_transfer(p, 6)
            for row, drop in zip(tm.cells[1:], ({p.a}, {p.b}, {p.a, p.b})):
                h = delete_vertices(p.hpp, drop)
                assert row[0] == match_series(h, 6)
                assert row[1] == p_single_series(h, (p.X | p.Z) - drop, 6).shift(1)
                assert row[2] == p_single_series(h, (p.Y | p.Z) - drop, 6).shift(1)
                assert row[3] == p_pairs_series(h, p.X - drop, p.Y - drop, p.Z - drop, 6).shift(2)


# -- matrix algebra ------------------------------------------------------------


def series(k):
    return st.lists(st.integers(0, 50), min_size=k + 1, max_size=k + 1).map(lambda c: CoeffSeries(tuple(c)))


def matrices(k):
    return st.lists(series(k), min_size=16, max_size=16).map(
        lambda cs: TransferMatrix(k, tuple(tuple(cs[4 * i:4 * i + 4]) for i in range(4))))


def vectors(k):
    return st.lists(series(k), min_size=4, max_size=4).map(lambda bs: KVector(k, ("a", "b"), tuple(bs)))


@given(st.integers(0, 5).flatmap(lambda k: st.tuples(matrices(k), matrices(k), matrices(k), vectors(k))))
def test_matrix_algebra(items):
    a, b, c, v = items
    ident = TransferMatrix.identity(a.k)
    assert compose(ident, a).cells == a.cells
    assert compose(a, ident).cells == a.cells
    assert apply(ident, v) == v
    assert compose(compose(c, b), a).cells == compose(c, compose(b, a)).cells
    assert apply(compose(b, a), v) == apply(b, apply(a, v))


@given(st.integers(0, 4).flatmap(lambda k: st.tuples(matrices(k), vectors(k))))
def test_dense_block_toeplitz_matches_apply(items):
    tm, v = items
    dense = tm.to_dense()
    desc = v.descending()
    product = [sum(r * c for r, c in zip(row, desc)) for row in dense]
    assert product == apply(tm, v).descending()


def test_dimension_and_pair_checks():
    a = TransferMatrix.identity(2)
    with pytest.raises(DimensionError):
        compose(a, TransferMatrix.identity(3))
    v = k_vector_direct(path(2), "p0", "p1", 3)
    with pytest.raises(DimensionError):
        apply(a, v)
    chain = fixture_chain("sporadic-912")
    tm = build_transfer(chain.blocks[1].profile(), 3)
    with pytest.raises(InvalidPairError):
        apply(tm, v)
