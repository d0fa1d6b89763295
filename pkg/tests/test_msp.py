from __future__ import annotations

import time

import pytest
from hypothesis import given

from ocn.coloring import build_color_graph, verify_oriented_coloring
from ocn.digraph import induced, sources_sinks, underlying
from ocn.errors import SizeLimitError
from ocn.expr import Leaf, Parallel, Series, eval_msp, parse_msp, postorder
from ocn.instances import example, example5_union, m_expr, mprime_expr, random_msp
from ocn.msp import MspState, msp_ocn, msp_states, paley_coloring, und_3coloring
from ocn.oracle import ocn_exact
from ocn.tournaments import is_paley_arc

from .conftest import msp_exprs


def test_leaf_states():
    table = msp_states(Leaf("v"))
    states = table.decoded()
    assert len(states) == 7
    assert {s.used for s in states} == {frozenset({i}) for i in range(7)}
    assert all(s.sources == s.used == s.sinks and not s.arcs for s in states)


def test_series_states():
    states = msp_states(parse_msp("a * b")).decoded()
    target = MspState(frozenset({0, 1}), frozenset({(0, 1)}), frozenset({0}), frozenset({1}))
    assert target in states
    assert all(len(s.used) == 2 for s in states)
    assert len(states) == 42


def test_state_encoding_round_trip():
    s = MspState(frozenset({0, 3, 6}), frozenset({(0, 3), (6, 0)}), frozenset({6}), frozenset({3}))
    assert MspState.decode(s.encode()) == s


@pytest.mark.parametrize("name", ["ex5-x1", "ex5-x2", "ex3-x1"])
def test_state_dp_minimum_and_witness(name):
    e = example(name)
    table = msp_states(e)
    assert table.min_used() == 4
    w = table.witness()
    assert w.used_colors == 4 and verify_oriented_coloring(eval_msp(e), w)


def test_state_dp_guard():
    with pytest.raises(SizeLimitError):
        msp_states(example("ex5-x2"), max_states=1000)


def test_state_dp_respects_orientation():
    table = msp_states(example("ex3-x2"))
    for s in table.decoded():
        assert all((b, a) not in s.arcs and a != b for a, b in s.arcs)
        assert s.sources <= s.used and s.sinks <= s.used
        assert s.sources and s.sinks
    assert table.max_size <= 3**21 * 2**7 * 2**7


def test_msp_ocn_examples():
    start = time.perf_counter()
    chi, c = msp_ocn(example("ex6"))
    assert time.perf_counter() - start < 1.0
    assert chi == 7 and verify_oriented_coloring(eval_msp(example("ex6")), c)
    assert msp_ocn(example("ex3-x1"))[0] == 4
    assert msp_ocn(example("ex5-x1"))[0] == 4
    assert msp_ocn(example("ex5-x2"))[0] == 4
    assert msp_ocn(example5_union())[0] == 5


@given(msp_exprs(max_n=12))
def test_msp_ocn_matches_oracle(e):
    g = eval_msp(e)
    chi, c = msp_ocn(e)
    assert c.used_colors == chi and verify_oriented_coloring(g, c)
    assert chi == ocn_exact(g)[0]


@given(msp_exprs(max_n=7))
def test_fast_engine_matches_literal_state_dp(e):
    assert msp_ocn(e)[0] == msp_states(e).min_used()


def test_paley_examples():
    assert paley_coloring(Leaf("v")).assignment == (0,)
    assert paley_coloring(parse_msp("a * b")).assignment == (0, 1)
    c = paley_coloring(parse_msp("(a*b)*c"))
    assert c.assignment == (0, 4, 1)
    assert is_paley_arc(0, 4) and is_paley_arc(4, 1)


def _check_paley_per_node(e):
    # the invariants hold for every subexpression on its own
    for node in postorder(e):
        g = eval_msp(node)
        c = paley_coloring(node)
        sources, sinks = sources_sinks(g)
        assert all(c[v] == 0 for v in sources)
        assert {c[v] for v in sinks} <= {0, 1, 5}
        cg = build_color_graph(g, c)
        assert all(is_paley_arc(a, b) for a, b in cg.arcs)


@given(msp_exprs(max_n=40))
def test_paley_invariants(e):
    _check_paley_per_node(e)


@given(msp_exprs(max_n=60))
def test_und_3coloring(e):
    g = eval_msp(e)
    c = und_3coloring(e)
    assert all(c[u] != c[v] for u, v in underlying(g).edges)
    assert set(c.assignment) <= {0, 1, 2}
    sources, sinks = sources_sinks(g)
    assert all(c[v] == 0 for v in sources)
    assert {c[v] for v in sinks} <= {0, 1}


def test_und_3coloring_examples():
    assert und_3coloring(parse_msp("a * b")).assignment == (0, 1)
    assert und_3coloring(Leaf("v")).assignment == (0,)
    g = eval_msp(example("ex3-x1"))
    c = und_3coloring(example("ex3-x1"))
    assert c.used_colors == 3 and all(c[u] != c[v] for u, v in g.arcs)


def test_series_arcs_use_expected_color_pairs():
    for seed in range(30):
        e = random_msp(30, seed)
        for node in postorder(e):
            if isinstance(node, Series):
                c = und_3coloring(node)
                left = eval_msp(node.left).n
                g = eval_msp(node)
                for u, v in g.arcs:
                    if u < left <= v:
                        assert (c[u], c[v]) in ((0, 1), (2, 1))


def test_constructed_families():
    for i in range(4):
        assert eval_msp(mprime_expr(i)).n == 3**i
        assert eval_msp(m_expr(i)).n == 4**i
    assert msp_ocn(mprime_expr(5))[0] <= 7


def test_non_closure_witness_is_still_seven_colorable():
    # removing v3 from the second digraph of Example 3 leaves a digraph outside the class
    g = eval_msp(example("ex3-x2"))
    sub = induced(g, [v for v in range(g.n) if g.names[v] != "v3"])
    assert ocn_exact(sub)[0] <= 7


def test_parallel_state_union():
    e = Parallel(parse_msp("a * b"), parse_msp("c * d"))
    assert msp_states(e).min_used() == 2
