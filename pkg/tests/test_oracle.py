from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ocn.coloring import verify_oriented_coloring
from ocn.digraph import Digraph, induced
from ocn.errors import NotOrientedError, SizeLimitError
from ocn.expr import eval_msp
from ocn.instances import cycle, example, example5_union, path, random_oriented
from ocn.oracle import ocn_decide, ocn_exact
from ocn.tournaments import all_tournaments, find_homomorphism, nonisomorphic_tournaments

from .conftest import oriented_digraphs


def test_decide_examples():
    assert ocn_decide(cycle(5), 4) is None
    c = ocn_decide(cycle(5), 5)
    assert c is not None and sorted(c.assignment) == [0, 1, 2, 3, 4]
    assert ocn_decide(cycle(4), 4) is not None
    assert ocn_decide(cycle(4), 3) is None


def test_exact_examples():
    assert ocn_exact(eval_msp(example("ex5-x1")))[0] == 4
    assert ocn_exact(eval_msp(example5_union()))[0] == 5
    assert [ocn_exact(g)[0] for g in (path(2), path(3), cycle(3), cycle(4), cycle(5), cycle(6), cycle(7))] == [
        2, 3, 3, 4, 5, 3, 4
    ]


def test_exact_on_example6():
    chi, c = ocn_exact(eval_msp(example("ex6")))
    assert chi == 7 and verify_oriented_coloring(eval_msp(example("ex6")), c)


def test_guards():
    with pytest.raises(NotOrientedError):
        ocn_decide(Digraph.build(2, [(0, 1), (1, 0)]), 3)
    with pytest.raises(ValueError):
        ocn_decide(path(2), 0)
    with pytest.raises(SizeLimitError):
        ocn_exact(path(31))
    assert ocn_exact(path(31), max_n=None)[0] == 3
    assert ocn_exact(Digraph.build(0))[0] == 0


@given(oriented_digraphs(max_n=8), st.integers(1, 8))
def test_decide_is_sound_and_monotone(g, r):
    c = ocn_decide(g, r)
    if c is not None:
        assert verify_oriented_coloring(g, c)
        assert c.used_colors <= r
        assert ocn_decide(g, r + 1) is not None
    else:
        assert r < g.n
        assert ocn_decide(g, max(r - 1, 1)) is None


@given(oriented_digraphs(max_n=8))
def test_exact_is_minimal(g):
    chi, c = ocn_exact(g)
    assert c.used_colors == chi and verify_oriented_coloring(g, c)
    assert chi == 1 or ocn_decide(g, chi - 1) is None


def test_subdigraph_monotonicity():
    rng = random.Random(7)
    for seed in range(200):
        g = random_oriented(rng.randint(1, 9), rng.random(), seed)
        subset = [v for v in range(g.n) if rng.random() < 0.6]
        assert ocn_exact(induced(g, subset))[0] <= ocn_exact(g)[0]


def _maps_into_some(g, r, tournaments):
    return any(find_homomorphism(g, t) is not None for t in tournaments)


@settings(max_examples=40)
@given(oriented_digraphs(max_n=6))
def test_tournament_equivalence_labelled(g):
    # every labelled tournament on r <= 5 vertices; classes cover r = 6 below
    for r in range(1, 6):
        assert (ocn_decide(g, r) is not None) == _maps_into_some(g, r, all_tournaments(r))


@settings(max_examples=80)
@given(oriented_digraphs(max_n=6))
def test_tournament_equivalence_classes(g):
    for r in range(1, 7):
        assert (ocn_decide(g, r) is not None) == _maps_into_some(g, r, nonisomorphic_tournaments(r))
