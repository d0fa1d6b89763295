from __future__ import annotations

import pytest
from hypothesis import given

from ocn.cograph import cograph_ocn, is_oriented_cograph
from ocn.coloring import transitive_dag_coloring, verify_oriented_coloring
from ocn.digraph import Digraph, degrees
from ocn.errors import SizeLimitError
from ocn.expr import eval_dico, parse_dico
from ocn.instances import cycle, example, path, tt_expr
from ocn.oracle import ocn_exact

from .conftest import dico_exprs, oriented_digraphs


def test_cograph_ocn_examples():
    chi, c = cograph_ocn(example("ex2"))
    assert chi == 3 and c.assignment == (0, 1, 2, 2)
    assert cograph_ocn(parse_dico("a + b"))[0] == 1
    for n in range(1, 9):
        chi, c = cograph_ocn(tt_expr(n))
        assert chi == n and c.assignment == tuple(range(n))


def test_membership_examples():
    ok, witness = is_oriented_cograph(path(3))
    assert not ok and witness == ("->P3", (0, 1, 2))
    assert is_oriented_cograph(eval_dico(example("ex2"))) == (True, None)
    ok, witness = is_oriented_cograph(Digraph.build(4, [(0, 1), (2, 1), (2, 3)]))
    assert not ok and witness == ("N", (0, 1, 2, 3))
    assert is_oriented_cograph(cycle(3))[1][0] == "->C3"
    assert is_oriented_cograph(Digraph.build(2, [(0, 1), (1, 0)]))[1][0] == "<->P2"
    with pytest.raises(SizeLimitError):
        is_oriented_cograph(path(51))


@given(dico_exprs(max_n=12))
def test_cograph_matches_oracle_and_greedy(e):
    g = eval_dico(e)
    chi, c = cograph_ocn(e)
    assert verify_oriented_coloring(g, c) and c.used_colors == chi
    assert chi == ocn_exact(g)[0]
    assert chi == transitive_dag_coloring(g).used_colors
    assert chi <= degrees(g).max_degree + 1
    assert is_oriented_cograph(g) == (True, None)


def test_degree_bound_tight_on_tournaments():
    for n in range(1, 8):
        g = eval_dico(tt_expr(n))
        assert cograph_ocn(tt_expr(n))[0] == degrees(g).max_degree + 1


@given(oriented_digraphs(max_n=6))
def test_membership_agrees_with_transitivity_test(g):
    # oriented co-graphs are exactly the transitive acyclic digraphs without an induced N
    from ocn.digraph import is_acyclic, is_transitive

    ok, witness = is_oriented_cograph(g)
    if ok:
        assert is_acyclic(g) and is_transitive(g)
    else:
        name, subset = witness
        assert name in ("<->P2", "->P3", "->C3", "N") and len(subset) in (2, 3, 4)
