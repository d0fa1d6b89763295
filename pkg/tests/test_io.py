from __future__ import annotations

import pytest
from hypothesis import given

from ocn.coloring import Coloring
from ocn.digraph import Digraph
from ocn.errors import ParseError
from ocn.io import format_coloring, format_dot, format_edgelist, parse_coloring, parse_edgelist

from .conftest import oriented_digraphs


def test_edgelist_without_names():
    g = parse_edgelist("3 2\n0 1\n1 2\n")
    assert g == Digraph.build(3, [(0, 1), (1, 2)])


def test_edgelist_with_names_and_comments():
    g = parse_edgelist("# P2\n2 1\nnames\na\nb\n\n0 1  # the arc\n")
    assert g.names == ("a", "b") and g.arcs == {(0, 1)}


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3\n", 1),
        ("2 1\n0 2\n", 2),
        ("2 1\n0 0\n", 2),
        ("2 2\n0 1\n", 2),
        ("2 1\n0 x\n", 2),
        ("2 2\n0 1\n0 1\n", 1),
    ],
)
def test_edgelist_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert info.value.line == line


@given(oriented_digraphs(max_n=8))
def test_edgelist_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g


def test_dot_output():
    g = Digraph.build(2, [(0, 1)], ["a", "b"])
    text = format_dot(g, Coloring((0, 1)))
    assert 'label="a:1"' in text and "0 -> 1;" in text and text.startswith("digraph G {")


def test_coloring_round_trip_and_errors():
    g = Digraph.build(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    c = Coloring((0, 1, 2))
    assert format_coloring(g, c) == "a 1\nb 2\nc 3\n"
    assert parse_coloring(format_coloring(g, c), g) == c
    for bad in ("a 1\nb 2\n", "a 0\nb 1\nc 2\n", "a 1\na 2\nb 1\nc 1\n", "z 1\n", "a\n"):
        with pytest.raises(ParseError):
            parse_coloring(bad, g)
