"""Translations into clique-width expressions, and a validator for them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import ExpressionError
from .nodes import (
    AddArcs,
    Create,
    CwExpr,
    CwUnion,
    DicoExpr,
    Leaf,
    MspExpr,
    Order,
    Parallel,
    Relabel,
    Series,
    Union,
    postorder,
)

# Label roles used by msp_to_cw7: the first four track where a vertex sits in
# the digraph built so far, the primed ones mark the right operand of a series
# composition while its arcs are inserted.
ROLE_SOURCE_SINK = 1  # a
ROLE_SINK = 2  # b
ROLE_SOURCE = 3  # c
ROLE_INNER = 4  # d
ROLE_SOURCE_SINK_R = 5  # a'
ROLE_SINK_R = 6  # b'
ROLE_SOURCE_R = 7  # c'


def _relabel_chain(x: CwExpr, steps) -> CwExpr:
    for a, b in steps:
        x = Relabel(a, b, x)
    return x


def dico_to_cw2(e: DicoExpr) -> CwExpr:
    """Two-label expression with the same digraph (identical vertex order and names)."""
    built: list[CwExpr] = []
    for node in postorder(e):
        if isinstance(node, Leaf):
            built.append(Create(node.name, 1))
            continue
        right = built.pop()
        left = built.pop()
        if isinstance(node, Union):
            built.append(CwUnion(left, right))
        elif isinstance(node, Order):
            built.append(Relabel(2, 1, AddArcs(1, 2, CwUnion(left, Relabel(1, 2, right)))))
        else:
            raise ExpressionError(f"{type(node).__name__} is not a di-co operation")
    return built[0]


def msp_to_cw7(e: MspExpr) -> CwExpr:
    """Seven-label expression with the same digraph.

    Invariant after every subexpression: label 1 = isolated (source and sink),
    2 = sink only, 3 = source only, 4 = neither.  A series composition moves the
    right operand's labels to 5/6/7, joins the left sinks (1, 2) to the right
    sources (5, 7), then restores the invariant for the combined digraph.
    """
    a, b, c, d = ROLE_SOURCE_SINK, ROLE_SINK, ROLE_SOURCE, ROLE_INNER
    a2, b2, c2 = ROLE_SOURCE_SINK_R, ROLE_SINK_R, ROLE_SOURCE_R
    built: list[CwExpr] = []
    for node in postorder(e):
        if isinstance(node, Leaf):
            built.append(Create(node.name, a))
            continue
        right = built.pop()
        left = built.pop()
        if isinstance(node, Parallel):
            built.append(CwUnion(left, right))
        elif isinstance(node, Series):
            x: CwExpr = CwUnion(left, _relabel_chain(right, [(a, a2), (b, b2), (c, c2)]))
            for tail, head in ((b, c2), (b, a2), (a, c2), (a, a2)):
                x = AddArcs(tail, head, x)
            # left sinks stop being sinks; right sources stop being sources
            x = _relabel_chain(x, [(a, c), (b, d), (a2, b), (b2, b), (c2, d)])
            built.append(x)
        else:
            raise ExpressionError(f"{type(node).__name__} is not an msp operation")
    return built[0]


@dataclass(frozen=True)
class CwInfo:
    k: int  # largest label used
    creates: int
    unions: int
    add_arcs: int
    relabels: int


def cw_validate(e: CwExpr) -> CwInfo:
    counts: Counter[str] = Counter()
    k = 0
    names: set[str] = set()
    for node in postorder(e):
        if isinstance(node, Create):
            if node.label < 1:
                raise ExpressionError(f"V({node.name},{node.label}): labels start at 1")
            if node.name in names:
                raise ExpressionError(f"duplicate leaf name {node.name!r}")
            names.add(node.name)
            k = max(k, node.label)
            counts["creates"] += 1
        elif isinstance(node, CwUnion):
            counts["unions"] += 1
        elif isinstance(node, (AddArcs, Relabel)):
            tag = "A" if isinstance(node, AddArcs) else "R"
            if node.a < 1 or node.b < 1:
                raise ExpressionError(f"{tag}({node.a},{node.b}): labels start at 1")
            if node.a == node.b:
                raise ExpressionError(f"{tag}({node.a},{node.b}) needs two distinct labels")
            k = max(k, node.a, node.b)
            counts["add_arcs" if tag == "A" else "relabels"] += 1
        else:
            raise ExpressionError(f"{type(node).__name__} is not a clique-width operation")
    return CwInfo(k, counts["creates"], counts["unions"], counts["add_arcs"], counts["relabels"])
