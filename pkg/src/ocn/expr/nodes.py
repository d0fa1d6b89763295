"""Expression trees for the three graph-building languages.

* di-co expressions: ``Leaf``, ``Union`` (disjoint union) and ``Order``
  (all arcs from the left part to the right part);
* msp expressions: ``Leaf``, ``Parallel`` and ``Series`` (arcs from the sinks
  of the left part to the sources of the right part);
* clique-width expressions: ``Create``, ``CwUnion``, ``AddArcs`` and
  ``Relabel``.

Trees can be very deep, so every traversal here is iterative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union as _U


@dataclass(frozen=True)
class Leaf:
    name: str


@dataclass(frozen=True)
class Union:
    left: DicoExpr
    right: DicoExpr


@dataclass(frozen=True)
class Order:
    left: DicoExpr
    right: DicoExpr


@dataclass(frozen=True)
class Parallel:
    left: MspExpr
    right: MspExpr


@dataclass(frozen=True)
class Series:
    left: MspExpr
    right: MspExpr


@dataclass(frozen=True)
class Create:
    name: str
    label: int


@dataclass(frozen=True)
class CwUnion:
    left: CwExpr
    right: CwExpr


@dataclass(frozen=True)
class AddArcs:
    """Arcs from every vertex labelled ``a`` to every vertex labelled ``b``."""

    a: int
    b: int
    child: CwExpr


@dataclass(frozen=True)
class Relabel:
    """Rename label ``a`` to ``b``."""

    a: int
    b: int
    child: CwExpr


DicoExpr = _U[Leaf, Union, Order]
MspExpr = _U[Leaf, Parallel, Series]
CwExpr = _U[Create, CwUnion, AddArcs, Relabel]
Expr = _U[DicoExpr, MspExpr, CwExpr]

_BINARY = (Union, Order, Parallel, Series, CwUnion)
_INFIX = {Union: "+", Order: ">", Parallel: "|", Series: "*"}


def children(e: Expr) -> tuple:
    if isinstance(e, _BINARY):
        return (e.left, e.right)
    if isinstance(e, (AddArcs, Relabel)):
        return (e.child,)
    return ()


def postorder(e: Expr) -> Iterator[Expr]:
    """Yield every node after its children, left subtree first."""
    stack: list[tuple[Expr, bool]] = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(children(node)):
            stack.append((child, False))


def leaf_names(e: Expr) -> list[str]:
    return [n.name for n in postorder(e) if isinstance(n, (Leaf, Create))]


def size(e: Expr) -> int:
    return sum(1 for _ in postorder(e))


def to_text(e: Expr) -> str:
    """Fully parenthesised canonical form; parses back to an equal tree."""
    out: list[str] = []
    for node in postorder(e):
        if isinstance(node, Leaf):
            out.append(node.name)
        elif isinstance(node, Create):
            out.append(f"V({node.name},{node.label})")
        elif isinstance(node, CwUnion):
            right = out.pop()
            out.append(f"U({out.pop()}, {right})")
        elif isinstance(node, AddArcs):
            out.append(f"A({node.a},{node.b}, {out.pop()})")
        elif isinstance(node, Relabel):
            out.append(f"R({node.a},{node.b}, {out.pop()})")
        else:
            right = out.pop()
            out.append(f"({out.pop()} {_INFIX[type(node)]} {right})")
    return out[0]


def language_of(e: Expr) -> str:
    """'dico', 'msp' or 'cw'; a single leaf counts as both infix languages."""
    kinds = {type(n) for n in postorder(e)}
    if kinds & {Create, CwUnion, AddArcs, Relabel}:
        return "cw"
    if kinds & {Parallel, Series}:
        return "msp"
    return "dico"
