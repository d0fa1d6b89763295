"""Evaluate expressions into digraphs.

Vertices are numbered by leaf position (left to right) and named after their
leaves, so every evaluator and translator agrees on vertex identity.
"""

from __future__ import annotations

from ..digraph import Digraph
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


class NonOrientedResult(ExpressionError):
    """A clique-width expression inserted an arc opposite to an existing one."""


def _check_names(names: list[str]) -> None:
    if len(set(names)) != len(names):
        seen: set[str] = set()
        dup = next(n for n in names if n in seen or seen.add(n))
        raise ExpressionError(f"duplicate leaf name {dup!r}")


def eval_dico(e: DicoExpr) -> Digraph:
    names: list[str] = []
    arcs: set[tuple[int, int]] = set()
    spans: list[tuple[int, int]] = []  # leaf index range of each finished subtree
    for node in postorder(e):
        if isinstance(node, Leaf):
            spans.append((len(names), len(names) + 1))
            names.append(node.name)
            continue
        if not isinstance(node, (Union, Order)):
            raise ExpressionError(f"{type(node).__name__} is not a di-co operation")
        lo2, hi2 = spans.pop()
        lo1, hi1 = spans.pop()
        if isinstance(node, Order):
            arcs.update((u, v) for u in range(lo1, hi1) for v in range(lo2, hi2))
        spans.append((lo1, hi2))
    _check_names(names)
    return Digraph(len(names), frozenset(arcs), tuple(names))


def eval_msp(e: MspExpr) -> Digraph:
    names: list[str] = []
    arcs: set[tuple[int, int]] = set()
    ends: list[tuple[list[int], list[int]]] = []  # (sources, sinks) per subtree
    for node in postorder(e):
        if isinstance(node, Leaf):
            v = len(names)
            names.append(node.name)
            ends.append(([v], [v]))
            continue
        if not isinstance(node, (Parallel, Series)):
            raise ExpressionError(f"{type(node).__name__} is not an msp operation")
        src2, snk2 = ends.pop()
        src1, snk1 = ends.pop()
        if isinstance(node, Series):
            arcs.update((u, v) for u in snk1 for v in src2)
            ends.append((src1, snk2))
        else:
            ends.append((src1 + src2, snk1 + snk2))
    _check_names(names)
    return Digraph(len(names), frozenset(arcs), tuple(names))


def eval_cw(e: CwExpr) -> tuple[Digraph, tuple[int, ...]]:
    """Evaluate a clique-width expression; also return each vertex's final label.

    Raises NonOrientedResult on the first ``A(a,b)`` that would create a pair
    of opposite arcs.
    """
    names: list[str] = []
    arcs: set[tuple[int, int]] = set()
    groups_stack: list[dict[int, list[int]]] = []
    for node in postorder(e):
        if isinstance(node, Create):
            groups_stack.append({node.label: [len(names)]})
            names.append(node.name)
        elif isinstance(node, CwUnion):
            right = groups_stack.pop()
            left = groups_stack.pop()
            if len(left) < len(right):
                left, right = right, left
            for lab, vs in right.items():
                left.setdefault(lab, []).extend(vs)
            groups_stack.append(left)
        elif isinstance(node, AddArcs):
            groups = groups_stack[-1]
            for u in groups.get(node.a, ()):
                for v in groups.get(node.b, ()):
                    if (v, u) in arcs:
                        raise NonOrientedResult(
                            f"A({node.a},{node.b}) adds {names[u]}->{names[v]} "
                            f"opposite to the existing arc {names[v]}->{names[u]}"
                        )
                    arcs.add((u, v))
        elif isinstance(node, Relabel):
            groups = groups_stack[-1]
            moved = groups.pop(node.a, None)
            if moved:
                groups.setdefault(node.b, []).extend(moved)
        else:
            raise ExpressionError(f"{type(node).__name__} is not a clique-width operation")
    _check_names(names)
    labels = [0] * len(names)
    for lab, vs in groups_stack[0].items():
        for v in vs:
            labels[v] = lab
    return Digraph(len(names), frozenset(arcs), tuple(names)), tuple(labels)
