"""Oriented co-graphs: linear-time OCN from a di-co expression, brute-force membership."""

from __future__ import annotations

import itertools

from .coloring import Coloring
from .digraph import Digraph
from .errors import ExpressionError, SizeLimitError
from .expr.nodes import DicoExpr, Leaf, Order, Union, postorder

DEFAULT_COGRAPH_LIMIT = 50


def cograph_ocn(e: DicoExpr) -> tuple[int, Coloring]:
    """OCN and an optimal coloring; vertices follow leaf order as in eval_dico.

    A union keeps both children's colors, an order composition shifts the
    right child's colors past the left child's.
    """
    colors: list[int] = []
    stack: list[tuple[int, int, int]] = []  # (first leaf, end leaf, chi_o)
    for node in postorder(e):
        if isinstance(node, Leaf):
            stack.append((len(colors), len(colors) + 1, 1))
            colors.append(0)
            continue
        lo2, hi2, k2 = stack.pop()
        lo1, _, k1 = stack.pop()
        if isinstance(node, Union):
            stack.append((lo1, hi2, max(k1, k2)))
        elif isinstance(node, Order):
            for v in range(lo2, hi2):
                colors[v] += k1
            stack.append((lo1, hi2, k1 + k2))
        else:
            raise ExpressionError(f"{type(node).__name__} is not a di-co operation")
    return stack[0][2], Coloring(tuple(colors))


# Forbidden induced subdigraphs as (vertex count, arc set).
FORBIDDEN: dict[str, tuple[int, frozenset]] = {
    "<->P2": (2, frozenset({(0, 1), (1, 0)})),
    "->P3": (3, frozenset({(0, 1), (1, 2)})),
    "->C3": (3, frozenset({(0, 1), (1, 2), (2, 0)})),
    "N": (4, frozenset({(0, 1), (2, 1), (2, 3)})),
}


def _patterns():
    # every labelling of each forbidden digraph, grouped by size
    out: dict[int, list[tuple[str, frozenset]]] = {2: [], 3: [], 4: []}
    for name, (k, arcs) in FORBIDDEN.items():
        seen = set()
        for perm in itertools.permutations(range(k)):
            img = frozenset((perm[u], perm[v]) for u, v in arcs)
            if img not in seen:
                seen.add(img)
                out[k].append((name, img))
    return out


_PATTERNS = _patterns()


def is_oriented_cograph(
    g: Digraph, max_n: int | None = DEFAULT_COGRAPH_LIMIT
) -> tuple[bool, tuple[str, tuple[int, ...]] | None]:
    """Check for the four forbidden induced subdigraphs on every set of at most 4 vertices.

    Returns ``(True, None)`` or ``(False, (pattern name, vertex set))``.
    """
    if max_n is not None and g.n > max_n:
        raise SizeLimitError(f"membership check limited to {max_n} vertices, digraph has {g.n}")
    out = g.out_mask
    for k in (2, 3, 4):
        pats = _PATTERNS[k]
        for subset in itertools.combinations(range(g.n), k):
            arcs = frozenset(
                (i, j)
                for i, u in enumerate(subset)
                for j, v in enumerate(subset)
                if out[u] >> v & 1
            )
            for name, pat in pats:
                if arcs == pat:
                    return False, (name, subset)
    return True, None
