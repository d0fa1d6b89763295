"""Exhaustive exact oriented coloring by backtracking.

The search keeps, for every ordered color pair, how many arcs currently run
between the two classes in that direction.  A color is allowed for a vertex
when it differs from every colored neighbour's color, no existing class
arc points the opposite way, and no class is both a successor and a
predecessor class of the vertex.  A vertex may open at most one new color (the
next unused index), which removes permutation-equivalent branches.
"""

from __future__ import annotations

from .coloring import Coloring, require_oriented
from .digraph import Digraph, und_chromatic_number
from .errors import SizeLimitError

DEFAULT_ORACLE_LIMIT = 30


def _static_order(g: Digraph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-(len(g.succ[v]) + len(g.pred[v])), v))


def ocn_decide(g: Digraph, r: int) -> Coloring | None:
    """An oriented coloring of ``g`` with at most ``r`` colors, or None."""
    require_oriented(g)
    if r < 1:
        raise ValueError("r must be positive")
    if g.n == 0:
        return Coloring(())
    if g.n > 0 and r >= g.n:
        return Coloring(tuple(range(g.n)))
    order = _static_order(g)
    succ, pred = g.succ, g.pred
    color = [-1] * g.n
    count = [[0] * r for _ in range(r)]  # count[a][b]: arcs from class a to class b
    out_cls = [0] * r  # bit b set iff count[a][b] > 0
    in_cls = [0] * r

    def link(a: int, b: int) -> None:
        if count[a][b] == 0:
            out_cls[a] |= 1 << b
            in_cls[b] |= 1 << a
        count[a][b] += 1

    def unlink(a: int, b: int) -> None:
        count[a][b] -= 1
        if count[a][b] == 0:
            out_cls[a] &= ~(1 << b)
            in_cls[b] &= ~(1 << a)

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = heads = tails = 0
        for w in succ[v]:
            d = color[w]
            if d >= 0:
                # v -> w needs class arc c -> d, so c must not be d or reached from d
                forbidden |= (1 << d) | out_cls[d]
                heads |= 1 << d
        for w in pred[v]:
            d = color[w]
            if d >= 0:
                forbidden |= (1 << d) | in_cls[d]
                tails |= 1 << d
        limit = min(used + 1, r)
        # a class among both heads and tails would get arcs both ways through v
        allowed = 0 if heads & tails else ((1 << limit) - 1) & ~forbidden
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            allowed ^= low
            color[v] = c
            for w in succ[v]:
                if color[w] >= 0:
                    link(c, color[w])
            for w in pred[v]:
                if color[w] >= 0:
                    link(color[w], c)
            if place(i + 1, max(used, c + 1)):
                return True
            for w in succ[v]:
                if color[w] >= 0:
                    unlink(c, color[w])
            for w in pred[v]:
                if color[w] >= 0:
                    unlink(color[w], c)
        color[v] = -1
        return False

    return Coloring(tuple(color)) if place(0, 0) else None


def ocn_exact(g: Digraph, max_n: int | None = DEFAULT_ORACLE_LIMIT) -> tuple[int, Coloring]:
    """Smallest ``r`` with an oriented ``r``-coloring, and a witness."""
    require_oriented(g)
    if max_n is not None and g.n > max_n:
        raise SizeLimitError(f"oracle limited to {max_n} vertices, digraph has {g.n}")
    if g.n == 0:
        return 0, Coloring(())
    try:
        r = und_chromatic_number(g)
    except SizeLimitError:
        r = 1
    while True:
        found = ocn_decide(g, r)
        if found is not None:
            return found.used_colors, found
        r += 1
