"""Oriented colorings: validation, color graphs, greedy coloring and bounds.

Colors are 0-based everywhere in the library; the text formats shift them to
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import (
    DEFAULT_EXACT_LIMIT,
    Arc,
    Digraph,
    UndirectedGraph,
    degrees,
    is_acyclic,
    is_oriented,
    is_transitive,
    longest_path_length,
    opposite_pair,
    topological_order,
    und_chromatic_number,
    underlying,
)
from .errors import NotOrientedError, PreconditionError, SizeLimitError


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]

    @classmethod
    def of(cls, colors: Sequence[int]) -> Coloring:
        return cls(tuple(int(c) for c in colors))

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    @property
    def used_colors(self) -> int:
        return len(set(self.assignment))

    def normalized(self) -> Coloring:
        """Renumber colors 0..k-1 in order of first appearance."""
        remap: dict[int, int] = {}
        return Coloring(tuple(remap.setdefault(c, len(remap)) for c in self.assignment))


@dataclass(frozen=True)
class Violation:
    kind: str  # "monochromatic-arc" or "opposite-color-arcs"
    arcs: tuple[Arc, ...]

    def describe(self, g: Digraph) -> str:
        shown = ", ".join(f"{g.names[u]}->{g.names[v]}" for u, v in self.arcs)
        if self.kind == "monochromatic-arc":
            return f"arc {shown} joins two vertices of the same color"
        return f"arcs {shown} induce opposite color arcs"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class ColorGraph:
    colors: frozenset[int]
    arcs: frozenset[Arc]

    def is_oriented(self) -> bool:
        return all(u != v and (v, u) not in self.arcs for u, v in self.arcs)


def require_oriented(g: Digraph) -> None:
    pair = opposite_pair(g)
    if pair is not None:
        u, v = pair
        raise NotOrientedError(f"digraph has opposite arcs {g.names[u]}<->{g.names[v]}")


def verify_oriented_coloring(g: Digraph, c: Coloring | Sequence[int]) -> Verdict:
    """Check both conditions of an oriented coloring.

    On failure the verdict carries the first offending arc (same-colored
    endpoints) or arc pair ``(u,v), (x,y)`` with ``c(v) = c(x)`` and
    ``c(u) = c(y)``, scanning arcs in sorted order.
    """
    require_oriented(g)
    colors = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise ValueError(f"coloring covers {len(colors)} vertices, digraph has {g.n}")
    first: dict[Arc, Arc] = {}
    for u, v in g.arc_list:
        cu, cv = colors[u], colors[v]
        if cu == cv:
            return Verdict(False, Violation("monochromatic-arc", ((u, v),)))
        if (cv, cu) in first:
            return Verdict(False, Violation("opposite-color-arcs", (first[(cv, cu)], (u, v))))
        first.setdefault((cu, cv), (u, v))
    return Verdict(True)


def build_color_graph(g: Digraph, c: Coloring | Sequence[int]) -> ColorGraph:
    verdict = verify_oriented_coloring(g, c)
    if not verdict:
        raise PreconditionError(f"not an oriented coloring: {verdict.violation.describe(g)}")
    colors = c.assignment if isinstance(c, Coloring) else tuple(c)
    return ColorGraph(frozenset(colors), frozenset((colors[u], colors[v]) for u, v in g.arcs))


def greedy_coloring(gu: UndirectedGraph | Digraph, order: Sequence[int]) -> Coloring:
    """Give each vertex, in ``order``, the smallest color unused by colored neighbours."""
    if isinstance(gu, Digraph):
        gu = underlying(gu)
    if sorted(order) != list(range(gu.n)):
        raise ValueError("order must be a permutation of the vertices")
    nbr = gu.nbr_mask
    color = [-1] * gu.n
    for v in order:
        taken = 0
        for w in range(gu.n):
            if nbr[v] >> w & 1 and color[w] >= 0:
                taken |= 1 << color[w]
        color[v] = (~taken & (taken + 1)).bit_length() - 1
    return Coloring(tuple(color))


def transitive_dag_coloring(g: Digraph) -> Coloring:
    """Optimal oriented coloring of a transitive acyclic digraph.

    Greedy coloring of the underlying graph along a topological order; every
    arc ``(u, v)`` ends up with ``color(u) < color(v)``.
    """
    require_oriented(g)
    order = topological_order(g)
    if order is None:
        raise PreconditionError("digraph has a directed cycle")
    if not is_transitive(g):
        raise PreconditionError("digraph is not transitive")
    return greedy_coloring(underlying(g), order)


@dataclass(frozen=True)
class BoundReport:
    lower: int | None  # chi(un(g)); None when the size cap is exceeded
    upper_dag: int | None  # l(g) + 1, acyclic digraphs only
    upper_trans_dag: int | None  # Delta(g) + 1, transitive acyclic digraphs only

    def lines(self) -> list[str]:
        out = []
        for key, value, scope in (
            ("lower", self.lower, "chi(un(G)) <= chi_o(G)"),
            ("upper_dag", self.upper_dag, "acyclic: chi_o(G) <= l(G)+1"),
            ("upper_trans_dag", self.upper_trans_dag, "transitive acyclic: chi_o(G) <= Delta(G)+1"),
        ):
            out.append(f"{key} = {'n/a' if value is None else value}  ({scope})")
        return out


def bounds(g: Digraph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> BoundReport:
    try:
        lower = und_chromatic_number(g, max_n=max_n)
    except SizeLimitError:
        lower = None
    acyclic = is_acyclic(g)
    upper_dag = longest_path_length(g) + 1 if acyclic else None
    upper_trans = None
    if acyclic and is_oriented(g) and is_transitive(g):
        upper_trans = degrees(g).max_degree + 1
    return BoundReport(lower, upper_dag, upper_trans)


def find_perfect_order_obstruction(
    gu: UndirectedGraph | Digraph, order: Sequence[int]
) -> tuple[int, int, int, int] | None:
    """Find an induced path a-b-c-d with pi(a) < pi(b) < pi(c) and pi(d) < pi(c).

    ``order`` lists the vertices by position.  Returns None when the order is
    perfect.
    """
    if isinstance(gu, Digraph):
        gu = underlying(gu)
    if sorted(order) != list(range(gu.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = [0] * gu.n
    for i, v in enumerate(order):
        pos[v] = i
    nbr = gu.nbr_mask
    for b in order:
        for c in gu.neighbors(b):
            if not pos[b] < pos[c]:
                continue
            for a in gu.neighbors(b):
                if a == c or nbr[a] >> c & 1 or not pos[a] < pos[b]:
                    continue
                for d in gu.neighbors(c):
                    if d in (a, b) or nbr[d] >> b & 1 or nbr[d] >> a & 1:
                        continue
                    if pos[d] < pos[c]:
                        return (a, b, c, d)
    return None
