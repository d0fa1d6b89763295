"""Simple loop-free digraphs on dense integer vertices.

Vertices are ``0..n-1``; names are an optional display table.  Every
``Digraph`` is immutable, and derived views (successor lists, bit rows) are
computed lazily and cached on the instance.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CyclicGraphError, SizeLimitError

Arc = tuple[int, int]

DEFAULT_EXACT_LIMIT = 20


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[Arc]
    names: tuple[str, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.names) != self.n:
            raise ValueError(f"expected {self.n} names, got {len(self.names)}")
        if len(set(self.names)) != self.n:
            raise ValueError("vertex names must be distinct")
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range for {self.n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")

    @classmethod
    def build(cls, n: int, arcs: Iterable[Arc] = (), names: Sequence[str] | None = None) -> Digraph:
        if names is None:
            names = [str(i) for i in range(n)]
        return cls(n, frozenset((int(u), int(v)) for u, v in arcs), tuple(str(s) for s in names))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_list(self) -> list[Arc]:
        return sorted(self.arcs)

    @cached_property
    def out_mask(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return rows

    @cached_property
    def in_mask(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[v] |= 1 << u
        return rows

    @cached_property
    def succ(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arc_list:
            out[u].append(v)
        return out

    @cached_property
    def pred(self) -> list[list[int]]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arc_list:
            inn[v].append(u)
        return inn

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        return self._index[name]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def rename(self, names: Sequence[str]) -> Digraph:
        return Digraph(self.n, self.arcs, tuple(names))


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[Arc]  # stored as (min, max)

    @classmethod
    def build(cls, n: int, edges: Iterable[Arc]) -> UndirectedGraph:
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @cached_property
    def nbr_mask(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.nbr_mask[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr_mask[u] >> v & 1)

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.nbr_mask), default=0)


@dataclass(frozen=True)
class DegreeReport:
    max_degree: int
    indegree: tuple[int, ...]
    outdegree: tuple[int, ...]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- structural predicates ---------------------------------------------------

def is_oriented(g: Digraph) -> bool:
    return all((v, u) not in g.arcs for u, v in g.arcs)


def opposite_pair(g: Digraph) -> Arc | None:
    """Return one arc whose reverse is also present, or None."""
    for u, v in g.arc_list:
        if (v, u) in g.arcs:
            return (u, v)
    return None


def underlying(g: Digraph) -> UndirectedGraph:
    return UndirectedGraph.build(g.n, g.arcs)


def topological_order(g: Digraph) -> list[int] | None:
    """Kahn's algorithm, always releasing the smallest ready index first.

    Returns None when ``g`` has a directed cycle.
    """
    indeg = [len(p) for p in g.pred]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in g.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    return order if len(order) == g.n else None


def is_acyclic(g: Digraph) -> bool:
    return topological_order(g) is not None


def reachability(g: Digraph) -> list[int]:
    """Bit row per vertex of everything reachable by a non-empty directed path."""
    reach = list(g.out_mask)
    for k in range(g.n):
        bit = 1 << k
        rk = reach[k]
        for i in range(g.n):
            if reach[i] & bit:
                reach[i] |= rk
    return reach


def transitive_closure(g: Digraph) -> Digraph:
    reach = reachability(g)
    arcs = [(u, v) for u in range(g.n) for v in _bits(reach[u]) if v != u]
    return Digraph(g.n, frozenset(arcs), g.names)


def is_transitive(g: Digraph) -> bool:
    for u in range(g.n):
        row = g.out_mask[u]
        for v in _bits(row):
            if g.out_mask[v] & ~row & ~(1 << u):
                return False
    return True


def longest_path_length(g: Digraph) -> int:
    """Number of arcs on a longest directed path; requires an acyclic digraph."""
    order = topological_order(g)
    if order is None:
        raise CyclicGraphError("longest path length is only defined for acyclic digraphs")
    depth = [0] * g.n
    for u in order:
        for v in g.succ[u]:
            if depth[u] + 1 > depth[v]:
                depth[v] = depth[u] + 1
    return max(depth, default=0)


def sources_sinks(g: Digraph) -> tuple[frozenset[int], frozenset[int]]:
    sources = frozenset(v for v in range(g.n) if not g.in_mask[v])
    sinks = frozenset(v for v in range(g.n) if not g.out_mask[v])
    return sources, sinks


def degrees(g: Digraph) -> DegreeReport:
    indeg = tuple(m.bit_count() for m in g.in_mask)
    outdeg = tuple(m.bit_count() for m in g.out_mask)
    return DegreeReport(max((a + b for a, b in zip(indeg, outdeg)), default=0), indeg, outdeg)


def disjoint_union(g1: Digraph, g2: Digraph) -> Digraph:
    """Place ``g2`` after ``g1``; names must not collide."""
    shift = g1.n
    arcs = set(g1.arcs)
    arcs.update((u + shift, v + shift) for u, v in g2.arcs)
    return Digraph(g1.n + g2.n, frozenset(arcs), g1.names + g2.names)


def induced(g: Digraph, vertices: Iterable[int]) -> Digraph:
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    arcs = [(pos[u], pos[v]) for u, v in g.arcs if u in pos and v in pos]
    return Digraph(len(keep), frozenset(arcs), tuple(g.names[v] for v in keep))


# -- exact undirected auxiliaries ----------------------------------------------

def _as_undirected(g: Digraph | UndirectedGraph) -> UndirectedGraph:
    return g if isinstance(g, UndirectedGraph) else underlying(g)


def _check_limit(n: int, limit: int | None, what: str) -> None:
    if limit is not None and n > limit:
        raise SizeLimitError(f"{what} is capped at {limit} vertices (got {n}); raise the limit explicitly")


def und_clique_number(g: Digraph | UndirectedGraph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> int:
    """Size of a largest clique of the underlying graph (Bron-Kerbosch with pivoting)."""
    gu = _as_undirected(g)
    _check_limit(gu.n, max_n, "clique number")
    nbr = gu.nbr_mask
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot_pool = cand | excl
        pivot = max(_bits(pivot_pool), key=lambda u: (cand & nbr[u]).bit_count())
        for v in _bits(cand & ~nbr[pivot]):
            expand(size + 1, cand & nbr[v], excl & nbr[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << gu.n) - 1, 0)
    return best


def und_chromatic_number(g: Digraph | UndirectedGraph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> int:
    """Exact chromatic number of the underlying graph by DSATUR branch and bound."""
    gu = _as_undirected(g)
    _check_limit(gu.n, max_n, "chromatic number")
    n = gu.n
    if n == 0:
        return 0
    nbr = gu.nbr_mask
    lower = und_clique_number(gu, max_n=None)
    best = n + 1
    color = [-1] * n
    classes: list[int] = []  # vertex mask per color

    def pick() -> int:
        chosen, key = -1, (-1, -1)
        for v in range(n):
            if color[v] < 0:
                sat = sum(1 for c in classes if c & nbr[v])
                k = (sat, nbr[v].bit_count())
                if k > key:
                    chosen, key = v, k
        return chosen

    def search(colored: int) -> bool:
        nonlocal best
        if colored == n:
            best = len(classes)
            return best == lower
        v = pick()
        for c in range(len(classes)):
            if not classes[c] & nbr[v]:
                color[v] = c
                classes[c] |= 1 << v
                done = search(colored + 1)
                classes[c] &= ~(1 << v)
                color[v] = -1
                if done:
                    return True
        if len(classes) + 1 < best:
            color[v] = len(classes)
            classes.append(1 << v)
            done = search(colored + 1)
            classes.pop()
            color[v] = -1
            if done:
                return True
        return False

    search(0)
    return best
