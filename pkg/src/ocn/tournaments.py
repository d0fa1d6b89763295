"""Small tournaments: the Paley tournament, isomorphism classes, homomorphism tests.

A tournament on ``r`` vertices is stored as a tuple of out-neighbour bitmasks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .digraph import Digraph

Tournament = tuple[int, ...]

PALEY_RESIDUES = frozenset({1, 2, 4})  # nonzero squares mod 7


def paley_out(u: int) -> int:
    return sum(1 << ((u + d) % 7) for d in PALEY_RESIDUES)


PALEY7: Tournament = tuple(paley_out(u) for u in range(7))


def is_paley_arc(u: int, v: int) -> bool:
    return (v - u) % 7 in PALEY_RESIDUES


def transitive_tournament(r: int) -> Tournament:
    return tuple(((1 << r) - 1) ^ ((1 << (i + 1)) - 1) for i in range(r))


def common_out(t: Tournament) -> list[int]:
    """For each vertex set S (as a bitmask), the vertices beaten by every member of S."""
    r = len(t)
    out = [(1 << r) - 1] * (1 << r)
    for m in range(1, 1 << r):
        low = m & -m
        out[m] = out[m ^ low] & t[low.bit_length() - 1]
    return out


def _score_classes(t: Tournament) -> list[list[int]]:
    by_score: dict[int, list[int]] = {}
    for v, out in enumerate(t):
        by_score.setdefault(out.bit_count(), []).append(v)
    return [by_score[s] for s in sorted(by_score)]


def canonical_form(t: Tournament) -> Tournament:
    """Lexicographically least relabelling among orders sorted by score.

    Isomorphisms preserve scores, so restricting to score-sorted orders keeps
    the form canonical while shrinking the search.
    """
    r = len(t)
    best: Tournament | None = None
    for parts in itertools.product(*(itertools.permutations(c) for c in _score_classes(t))):
        order = [v for part in parts for v in part]
        pos = [0] * r
        for i, v in enumerate(order):
            pos[v] = i
        cand = tuple(sum(1 << pos[w] for w in range(r) if t[v] >> w & 1) for v in order)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


@lru_cache(maxsize=None)
def nonisomorphic_tournaments(r: int) -> tuple[Tournament, ...]:
    """One representative per isomorphism class (1, 1, 2, 4, 12, 56 for r = 1..6)."""
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        return ((0,),)
    found: dict[Tournament, None] = {}
    for t in nonisomorphic_tournaments(r - 1):
        for m in range(1 << (r - 1)):
            # bit i of m set: new vertex r-1 beats i
            ext = tuple(out | ((0 if m >> i & 1 else 1) << (r - 1)) for i, out in enumerate(t))
            ext += (m,)
            found.setdefault(canonical_form(ext), None)
    return tuple(sorted(found))


def all_tournaments(r: int):
    """Every labelled tournament on ``r`` vertices (2^(r(r-1)/2) of them)."""
    pairs = list(itertools.combinations(range(r), 2))
    for m in range(1 << len(pairs)):
        out = [0] * r
        for k, (i, j) in enumerate(pairs):
            if m >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        yield tuple(out)


def tournament_digraph(t: Tournament) -> Digraph:
    r = len(t)
    return Digraph.build(r, [(u, v) for u in range(r) for v in range(r) if t[u] >> v & 1])


def find_homomorphism(g: Digraph, t: Tournament) -> tuple[int, ...] | None:
    """Map of ``g`` into ``t`` sending arcs to arcs, or None."""
    r = len(t)
    full = (1 << r) - 1
    into = [sum(1 << u for u in range(r) if t[u] >> v & 1) for v in range(r)]
    order = sorted(range(g.n), key=lambda v: (-(len(g.succ[v]) + len(g.pred[v])), v))
    image = [-1] * g.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        allowed = full
        for w in g.succ[v]:
            if image[w] >= 0:
                allowed &= into[image[w]]
        for w in g.pred[v]:
            if image[w] >= 0:
                allowed &= t[image[w]]
        while allowed:
            low = allowed & -allowed
            image[v] = low.bit_length() - 1
            if place(i + 1):
                return True
            allowed ^= low
        image[v] = -1
        return False

    return tuple(image) if place(0) else None
