"""Oriented coloring of minimal series-parallel digraphs.

Three tools live here:

* ``msp_states``: the state-set dynamic program over triples (H, L, R), where
  H is a color graph on colors 0..6, L the colors of all sources and R the
  colors of all sinks.  Exact but the sets grow fast; meant for small inputs
  and cross-checks.
* ``msp_ocn``: the production engine.  For every tournament T on r vertices
  (one per isomorphism class, r increasing) it decides whether the digraph
  maps into T, tracking per expression node the family of achievable
  (source colors, sink colors) pairs.  Every msp-digraph maps into the Paley
  tournament on 7 vertices, so r never passes 7.
* ``paley_coloring`` and ``und_3coloring``: the constructive colorings built
  from two affine maps applied to the left and right operand of every series
  composition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .errors import ExpressionError, SizeLimitError
from .expr.nodes import Leaf, MspExpr, Parallel, Series, postorder
from .tournaments import PALEY7, Tournament, common_out, nonisomorphic_tournaments

MSP_COLORS = 7
DEFAULT_MAX_STATES = 2_000_000

LEAF, PAR, SER = 0, 1, 2


@dataclass(frozen=True)
class _Tree:
    """An msp expression flattened to postorder arrays."""

    kind: list[int]
    left: list[int]
    right: list[int]
    leaf_index: list[int]  # vertex number for leaves, -1 elsewhere
    n_leaves: int

    @property
    def root(self) -> int:
        return len(self.kind) - 1


def _flatten(e: MspExpr) -> _Tree:
    kind: list[int] = []
    left: list[int] = []
    right: list[int] = []
    leaf_index: list[int] = []
    pending: list[int] = []
    n_leaves = 0
    for node in postorder(e):
        i = len(kind)
        if isinstance(node, Leaf):
            kind.append(LEAF)
            left.append(-1)
            right.append(-1)
            leaf_index.append(n_leaves)
            n_leaves += 1
        elif isinstance(node, (Parallel, Series)):
            r = pending.pop()
            l = pending.pop()
            kind.append(SER if isinstance(node, Series) else PAR)
            left.append(l)
            right.append(r)
            leaf_index.append(-1)
        else:
            raise ExpressionError(f"{type(node).__name__} is not an msp operation")
        pending.append(i)
    return _Tree(kind, left, right, leaf_index, n_leaves)


def longest_path_of(e: MspExpr) -> int:
    """Length of a longest directed path in the digraph of ``e``."""
    t = _flatten(e)
    ell = [0] * len(t.kind)
    for i, k in enumerate(t.kind):
        if k == PAR:
            ell[i] = max(ell[t.left[i]], ell[t.right[i]])
        elif k == SER:
            ell[i] = ell[t.left[i]] + ell[t.right[i]] + 1
    return ell[t.root]


# --------------------------------------------------------------------------
# state-set dynamic program

_ARC_SHIFT = 7
_L_SHIFT = 7 + 49
_R_SHIFT = 7 + 49 + 7
_SEVEN = (1 << 7) - 1
_ARCS = (1 << 49) - 1


@dataclass(frozen=True)
class MspState:
    used: frozenset[int]
    arcs: frozenset[tuple[int, int]]
    sources: frozenset[int]  # L
    sinks: frozenset[int]  # R

    def encode(self) -> int:
        code = sum(1 << c for c in self.used)
        code |= sum(1 << (_ARC_SHIFT + 7 * a + b) for a, b in self.arcs)
        code |= sum(1 << (_L_SHIFT + c) for c in self.sources)
        code |= sum(1 << (_R_SHIFT + c) for c in self.sinks)
        return code

    @classmethod
    def decode(cls, code: int) -> MspState:
        arcs = code >> _ARC_SHIFT & _ARCS
        return cls(
            frozenset(_bits(code & _SEVEN)),
            frozenset(divmod(b, 7) for b in _bits(arcs)),
            frozenset(_bits(code >> _L_SHIFT & _SEVEN)),
            frozenset(_bits(code >> _R_SHIFT & _SEVEN)),
        )

    @property
    def size(self) -> int:
        return len(self.used)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _cross(rows: int, cols: int) -> int:
    """Arc bits for rows x cols in the 7x7 matrix layout."""
    out = 0
    for a in _bits(rows):
        out |= cols << (7 * a)
    return out


# Internally a state is (used, arcs, reversed arcs, L, R) with 7x7 bit matrices.
_Raw = tuple[int, int, int, int, int]


def _code(s: _Raw) -> int:
    used, arcs, _, lo, hi = s
    return used | arcs << _ARC_SHIFT | lo << _L_SHIFT | hi << _R_SHIFT


@dataclass
class MspStateTable:
    """Per-node state sets with one witnessing child pair per state."""

    tree: _Tree
    states: list[dict[int, tuple[int, int] | None]]  # node -> code -> (left code, right code)
    max_size: int

    @property
    def root_states(self) -> frozenset[int]:
        return frozenset(self.states[self.tree.root])

    def decoded(self) -> list[MspState]:
        return [MspState.decode(c) for c in sorted(self.states[self.tree.root])]

    def min_used(self) -> int:
        return min((c & _SEVEN).bit_count() for c in self.states[self.tree.root])

    def witness(self) -> Coloring:
        """Trace an optimal root state down to a coloring (vertices in leaf order)."""
        t = self.tree
        root = t.root
        best = min(self.states[root], key=lambda c: ((c & _SEVEN).bit_count(), c))
        colors = [-1] * t.n_leaves
        stack = [(root, best)]
        while stack:
            i, code = stack.pop()
            if t.kind[i] == LEAF:
                colors[t.leaf_index[i]] = (code & _SEVEN).bit_length() - 1
                continue
            c1, c2 = self.states[i][code]
            stack.append((t.left[i], c1))
            stack.append((t.right[i], c2))
        return Coloring(tuple(colors))


def msp_states(e: MspExpr, max_states: int | None = DEFAULT_MAX_STATES) -> MspStateTable:
    """Run the (H, L, R) dynamic program with colors 0..6.

    Leaf: the seven single-color states.  Parallel: every pair whose merged
    color graph stays oriented, with L and R united.  Series: every pair for
    which adding the arcs R1 x L2 keeps the color graph oriented and loop-free,
    giving (H, L1, R2).  Raises SizeLimitError once a node holds more than
    ``max_states`` states.
    """
    t = _flatten(e)
    raw: list[list[_Raw]] = []
    table: list[dict[int, tuple[int, int] | None]] = []
    max_size = 0
    leaf_states = [(1 << i, 0, 0, 1 << i, 1 << i) for i in range(MSP_COLORS)]
    for i, k in enumerate(t.kind):
        prov: dict[int, tuple[int, int] | None] = {}
        out: list[_Raw] = []
        if k == LEAF:
            for s in leaf_states:
                prov[_code(s)] = None
                out.append(s)
        else:
            left, right = raw[t.left[i]], raw[t.right[i]]
            for s1 in left:
                u1, a1, b1, l1, r1 = s1
                c1 = _code(s1)
                for s2 in right:
                    u2, a2, b2, l2, r2 = s2
                    if k == PAR:
                        arcs, rev = a1 | a2, b1 | b2
                        if arcs & rev:
                            continue
                        s = (u1 | u2, arcs, rev, l1 | l2, r1 | r2)
                    else:
                        if r1 & l2:
                            continue
                        arcs = a1 | a2 | _cross(r1, l2)
                        rev = b1 | b2 | _cross(l2, r1)
                        if arcs & rev:
                            continue
                        s = (u1 | u2, arcs, rev, l1, r2)
                    code = _code(s)
                    if code not in prov:
                        prov[code] = (c1, _code(s2))
                        out.append(s)
                        if max_states is not None and len(out) > max_states:
                            raise SizeLimitError(f"state set exceeded {max_states} states")
        max_size = max(max_size, len(out))
        raw.append(out)
        table.append(prov)
        # children are no longer needed for combination
        if k != LEAF:
            raw[t.left[i]] = []
            raw[t.right[i]] = []
    return MspStateTable(t, table, max_size)


# --------------------------------------------------------------------------
# homomorphism engine

class _Layout:
    """Bit layout for families of (L, R) pairs over r colors.

    The pair (L, R) is the bit at position L + R * 2^r of one integer.  All
    families are kept up-closed (supersets of achievable pairs are included),
    so a parallel composition is a bitwise AND.
    """

    def __init__(self, r: int):
        self.r = r
        self.stride = s = 1 << r
        self.row = (1 << s) - 1
        self.col = sum(1 << (k * s) for k in range(s))
        nbits = 2 * r
        self.clear = []
        for b in range(nbits):
            self.clear.append(sum(1 << c for c in range(1 << nbits) if not c >> b & 1))
        self.leaf = self.up_close(sum(1 << ((1 << i) + (1 << i) * s) for i in range(r)))
        self.top = (1 << (s * s)) - 1  # the code of (all colors, all colors) is the top bit

    def up_close(self, u: int) -> int:
        for b, mask in enumerate(self.clear):
            u |= (u & mask) << (1 << b)
        return u


_LAYOUTS: dict[int, _Layout] = {}


def _layout(r: int) -> _Layout:
    if r not in _LAYOUTS:
        _LAYOUTS[r] = _Layout(r)
    return _LAYOUTS[r]


def _families(tree: _Tree, t: Tournament) -> list[int] | None:
    """Up-closed achievable (L, R) families per node, or None if some node has none."""
    lay = _layout(len(t))
    common = common_out(t)
    s, row, col = lay.stride, lay.row, lay.col
    memo: dict[tuple[int, int, int], int] = {}
    fam = [0] * len(tree.kind)
    kind, left, right = tree.kind, tree.left, tree.right
    for i, k in enumerate(kind):
        if k == LEAF:
            fam[i] = lay.leaf
            continue
        u1, u2 = fam[left[i]], fam[right[i]]
        key = (k, u1, u2)
        res = memo.get(key)
        if res is None:
            if k == PAR:
                res = u1 & u2
            else:
                res = 0
                for r1 in range(1, s):
                    rows = (u1 >> (r1 * s)) & row
                    if rows:
                        cols = (u2 >> common[r1]) & col
                        if cols:
                            res |= rows * cols
            memo[key] = res
        if not res:
            return None
        fam[i] = res
    return fam


def _trace(tree: _Tree, t: Tournament, fam: list[int]) -> Coloring:
    lay = _layout(len(t))
    common = common_out(t)
    s = lay.stride
    colors = [-1] * tree.n_leaves
    full = s - 1
    stack = [(tree.root, full, full)]
    while stack:
        i, lo, hi = stack.pop()
        k = tree.kind[i]
        if k == LEAF:
            both = lo & hi
            colors[tree.leaf_index[i]] = (both & -both).bit_length() - 1
        elif k == PAR:
            stack.append((tree.left[i], lo, hi))
            stack.append((tree.right[i], lo, hi))
        else:
            u1, u2 = fam[tree.left[i]], fam[tree.right[i]]
            for r1 in range(1, s):
                if u1 >> (lo + r1 * s) & 1 and u2 >> (common[r1] + hi * s) & 1:
                    stack.append((tree.left[i], lo, r1))
                    stack.append((tree.right[i], common[r1], hi))
                    break
            else:
                raise AssertionError("series node lost its witness")
    return Coloring(tuple(colors))


def msp_maps_into(e: MspExpr, t: Tournament) -> Coloring | None:
    """A homomorphism of the digraph of ``e`` into tournament ``t``, as a coloring."""
    tree = _flatten(e)
    fam = _families(tree, t)
    return None if fam is None else _trace(tree, t, fam)


def msp_ocn(e: MspExpr, stats: dict | None = None) -> tuple[int, Coloring]:
    """Exact OCN and an optimal coloring (vertices in leaf order).

    Tries every tournament class on r = 1, 2, ... vertices, starting from the
    lower bound given by the longest path (a directed P3 needs 3 colors).  If
    none on at most 6 vertices works, the answer is 7 and the Paley coloring
    is optimal.
    """
    tree = _flatten(e)
    ell = longest_path_of(e)
    tried = 0
    for r in range(min(ell, 2) + 1, MSP_COLORS):
        for t in nonisomorphic_tournaments(r):
            tried += 1
            fam = _families(tree, t)
            if fam is not None:
                if stats is not None:
                    stats.update(tournaments_tried=tried, target=t)
                return r, _trace(tree, t, fam)
    if stats is not None:
        stats.update(tournaments_tried=tried, target=PALEY7)
    coloring = paley_coloring(e)
    return coloring.used_colors, coloring


# --------------------------------------------------------------------------
# constructive colorings

def _affine_coloring(e: MspExpr, modulus: int, mult: int, shift: int) -> Coloring:
    """Leaf gets 0; a series node maps left colors by x -> mult*x and right colors
    by x -> mult*x + shift.  Maps compose top-down as x -> a*x + b."""
    colors: list[int] = []
    stack: list[tuple[MspExpr, int, int]] = [(e, 1, 0)]
    while stack:
        node, a, b = stack.pop()
        if isinstance(node, Leaf):
            colors.append(b % modulus)
        elif isinstance(node, Series):
            stack.append((node.right, a * mult % modulus, (a * shift + b) % modulus))
            stack.append((node.left, a * mult % modulus, b))
        elif isinstance(node, Parallel):
            stack.append((node.right, a, b))
            stack.append((node.left, a, b))
        else:
            raise ExpressionError(f"{type(node).__name__} is not an msp operation")
    return Coloring(tuple(colors))


def paley_coloring(e: MspExpr) -> Coloring:
    """Oriented coloring into the Paley tournament: p(x) = 4x, q(x) = 4x + 1 (mod 7)."""
    return _affine_coloring(e, 7, 4, 1)


def und_3coloring(e: MspExpr) -> Coloring:
    """Proper 3-coloring of the underlying graph: p(x) = 2x, q(x) = 2x + 1 (mod 3)."""
    return _affine_coloring(e, 3, 2, 1)
