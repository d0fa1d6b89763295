"""Oriented coloring over directed clique-width expressions.

A state is a color graph in which every color carries the set of labels its
vertices hold.  The four transfer rules:

* ``V(v,a)``: one state per color, that color labelled {a};
* ``U``: merge two states color by color, uniting label sets and arcs; the
  result must stay oriented;
* ``A(a,b)``: arcs from every color holding a to every color holding b;
  states where some color holds both labels (the arc would join two vertices
  of one color) or where an arc would oppose an existing one are dropped;
* ``R(a,b)``: rename label a to b inside every label set.

In literal mode colors are the fixed indices 0..r-1.  In reduced mode a state
lists only its used colors and is stored in a canonical order, so states that
differ by a renaming of colors collapse into one.  Color identity carries no
information beyond labels and arcs, so both modes accept the same digraphs
with the same minimum color count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .digraph import DEFAULT_EXACT_LIMIT, und_chromatic_number
from .errors import ExpressionError, SizeLimitError
from .expr.evaluate import eval_cw
from .expr.nodes import AddArcs, Create, CwExpr, CwUnion, Relabel, postorder
from .expr.translate import cw_validate
from .tournaments import Tournament, common_out, nonisomorphic_tournaments

# A state is (labels, outs): labels[c] is a bitmask over labels 1..k for color
# c (0 means unused, literal mode only); outs[c] is the out-neighbour mask of c.
State = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class CwState:
    labels: tuple[frozenset[int], ...]  # per color; empty = unused
    arcs: frozenset[tuple[int, int]]

    @property
    def used(self) -> int:
        return sum(1 for s in self.labels if s)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _decode(s: State) -> CwState:
    labels, outs = s
    return CwState(
        tuple(frozenset(_bits(m)) for m in labels),
        frozenset((c, d) for c, out in enumerate(outs) for d in _bits(out)),
    )


def _ins(outs: tuple[int, ...]) -> list[int]:
    ins = [0] * len(outs)
    for c, out in enumerate(outs):
        for d in _bits(out):
            ins[d] |= 1 << c
    return ins


def canonical(labels: tuple[int, ...], outs: tuple[int, ...]) -> State:
    """Canonical form up to renaming colors (used colors only).

    Colors are split by iterated refinement on (labels, out-neighbour
    signatures, in-neighbour signatures); the form is the least encoding over
    all orders that respect the refined classes.
    """
    keep = [c for c, m in enumerate(labels) if m]
    if len(keep) != len(labels):
        pos = {c: i for i, c in enumerate(keep)}
        labels = tuple(labels[c] for c in keep)
        outs = tuple(sum(1 << pos[d] for d in _bits(outs[c])) for c in keep)
    u = len(labels)
    if u <= 1:
        return labels, outs
    ins = _ins(outs)
    out_lists = [_bits(m) for m in outs]
    in_lists = [_bits(m) for m in ins]
    sig = [(labels[c], len(out_lists[c]), len(in_lists[c])) for c in range(u)]
    rank = _ranks(sig)
    classes = len(set(rank))
    while classes < u:
        sig = [
            (rank[c], tuple(sorted(rank[d] for d in out_lists[c])), tuple(sorted(rank[d] for d in in_lists[c])))
            for c in range(u)
        ]
        new_rank = _ranks(sig)
        new_classes = len(set(new_rank))
        rank = new_rank
        if new_classes == classes:
            break
        classes = new_classes
    groups: dict[int, list[int]] = {}
    for c in range(u):
        groups.setdefault(rank[c], []).append(c)
    ordered = [groups[k] for k in sorted(groups)]
    best: State | None = None
    for parts in itertools.product(*(itertools.permutations(g) for g in ordered)):
        order = [c for part in parts for c in part]
        pos = [0] * u
        for i, c in enumerate(order):
            pos[c] = i
        cand = (
            tuple(labels[c] for c in order),
            tuple(sum(1 << pos[d] for d in out_lists[c]) for c in order),
        )
        if best is None or cand < best:
            best = cand
    return best


def _ranks(sig: list) -> list[int]:
    values = sorted(set(sig))
    index = {v: i for i, v in enumerate(values)}
    return [index[s] for s in sig]


@dataclass
class CwStats:
    max_states: int = 0
    bound_checked: bool = True
    per_node_max: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class CwStateSet:
    r: int
    k: int
    reduced: bool
    states: frozenset  # of State

    def __len__(self) -> int:
        return len(self.states)

    def decoded(self) -> list[CwState]:
        return [_decode(s) for s in sorted(self.states)]

    def min_used(self) -> int | None:
        if not self.states:
            return None
        return min(sum(1 for m in labels if m) for labels, _ in self.states)


def _union_literal(s1: State, s2: State) -> State | None:
    l1, o1 = s1
    l2, o2 = s2
    outs = tuple(a | b for a, b in zip(o1, o2))
    for c, out in enumerate(outs):
        for d in _bits(out):
            if outs[d] >> c & 1:
                return None
    return tuple(a | b for a, b in zip(l1, l2)), outs


def _add_arcs(s: State, a: int, b: int) -> State | None:
    labels, outs = s
    bit_a, bit_b = 1 << a, 1 << b
    ca = [c for c, m in enumerate(labels) if m & bit_a]
    cb_mask = sum(1 << c for c, m in enumerate(labels) if m & bit_b)
    if not ca or not cb_mask:
        return s
    new = list(outs)
    for c in ca:
        if cb_mask >> c & 1:
            return None  # both ends share a color
        new[c] |= cb_mask
    for c in ca:
        for d in _bits(cb_mask):
            if outs[d] >> c & 1:
                return None  # opposite arc already present
    return labels, tuple(new)


def _relabel(s: State, a: int, b: int) -> State:
    labels, outs = s
    bit_a, bit_b = 1 << a, 1 << b
    return tuple((m & ~bit_a) | bit_b if m & bit_a else m for m in labels), outs


def _merges(s1: State, s2: State, r: int, forbid: tuple[int, ...] = ()):
    """Every merge of two reduced states with at most r colors in total.

    Each color of the smaller state goes to an unused color of the larger one
    or to a fresh color (fresh colors are taken in order, since they are
    interchangeable).  A merge is skipped as soon as two arcs oppose each
    other, or a merged color holds both labels of some mask in ``forbid``.
    """
    l1, o1 = s1
    l2, o2 = s2
    u1, u2 = len(l1), len(l2)
    if u1 < u2:
        l1, o1, l2, o2, u1, u2 = l2, o2, l1, o1, u2, u1
    in2 = _ins(o2)
    target = [-1] * u2
    results = []

    def extend(j: int, fresh: int, taken: int) -> None:
        if j == u2:
            labels = list(l1) + [0] * (fresh - u1)
            outs = list(o1) + [0] * (fresh - u1)
            for c in range(u2):
                t = target[c]
                labels[t] |= l2[c]
                for d in _bits(o2[c]):
                    outs[t] |= 1 << target[d]
            results.append((tuple(labels), tuple(outs)))
            return
        choices = [t for t in range(u1) if not taken >> t & 1]
        if fresh < r:
            choices.append(fresh)
        for t in choices:
            if t < u1:
                merged = l1[t] | l2[j]
                if any(merged & f == f for f in forbid):
                    continue
                ok = True
                for d in range(j):
                    td = target[d]
                    if td >= u1:
                        continue
                    # arcs of s2 between j and earlier colors must not oppose arcs of s1
                    if (o2[j] >> d & 1 and o1[td] >> t & 1) or (in2[j] >> d & 1 and o1[t] >> td & 1):
                        ok = False
                        break
                if not ok:
                    continue
            target[j] = t
            if t == fresh:
                extend(j + 1, fresh + 1, taken)
            else:
                extend(j + 1, fresh, taken | (1 << t))
        target[j] = -1

    extend(0, u1, 0)
    return results


_USED_ONLY = 1  # bit 0: color is used but holds no label that matters any more


def live_labels(e: CwExpr) -> dict[int, int]:
    """For every node (by id), the labels some ancestor arc insertion can still see.

    A label is live below a node if, after the renamings on the way up, it
    reaches an ``A(a,b)`` as ``a`` or ``b``.
    """
    live: dict[int, int] = {}
    stack: list[tuple[CwExpr, int]] = [(e, 0)]
    while stack:
        node, mask = stack.pop()
        live[id(node)] = mask
        if isinstance(node, CwUnion):
            stack.append((node.left, mask))
            stack.append((node.right, mask))
        elif isinstance(node, AddArcs):
            stack.append((node.child, mask | 1 << node.a | 1 << node.b))
        elif isinstance(node, Relabel):
            bit_a = 1 << node.a
            child = mask & ~bit_a
            if mask >> node.b & 1:
                child |= bit_a
            stack.append((node.child, child))
    return live


def _project(s: State, mask: int) -> State:
    labels, outs = s
    return tuple((m & mask) or _USED_ONLY if m else 0 for m in labels), outs


def _union_chains(e: CwExpr) -> dict[int, list[CwExpr]]:
    """For every union (by id), the run of A/R operations directly above it, bottom first."""
    parent: dict[int, CwExpr] = {}
    unions: list[CwExpr] = []
    stack: list[CwExpr] = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, CwUnion):
            unions.append(node)
            kids = (node.left, node.right)
        elif isinstance(node, (AddArcs, Relabel)):
            kids = (node.child,)
        else:
            kids = ()
        for kid in kids:
            parent[id(kid)] = node
            stack.append(kid)
    chains = {}
    for u in unions:
        chain = []
        p = parent.get(id(u))
        while isinstance(p, (AddArcs, Relabel)):
            chain.append(p)
            p = parent.get(id(p))
        chains[id(u)] = chain
    return chains


def _leading_forbid(chain: list[CwExpr]) -> tuple[int, ...]:
    """Label pairs of the arc insertions that come before any renaming."""
    out = []
    for op in chain:
        if not isinstance(op, AddArcs):
            break
        out.append(1 << op.a | 1 << op.b)
    return tuple(out)


def _admissible(s: State, forbid: tuple[int, ...]) -> bool:
    return not any(m & f == f for m in s[0] for f in forbid)


def _apply_chain(s: State | None, chain: list[CwExpr]) -> State | None:
    for op in chain:
        if isinstance(op, AddArcs):
            s = _add_arcs(s, op.a, op.b)
            if s is None:
                return None
        else:
            s = _relabel(s, op.a, op.b)
    return s


def cw_states(
    e: CwExpr, r: int, reduce: bool = False, stats: CwStats | None = None
) -> CwStateSet:
    """Run the state-set dynamic program with ``r`` colors.

    Raises ExpressionError for malformed expressions.  ``stats`` receives the
    largest set seen; every set is checked against 2^(r(r+k)).
    """
    info = cw_validate(e)
    if r < 1:
        raise ValueError("r must be positive")
    k = info.k
    bound = 1 << (r * (r + k))
    live: dict[int, int] = {}
    chains: dict[int, list[CwExpr]] = {}
    fused: set[int] = set()
    if reduce:
        live = live_labels(e)
        chains = _union_chains(e)
        fused = {id(op) for chain in chains.values() for op in chain}
    stack: list[set[State]] = []
    largest = 0
    for node in postorder(e):
        if id(node) in fused:
            continue  # already applied together with the union below it
        if isinstance(node, Create):
            if reduce:
                cur = {canonical(*_project(((1 << node.label,), (0,)), live[id(node)]))}
            else:
                cur = set()
                for i in range(r):
                    labels = [0] * r
                    labels[i] = 1 << node.label
                    cur.add((tuple(labels), (0,) * r))
        elif isinstance(node, CwUnion):
            s2 = stack.pop()
            s1 = stack.pop()
            cur = set()
            if reduce:
                chain = chains[id(node)]
                top = chain[-1] if chain else node
                forbid = _leading_forbid(chain)
                s1 = [x for x in s1 if _admissible(x, forbid)]
                s2 = [x for x in s2 if _admissible(x, forbid)]
                mask = live[id(top)]
                for x in s1:
                    for y in s2:
                        for z in _merges(x, y, r, forbid):
                            z = _apply_chain(z, chain)
                            if z is not None:
                                cur.add(canonical(*_project(z, mask)))
            else:
                for x in s1:
                    for y in s2:
                        z = _union_literal(x, y)
                        if z is not None:
                            cur.add(z)
        elif isinstance(node, AddArcs):
            cur = set()
            for s in stack.pop():
                z = _add_arcs(s, node.a, node.b)
                if z is not None:
                    cur.add(canonical(*_project(z, live[id(node)])) if reduce else z)
        elif isinstance(node, Relabel):
            cur = set()
            for s in stack.pop():
                z = _relabel(s, node.a, node.b)
                cur.add(canonical(*_project(z, live[id(node)])) if reduce else z)
        else:
            raise ExpressionError(f"{type(node).__name__} is not a clique-width operation")
        if len(cur) > bound:
            raise AssertionError(f"state set of size {len(cur)} exceeds 2^(r(r+k)) = {bound}")
        largest = max(largest, len(cur))
        if stats is not None:
            stats.per_node_max.append(len(cur))
        stack.append(cur)
    if stats is not None:
        stats.max_states = max(stats.max_states, largest)
    return CwStateSet(r, k, reduce, frozenset(stack[0]))


# --------------------------------------------------------------------------
# fixed target tournament
#
# An oriented r-coloring is a homomorphism into some tournament on r vertices.
# With the tournament T fixed, a state only records which live labels occur on
# each vertex of T (bit 0 marks a used vertex); the arcs are those of T.  An
# arc insertion A(a,b) is possible iff no vertex holds both labels and T has
# every arc from the a-vertices to the b-vertices.

MAX_TARGET_ORDER = 7
TargetState = tuple[int, ...]


def _target_ok(ca: int, cb: int, common: list[int]) -> bool:
    return not (ca & cb) and not (cb & ~common[ca])


def _holders(s: TargetState, bit: int) -> int:
    return sum(1 << c for c, m in enumerate(s) if m & bit)


def _map_labels(s: TargetState, ops: list[CwExpr], mask: int) -> TargetState:
    out = []
    for m in s:
        for op in ops:
            if m >> op.a & 1:
                m = (m & ~(1 << op.a)) | 1 << op.b
        out.append(m & mask)
    return tuple(out)


def target_states(
    e: CwExpr, t: Tournament, stats: CwStats | None = None, _prep=None
) -> set[TargetState]:
    """Final states of the dynamic program restricted to colorings into ``t``."""
    r = len(t)
    common = common_out(t)
    live, chains, fused = _prep if _prep is not None else _prepare(e)
    stack: list[set[TargetState]] = []
    for node in postorder(e):
        if id(node) in fused:
            continue
        mask = live[id(node)] | _USED_ONLY
        if isinstance(node, Create):
            m = (1 << node.label) & mask | _USED_ONLY
            cur = {tuple(m if c == i else 0 for c in range(r)) for i in range(r)}
        elif isinstance(node, CwUnion):
            s2 = stack.pop()
            s1 = stack.pop()
            chain = chains[id(node)]
            lead = []
            for op in chain:
                if not isinstance(op, AddArcs):
                    break
                lead.append(op)
            rest = chain[len(lead):]
            top_mask = live[id(chain[-1] if chain else node)] | _USED_ONLY
            cur = set()
            if all(isinstance(op, Relabel) for op in rest):
                # renaming and masking distribute over the union, and the
                # leading insertions only see which vertices hold which labels
                def grouped(states):
                    groups: dict[tuple, set] = {}
                    for x in states:
                        sig = tuple((_holders(x, 1 << op.a), _holders(x, 1 << op.b)) for op in lead)
                        groups.setdefault(sig, set()).add(_map_labels(x, rest, top_mask))
                    return groups

                g1, g2 = grouped(s1), grouped(s2)
                for sig1, xs in g1.items():
                    for sig2, ys in g2.items():
                        if all(_target_ok(a1 | a2, b1 | b2, common) for (a1, b1), (a2, b2) in zip(sig1, sig2)):
                            for x in xs:
                                for y in ys:
                                    cur.add(tuple(p | q for p, q in zip(x, y)))
            else:
                for x in s1:
                    for y in s2:
                        z: TargetState | None = tuple(p | q for p, q in zip(x, y))
                        for op in chain:
                            if isinstance(op, AddArcs):
                                if not _target_ok(_holders(z, 1 << op.a), _holders(z, 1 << op.b), common):
                                    z = None
                                    break
                            else:
                                z = _map_labels(z, [op], -1)
                        if z is not None:
                            cur.add(tuple(m & top_mask for m in z))
        elif isinstance(node, AddArcs):
            ba, bb = 1 << node.a, 1 << node.b
            cur = {
                tuple(m & mask for m in x)
                for x in stack.pop()
                if _target_ok(_holders(x, ba), _holders(x, bb), common)
            }
        elif isinstance(node, Relabel):
            cur = {_map_labels(x, [node], mask) for x in stack.pop()}
        else:
            raise ExpressionError(f"{type(node).__name__} is not a clique-width operation")
        if stats is not None:
            stats.max_states = max(stats.max_states, len(cur))
            stats.per_node_max.append(len(cur))
        if not cur:
            return set()
        stack.append(cur)
    return stack[0]


def _prepare(e: CwExpr):
    chains = _union_chains(e)
    return live_labels(e), chains, {id(op) for chain in chains.values() for op in chain}


def target_feasible(e: CwExpr, r: int, stats: CwStats | None = None) -> Tournament | None:
    """A tournament on r vertices that the digraph of ``e`` maps into, or None."""
    if r > MAX_TARGET_ORDER:
        raise SizeLimitError(f"target tournaments are enumerated up to {MAX_TARGET_ORDER} vertices")
    cw_validate(e)
    prep = _prepare(e)
    for t in nonisomorphic_tournaments(r):
        if target_states(e, t, stats, prep):
            return t
    return None


ENGINES = ("auto", "literal", "reduced", "tournament")


def _engine_for(r: int, engine: str) -> str:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")
    if engine == "auto":
        return "tournament" if r <= MAX_TARGET_ORDER else "reduced"
    return engine


def cw_ocn_at_most(
    e: CwExpr, r: int, engine: str = "auto", stats: CwStats | None = None
) -> tuple[bool, int | None]:
    """Whether an oriented r-coloring exists, and the fewest colors any final state uses.

    ``literal`` runs the state sets over colors 0..r-1 as they are; ``reduced``
    identifies states that differ by a renaming of colors; ``tournament``
    decides r' = 1..r in turn against every tournament class on r' vertices.
    ``auto`` uses ``tournament`` up to 7 colors and ``reduced`` beyond.
    """
    if r < 1:
        raise ValueError("r must be positive")
    engine = _engine_for(r, engine)
    if engine == "tournament":
        for size in range(1, r + 1):
            if target_feasible(e, size, stats) is not None:
                return True, size
        return False, None
    result = cw_states(e, r, reduce=engine == "reduced", stats=stats)
    return bool(result.states), result.min_used()


def cw_ocn(
    e: CwExpr,
    engine: str = "auto",
    stats: CwStats | None = None,
    max_n: int | None = DEFAULT_EXACT_LIMIT,
) -> int:
    """OCN of the digraph of ``e``, searching r upward from chi(un(G)) (or 1 past ``max_n``).

    Raises NonOrientedResult if the expression does not build an oriented graph.
    """
    g, _ = eval_cw(e)
    if g.n == 0:
        return 0
    try:
        r = und_chromatic_number(g, max_n=max_n)
    except SizeLimitError:
        r = 1
    while True:
        chosen = _engine_for(r, engine)
        if chosen == "tournament":
            # every smaller r already failed, so a hit at r uses exactly r colors
            if target_feasible(e, r, stats) is not None:
                return r
        else:
            feasible, used = cw_ocn_at_most(e, r, engine=chosen, stats=stats)
            if feasible:
                return used
        r += 1
