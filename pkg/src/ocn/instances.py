"""Named digraphs and expressions, and seeded random generators.

Random generators draw from ``random.Random(seed)`` (Mersenne Twister
MT19937), whose output for a given integer seed is the same on every platform
and Python 3 release.  Random trees are uniform over binary tree shapes with
``n`` leaves (Remy's algorithm); each internal node picks its operation by a
fair coin.  Leaves are named ``v1..vn`` from left to right.
"""

from __future__ import annotations

import random

from .digraph import Digraph, transitive_closure
from .errors import ExpressionError
from .expr.nodes import DicoExpr, Leaf, MspExpr, Order, Parallel, Series, Union
from .expr.parser import parse_dico, parse_msp
from .tournaments import is_paley_arc

EXPRESSIONS: dict[str, tuple[str, str]] = {
    "ex2": ("dico", "(v1 > v3) > (v2 + v4)"),
    "ex3-x1": ("msp", "(v1*((v2*v3)|v4))*v5"),
    "ex3-x2": ("msp", "(v1*(((v2*v3)*v4)|v5))*v6"),
    "ex5-x1": ("msp", "v1 * (v2 | v3 * v4) * v5 * v6"),
    "ex5-x2": ("msp", "w1 * (w2 | w3 * (w4 | w5 * w6)) * w7"),
    "ex6": (
        "msp",
        "v1 * (v2 | v3 * (v4 | v5 * v6)) * (v7 | (v8 | v9 * v10) * (v11 | v12 * v13))"
        " * (v14 | (v15 | (v16 | v17 * v18) * (v19 | v20 * v21)) * (v22 | (v23 | v24 * v25) * v26)) * v27",
    ),
}

NAMES = ("path", "cycle", "knm", "tt", "paley7", "M", "Mprime", *EXPRESSIONS)
_ARITY = {"path": 1, "cycle": 1, "knm": 2, "tt": 1, "paley7": 0, "M": 1, "Mprime": 1}


def path(n: int) -> Digraph:
    return Digraph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError("a directed cycle needs at least 3 vertices")
    return Digraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def knm(n: int, m: int) -> Digraph:
    """All arcs from n left vertices to m right vertices."""
    return Digraph.build(n + m, [(u, n + v) for u in range(n) for v in range(m)])


def tt(n: int) -> Digraph:
    return Digraph.build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def paley7() -> Digraph:
    return Digraph.build(7, [(u, v) for u in range(7) for v in range(7) if u != v and is_paley_arc(u, v)])


def tt_expr(n: int) -> DicoExpr:
    """Transitive tournament as nested order compositions of v1..vn."""
    e: DicoExpr = Leaf("v1")
    for i in range(2, n + 1):
        e = Order(e, Leaf(f"v{i}"))
    return e


def _name_leaves(shape, n: int):
    """Rebuild ``shape`` (nested tuples ("op", l, r) or None for a leaf) with v1..vn."""
    out: list = []
    counter = 0
    stack: list = [(shape, False)]
    while stack:
        node, done = stack.pop()
        if node is None:
            counter += 1
            out.append(Leaf(f"v{counter}"))
        elif done:
            right = out.pop()
            left = out.pop()
            out.append(node[0](left, right))
        else:
            stack.append((node, True))
            stack.append((node[2], False))
            stack.append((node[1], False))
    assert counter == n
    return out[0]


def m_expr(i: int) -> MspExpr:
    """M_i = M_(i-1) | M_(i-1) | (M_(i-1) * M_(i-1)); 4^i vertices."""
    if i < 0:
        raise ValueError("i must be non-negative")
    shape = None
    for _ in range(i):
        shape = (Parallel, (Parallel, shape, shape), (Series, shape, shape))
    return _name_leaves(shape, 4**i)


def mprime_expr(i: int) -> MspExpr:
    """M'_i = M'_(i-1) | (M'_(i-1) * M'_(i-1)); 3^i vertices."""
    if i < 0:
        raise ValueError("i must be non-negative")
    shape = None
    for _ in range(i):
        shape = (Parallel, shape, (Series, shape, shape))
    return _name_leaves(shape, 3**i)


def example(name: str):
    lang, text = EXPRESSIONS[name]
    return parse_dico(text) if lang == "dico" else parse_msp(text)


def example5_union() -> MspExpr:
    """Disjoint union of the two digraphs of Example 5, as one parallel composition."""
    return Parallel(example("ex5-x1"), example("ex5-x2"))


def gen_named(name: str, *params: int):
    """Digraph for path/cycle/knm/tt/paley7, expression for M, Mprime and the examples."""
    if name in EXPRESSIONS:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return example(name)
    if name not in _ARITY:
        raise ValueError(f"unknown instance {name!r}; known: {', '.join(NAMES)}")
    if len(params) != _ARITY[name]:
        raise ValueError(f"{name} takes {_ARITY[name]} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise ValueError("parameters must be non-negative")
    builders = {"path": path, "cycle": cycle, "knm": knm, "tt": tt, "paley7": paley7, "M": m_expr, "Mprime": mprime_expr}
    return builders[name](*params)


def _remy_shape(n: int, rng: random.Random, ops: tuple[type, type]):
    """Uniform binary tree shape with n leaves; internal nodes get a fair-coin op."""
    if n < 1:
        raise ValueError("n must be positive")
    # node k: children[k] is None for a leaf, else [left, right]
    children: list[list[int] | None] = [None]
    parent = [-1]
    root = 0
    for _ in range(n - 1):
        target = rng.randrange(len(children))
        leaf = len(children)
        inner = leaf + 1
        children.append(None)
        parent.append(inner)
        kids = [target, leaf] if rng.random() < 0.5 else [leaf, target]
        children.append(kids)
        parent.append(parent[target])
        if parent[target] == -1:
            root = inner
        else:
            sib = children[parent[target]]
            sib[sib.index(target)] = inner
        parent[target] = inner
    op_of = {k: (ops[0] if rng.random() < 0.5 else ops[1]) for k, kids in enumerate(children) if kids is not None}
    # convert to nested tuples bottom-up without recursion
    built: dict[int, object] = {}
    stack = [(root, False)]
    while stack:
        k, done = stack.pop()
        kids = children[k]
        if kids is None:
            built[k] = None
        elif done:
            built[k] = (op_of[k], built.pop(kids[0]), built.pop(kids[1]))
        else:
            stack.append((k, True))
            stack.append((kids[1], False))
            stack.append((kids[0], False))
    return built[root]


def random_msp(n: int, seed: int) -> MspExpr:
    rng = random.Random(seed)
    return _name_leaves(_remy_shape(n, rng, (Series, Parallel)), n)


def random_dico(n: int, seed: int) -> DicoExpr:
    rng = random.Random(seed)
    return _name_leaves(_remy_shape(n, rng, (Order, Union)), n)


def random_dag(n: int, p: float, seed: int, transitive: bool = False) -> Digraph:
    """Arcs u -> v for u < v, each present with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    g = Digraph.build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    return transitive_closure(g) if transitive else g


def random_oriented(n: int, p: float, seed: int) -> Digraph:
    """Each vertex pair becomes an arc with probability p, direction by fair coin."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph.build(n, arcs)


def expression_language(name: str) -> str:
    if name in EXPRESSIONS:
        return EXPRESSIONS[name][0]
    if name in ("M", "Mprime"):
        return "msp"
    raise ExpressionError(f"{name} is a digraph, not an expression")
