"""Binary integer program for the oriented chromatic number, in LP text format.

Variables: ``y_j`` (color j is used) and ``x_i_j`` (vertex i gets color j),
for i, j in 1..n.  Constraints:

* assignment: sum_j x_i_j = 1 for every vertex i;
* arc-color: x_i_j + x_k_j - y_j <= 0 for every arc (i, k) and color j;
* arc-pair: for every unordered pair of distinct arcs (u,v), (x,y) and every
  ordered color pair j != j', x_v_j + x_x_j + x_u_j' + x_y_j' <= 3, which forbids
  c(v) = c(x) = j together with c(u) = c(y) = j'.  Repeated variables are
  merged into one term with coefficient 2.

The objective minimises sum_j y_j.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .coloring import require_oriented, verify_oriented_coloring
from .digraph import Digraph
from .errors import SizeLimitError

ENUMERATE_LIMIT = 6


@dataclass(frozen=True)
class Constraint:
    group: str  # "assignment", "arc-color" or "arc-pair"
    terms: tuple[tuple[int, str], ...]  # (coefficient, variable), variables sorted
    sense: str  # "=" or "<="
    rhs: int


@dataclass(frozen=True)
class BipModel:
    n: int
    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...]

    def count(self, group: str) -> int:
        return sum(1 for c in self.constraints if c.group == group)


def y(j: int) -> str:
    return f"y_{j}"


def x(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def _terms(counter: Counter) -> tuple[tuple[int, str], ...]:
    return tuple((coef, var) for var, coef in sorted(counter.items(), key=lambda kv: _var_key(kv[0])) if coef)


def _var_key(name: str) -> tuple[int, ...]:
    parts = name.split("_")
    return (0 if parts[0] == "y" else 1, *map(int, parts[1:]))


def build_bip(g: Digraph) -> BipModel:
    require_oriented(g)
    n = g.n
    colors = range(1, n + 1)
    variables = tuple([y(j) for j in colors] + [x(i, j) for i in colors for j in colors])
    cons: list[Constraint] = []
    for i in colors:
        cons.append(Constraint("assignment", tuple((1, x(i, j)) for j in colors), "=", 1))
    arcs = [(u + 1, v + 1) for u, v in g.arc_list]
    for i, k in arcs:
        for j in colors:
            cons.append(Constraint("arc-color", ((-1, y(j)), (1, x(i, j)), (1, x(k, j))), "<=", 0))
    for (u, v), (p, q) in itertools.combinations(arcs, 2):
        for j, jj in itertools.permutations(colors, 2):
            cnt = Counter([x(v, j), x(p, j), x(u, jj), x(q, jj)])
            cons.append(Constraint("arc-pair", _terms(cnt), "<=", 3))
    return BipModel(n, variables, tuple(cons))


def _fmt_terms(terms) -> str:
    out = []
    for coef, var in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = var if mag == 1 else f"{mag} {var}"
        out.append(f"{sign} {body}")
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else text


def emit_bip(g: Digraph) -> str:
    """The model as LP text (Minimize / Subject To / Binary / End)."""
    model = build_bip(g)
    lines = ["\\ oriented chromatic number", "Minimize", " obj: " + _fmt_terms((1, y(j)) for j in range(1, g.n + 1))]
    lines.append("Subject To")
    tags = {"assignment": "assign", "arc-color": "arccol", "arc-pair": "arcpair"}
    seen: Counter = Counter()
    for c in model.constraints:
        seen[c.group] += 1
        lines.append(f" {tags[c.group]}_{seen[c.group]}: {_fmt_terms(c.terms)} {c.sense} {c.rhs}")
    lines.append("Binary")
    for var in model.variables:
        lines.append(f" {var}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def expected_counts(n: int, m: int) -> dict[str, int]:
    return {
        "variables": n * n + n,
        "assignment": n,
        "arc-color": m * n,
        "arc-pair": m * (m - 1) // 2 * n * (n - 1),
    }


def _matrix(model: BipModel) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    index = {v: k for k, v in enumerate(model.variables)}
    a = np.zeros((len(model.constraints), len(model.variables)), dtype=np.int64)
    rhs = np.zeros(len(model.constraints), dtype=np.int64)
    eq = np.zeros(len(model.constraints), dtype=bool)
    for row, c in enumerate(model.constraints):
        for coef, var in c.terms:
            a[row, index[var]] = coef
        rhs[row] = c.rhs
        eq[row] = c.sense == "="
    return a, rhs, eq


def _assignment_vectors(model: BipModel, r: int) -> tuple[np.ndarray, np.ndarray]:
    """0/1 variable vectors for every c: V -> {1..r}, with y_j = [j used]."""
    n = model.n
    grid = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int64).reshape(-1, n)
    index = {v: k for k, v in enumerate(model.variables)}
    vec = np.zeros((len(grid), len(model.variables)), dtype=np.int64)
    for i in range(n):
        for j in range(r):
            hit = grid[:, i] == j
            vec[hit, index[x(i + 1, j + 1)]] = 1
            vec[hit, index[y(j + 1)]] = 1
    return grid, vec


def enumerate_check(g: Digraph, r: int, report: dict | None = None) -> bool:
    """Check every assignment V -> {1..r}: the model holds iff the coloring is oriented.

    ``report`` receives ``min_objective`` (fewest used colors among feasible
    assignments, or None) and ``assignments``.
    """
    if g.n > ENUMERATE_LIMIT:
        raise SizeLimitError(f"enumeration limited to {ENUMERATE_LIMIT} vertices, digraph has {g.n}")
    if not 1 <= r <= max(g.n, 1):
        raise ValueError("need 1 <= r <= n")
    model = build_bip(g)
    a, rhs, eq = _matrix(model)
    grid, vec = _assignment_vectors(model, r)
    sat = np.empty(len(grid), dtype=bool)
    for lo in range(0, len(grid), 4096):  # bounded memory for n = 6
        lhs = vec[lo : lo + 4096] @ a.T
        sat[lo : lo + 4096] = np.where(eq, lhs == rhs, lhs <= rhs).all(axis=1)
    agree = True
    for row, colors in enumerate(grid):
        if bool(sat[row]) != bool(verify_oriented_coloring(g, colors.tolist())):
            agree = False
            break
    if report is not None:
        ys = vec[:, : g.n].sum(axis=1)
        report["assignments"] = len(grid)
        report["min_objective"] = int(ys[sat].min()) if sat.any() else None
    return agree
