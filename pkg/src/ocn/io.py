"""Edge-list, DOT and coloring text formats.

Edge list::

    n m
    names          # optional; followed by n lines, one name each
    v0
    ...
    u v            # m lines, 0-based indices

Blank lines and ``#`` comments are ignored.  Coloring files hold one
``name color`` pair per line with 1-based colors.
"""

from __future__ import annotations

from pathlib import Path

from .coloring import Coloring
from .digraph import Digraph
from .errors import ParseError


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", lineno, 1) from None


def parse_edgelist(text: str) -> Digraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty edge list", 1, 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", lineno, 1)
    n, m = _int(parts[0], lineno, "n"), _int(parts[1], lineno, "m")
    rest = lines[1:]
    names = [str(i) for i in range(n)]
    if rest and rest[0][1] == "names":
        if len(rest) < n + 1:
            raise ParseError(f"names section needs {n} entries", rest[0][0], 1)
        names = [line for _, line in rest[1 : n + 1]]
        rest = rest[n + 1 :]
    if len(rest) != m:
        where = rest[m][0] if len(rest) > m else (rest[-1][0] if rest else lineno)
        raise ParseError(f"expected {m} arc lines, found {len(rest)}", where, 1)
    arcs = []
    for ln, line in rest:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("arc line must be 'u v'", ln, 1)
        u, v = _int(toks[0], ln, "tail"), _int(toks[1], ln, "head")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u},{v}) out of range", ln, 1)
        if u == v:
            raise ParseError(f"self-loop at {u}", ln, 1)
        arcs.append((u, v))
    if len(set(arcs)) != len(arcs):
        raise ParseError("duplicate arc", lineno, 1)
    try:
        return Digraph.build(n, arcs, names)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None


def format_edgelist(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}", "names", *g.names]
    lines += [f"{u} {v}" for u, v in g.arc_list]
    return "\n".join(lines) + "\n"


def format_dot(g: Digraph, coloring: Coloring | None = None) -> str:
    lines = ["digraph G {"]
    for v, name in enumerate(g.names):
        label = name if coloring is None else f"{name}:{coloring[v] + 1}"
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.arc_list:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Digraph) -> Coloring:
    colors = [-1] * g.n
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("coloring line must be 'name color'", lineno, 1)
        name, col = toks
        try:
            v = g.index(name)
        except KeyError:
            raise ParseError(f"unknown vertex {name!r}", lineno, 1) from None
        c = _int(col, lineno, "color")
        if c < 1:
            raise ParseError("colors are 1-based", lineno, len(name) + 2)
        if colors[v] >= 0:
            raise ParseError(f"vertex {name!r} colored twice", lineno, 1)
        colors[v] = c - 1
    missing = [g.names[v] for v in range(g.n) if colors[v] < 0]
    if missing:
        raise ParseError(f"uncolored vertices: {', '.join(missing)}")
    return Coloring(tuple(colors))


def format_coloring(g: Digraph, c: Coloring) -> str:
    return "".join(f"{name} {c[v] + 1}\n" for v, name in enumerate(g.names))


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")
