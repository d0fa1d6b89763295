"""Command line front end.

Exit status: 0 success or valid, 1 negative answer (invalid coloring,
infeasible bound), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path
from typing import Sequence

from . import instances
from .cograph import cograph_ocn
from .coloring import Coloring, bounds, transitive_dag_coloring, verify_oriented_coloring
from .cw import ENGINES, CwStats, cw_ocn, cw_ocn_at_most
from .digraph import Digraph, is_acyclic, is_oriented, is_transitive
from .errors import NotOrientedError, OcnError
from .expr import (
    cw_validate,
    dico_to_cw2,
    eval_cw,
    eval_dico,
    eval_msp,
    msp_to_cw7,
    parse,
    to_text,
)
from .ilp import emit_bip
from .io import format_coloring, format_dot, format_edgelist, parse_coloring, parse_edgelist, read_text
from .msp import msp_ocn
from .oracle import DEFAULT_ORACLE_LIMIT, ocn_decide, ocn_exact

ALGOS = ("auto", "greedy-transitive", "cograph", "msp", "cw", "oracle")
EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class Source:
    """A digraph file or an expression, loaded from --input/--expr."""

    def __init__(self, lang: str | None, expr=None, graph: Digraph | None = None):
        self.lang = lang  # None for a raw digraph
        self.expr = expr
        self._graph = graph

    @property
    def graph(self) -> Digraph:
        if self._graph is None:
            if self.lang == "dico":
                self._graph = eval_dico(self.expr)
            elif self.lang == "msp":
                self._graph = eval_msp(self.expr)
            else:
                self._graph = eval_cw(self.expr)[0]
        return self._graph


def _guess_lang(text: str) -> str:
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if body[:2] in ("V(", "U(", "A(", "R("):
        return "cw"
    if "+" in body or ">" in body:
        return "dico"
    return "msp"


def load_source(args, allow_graph: bool = True) -> Source:
    if (args.input is None) == (args.expr is None):
        raise UsageError("give exactly one of --input PATH or --expr TEXT")
    if args.expr is not None:
        lang = args.lang or _guess_lang(args.expr)
        return Source(lang, parse(args.expr, lang))
    text = read_text(args.input)
    if args.lang:
        return Source(args.lang, parse(text, args.lang))
    if not allow_graph:
        raise UsageError("this command needs an expression; pass --lang with --input")
    return Source(None, graph=parse_edgelist(text))


def _emit(out, porcelain: bool, pairs: list[tuple[str, object]], human: list[str]) -> None:
    if porcelain:
        for key, value in pairs:
            print(f"{key}={value}", file=out)
    else:
        for line in human:
            print(line, file=out)


def _coloring_field(g: Digraph, c: Coloring) -> str:
    return ",".join(f"{name}:{c[v] + 1}" for v, name in enumerate(g.names))


def _pick_algo(src: Source, algo: str) -> str:
    if algo != "auto":
        return algo
    if src.lang == "dico":
        return "cograph"
    if src.lang == "msp":
        return "msp"
    if src.lang == "cw":
        return "cw"
    g = src.graph
    if is_oriented(g) and is_acyclic(g) and is_transitive(g):
        return "greedy-transitive"
    return "oracle"


def _cw_expr(src: Source):
    if src.lang == "cw":
        return src.expr
    if src.lang == "dico":
        return dico_to_cw2(src.expr)
    if src.lang == "msp":
        return msp_to_cw7(src.expr)
    raise UsageError("the cw engine needs an expression (--lang dico|msp|cw)")


def cmd_solve(args, out) -> int:
    src = load_source(args)
    algo = _pick_algo(src, args.algo)
    start = time.monotonic()
    witness: Coloring | None = None
    extra: list[tuple[str, object]] = []
    if args.r is not None and algo not in ("cw", "oracle"):
        raise UsageError("--r applies to the cw and oracle engines")
    if algo == "cograph":
        if src.lang != "dico":
            raise UsageError("the cograph engine needs a di-co expression (--lang dico)")
        chi, witness = cograph_ocn(src.expr)
    elif algo == "msp":
        if src.lang != "msp":
            raise UsageError("the msp engine needs an msp expression (--lang msp)")
        chi, witness = msp_ocn(src.expr)
    elif algo == "greedy-transitive":
        g = src.graph
        witness = transitive_dag_coloring(g)  # raises when the digraph is not transitive and acyclic
        chi = witness.used_colors
    elif algo == "oracle":
        g = src.graph
        max_n = args.max_n if args.max_n is not None else DEFAULT_ORACLE_LIMIT
        if args.r is not None:
            witness = ocn_decide(g, args.r)
            chi = None
        else:
            chi, witness = ocn_exact(g, max_n=max_n)
    elif algo == "cw":
        e = _cw_expr(src)
        stats = CwStats()
        engine = args.engine
        if args.r is not None:
            feasible, used = cw_ocn_at_most(e, args.r, engine=engine, stats=stats)
            chi = used if feasible else None
            extra.append(("feasible", "yes" if feasible else "no"))
        else:
            chi = cw_ocn(e, engine=engine, stats=stats)
        extra.append(("max_states", stats.max_states))
    else:
        raise UsageError(f"unknown algorithm {algo!r}")
    elapsed = time.monotonic() - start
    g = src.graph
    if witness is not None:
        verdict = verify_oriented_coloring(g, witness)
        if not verdict:
            raise AssertionError(f"engine {algo} returned an invalid coloring: {verdict.violation.describe(g)}")
    negative = args.r is not None and chi is None and witness is None
    pairs: list[tuple[str, object]] = [("engine", algo), ("n", g.n), ("m", g.m)]
    if args.r is not None:
        pairs.append(("r", args.r))
        if algo == "oracle":
            pairs.append(("feasible", "no" if witness is None else "yes"))
    if chi is not None:
        pairs.insert(0, ("chi_o", chi))
    pairs += extra
    if witness is not None:
        pairs.append(("colors_used", witness.used_colors))
        pairs.append(("coloring", _coloring_field(g, witness)))
    pairs.append(("time_ms", f"{elapsed * 1000:.3f}"))
    human = []
    if chi is not None:
        human.append(f"chi_o = {chi}")
    elif args.r is not None:
        human.append(f"no oriented coloring with at most {args.r} colors")
    human.append(f"engine: {algo}")
    for key, value in extra:
        human.append(f"{key}: {value}")
    if witness is not None:
        human.append(f"coloring ({witness.used_colors} colors):")
        human += ["  " + line for line in format_coloring(g, witness).splitlines()]
    human.append(f"time: {elapsed:.3f} s")
    _emit(out, args.porcelain, pairs, human)
    return EXIT_NO if negative else EXIT_OK


def cmd_verify(args, out) -> int:
    g = parse_edgelist(read_text(args.graph))
    c = parse_coloring(read_text(args.coloring), g)
    verdict = verify_oriented_coloring(g, c)
    if verdict:
        _emit(out, args.porcelain, [("valid", "yes"), ("colors_used", c.used_colors)],
              [f"valid oriented coloring with {c.used_colors} colors"])
        return EXIT_OK
    v = verdict.violation
    arcs = ";".join(f"{g.names[a]}->{g.names[b]}" for a, b in v.arcs)
    _emit(out, args.porcelain, [("valid", "no"), ("violation", v.kind), ("arcs", arcs)],
          [f"invalid: {v.describe(g)}"])
    return EXIT_NO


def cmd_parse(args, out) -> int:
    src = load_source(args, allow_graph=False)
    g = src.graph
    fmt = args.format or "expr"
    if fmt == "expr":
        body = to_text(src.expr)
    elif fmt == "edgelist":
        body = format_edgelist(g).rstrip("\n")
    elif fmt == "dot":
        body = format_dot(g).rstrip("\n")
    else:
        raise UsageError(f"parse cannot write format {fmt!r}")
    pairs = [("lang", src.lang), ("n", g.n), ("m", g.m)]
    if src.lang == "cw":
        pairs.append(("k", cw_validate(src.expr).k))
    if args.porcelain:
        _emit(out, True, pairs + [("text", body.replace("\n", "\\n"))], [])
    else:
        print(body, file=out)
    return EXIT_OK


def cmd_translate(args, out) -> int:
    if args.to != "cw":
        raise UsageError("only --to cw is supported")
    src = load_source(args, allow_graph=False)
    if src.lang == "cw":
        raise UsageError("input is already a clique-width expression")
    e = _cw_expr(src)
    info = cw_validate(e)
    text = to_text(e)
    _emit(out, args.porcelain,
          [("k", info.k), ("creates", info.creates), ("unions", info.unions),
           ("add_arcs", info.add_arcs), ("relabels", info.relabels), ("expr", text)],
          [text])
    return EXIT_OK


def cmd_emit_ilp(args, out) -> int:
    src = load_source(args)
    text = emit_bip(src.graph)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        _emit(out, args.porcelain, [("written", args.output)], [f"wrote {args.output}"])
    else:
        out.write(text)
    return EXIT_OK


_RANDOM = {"random-msp": "msp", "random-dico": "dico", "random-dag": None, "random-oriented": None}


def cmd_gen(args, out) -> int:
    name, raw = args.name, args.params
    seed = args.seed if args.seed is not None else 0
    try:
        nums = [float(p) if "." in p else int(p) for p in raw]
    except ValueError:
        raise UsageError(f"parameters must be numbers, got {' '.join(raw)}") from None
    if name in ("random-msp", "random-dico"):
        if len(nums) != 1:
            raise UsageError(f"{name} takes one parameter n")
        gen = instances.random_msp if name == "random-msp" else instances.random_dico
        obj, lang = gen(int(nums[0]), seed), _RANDOM[name]
    elif name in ("random-dag", "random-oriented"):
        if len(nums) != 2:
            raise UsageError(f"{name} takes parameters n p")
        gen = instances.random_dag if name == "random-dag" else instances.random_oriented
        obj, lang = gen(int(nums[0]), float(nums[1]), seed), None
    else:
        if any(isinstance(p, float) for p in nums):
            raise UsageError("parameters must be integers")
        obj = instances.gen_named(name, *nums)
        lang = None if isinstance(obj, Digraph) else instances.expression_language(name)
    if isinstance(obj, Digraph):
        g = obj
    else:
        g = eval_dico(obj) if lang == "dico" else eval_msp(obj)
    fmt = args.format or "edgelist"
    if fmt == "expr":
        if lang is None:
            raise UsageError(f"{name} is a digraph; use --format edgelist or dot")
        out.write(to_text(obj) + "\n")
    elif fmt == "edgelist":
        out.write(format_edgelist(g))
    elif fmt == "dot":
        out.write(format_dot(g))
    else:
        raise UsageError(f"gen cannot write format {fmt!r}")
    return EXIT_OK


def _time(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_msp_scaling(sizes=(1000, 10000, 100000), seeds=(1, 2, 3), base_seed: int = 0):
    """Total msp engine time per size over fixed seeds; rows of (n, seconds, chi list)."""
    msp_ocn(instances.random_msp(200, base_seed))  # warm caches
    rows = []
    for n in sizes:
        total, chis = 0.0, []
        for s in seeds:
            e = instances.random_msp(n, base_seed + s)
            start = time.perf_counter()
            chi, _ = msp_ocn(e)
            total += time.perf_counter() - start
            chis.append(chi)
        rows.append((n, total, chis))
    return rows


def cmd_bench(args, out) -> int:
    suite = args.suite
    base = args.seed if args.seed is not None else 0
    if suite not in ("msp", "mprime", "cw", "all"):
        raise UsageError("bench suites: msp, mprime, cw, all")
    lines: list[str] = []
    pairs: list[tuple[str, object]] = []
    if suite in ("msp", "all"):
        rows = bench_msp_scaling(base_seed=base)
        lines.append("msp engine on random msp expressions (3 seeds per size)")
        lines.append(f"{'n':>8} {'total s':>9} {'s/leaf':>10} {'ratio':>6}  chi_o")
        prev = None
        for n, total, chis in rows:
            ratio = "" if prev is None else f"{total / prev:.2f}"
            lines.append(f"{n:>8} {total:>9.3f} {total / n / 3:>10.2e} {ratio:>6}  {chis}")
            pairs.append((f"msp_n{n}_s", f"{total:.4f}"))
            prev = total
    if suite in ("mprime", "all"):
        lines.append("Mprime_i: msp engine and Paley coloring")
        lines.append(f"{'i':>3} {'n':>7} {'chi_o':>5} {'msp s':>8} {'oracle s':>9}")
        for i in range(1, 8):
            e = instances.mprime_expr(i)
            holder: dict = {}
            t_msp = _time(lambda: holder.update(r=msp_ocn(e)))
            n = 3**i
            t_or = ""
            if n <= 27:
                g = eval_msp(e)
                t_or = f"{_time(lambda: ocn_exact(g)):.3f}"
            lines.append(f"{i:>3} {n:>7} {holder['r'][0]:>5} {t_msp:>8.3f} {t_or:>9}")
            pairs.append((f"mprime{i}_s", f"{t_msp:.4f}"))
    if suite in ("cw", "all"):
        lines.append("cw engines on translated random expressions (n = 8, 5 seeds)")
        lines.append(f"{'lang':>5} {'engine':>10} {'total s':>8} {'max states':>10}")
        for lang in ("dico", "msp"):
            for engine in ("reduced", "tournament"):
                stats = CwStats()
                total = 0.0
                for s in range(5):
                    if lang == "dico":
                        e = dico_to_cw2(instances.random_dico(8, base + s))
                    else:
                        e = msp_to_cw7(instances.random_msp(8, base + s))
                    total += _time(lambda: cw_ocn(e, engine=engine, stats=stats))
                lines.append(f"{lang:>5} {engine:>10} {total:>8.3f} {stats.max_states:>10}")
                pairs.append((f"cw_{lang}_{engine}_s", f"{total:.4f}"))
    _emit(out, args.porcelain, pairs, lines)
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="edge-list file, or expression file with --lang")
    p.add_argument("--expr", metavar="TEXT", help="inline expression")
    p.add_argument("--lang", choices=("dico", "msp", "cw"), help="expression language")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocn", description="Oriented chromatic number tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the oriented chromatic number")
    _add_source(p)
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--engine", choices=ENGINES, default="auto", help="state-set engine for --algo cw")
    p.add_argument("--r", type=int, help="decide whether at most R colors suffice (cw, oracle)")
    p.add_argument("--max-n", type=int, help=f"oracle size guard (default {DEFAULT_ORACLE_LIMIT})")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a digraph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("parse", help="parse an expression and print it")
    _add_source(p)
    p.add_argument("--format", choices=("expr", "edgelist", "dot"))
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("translate", help="translate a di-co or msp expression")
    _add_source(p)
    p.add_argument("--to", choices=("cw",), default="cw")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("emit-ilp", help="write the binary integer program in LP format")
    _add_source(p)
    p.add_argument("--format", choices=("lp",), default="lp")
    p.add_argument("--output", metavar="PATH", help="write to PATH instead of standard output")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_emit_ilp)

    p = sub.add_parser("gen", help="generate a named or random instance")
    p.add_argument("name", help=f"one of {', '.join(instances.NAMES)}, {', '.join(_RANDOM)}")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=("edgelist", "dot", "expr"))
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the engines on generated families")
    p.add_argument("suite", nargs="?", default="all", help="msp, mprime, cw or all")
    p.add_argument("--seed", type=int)
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except NotOrientedError as exc:
        print(f"error: input is not an oriented graph: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (UsageError, OcnError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
