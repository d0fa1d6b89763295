"""Oriented chromatic number of recursively defined oriented graphs."""

from .cograph import cograph_ocn, is_oriented_cograph
from .coloring import (
    Coloring,
    bounds,
    build_color_graph,
    find_perfect_order_obstruction,
    greedy_coloring,
    transitive_dag_coloring,
    verify_oriented_coloring,
)
from .cw import cw_ocn, cw_ocn_at_most, cw_states
from .digraph import Digraph, is_oriented, underlying
from .errors import OcnError
from .ilp import emit_bip, enumerate_check
from .msp import msp_ocn, msp_states, paley_coloring, und_3coloring
from .oracle import ocn_decide, ocn_exact

__all__ = [
    "Coloring", "Digraph", "OcnError", "bounds", "build_color_graph", "cograph_ocn", "cw_ocn",
    "cw_ocn_at_most", "cw_states", "emit_bip", "enumerate_check", "find_perfect_order_obstruction",
    "greedy_coloring", "is_oriented", "is_oriented_cograph", "msp_ocn", "msp_states", "ocn_decide",
    "ocn_exact", "paley_coloring", "transitive_dag_coloring", "und_3coloring", "underlying",
    "verify_oriented_coloring",
]
