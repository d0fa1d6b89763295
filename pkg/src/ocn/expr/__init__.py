from .evaluate import NonOrientedResult, eval_cw, eval_dico, eval_msp
from .nodes import (
    AddArcs,
    Create,
    CwExpr,
    CwUnion,
    DicoExpr,
    Expr,
    Leaf,
    MspExpr,
    Order,
    Parallel,
    Relabel,
    Series,
    Union,
    children,
    language_of,
    leaf_names,
    postorder,
    size,
    to_text,
)
from .parser import parse, parse_cw, parse_dico, parse_msp, tokenize
from .translate import CwInfo, cw_validate, dico_to_cw2, msp_to_cw7

__all__ = [
    "AddArcs", "Create", "CwExpr", "CwInfo", "CwUnion", "DicoExpr", "Expr", "Leaf", "MspExpr",
    "NonOrientedResult", "Order", "Parallel", "Relabel", "Series", "Union", "children",
    "cw_validate", "dico_to_cw2", "eval_cw", "eval_dico", "eval_msp", "language_of",
    "leaf_names", "msp_to_cw7", "parse", "parse_cw", "parse_dico", "parse_msp", "postorder",
    "size", "to_text", "tokenize",
]
