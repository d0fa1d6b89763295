"""Text front end for the expression languages.

di-co:  ``a > b`` is order composition, ``a + b`` disjoint union; ``>`` binds
tighter, both are left-associative.

msp:    ``a * b`` is series, ``a | b`` parallel composition; ``*`` binds tighter.

cw:     prefix constructors ``V(name,label)``, ``U(x,y)``, ``A(a,b,x)``,
``R(a,b,x)`` with positive integer labels.

``#`` starts a comment that runs to the end of the line.  Parsers use explicit
stacks so deeply nested input does not hit the recursion limit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .nodes import (
    AddArcs,
    Create,
    CwExpr,
    CwUnion,
    DicoExpr,
    Leaf,
    MspExpr,
    Order,
    Parallel,
    Relabel,
    Series,
    Union,
)

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<name>[A-Za-z0-9_][A-Za-z0-9_.']*)|(?P<punct>[()+>|*,])")


@dataclass(frozen=True)
class Token:
    kind: str  # "name", a punctuation character, or "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        if m.group("name"):
            tokens.append(Token("name", m.group("name"), line, pos - line_start + 1))
        elif m.group("punct"):
            tokens.append(Token(m.group("punct"), m.group("punct"), line, pos - line_start + 1))
        chunk = m.group(0)
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _fail(tok: Token, message: str) -> ParseError:
    shown = "end of input" if tok.kind == "end" else repr(tok.text)
    return ParseError(f"{message}, found {shown}", tok.line, tok.column)


def _parse_infix(text: str, ops: dict[str, tuple[int, type]]):
    """Shunting-yard over ``ops``: symbol -> (precedence, node class)."""
    tokens = tokenize(text)
    operands: list = []
    pending: list[Token] = []  # operators and open parentheses
    seen: dict[str, Token] = {}

    def reduce_top() -> None:
        op = pending.pop()
        right = operands.pop()
        left = operands.pop()
        operands.append(ops[op.kind][1](left, right))

    expect_operand = True
    for tok in tokens:
        if expect_operand:
            if tok.kind == "name":
                if tok.text in seen:
                    raise ParseError(f"duplicate leaf name {tok.text!r}", tok.line, tok.column)
                seen[tok.text] = tok
                operands.append(Leaf(tok.text))
                expect_operand = False
            elif tok.kind == "(":
                pending.append(tok)
            else:
                raise _fail(tok, "expected a vertex name or '('")
        else:
            if tok.kind in ops:
                prec = ops[tok.kind][0]
                while pending and pending[-1].kind in ops and ops[pending[-1].kind][0] >= prec:
                    reduce_top()
                pending.append(tok)
                expect_operand = True
            elif tok.kind == ")":
                while pending and pending[-1].kind != "(":
                    reduce_top()
                if not pending:
                    raise _fail(tok, "unbalanced parenthesis")
                pending.pop()
            elif tok.kind == "end":
                while pending:
                    if pending[-1].kind == "(":
                        raise _fail(tok, f"unclosed '(' from line {pending[-1].line}, column {pending[-1].column}")
                    reduce_top()
                return operands[0]
            else:
                raise _fail(tok, "expected an operator or ')'")
    raise AssertionError("token stream lacks an end marker")


def parse_dico(text: str) -> DicoExpr:
    return _parse_infix(text, {"+": (1, Union), ">": (2, Order)})


def parse_msp(text: str) -> MspExpr:
    return _parse_infix(text, {"|": (1, Parallel), "*": (2, Series)})


def parse_cw(text: str, max_label: int | None = None) -> CwExpr:
    tokens = tokenize(text)
    pos = 0
    seen: set[str] = set()

    def take(kind: str, what: str) -> Token:
        nonlocal pos
        tok = tokens[pos]
        if tok.kind != kind:
            raise _fail(tok, f"expected {what}")
        pos += 1
        return tok

    def label() -> int:
        tok = take("name", "an integer label")
        if not tok.text.isdigit():
            raise _fail(tok, "expected an integer label")
        value = int(tok.text)
        if value < 1 or (max_label is not None and value > max_label):
            bound = f"1..{max_label}" if max_label is not None else ">= 1"
            raise ParseError(f"label {value} out of range ({bound})", tok.line, tok.column)
        return value

    # frame: [constructor token, a, b, children]
    frames: list[list] = []
    result: CwExpr | None = None
    while True:
        head = take("name", "one of V, U, A, R")
        take("(", "'('")
        if head.text == "V":
            name = take("name", "a vertex name")
            if name.text in seen:
                raise ParseError(f"duplicate leaf name {name.text!r}", name.line, name.column)
            seen.add(name.text)
            take(",", "','")
            node: CwExpr = Create(name.text, label())
            take(")", "')'")
        elif head.text == "U":
            frames.append([head, None, None, []])
            continue
        elif head.text in ("A", "R"):
            a = label()
            take(",", "','")
            b = label()
            if a == b:
                raise ParseError(f"{head.text}({a},{b}) needs two distinct labels", head.line, head.column)
            take(",", "','")
            frames.append([head, a, b, []])
            continue
        else:
            raise _fail(head, "expected one of V, U, A, R")
        # close every frame that this node completes
        while True:
            if not frames:
                result = node
                break
            frame = frames[-1]
            frame[3].append(node)
            arity = 2 if frame[0].text == "U" else 1
            if len(frame[3]) < arity:
                take(",", "','")
                break
            take(")", "')'")
            frames.pop()
            kind, a, b, kids = frame
            if kind.text == "U":
                node = CwUnion(kids[0], kids[1])
            elif kind.text == "A":
                node = AddArcs(a, b, kids[0])
            else:
                node = Relabel(a, b, kids[0])
        if result is not None:
            break
    take("end", "end of input")
    return result


def parse(text: str, lang: str):
    if lang == "dico":
        return parse_dico(text)
    if lang == "msp":
        return parse_msp(text)
    if lang == "cw":
        return parse_cw(text)
    raise ValueError(f"unknown expression language {lang!r}")
