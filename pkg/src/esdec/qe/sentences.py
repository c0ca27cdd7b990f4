"""Prenex sentences over the reals: AST, text parser, SMT-LIB export.

Text form: a quantifier prefix "forall r. exists l. ..." followed by a
quantifier-free Boolean combination in the predicate grammar, with the
quantified lowercase names as variables.  Sentences have no free
variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..parser import PolyParser, TokenStream, tokenize
from ..poly import MultiPoly
from ..predicates import And, Atom, Node, Not, Or, atoms_of, negate_node

FORALL = "forall"
EXISTS = "exists"


@dataclass(frozen=True)
class Sentence:
    prefix: tuple  # ((quantifier, variable), ...) outermost first
    matrix: Node

    def __post_init__(self):
        names = [v for _, v in self.prefix]
        if len(set(names)) != len(names):
            raise ValueError("quantified variables must be distinct")
        if any(q not in (FORALL, EXISTS) for q, _ in self.prefix):
            raise ValueError("quantifiers must be forall/exists")
        free = set()
        for atom in atoms_of(self.matrix):
            free.update(atom.poly.used_vars())
        if not free <= set(names):
            raise ValueError(f"free variables: {sorted(free - set(names))}")

    @property
    def variables(self) -> tuple:
        return tuple(v for _, v in self.prefix)


def sentence_negate(s: Sentence) -> Sentence:
    flipped = tuple(
        (EXISTS if q == FORALL else FORALL, v) for q, v in s.prefix
    )
    return Sentence(flipped, negate_node(s.matrix))


# -- parsing ------------------------------------------------------------

_KEYWORDS = {"and", "or", "not", FORALL, EXISTS}


def parse_sentence(text: str) -> Sentence:
    stream = TokenStream(tokenize(text))
    prefix = []
    declared: list = []
    while stream.peek().text in (FORALL, EXISTS):
        quant = stream.next().text
        name_tok = stream.next()
        if name_tok.kind != "name" or name_tok.text in _KEYWORDS:
            raise ParseError("expected a variable name after quantifier",
                             name_tok.line, name_tok.col)
        if not name_tok.text[0].islower():
            raise ParseError("quantified variables are lowercase",
                             name_tok.line, name_tok.col)
        if name_tok.text in declared:
            raise ParseError(f"variable {name_tok.text!r} quantified twice",
                             name_tok.line, name_tok.col)
        declared.append(name_tok.text)
        stream.expect(".")
        prefix.append((quant, name_tok.text))
    if not prefix:
        raise ParseError("sentence needs at least one quantifier", 1, 1)

    def resolve(tok):
        if tok.text not in declared:
            raise ParseError(f"unquantified variable {tok.text!r}", tok.line, tok.col)
        return tok.text

    matrix = _MatrixParser(stream, resolve).parse()
    return Sentence(tuple(prefix), matrix)


class _MatrixParser:
    def __init__(self, stream: TokenStream, resolve):
        self.stream = stream
        self.polys = PolyParser(stream, resolve)

    def parse(self) -> Node:
        node = self.parse_disj()
        tok = self.stream.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.col)
        return node

    def parse_disj(self) -> Node:
        parts = [self.parse_conj()]
        while self.stream.peek().text == "or":
            self.stream.next()
            parts.append(self.parse_conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def parse_conj(self) -> Node:
        parts = [self.parse_unary()]
        while self.stream.peek().text == "and":
            self.stream.next()
            parts.append(self.parse_unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def parse_unary(self) -> Node:
        tok = self.stream.peek()
        if tok.text == "not":
            self.stream.next()
            return Not(self.parse_unary())
        if tok.text == "(":
            mark = self.stream.save()
            try:
                poly, rel = self.polys.parse_atom_parts()
                return Atom(poly, rel)
            except ParseError:
                self.stream.restore(mark)
            self.stream.expect("(")
            inner = self.parse_disj()
            self.stream.expect(")")
            return inner
        poly, rel = self.polys.parse_atom_parts()
        return Atom(poly, rel)


# -- SMT-LIB export ------------------------------------------------------


def _smt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        body = str(abs(q.numerator))
    else:
        body = f"(/ {abs(q.numerator)} {q.denominator})"
    return f"(- {body})" if q < 0 else body


def _smt_poly(p: MultiPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for mono, coeff in sorted(p.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
        factors = []
        for v, e in zip(p.vars, mono):
            factors.extend([v] * e)
        if not factors:
            parts.append(_smt_rational(coeff))
        elif coeff == 1 and len(factors) == 1:
            parts.append(factors[0])
        else:
            inner = " ".join([_smt_rational(coeff)] + factors) if coeff != 1 \
                else " ".join(factors)
            parts.append(f"(* {inner})")
    if len(parts) == 1:
        return parts[0]
    return f"(+ {' '.join(parts)})"


def _smt_node(node: Node) -> str:
    if isinstance(node, Atom):
        p = _smt_poly(node.poly)
        if node.rel == "!=":
            return f"(not (= {p} 0))"
        return f"({node.rel} {p} 0)"
    if isinstance(node, Not):
        return f"(not {_smt_node(node.child)})"
    if isinstance(node, And):
        return f"(and {' '.join(_smt_node(c) for c in node.children)})"
    if isinstance(node, Or):
        return f"(or {' '.join(_smt_node(c) for c in node.children)})"
    raise TypeError(f"not a matrix node: {node!r}")


def export_smtlib(s: Sentence) -> str:
    """Semantically equivalent SMT-LIB2 script (logic NRA); used as an
    external cross-check channel only, never as the decision path."""
    body = _smt_node(s.matrix)
    for quant, var in reversed(s.prefix):
        q = "forall" if quant == FORALL else "exists"
        body = f"({q} (({var} Real)) {body})"
    return "\n".join([
        "(set-logic NRA)",
        f"(assert {body})",
        "(check-sat)",
        "",
    ])
