import random
from fractions import Fraction

import pytest

from esdec.errors import ParseError
from esdec.predicates import (
    And, Atom, Not, Or,
    disjunction_collapse, eval_at, holds_everywhere, negate, parse,
    parse_predicate, symmetrize_single,
)


def test_parse_monotone_pair():
    ps = parse("x1 < x2 ; x1 >= x2")
    assert len(ps.members) == 2
    assert ps.arity == 2
    assert isinstance(ps.members[0].root, Atom)
    assert ps.members[0].root.rel == "<"


def test_parse_boolean():
    ps = parse("x1^2 - 2 = 0 and not (x2 > 0)")
    assert len(ps.members) == 1
    assert ps.arity == 2
    root = ps.members[0].root
    assert isinstance(root, And) and len(root.children) == 2
    assert isinstance(root.children[1], Not)


def test_parse_rejects_x0():
    with pytest.raises(ParseError):
        parse("x1 < x0")


def test_parse_rejects_bad_exponent():
    with pytest.raises(ParseError):
        parse("x1^ - 2 > 0")


def test_parse_parenthesized_poly_vs_pred():
    ps = parse("(x1 + 1) * x2 > 0")
    assert isinstance(ps.members[0].root, Atom)
    ps2 = parse("(x1 > 0 or x2 > 0) and x1 < 1")
    assert isinstance(ps2.members[0].root, And)


def test_print_parse_roundtrip():
    texts = [
        "x1 < x2 ; x1 >= x2",
        "x1^2 - 2 = 0 and not (x2 > 0)",
        "(x1 > 0 or x2 != 0) and not (x1 = x2 and x2 <= 3/2)",
        "-2/3*x1^3 + x2*x1 - 7 > 0",
    ]
    for text in texts:
        ps = parse(text)
        again = parse(ps.to_text())
        assert again == ps


def test_eval_examples():
    lt = parse_predicate("x1 < x2")
    assert eval_at(lt, (Fraction(1), Fraction(2)))
    eq = parse_predicate("x1 = x2")
    assert eval_at(eq, (Fraction(1, 3), Fraction(2, 6)))
    sq = parse_predicate("x1^2 - 2 = 0")
    assert not eval_at(sq.padded(2), (Fraction(3, 2), Fraction(0)))
    with pytest.raises(ValueError):
        eval_at(lt, (Fraction(1),))


def test_holds_everywhere():
    lt = parse_predicate("x1 < x2")
    assert holds_everywhere(lt, [1, 2, 3])
    assert not holds_everywhere(lt, [1, 3, 2])
    five = parse_predicate("x1 < x5")
    assert five.arity == 5
    assert holds_everywhere(five, [4, 3, 2, 1])  # vacuous


def test_negate():
    lt = parse_predicate("x1 < x2")
    assert negate(lt).root == Atom(lt.root.poly, ">=")
    both = parse_predicate("x1 > 0 and x2 > 0")
    neg = negate(both)
    assert isinstance(neg.root, Or)
    assert negate(parse_predicate("not (x1 > 0)")).root == Atom(
        parse_predicate("x1 > 0").root.poly, ">"
    )


def test_negate_pointwise_random():
    rng = random.Random(5)
    preds = [
        parse_predicate(t)
        for t in (
            "x1 < x2 or (x1 = x2 and not (x2 > 1))",
            "not (x1*x2 >= 1/2) and x1 != x2",
            "x1^2 - x2 <= 0 or not (x1 > 0 and x2 < 0)",
        )
    ]
    for pred in preds:
        neg = negate(pred)
        for _ in range(3400):
            point = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(pred.arity))
            assert eval_at(neg, point) == (not eval_at(pred, point))


def test_disjunction_collapse():
    ps = parse("x1 < x2 ; x1 >= x2")
    d = disjunction_collapse(ps)
    assert isinstance(d.root, Or) and len(d.root.children) == 2
    single = parse("x1 = x2")
    assert disjunction_collapse(single) == single.members[0]


def test_symmetrize_identity_case():
    ps = parse("x1 > 0")
    sym = symmetrize_single(ps)
    assert sym.arity == 1
    assert sym == ps.members[0]


def test_symmetrize_monotone_pair_counts():
    ps = parse("x1 < x2 ; x1 >= x2")
    sym = symmetrize_single(ps)
    assert sym.arity == 4
    assert isinstance(sym.root, Or) and len(sym.root.children) == 2
    for child in sym.root.children:
        assert isinstance(child, And) and len(child.children) == 6  # C(4,2)


def test_symmetrize_equivalence_bruteforce():
    ps = parse("x1 < x2 ; x1 >= x2")
    sym = symmetrize_single(ps)
    grid = [Fraction(0), Fraction(1, 2), Fraction(2)]
    from itertools import product

    for n in (4, 5):
        for seq in product(grid, repeat=n):
            lhs = holds_everywhere(sym, seq)
            rhs = any(holds_everywhere(m, seq) for m in ps.members)
            assert lhs == rhs, seq
