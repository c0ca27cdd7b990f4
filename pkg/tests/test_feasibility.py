from fractions import Fraction

import pytest

from esdec.algebra import TransformKind
from esdec.feasibility import (
    FEASIBLE, INFEASIBLE, FeasibilityInstance, build_psi_star, is_feasible,
    sign_sentence, witness_search,
)
from esdec.poly import MultiPoly
from esdec.predicates import parse
from esdec.qe import decide_sentence
from esdec.typesys import build_Q, compute_type, enumerate_types

F = Fraction
X = MultiPoly.var("X", ("X", "Y"))
Y = MultiPoly.var("Y", ("X", "Y"))


def test_positive_definite_infeasible():
    inst = FeasibilityInstance(
        sign_constraints=((X ** 2 + Y ** 2 + 1, -1),),
        dwarfed=(), gigantic=(),
    )
    assert is_feasible(inst) == INFEASIBLE


def test_both_dwarfed_feasible():
    inst = FeasibilityInstance(
        sign_constraints=((X, 1), (Y, 1)),
        dwarfed=((X, 1, Y, 1), (Y, 1, X, 1)),
        gigantic=(),
    )
    assert is_feasible(inst) == FEASIBLE


def test_gigantic_dwarfed_feasible():
    inst = FeasibilityInstance(
        sign_constraints=((X, 1), (Y, 1)),
        dwarfed=((Y, 1, X, 1),),
        gigantic=((X, 1, Y, 1),),
    )
    assert is_feasible(inst) == FEASIBLE


def test_psi_star_shape():
    inst = FeasibilityInstance(
        sign_constraints=((X, 1),),
        dwarfed=((X, 1, Y, 1),),
        gigantic=(),
    )
    s = build_psi_star(inst)
    assert [q for q, _ in s.prefix] == ["forall", "exists", "forall", "exists", "exists"]
    assert [v for _, v in s.prefix] == ["R", "L", "H", "X", "Y"]
    # degenerate: no dwarfed/gigantic constraints at all
    s2 = build_psi_star(FeasibilityInstance(((X, 1),), (), ()))
    assert decide_sentence(s2)


def test_vacuous_pairs_excluded():
    ps = parse("x1 > 0")
    Q = build_Q(ps, TransformKind.F1)
    types = list(enumerate_types(Q))
    for typ in types:
        inst = FeasibilityInstance.from_type(Q, typ)
        entry = Q.entries[0]
        sigma = typ.sigma(entry)
        want_pairs = sum(
            1 for (a, b) in entry.pairs if sigma[a] != 0 and sigma[b] != 0
        )
        assert len(inst.dwarfed) + len(inst.gigantic) == want_pairs


def test_witness_search_examples():
    ps = parse("x1 > 0")  # F1 numerator: X + Y*y1, coefficients X and Y
    Q = build_Q(ps, TransformKind.F1)
    entry = Q.entries[0]
    assert entry.support == ((0,), (1,))
    found_dd = found_gd = 0
    for typ in enumerate_types(Q):
        sigma = typ.sigma(entry)
        tau = typ.tau(entry)
        inst = FeasibilityInstance.from_type(Q, typ)
        if sigma[(0,)] == 1 and sigma[(1,)] == 1:
            if set(tau.values()) == {"D"}:
                got = witness_search(inst, 4, 3)
                assert got is not None
                A, B, b = got
                assert (A, B) == (1, 1)
                found_dd += 1
            elif tau[((0,), (1,))] == "G" and tau[((1,), (0,))] == "D":
                got = witness_search(inst, 4, 3)
                assert got is not None
                A, B, b = got
                assert compute_type(Q, A, B, b, 4) == typ
                found_gd += 1
    assert found_dd == 1 and found_gd == 1


def test_one_sided_soundness_monotone():
    mono = parse("x1 < x2 ; x1 >= x2")
    for kind in TransformKind:
        Q = build_Q(mono, kind)
        feasible_count = 0
        for typ in enumerate_types(Q):
            inst = FeasibilityInstance.from_type(Q, typ)
            verdict = is_feasible(inst)
            got = witness_search(inst, 4, 3, budget=40)
            if got is not None:
                assert verdict != INFEASIBLE
                A, B, b = got
                assert compute_type(Q, A, B, b, 4) == typ
            if verdict == FEASIBLE:
                feasible_count += 1
        assert feasible_count == 3, kind  # one per nonzero Y sign + the zero type


def test_monotone_census_f1():
    """Feasible F1 types for the monotone pair: sign(Y) = +1, -1, or the
    all-zero type; tau is two-sided dwarfed for the nonzero ones."""
    mono = parse("x1 < x2 ; x1 >= x2")
    Q = build_Q(mono, TransformKind.F1)
    entry = Q.entries[0]
    feas = []
    for typ in enumerate_types(Q):
        if is_feasible(FeasibilityInstance.from_type(Q, typ)) == FEASIBLE:
            feas.append(typ)
    assert len(feas) == 3
    for typ in feas:
        sigma = typ.sigma(entry)
        pair = (sigma[(1, 0)], sigma[(0, 1)])
        assert pair in ((1, -1), (-1, 1), (0, 0))
        if pair != (0, 0):
            assert set(typ.tau(entry).values()) == {"D"}
        witness = witness_search(FeasibilityInstance.from_type(Q, typ), 4, 3)
        assert witness is not None


def test_sign_sentence_screen():
    ps = parse("x1 < x2 ; x1 >= x2")
    Q = build_Q(ps, TransformKind.F1)
    sat = unsat = 0
    for typ in enumerate_types(Q):
        inst = FeasibilityInstance.from_type(Q, typ)
        if decide_sentence(sign_sentence(inst)):
            sat += 1
        else:
            unsat += 1
    assert sat > 0 and unsat > 0
