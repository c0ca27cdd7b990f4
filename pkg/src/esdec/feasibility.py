"""Feasibility of candidate types via a five-variable real sentence.

A candidate type is feasible when for every R and every length there
are parameters (A, B) and a well-placed R-growing sequence realizing
it.  The growth quantification collapses to the first-order sentence

    forall R  exists L  forall H  exists X exists Y :
        L >= R,  the sign conditions,  and
        (dwarfed)   s_a*q_a <= L * s_b*q_b
        (gigantic)  s_a*q_a >= H * s_b*q_b

because the threshold function sup{H : Xi(L, H)} is semialgebraic and
semialgebraic functions grow at most polynomially, so "a gap wide
enough for an R-growing sequence" and "arbitrarily wide gap" coincide.
Absolute values are realized through the prescribed signs (|q| = s*q
when s != 0), and ratio constraints are multiplied through by their
denominators, whose signs the type prescribes; no division appears.

Pairs with a zero prescribed sign never enter the constraint lists: a
zero numerator is automatically dwarfed and a zero denominator makes
the ratio infinite, hence automatically gigantic.

The randomized/grid witness search is a corroboration oracle only: a
found witness certifies feasibility one-sidedly; absence proves
nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from .errors import ResourceLimitError
from .poly import MultiPoly
from .predicates import And, Atom
from .qe import QeBudget, Sentence, decide_sentence
from .ramsey import canonical_growing
from .typesys import (
    DWARFED, GIGANTIC, CandidateType, CoefficientSystem, compute_type,
)

PSI_VARS = ("R", "L", "H", "X", "Y")


@dataclass(frozen=True)
class FeasibilityInstance:
    """Sign and magnitude constraints extracted from (Q, type).

    ``sign_constraints`` pairs nonconstant coefficient polynomials with
    their prescribed signs; constant coefficients are checked at
    construction time and either dropped (sign agrees) or recorded as a
    contradiction.  ``dwarfed``/``gigantic`` hold (q_a, s_a, q_b, s_b)
    quadruples with both signs nonzero.
    """

    sign_constraints: tuple
    dwarfed: tuple
    gigantic: tuple
    constant_conflict: bool = False
    source: tuple | None = None  # (CoefficientSystem, CandidateType) if built from one

    @staticmethod
    def from_type(Q: CoefficientSystem, typ: CandidateType) -> "FeasibilityInstance":
        signs = []
        dwarfed = []
        gigantic = []
        conflict = False
        for entry in Q.entries:
            sigma = typ.sigma(entry)
            tau = typ.tau(entry)
            coeffs = entry.decomp.coeffs
            for alpha in entry.support:
                c = coeffs[alpha]
                want = sigma[alpha]
                cv = c.constant_value()
                if cv is not None:
                    actual = 0 if cv == 0 else (1 if cv > 0 else -1)
                    if actual != want:
                        conflict = True
                else:
                    signs.append((c, want))
            for (a, b) in entry.pairs:
                if sigma[a] == 0 or sigma[b] == 0:
                    continue  # conventions make these pairs vacuous
                quad = (coeffs[a], sigma[a], coeffs[b], sigma[b])
                if tau[(a, b)] == DWARFED:
                    dwarfed.append(quad)
                else:
                    gigantic.append(quad)
        return FeasibilityInstance(
            sign_constraints=tuple(signs),
            dwarfed=tuple(dwarfed),
            gigantic=tuple(gigantic),
            constant_conflict=conflict,
            source=(Q, typ),
        )


_REL_OF_SIGN = {1: ">", -1: "<", 0: "="}


def _signed(poly: MultiPoly, sign: int) -> MultiPoly:
    return poly if sign >= 0 else -poly


def build_psi_star(inst: FeasibilityInstance) -> Sentence:
    """The growth-gap sentence for the instance (always constructible,
    even when a constant-sign conflict already settles infeasibility)."""
    allv = PSI_VARS
    L = MultiPoly.var("L", allv)
    H = MultiPoly.var("H", allv)
    R = MultiPoly.var("R", allv)
    atoms = [Atom((L - R).drop_unused(), ">=")]
    for poly, sign in inst.sign_constraints:
        atoms.append(Atom(poly.drop_unused(), _REL_OF_SIGN[sign]))
    for qa, sa, qb, sb in inst.dwarfed:
        lhs = _signed(qa, sa).with_vars(allv) - L * _signed(qb, sb).with_vars(allv)
        atoms.append(Atom(lhs.drop_unused(), "<="))
    for qa, sa, qb, sb in inst.gigantic:
        lhs = _signed(qa, sa).with_vars(allv) - H * _signed(qb, sb).with_vars(allv)
        atoms.append(Atom(lhs.drop_unused(), ">="))
    matrix = And(tuple(atoms)) if len(atoms) > 1 else atoms[0]
    prefix = (
        ("forall", "R"), ("exists", "L"), ("forall", "H"),
        ("exists", "X"), ("exists", "Y"),
    )
    return Sentence(prefix, matrix)


def sign_sentence(inst: FeasibilityInstance) -> Sentence:
    """The cheap existential screen: can the signs be realized at all?"""
    atoms = [Atom(poly.drop_unused(), _REL_OF_SIGN[sign])
             for poly, sign in inst.sign_constraints]
    if not atoms:
        atoms = [Atom(MultiPoly.var("X", ("X",)), "=")]  # X = 0: satisfiable
    matrix = And(tuple(atoms)) if len(atoms) > 1 else atoms[0]
    return Sentence((("exists", "X"), ("exists", "Y")), matrix)


FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNDECIDED = "undecided"


def is_feasible(inst: FeasibilityInstance, budget: QeBudget | None = None) -> str:
    """Decide the instance; 'undecided' propagates budget exhaustion."""
    if inst.constant_conflict:
        return INFEASIBLE
    try:
        return FEASIBLE if decide_sentence(build_psi_star(inst), budget) else INFEASIBLE
    except ResourceLimitError:
        return UNDECIDED


def witness_search(inst: FeasibilityInstance, R: int, n: int,
                   budget: int = 150, seed: int = 0):
    """Grid-plus-random search for (A, B, b) realizing the instance's
    source type exactly; any hit is a one-sided feasibility certificate.

    Requires the instance to carry its (Q, type) source.  Returns None
    when nothing is found within budget, which proves nothing.
    """
    if inst.source is None:
        raise ValueError("witness_search needs an instance built from a type")
    if inst.constant_conflict:
        return None
    Q, typ = inst.source
    rng = random.Random(seed)
    big = Fraction(R) ** (R ** (n + 1))
    base = [Fraction(v) for v in (0, 1, -1, 2, -2, 3, -3, 5, -5)]
    base += [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(2, 3)]
    base += [big, -big, 1 / big, -1 / big]
    candidates = [(a, b) for a in base for b in base]
    for _ in range(budget):
        candidates.append((
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        ))
    for A, B in candidates:
        got = _try_witness(Q, typ, A, B, R, n)
        if got is not None:
            return got
    return None


def _try_witness(Q: CoefficientSystem, typ: CandidateType, A: Fraction,
                 B: Fraction, R: int, n: int):
    point = {"X": A, "Y": B}
    dmax = Fraction(0)
    gmin = None
    for entry in Q.entries:
        sigma = typ.sigma(entry)
        tau = typ.tau(entry)
        vals = {}
        for alpha in entry.support:
            v = entry.decomp.coeffs[alpha].evaluate(point)
            want = sigma[alpha]
            actual = 0 if v == 0 else (1 if v > 0 else -1)
            if actual != want:
                return None
            vals[alpha] = v
        for (a, b) in entry.pairs:
            if sigma[a] == 0 or sigma[b] == 0:
                continue
            rho = abs(vals[a] / vals[b])
            if tau[(a, b)] == DWARFED:
                dmax = max(dmax, rho)
            else:
                gmin = rho if gmin is None else min(gmin, rho)
    start = max(Fraction(R), R * dmax)
    b_seq = canonical_growing(R, n, start=start)
    if gmin is not None and b_seq[-1] ** R > gmin:
        return None
    if compute_type(Q, A, B, b_seq, R) != typ:
        return None
    return (A, B, b_seq)
