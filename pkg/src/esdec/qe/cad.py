"""Sentence decision by cylindrical algebraic decomposition.

The projection operator is the original Collins one: all coefficients
of each polynomial (viewed in the level's main variable), principal
subresultant coefficient sets of every reductum against its derivative,
and psc sets of every pair of reducta across distinct polynomials.
This is larger than later refinements but unconditionally correct; at
the degrees this package meets, correctness is worth far more than
cell counts.

Lifting walks the levels outermost-first.  Over each sample point of
the level below, the level's polynomials are solved exactly
(roots_at_point), the merged roots cut the line into sectors and
sections, sectors get rational sample points (gap midpoints, integer
points beyond the extremes), and sections carry their real algebraic
number.  Truth is evaluated at full sample points only and folded back
up through the quantifier prefix with short-circuiting.

Budgets make partiality honest: exceeding the cell budget raises
ResourceLimitError, which callers surface as "undecided", never as an
answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from ..errors import ResourceLimitError
from ..poly import MultiPoly
from ..predicates import Atom, atoms_of, eval_with, rel_holds
from .resultants import psc_set
from .roots import RealAlgebraicNumber, roots_at_point, sign_at_point
from .sentences import EXISTS, FORALL, Sentence


@dataclass
class QeBudget:
    max_cells: int = 100_000
    max_vars: int = 5

    def __post_init__(self):
        if self.max_cells <= 0 or self.max_vars <= 0:
            raise ValueError("budgets must be positive")


@dataclass
class CadCell:
    """One cell of the decomposition, for inspection and tests."""

    level: int
    variable: str | None
    kind: str  # "sector" | "section" | "root"
    sample: object  # Fraction | RealAlgebraicNumber | None at the root
    truth: bool | None = None
    children: list = field(default_factory=list)


def _canonical(p: MultiPoly) -> MultiPoly | None:
    """Primitive, sign-normalized, variable-trimmed; None if constant."""
    q = p.drop_unused()
    if q.constant_value() is not None:
        return None
    return q.primitive()


def _reducta(coeffs: list) -> list:
    """Successive leading-term truncations with degree >= 1, as dense
    coefficient lists."""
    out = []
    cur = list(coeffs)
    while True:
        while len(cur) > 1 and cur[-1].is_zero:
            cur.pop()
        if len(cur) <= 1:
            break
        out.append(list(cur))
        cur = cur[:-1]
    return out


def _from_coeffs(coeffs: list, var: str) -> MultiPoly:
    return MultiPoly.from_univar(coeffs, var)


def collins_project(polys: list, var: str) -> list:
    """The Collins projection of a level's polynomials w.r.t. its main
    variable; output polynomials no longer involve ``var``."""
    out: dict = {}

    def add(p: MultiPoly):
        q = _canonical(p)
        if q is not None:
            out[q] = True

    unis = []
    for p in polys:
        coeffs = p.as_univar(var)
        unis.append(coeffs)
        for c in coeffs:
            add(c)
        for red in _reducta(coeffs):
            redp = _from_coeffs(red, var)
            dred = redp.derivative(var)
            if redp.degree(var) >= 2:
                for v in psc_set(redp, dred, var):
                    add(v)
    for i in range(len(unis)):
        for j in range(i + 1, len(unis)):
            for ri in _reducta(unis[i]):
                for rj in _reducta(unis[j]):
                    for v in psc_set(_from_coeffs(ri, var), _from_coeffs(rj, var), var):
                        add(v)
    return list(out)


def _rational_below(x: RealAlgebraicNumber) -> Fraction:
    return Fraction(floor(x.lo) - 1)


def _rational_above(x: RealAlgebraicNumber) -> Fraction:
    return Fraction(ceil(x.hi) + 1)


def _rational_between(a: RealAlgebraicNumber, b: RealAlgebraicNumber) -> Fraction:
    while not a.hi < b.lo:
        progressed = False
        if not a.is_rational:
            a.refine()
            progressed = True
        if not b.is_rational:
            b.refine()
            progressed = True
        if not progressed:
            raise AssertionError("distinct rationals must already be separated")
    return (a.hi + b.lo) / 2


def _merge_roots(groups: list) -> list:
    """Sort and deduplicate RealAlgebraicNumbers from several polynomials."""
    merged: list = []
    for root in (r for grp in groups for r in grp):
        placed = False
        for i, existing in enumerate(merged):
            c = root.compare(existing)
            if c == 0:
                placed = True
                break
            if c < 0:
                merged.insert(i, root)
                placed = True
                break
        if not placed:
            merged.append(root)
    return merged


class _Decider:
    def __init__(self, sentence: Sentence, budget: QeBudget, record: bool):
        self.sentence = sentence
        self.budget = budget
        self.record = record
        self.cells_used = 0
        self.order = list(sentence.variables)  # outermost ... innermost
        self.nvars = len(self.order)
        self.levels: dict = {i: [] for i in range(1, self.nvars + 1)}
        self.constant_atoms: dict = {}
        self._build_levels()

    def _level_of(self, p: MultiPoly) -> int:
        used = p.used_vars()
        return max(self.order.index(v) for v in used) + 1

    def _add_poly(self, p: MultiPoly):
        q = _canonical(p)
        if q is None:
            return
        lvl = self._level_of(q)
        if q not in self.levels[lvl]:
            self.levels[lvl].append(q)

    def _build_levels(self):
        for atom in atoms_of(self.sentence.matrix):
            c = atom.poly.constant_value()
            if c is not None:
                self.constant_atoms[atom] = 0 if c == 0 else (1 if c > 0 else -1)
            else:
                self._add_poly(atom.poly)
        for lvl in range(self.nvars, 1, -1):
            var = self.order[lvl - 1]
            for p in collins_project(self.levels[lvl], var):
                self._add_poly(p)

    def _charge_cell(self):
        self.cells_used += 1
        if self.cells_used > self.budget.max_cells:
            raise ResourceLimitError(
                f"cell budget {self.budget.max_cells} exhausted",
                cells=self.cells_used,
            )

    def _matrix_truth(self, point: dict) -> bool:
        def truth(atom: Atom) -> bool:
            if atom in self.constant_atoms:
                return rel_holds(self.constant_atoms[atom], atom.rel)
            return rel_holds(sign_at_point(atom.poly, point), atom.rel)

        return eval_with(self.sentence.matrix, truth)

    def _samples(self, level: int, point: dict):
        var = self.order[level - 1]
        groups = []
        for p in self.levels[level]:
            roots = roots_at_point(p, point, var)
            if roots:
                groups.append(roots)
        roots = _merge_roots(groups)
        if not roots:
            yield "sector", Fraction(0)
            return
        yield "sector", _rational_below(roots[0])
        for i, r in enumerate(roots):
            yield "section", r
            if i + 1 < len(roots):
                yield "sector", _rational_between(r, roots[i + 1])
        yield "sector", _rational_above(roots[-1])

    def decide(self, level: int, point: dict, cell: CadCell | None) -> bool:
        if level > self.nvars:
            return self._matrix_truth(point)
        quant, var = self.sentence.prefix[level - 1]
        result = quant == FORALL
        for kind, sample in self._samples(level, point):
            self._charge_cell()
            child_point = dict(point)
            child_point[var] = sample
            child = None
            if self.record:
                child = CadCell(level, var, kind, sample)
                cell.children.append(child)
            sub = self.decide(level + 1, child_point, child)
            if self.record:
                child.truth = sub
            if quant == EXISTS and sub:
                return True
            if quant == FORALL and not sub:
                return False
        return result


def decide_sentence(sentence: Sentence, budget: QeBudget | None = None) -> bool:
    """Exact truth of a prenex sentence over the reals.

    Raises ResourceLimitError when a budget is exhausted; never guesses.
    """
    budget = budget or QeBudget()
    if len(sentence.prefix) > budget.max_vars:
        raise ResourceLimitError(
            f"{len(sentence.prefix)} variables exceeds the limit {budget.max_vars}",
            variables=len(sentence.prefix),
        )
    return _Decider(sentence, budget, record=False).decide(1, {}, None)


def decide_with_tree(sentence: Sentence, budget: QeBudget | None = None):
    """decide_sentence variant that also returns the sampled cell tree."""
    budget = budget or QeBudget()
    dec = _Decider(sentence, budget, record=True)
    root = CadCell(0, None, "root", None)
    truth = dec.decide(1, {}, root)
    root.truth = truth
    return truth, root
