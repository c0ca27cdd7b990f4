"""The main decision procedure for predicate sets, plus an exact
brute-force harness for order-invariant sets.

Decision: for each of the two transforms and every candidate type of
the induced coefficient system, test feasibility; for feasible types,
evaluate every member's verdict in both traversal orientations.  If
some feasible type makes every member false everywhere in some
orientation, arbitrarily long counterexample sequences exist and the
answer is NO, with the (transform, type, orientation) triple as the
certificate.  If the enumeration completes without such a type, the
answer is YES.  Budget exhaustion inside any feasibility test makes
the overall answer UNDECIDED (unless a NO was already found, which is
conclusive on its own).

The brute-force harness computes the exact Ramsey value of an
order-invariant set by enumerating canonical weak orderings, which are
exhaustive for such sets; order-invariance itself is checked by
realizing every weak ordering of argument tuples at several scales and
comparing atom truth.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import TransformKind
from .errors import InconsistentTypeError, OrderInvarianceError, ResourceLimitError
from .feasibility import (
    FEASIBLE, INFEASIBLE, UNDECIDED, FeasibilityInstance, is_feasible,
    sign_sentence, witness_search,
)
from .predicates import PredicateSet, atoms_of, holds_everywhere, rel_holds
from .qe import QeBudget, decide_sentence
from .typesys import build_Q, enumerate_types, eval_predicates_from_type

YES = "YES"
NO = "NO"
UNDEC = "UNDECIDED"

ENVELOPE_NOTE = (
    "predicate set exceeds the practical envelope (arity <= 2, <= 2 atoms "
    "per member, degree <= 2); the candidate type count may be prohibitive"
)


@dataclass
class DecisionStats:
    types_total: int = 0
    types_feasible: int = 0
    types_skipped_by_screen: int = 0
    types_inconsistent: int = 0
    undecided_events: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "typesTotal": self.types_total,
            "typesFeasible": self.types_feasible,
            "typesSkippedByScreen": self.types_skipped_by_screen,
            "typesInconsistent": self.types_inconsistent,
            "undecidedEvents": list(self.undecided_events),
            "elapsed": self.elapsed,
            "notes": list(self.notes),
        }


@dataclass
class Verdict:
    answer: str  # YES | NO | UNDECIDED
    transform: TransformKind | None = None
    certificate_type: object = None  # CandidateType for NO
    certificate_json: dict | None = None
    orientation: str | None = None
    witness: tuple | None = None  # (A, B, b) if the search found one
    stats: DecisionStats = field(default_factory=DecisionStats)

    def to_json(self) -> dict:
        out = {"answer": self.answer, "stats": self.stats.to_json()}
        if self.answer == NO:
            out["transform"] = self.transform.value
            out["orientation"] = self.orientation
            out["type"] = self.certificate_json
            if self.witness is not None:
                A, B, b = self.witness
                out["witness"] = {
                    "A": str(A), "B": str(B), "b": [str(x) for x in b],
                }
        return out


def _within_envelope(pset: PredicateSet) -> bool:
    if pset.arity > 2:
        return False
    for member in pset.members:
        atoms = atoms_of(member.root)
        if len(atoms) > 2:
            return False
        if any(a.poly.total_degree() > 2 for a in atoms):
            return False
    return True


def decide_es(pset: PredicateSet, budget: QeBudget | None = None,
              type_cap: int = 200_000, naive_order: bool = False,
              search_witness: bool = True, witness_R: int = 4,
              witness_n: int = 4, witness_seed: int = 0) -> Verdict:
    """Decide whether every long enough sequence admits a fixed-length
    subsequence on which some member holds everywhere.

    ``naive_order`` disables the cheap sign-realizability screen (used
    for differential testing).  Resource limits surface as UNDECIDED,
    never as a wrong answer.
    """
    stats = DecisionStats()
    if not _within_envelope(pset):
        warnings.warn(ENVELOPE_NOTE)
        stats.notes.append(ENVELOPE_NOTE)
    t0 = time.monotonic()
    budget = budget or QeBudget()
    for kind in (TransformKind.F1, TransformKind.F2):
        Q = build_Q(pset, kind)
        screen_cache: dict = {}
        try:
            types = list(enumerate_types(Q, cap=type_cap))
        except ResourceLimitError as exc:
            stats.undecided_events.append(f"{kind.value}: {exc}")
            continue
        for typ in types:
            stats.types_total += 1
            inst = FeasibilityInstance.from_type(Q, typ)
            if not naive_order and not inst.constant_conflict:
                key = typ.sigmas
                if key not in screen_cache:
                    try:
                        screen_cache[key] = decide_sentence(sign_sentence(inst), budget)
                    except ResourceLimitError as exc:
                        screen_cache[key] = None
                        stats.undecided_events.append(f"{kind.value} screen: {exc}")
                ok = screen_cache[key]
                if ok is False:
                    stats.types_skipped_by_screen += 1
                    continue
            verdict = is_feasible(inst, budget)
            if verdict == UNDECIDED:
                stats.undecided_events.append(f"{kind.value}: type undecided")
                continue
            if verdict == INFEASIBLE:
                continue
            stats.types_feasible += 1
            for orientation in ("ascending", "descending"):
                try:
                    verdicts = eval_predicates_from_type(pset, kind, typ, orientation)
                except InconsistentTypeError:
                    stats.types_inconsistent += 1
                    break
                if all(v == "nowhere" for v in verdicts.values()):
                    witness = None
                    if search_witness:
                        witness = witness_search(inst, witness_R, witness_n,
                                                 seed=witness_seed)
                    stats.elapsed = time.monotonic() - t0
                    out = Verdict(NO, kind, typ, typ.to_json(Q), orientation,
                                  witness, stats)
                    _reverify_no(pset, out)
                    return out
    stats.elapsed = time.monotonic() - t0
    if stats.undecided_events:
        return Verdict(UNDEC, stats=stats)
    return Verdict(YES, stats=stats)


def _reverify_no(pset: PredicateSet, verdict: Verdict):
    """A NO certificate must evaluate every member to 'nowhere'."""
    got = eval_predicates_from_type(
        pset, verdict.transform, verdict.certificate_type, verdict.orientation
    )
    if any(v != "nowhere" for v in got.values()):
        raise AssertionError("internal: NO certificate failed re-verification")


# -- exact Ramsey values for order-invariant sets -----------------------


def weak_orderings(n: int):
    """Canonical weak orderings of n positions: all rank assignments
    surjective onto an initial segment {1..m}.  Counts are the ordered
    Bell numbers (3 for n=2: ties, up, down)."""
    if n == 0:
        yield ()
        return

    def rec(prefix: tuple, present: frozenset, top: int):
        pos = len(prefix)
        if pos == n:
            yield prefix
            return
        remaining = n - pos
        for level in range(1, top + remaining + 1):
            new_present = present | {level}
            new_top = max(top, level)
            missing = new_top - sum(1 for l in new_present if l <= new_top)
            if missing <= remaining - 1:
                yield from rec(prefix + (level,), new_present, new_top)

    yield from rec((), frozenset(), 0)


# realization scales: all strictly increasing in the level, spread across
# magnitudes and signs so scale-dependent atoms get caught
_SCALES = (
    lambda level: Fraction(level),
    lambda level: Fraction(10) ** level,
    lambda level: Fraction(level, 1000),
    lambda level: Fraction(100 * level - 1000, 3),
    lambda level: -(Fraction(10) ** (-level)),
)


def check_order_invariance(pset: PredicateSet):
    """Sampling check that atom truth depends only on the weak ordering
    of the arguments: every weak ordering of an argument tuple is
    realized at several scales and the atom truths must agree."""
    k = pset.arity
    atoms = []
    for member in pset.members:
        atoms.extend(atoms_of(member.root))
    for pattern in weak_orderings(k):
        realizations = [
            tuple(scale(level) for level in pattern) for scale in _SCALES
        ]
        for atom in atoms:
            truths = set()
            for point in realizations:
                assignment = {v: point[int(v[1:]) - 1] for v in atom.poly.vars}
                value = atom.poly.evaluate(assignment) if atom.poly.vars else atom.poly.constant_value()
                sign = 0 if value == 0 else (1 if value > 0 else -1)
                truths.add(rel_holds(sign, atom.rel))
            if len(truths) > 1:
                raise OrderInvarianceError(
                    f"atom '{atom.poly.to_text()} {atom.rel} 0' differs across "
                    f"scales on weak ordering {pattern}"
                )


@dataclass(frozen=True)
class EsValue:
    value: int | None  # None: every length up to the cap had a counterexample
    searched_up_to: int
    counterexample: tuple | None  # weak ordering of length value-1 (or the cap)

    @property
    def exact(self) -> bool:
        return self.value is not None


def _admits_good_subsequence(pset: PredicateSet, seq: list, n: int) -> bool:
    idx = range(len(seq))
    for subset in combinations(idx, n):
        sub = [seq[i] for i in subset]
        if any(holds_everywhere(m, sub) for m in pset.members):
            return True
    return False


def es_bruteforce(pset: PredicateSet, n: int, n_max: int) -> EsValue:
    """Exact Ramsey value: the least N <= n_max such that every weak
    ordering of length N admits an n-term subsequence on which some
    member holds everywhere.  Requires order invariance (checked)."""
    check_order_invariance(pset)
    if n < 1:
        raise ValueError("n must be >= 1")
    last_counterexample = None
    for N in range(n, n_max + 1):
        failed = None
        for pattern in weak_orderings(N):
            seq = [Fraction(level) for level in pattern]
            if not _admits_good_subsequence(pset, seq, n):
                failed = pattern
                break
        if failed is None:
            return EsValue(N, N, last_counterexample)
        last_counterexample = failed
    return EsValue(None, n_max, last_counterexample)
