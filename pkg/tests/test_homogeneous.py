import random
from fractions import Fraction

import pytest

from esdec.algebra import TransformKind
from esdec.errors import ExtractionFailure
from esdec.predicates import holds_everywhere, negate, parse
from esdec.ramsey import (
    GrowthParams, canonical_growing, extract_homogeneous, refine_well_placed,
)
from esdec.typesys import build_Q

F = Fraction


def test_refine_well_placed_all_ones():
    ps = parse("x1 < x2 ; x1 >= x2")
    Q = build_Q(ps, TransformKind.F1)
    R = 4
    b = canonical_growing(R, 5)
    got = refine_well_placed(b, Q, F(0), F(1), GrowthParams(R, 5))
    # all finite ratios equal 1 < b1: whole sequence is one run, ends dropped
    assert got.values == tuple(b[1:4])
    assert (got.start, got.stop) == (1, 4)


def test_refine_well_placed_vacuous():
    ps = parse("x1 < x2 ; x1 >= x2")
    Q = build_Q(ps, TransformKind.F1)
    b = canonical_growing(4, 3)
    # B = 0 kills every coefficient: no finite nonzero ratios at all
    got = refine_well_placed(b, Q, F(3), F(0), GrowthParams(4, 3))
    assert got.values == tuple(b)


def test_refine_well_placed_failure():
    ps = parse("2*x1 - x2 > 0")
    Q = build_Q(ps, TransformKind.F1)
    R = 4
    # ratio 2 sits inside every short canonical run: refinement of a
    # 3-term sequence cannot satisfy the verification
    b = [F(2), F(2) ** 4, F(2) ** 16]
    with pytest.raises((ExtractionFailure, ValueError)):
        refine_well_placed(b, Q, F(0), F(1), GrowthParams(R, 3))


def test_extract_homogeneous_monotone_guarantee():
    mono = parse("x1 < x2 ; x1 >= x2")
    rng = random.Random(3)
    for _ in range(25):
        seq = [F(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(5)]
        got = extract_homogeneous(seq, mono, 3)
        assert len(got.values) == 3
        assert all(v in ("everywhere", "nowhere") for v in got.verdicts.values())
        assert any(
            got.verdicts[i] == "everywhere" for i in range(len(mono.members))
        ) or all(v == "nowhere" for v in got.verdicts.values())


def test_extract_homogeneous_constant():
    eq = parse("x1 = x2")
    got = extract_homogeneous([F(7)] * 4, eq, 4)
    assert got.values == (7, 7, 7, 7)
    assert got.verdicts[0] == "everywhere"


def test_extract_homogeneous_increasing():
    lt = parse("x1 < x2")
    got = extract_homogeneous([F(1), F(3), F(2), F(4)], lt, 3)
    assert got.verdicts[0] == "everywhere"
    vals = list(got.values)
    assert vals == sorted(vals) and len(vals) == 3


def test_extract_homogeneous_constructive_path():
    mono = parse("x1 < x2 ; x1 >= x2")
    g = canonical_growing(4, 8)
    host = [5 + 7 * x for x in g]
    got = extract_homogeneous(host, mono, 4)
    assert len(got.values) == 4
    assert got.verdicts[0] == "everywhere"  # increasing image
    assert got.method in ("constructive", "bruteforce")


def test_extract_homogeneous_nowhere_counts():
    # "nowhere" is homogeneous too: ties make x1 != x2 false everywhere
    neq = parse("x1 != x2")
    got = extract_homogeneous([F(1), F(1), F(1)], neq, 2)
    assert got.verdicts[0] == "nowhere"


def test_extract_homogeneous_failure():
    lt = parse("x1 < x2")
    # the only 3-subsequence of (1, 2, 0) is mixed for x1 < x2
    with pytest.raises(ExtractionFailure):
        extract_homogeneous([F(1), F(2), F(0)], lt, 3)
