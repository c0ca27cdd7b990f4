"""Exact univariate real root isolation and real algebraic numbers.

Univariate polynomials appear here as dense Fraction coefficient lists
(index = degree).  Root isolation is Sturm-chain bisection after
squarefree reduction; every interval returned has rational non-root
endpoints and exactly one root inside, with rational roots collapsed to
exact points.

A real algebraic number is a squarefree integer-coefficient defining
polynomial plus an isolating interval (or an exact rational).  Signs of
arbitrary polynomials at such numbers are decided exactly: a gcd test
recognizes zero, interval refinement settles everything else.

Multivariate sign evaluation at sample points mixing rationals and
algebraic numbers works by interval arithmetic with adaptive
refinement; exact zero recognition goes through a resultant cascade
that produces an integer "characteristic" polynomial of the queried
value, whose nonzero roots are bounded away from zero by a computable
gap.  This keeps every decision exact without any numeric fallback.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from ..errors import ResourceLimitError
from ..poly import MultiPoly

Coeffs = list  # list[Fraction], index = degree


def utrim(c: Coeffs) -> Coeffs:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def udeg(c: Coeffs) -> int:
    c = utrim(c)
    return 0 if (len(c) == 1 and c[0] == 0) else len(c) - 1


def uis_zero(c: Coeffs) -> bool:
    return all(x == 0 for x in c)


def ueval(c: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def uderiv(c: Coeffs) -> Coeffs:
    if len(c) <= 1:
        return [Fraction(0)]
    return [Fraction(i) * c[i] for i in range(1, len(c))]


def uprimitive(c: Coeffs) -> Coeffs:
    """Integer primitive form with positive leading coefficient."""
    c = utrim(c)
    if uis_zero(c):
        return [Fraction(0)]
    den = 1
    for x in c:
        den = den * x.denominator // int_gcd(den, x.denominator)
    ints = [x * den for x in c]
    g = 0
    for x in ints:
        g = int_gcd(g, abs(int(x)))
    ints = [x / g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def udivmod(a: Coeffs, b: Coeffs):
    a = utrim(a)
    b = utrim(b)
    if uis_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = list(a)
    db = udeg(b)
    while not uis_zero(r) and udeg(r) >= db:
        shift = udeg(r) - db
        factor = r[udeg(r)] / b[db]
        q[shift] += factor
        for i in range(len(b)):
            r[i + shift] -= factor * b[i]
        r = utrim(r)
    return utrim(q), utrim(r)


def ugcd(a: Coeffs, b: Coeffs) -> Coeffs:
    a, b = utrim(a), utrim(b)
    while not uis_zero(b):
        _, r = udivmod(a, b)
        a, b = b, r
    return uprimitive(a) if not uis_zero(a) else [Fraction(0)]


def usquarefree(c: Coeffs) -> Coeffs:
    c = utrim(c)
    if udeg(c) <= 1:
        return uprimitive(c) if not uis_zero(c) else c
    g = ugcd(c, uderiv(c))
    if udeg(g) == 0:
        return uprimitive(c)
    q, r = udivmod(c, g)
    assert uis_zero(r)
    return uprimitive(q)


def _positive_primitive(c: Coeffs) -> Coeffs:
    """Content-normalized by a positive rational: signs preserved."""
    c = utrim(c)
    if uis_zero(c):
        return [Fraction(0)]
    den = 1
    for x in c:
        den = den * x.denominator // int_gcd(den, x.denominator)
    ints = [x * den for x in c]
    g = 0
    for x in ints:
        g = int_gcd(g, abs(int(x)))
    return [x / g for x in ints]


def sturm_chain(c: Coeffs) -> list:
    """Sturm chain of a squarefree polynomial, scaled only by positive
    rationals so sign variations stay faithful."""
    chain = [_positive_primitive(c)]
    d = uderiv(c)
    if not uis_zero(d):
        chain.append(_positive_primitive(d))
        while True:
            _, r = udivmod(chain[-2], chain[-1])
            if uis_zero(r):
                break
            chain.append(_positive_primitive([-x for x in r]))
    return chain


def _variations(signs: list) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(chain: list, lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in (lo, hi]; requires chain[0](lo) != 0."""
    def sgn(v):
        return 0 if v == 0 else (1 if v > 0 else -1)
    va = _variations([sgn(ueval(p, lo)) for p in chain])
    vb = _variations([sgn(ueval(p, hi)) for p in chain])
    return va - vb


def cauchy_bound(c: Coeffs) -> Fraction:
    c = utrim(c)
    lead = abs(c[-1])
    rest = max((abs(x) for x in c[:-1]), default=Fraction(0))
    return 1 + rest / lead


def isolate_squarefree(c: Coeffs) -> list:
    """Isolating intervals for a squarefree polynomial: (r, r) for exact
    rational roots, open (lo, hi) with one root and non-root rational
    endpoints otherwise.  Sorted ascending."""
    c = utrim(c)
    if udeg(c) == 0:
        return []
    chain = sturm_chain(c)
    B = cauchy_bound(c)
    out = []

    def rec(lo, hi, count):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if ueval(c, mid) == 0:
            out.append((mid, mid))
            # shrink around the exact root until it is the only one inside
            w = (hi - lo) / 4
            while True:
                l2, h2 = mid - w, mid + w
                if ueval(c, l2) != 0 and ueval(c, h2) != 0 and sturm_count(chain, l2, h2) == 1:
                    break
                w /= 2
            rec(lo, l2, sturm_count(chain, lo, l2))
            rec(h2, hi, sturm_count(chain, h2, hi))
        else:
            rec(lo, mid, sturm_count(chain, lo, mid))
            rec(mid, hi, sturm_count(chain, mid, hi))

    total = sturm_count(chain, -B, B)
    rec(-B, B, total)
    return sorted(out)


class RealAlgebraicNumber:
    """A real root of a squarefree integer polynomial, isolated by a
    rational interval; exact rationals collapse to a direct value.

    Refinement narrows the interval in place (always preserving the
    isolating property), so instances may be shared freely.
    """

    __slots__ = ("poly", "lo", "hi", "value")

    def __init__(self, poly: Coeffs | None, lo: Fraction, hi: Fraction,
                 value: Fraction | None = None):
        if value is not None:
            self.value = Fraction(value)
            self.poly = None
            self.lo = self.hi = self.value
            return
        self.value = None
        self.poly = [Fraction(x) for x in poly]
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        assert ueval(self.poly, self.lo) != 0 and ueval(self.poly, self.hi) != 0

    @staticmethod
    def from_rational(q) -> "RealAlgebraicNumber":
        return RealAlgebraicNumber(None, 0, 0, value=Fraction(q))

    @property
    def is_rational(self) -> bool:
        return self.value is not None

    def interval(self):
        return (self.lo, self.hi)

    def refine(self):
        if self.value is not None:
            return
        mid = (self.lo + self.hi) / 2
        v = ueval(self.poly, mid)
        if v == 0:
            self.value = mid
            self.lo = self.hi = mid
            self.poly = None
            return
        if ueval(self.poly, self.lo) * v < 0:
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Fraction):
        while self.value is None and self.hi - self.lo >= width:
            self.refine()

    def sign_of_poly(self, q: Coeffs) -> int:
        """Exact sign of q at this number."""
        q = utrim(q)
        if self.value is not None:
            v = ueval(q, self.value)
            return 0 if v == 0 else (1 if v > 0 else -1)
        if uis_zero(q):
            return 0
        # q vanishes here iff gcd(defining, q) has a root in the isolating
        # interval; the gcd divides the defining polynomial, so neither
        # endpoint can be one of its roots and a Sturm count is exact.
        g = ugcd(self.poly, q)
        if udeg(g) > 0 and sturm_count(sturm_chain(g), self.lo, self.hi) > 0:
            return 0
        qsf = usquarefree(q)
        chain_q = sturm_chain(qsf)
        while True:
            if self.value is not None:
                return self.sign_of_poly(q)
            vlo, vhi = ueval(q, self.lo), ueval(q, self.hi)
            if vlo != 0 and vhi != 0 and sturm_count(chain_q, self.lo, self.hi) == 0:
                return 1 if vlo > 0 else -1
            self.refine()

    def compare_rational(self, r: Fraction) -> int:
        if self.value is not None:
            return 0 if self.value == r else (1 if self.value > r else -1)
        return self.sign_of_poly([-Fraction(r), Fraction(1)])

    def compare(self, other: "RealAlgebraicNumber") -> int:
        if other.value is not None:
            return self.compare_rational(other.value)
        if self.value is not None:
            return -other.compare_rational(self.value)
        # equality test: the numbers coincide iff gcd(p1, p2) has a root
        # in the overlap of the isolating intervals (such a root lies in
        # both intervals and is a root of both polynomials, hence is both
        # numbers; the gcd's roots avoid all four endpoints)
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            g = ugcd(self.poly, other.poly)
            if udeg(g) > 0 and sturm_count(sturm_chain(g), lo, hi) > 0:
                return 0
        while not (self.hi < other.lo or other.hi < self.lo):
            if self.value is not None or other.value is not None:
                return self.compare(other)
            self.refine()
            other.refine()
        return -1 if self.hi < other.lo else 1

    def __repr__(self):
        if self.value is not None:
            return f"RealAlgebraicNumber({self.value})"
        return f"RealAlgebraicNumber({self.poly}, ({self.lo}, {self.hi}))"


def _divisors(n: int, trial_cap: int = 10_000, count_cap: int = 300) -> list | None:
    """Divisors of |n|; sloppy on purpose: any unfactored remainder after
    trial division is treated as prime.  Callers verify every candidate
    by exact evaluation, so a wrong divisor set costs time, never
    correctness.  None when the divisor count explodes."""
    n = abs(n)
    if n == 0:
        return None
    factors: dict = {}
    m = n
    d = 2
    while d * d <= m and d <= trial_cap:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [dv * prime ** e for dv in divs for e in range(mult + 1)]
        if len(divs) > count_cap:
            return None
    return sorted(divs)


def _extract_rational_roots(c: Coeffs):
    """Split a squarefree polynomial into (rational roots, cofactor).
    Best effort: roots the divisor search misses simply stay in the
    cofactor and get interval representations."""
    c = utrim(c)
    roots = []
    if c[0] == 0:
        roots.append(Fraction(0))
        c = utrim(c[1:])
    if udeg(c) >= 1:
        ints = uprimitive(c)
        nums = _divisors(int(ints[0])) if ints[0] != 0 else [0]
        dens = _divisors(int(ints[-1]))
        if nums is not None and dens is not None and len(nums) * len(dens) <= 2000:
            cands = sorted({Fraction(p, q) for p in nums for q in dens})
            for cand in cands:
                for val in (cand, -cand):
                    if udeg(c) >= 1 and ueval(c, val) == 0:
                        roots.append(val)
                        q, r = udivmod(c, [-val, Fraction(1)])
                        assert uis_zero(r)
                        c = q
    return sorted(set(roots)), c


def isolate_real_roots(p) -> list:
    """All distinct real roots of a nonzero univariate polynomial, as
    RealAlgebraicNumber, ascending.  Accepts a MultiPoly in one variable
    or a coefficient list.  Rational roots come back as exact values."""
    if isinstance(p, MultiPoly):
        used = p.used_vars()
        if len(used) > 1:
            raise ValueError("isolate_real_roots needs a univariate polynomial")
        if not used:
            if p.is_zero:
                raise ValueError("cannot isolate roots of the zero polynomial")
            return []
        coeffs = [c.constant_value() for c in p.as_univar(used[0])]
    else:
        coeffs = [Fraction(x) for x in p]
    if uis_zero(coeffs):
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = usquarefree(coeffs)
    rationals, rest = _extract_rational_roots(sf)
    out = [RealAlgebraicNumber.from_rational(r) for r in rationals]
    if udeg(rest) >= 1:
        rest = uprimitive(rest)
        for lo, hi in isolate_squarefree(rest):
            if lo == hi:
                out.append(RealAlgebraicNumber.from_rational(lo))
            else:
                out.append(RealAlgebraicNumber(rest, lo, hi))
    out.sort(key=_SortKey)
    return out


class _SortKey:
    """Exact comparison adapter for sorting RealAlgebraicNumbers."""

    def __init__(self, ran: RealAlgebraicNumber):
        self.ran = ran

    def __lt__(self, other: "_SortKey") -> bool:
        return self.ran.compare(other.ran) < 0


def alg_sign_at(p, x: RealAlgebraicNumber) -> int:
    """Exact sign of a univariate polynomial at a real algebraic number."""
    if isinstance(p, MultiPoly):
        used = p.used_vars()
        if len(used) > 1:
            raise ValueError("alg_sign_at needs a univariate polynomial")
        if not used:
            v = p.constant_value()
            return 0 if v == 0 else (1 if v > 0 else -1)
        coeffs = [c.constant_value() for c in p.as_univar(used[0])]
    else:
        coeffs = [Fraction(x) for x in p]
    return x.sign_of_poly(coeffs)


# -- signs and roots at mixed rational/algebraic sample points ----------


def _iadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _imul(a, b):
    vals = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(vals), max(vals))


def _ipow(a, e: int):
    out = (Fraction(1), Fraction(1))
    for _ in range(e):
        out = _imul(out, a)
    return out


def interval_eval(p: MultiPoly, boxes: dict) -> tuple:
    """Interval enclosure of p over a box with Fraction endpoints."""
    total = (Fraction(0), Fraction(0))
    for mono, coeff in p.terms.items():
        term = (Fraction(coeff), Fraction(coeff))
        for v, e in zip(p.vars, mono):
            if e:
                term = _imul(term, _ipow(boxes[v], e))
        total = _iadd(total, term)
    return total


def _defining_multipoly(a: RealAlgebraicNumber, var: str) -> MultiPoly:
    terms = {(i,): Fraction(c) for i, c in enumerate(a.poly) if c != 0}
    return MultiPoly((var,), terms)


def _reduce_mod(M: MultiPoly, defining: Coeffs, var: str) -> MultiPoly:
    """Remainder of M modulo the defining polynomial, as a polynomial in
    ``var`` (exact; the defining leading coefficient is a nonzero
    rational).  Leaves the value at the algebraic number unchanged."""
    if var not in M.vars:
        return M
    coeffs = M.as_univar(var)
    dm = udeg(defining)
    if dm == 0:
        return M
    lead_inv = Fraction(1) / defining[dm]
    while len(coeffs) - 1 >= dm:
        top = len(coeffs) - 1
        lead = coeffs[top]
        if lead.is_zero:
            coeffs.pop()
            continue
        factor = lead * lead_inv
        for i in range(dm + 1):
            coeffs[top - dm + i] = coeffs[top - dm + i] - factor * MultiPoly.const(defining[i])
        coeffs.pop()
    return MultiPoly.from_univar(coeffs, var)


def _eliminate_algebraics(M: MultiPoly, algs: dict) -> MultiPoly:
    """Cascade of resultants with the defining polynomials; the result
    vanishes wherever M vanishes at the actual algebraic coordinates
    (with conjugate combinations possibly adding spurious zeros)."""
    from .resultants import resultant_det

    out = M
    for v in sorted(algs, key=lambda s: s):
        a = algs[v]
        out = _reduce_mod(out, a.poly, v)
        if v not in out.used_vars():
            out = out.partial_eval({v: Fraction(0)}) if v in out.vars else out
            continue
        out = resultant_det(_defining_multipoly(a, v), out, v)
    return out


def _fresh_var(avoid) -> str:
    i = 0
    while f"W{i}" in avoid:
        i += 1
    return f"W{i}"


def _nonzero_root_gap(N: Coeffs) -> Fraction:
    """Positive rational strictly below every nonzero real root magnitude."""
    N = utrim(N)
    k = 0
    while k < len(N) and N[k] == 0:
        k += 1
    tail = N[k:]
    c0 = abs(tail[0])
    rest = max((abs(c) for c in tail[1:]), default=Fraction(0))
    return c0 / (c0 + rest) if rest else Fraction(1)


def _split_point(point: dict):
    rats, algs = {}, {}
    for v, x in point.items():
        if isinstance(x, RealAlgebraicNumber):
            if x.is_rational:
                rats[v] = x.value
            else:
                algs[v] = x
        else:
            rats[v] = Fraction(x)
    return rats, algs


def sign_at_point(p: MultiPoly, point: dict) -> int:
    """Exact sign of p at a sample point whose coordinates are Fractions
    or RealAlgebraicNumbers."""
    rats, algs = _split_point(point)
    q = p.partial_eval(rats).drop_unused()
    live = {v: algs[v] for v in q.used_vars()}
    if not live:
        v = q.constant_value()
        return 0 if v == 0 else (1 if v > 0 else -1)
    if len(live) == 1:
        (v, a), = live.items()
        coeffs = [c.constant_value() for c in q.as_univar(v)]
        return a.sign_of_poly(coeffs)

    tvar = _fresh_var(q.vars)
    M = MultiPoly.var(tvar, (tvar,) + q.vars) - q.with_vars((tvar,) + q.vars)
    N_poly = _eliminate_algebraics(M, live)
    ncoeffs = [c.constant_value() for c in N_poly.as_univar(tvar)]
    if any(c is None for c in ncoeffs) or uis_zero(ncoeffs):
        raise ResourceLimitError("degenerate characteristic polynomial")
    zero_possible = ncoeffs[0] == 0
    gap = _nonzero_root_gap(ncoeffs)
    while True:
        box = interval_eval(q, {v: a.interval() for v, a in live.items()})
        if box[0] > 0:
            return 1
        if box[1] < 0:
            return -1
        if not zero_possible:
            pass  # the value is a nonzero root of N; keep refining
        elif -gap < box[0] and box[1] < gap:
            return 0
        collapsed = False
        for a in live.values():
            a.refine()
            collapsed = collapsed or a.is_rational
        if collapsed:
            return sign_at_point(p, point)


def roots_at_point(p: MultiPoly, point: dict, var: str):
    """Real roots (ascending RealAlgebraicNumbers) of p(sample, var), or
    None when p vanishes identically at the sample."""
    rats, algs = _split_point(point)
    q = p.partial_eval(rats)
    if var not in q.vars:
        q = q.with_vars(q.vars + (var,))
    coeffs = q.as_univar(var)
    base_point = {v: point[v] for v in point}
    deg = -1
    for i in range(len(coeffs) - 1, -1, -1):
        if sign_at_point(coeffs[i], base_point) != 0:
            deg = i
            break
    if deg < 0:
        return None
    if deg == 0:
        return []
    trunc = MultiPoly.from_univar(coeffs[: deg + 1], var).drop_unused()
    live = {v: algs[v] for v in trunc.used_vars() if v != var}
    if not live:
        flat = [c.constant_value() for c in trunc.as_univar(var)]
        return isolate_real_roots(flat)
    N_poly = _eliminate_algebraics(trunc, live)
    if N_poly.is_zero:
        raise ResourceLimitError("algebraic lifting degeneracy: cascade vanished")
    ncoeffs = [c.constant_value() for c in N_poly.as_univar(var)]
    if any(c is None for c in ncoeffs) or uis_zero(ncoeffs):
        raise ResourceLimitError("algebraic lifting degeneracy: cascade vanished")
    out = []
    for cand in isolate_real_roots(ncoeffs):
        full = dict(point)
        full[var] = cand
        if sign_at_point(trunc, full) == 0:
            out.append(cand)
    return out
