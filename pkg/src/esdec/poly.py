"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples to nonzero Fractions,
together with an ordered tuple of variable names.  Everything is exact:
no floats anywhere.  Values are immutable after construction; all
operations return new objects, so instances are safe to share.

Variable order is canonical: lowercase names sort before uppercase,
then alphabetically by letter part, then numerically by index, which
yields x1 < x2 < ..., y1 < ... < yk < X < Y.  Arithmetic between
polynomials over different variable lists aligns them to the union.

Monomials are plain exponent tuples (one nonnegative int per variable).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # exponent vector, one entry per variable

_VAR_RE = re.compile(r"([A-Za-z]+)(\d*)\Z")


def var_sort_key(name: str) -> tuple:
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name: {name!r}")
    base, digits = m.group(1), m.group(2)
    return (base[0].isupper(), base, int(digits) if digits else 0)


def merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple:
    return tuple(sorted(set(a) | set(b), key=var_sort_key))


class MultiPoly:
    """Sparse exact polynomial; ``terms`` maps exponent tuple -> Fraction."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Fraction] | None = None):
        vlist = tuple(variables)
        if len(set(vlist)) != len(vlist):
            raise ValueError("duplicate variable names")
        ordered = tuple(sorted(vlist, key=var_sort_key))
        self.vars = ordered
        clean: dict = {}
        if terms:
            remap = None
            if vlist != ordered:
                idx = {v: i for i, v in enumerate(ordered)}
                remap = [idx[v] for v in vlist]
            for mono, coeff in terms.items():
                c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if c == 0:
                    continue
                if len(mono) != len(ordered):
                    raise ValueError("exponent tuple length mismatch")
                if remap is not None:
                    fixed = [0] * len(ordered)
                    for pos, e in enumerate(mono):
                        fixed[remap[pos]] = e
                    mono = tuple(fixed)
                clean[mono] = clean.get(mono, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c != 0}
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str] = ()) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(value, variables: Sequence[str] = ()) -> "MultiPoly":
        v = Fraction(value)
        variables = tuple(variables)
        if v == 0:
            return MultiPoly(variables, {})
        return MultiPoly(variables, {(0,) * len(variables): v})

    @staticmethod
    def var(name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        ordered = tuple(sorted(set(variables), key=var_sort_key))
        mono = tuple(1 if v == name else 0 for v in ordered)
        return MultiPoly(ordered, {mono: Fraction(1)})

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction | None:
        """The value if this polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (mono, coeff), = self.terms.items()
            if all(e == 0 for e in mono):
                return coeff
        return None

    def degree(self, name: str) -> int:
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return max(m[i] for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def used_vars(self) -> tuple:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.vars[i])
        return tuple(sorted(used, key=var_sort_key))

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self.terms.values()), default=Fraction(0))

    # -- alignment ---------------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over a superset of the current variables."""
        ordered = tuple(sorted(set(variables), key=var_sort_key))
        if ordered == self.vars:
            return self
        if not set(self.vars) <= set(ordered):
            raise ValueError("with_vars: target must be a superset")
        pos = [ordered.index(v) for v in self.vars]
        terms = {}
        for mono, coeff in self.terms.items():
            fixed = [0] * len(ordered)
            for p, e in zip(pos, mono):
                fixed[p] = e
            terms[tuple(fixed)] = coeff
        out = MultiPoly.zero(ordered)
        out.terms = terms
        return out

    def drop_unused(self) -> "MultiPoly":
        used = self.used_vars()
        if used == self.vars:
            return self
        keep = [i for i, v in enumerate(self.vars) if v in used]
        terms = {tuple(m[i] for i in keep): c for m, c in self.terms.items()}
        out = MultiPoly.zero(used)
        out.terms = terms
        return out

    @staticmethod
    def _aligned(a: "MultiPoly", b: "MultiPoly"):
        if a.vars == b.vars:
            return a, b
        allv = merge_vars(a.vars, b.vars)
        return a.with_vars(allv), b.with_vars(allv)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, self.vars)
        a, b = MultiPoly._aligned(self, other)
        terms = dict(a.terms)
        for mono, coeff in b.terms.items():
            s = terms.get(mono, Fraction(0)) + coeff
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        out = MultiPoly.zero(a.vars)
        out.terms = terms
        return out

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.zero(self.vars)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            out = MultiPoly.zero(self.vars)
            if c != 0:
                out.terms = {m: k * c for m, k in self.terms.items()}
            return out
        a, b = MultiPoly._aligned(self, other)
        terms: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                mono = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                s = terms.get(mono, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        out = MultiPoly.zero(a.vars)
        out.terms = terms
        return out

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = MultiPoly._aligned(self.drop_unused(), other.drop_unused())
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            p = self.drop_unused()
            self._hash = hash((p.vars, frozenset(p.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    # -- evaluation & substitution ------------------------------------

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a full rational assignment."""
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        pow_cache: dict = {}
        for mono, coeff in self.terms.items():
            prod = coeff
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    p = pow_cache.get(key)
                    if p is None:
                        p = vals[i] ** e
                        pow_cache[key] = p
                    prod *= p
            total += prod
        return total

    def partial_eval(self, point: Mapping[str, Fraction]) -> "MultiPoly":
        """Substitute exact values for a subset of the variables."""
        fixed = {v: Fraction(x) for v, x in point.items() if v in self.vars}
        if not fixed:
            return self
        keep = [v for v in self.vars if v not in fixed]
        out = MultiPoly.zero(keep)
        terms: dict = {}
        idx_fixed = [(i, fixed[v]) for i, v in enumerate(self.vars) if v in fixed]
        idx_keep = [i for i, v in enumerate(self.vars) if v not in fixed]
        for mono, coeff in self.terms.items():
            c = coeff
            for i, val in idx_fixed:
                if mono[i]:
                    c *= val ** mono[i]
            if c == 0:
                continue
            key = tuple(mono[i] for i in idx_keep)
            s = terms.get(key, Fraction(0)) + c
            if s == 0:
                terms.pop(key, None)
            else:
                terms[key] = s
        out.terms = terms
        return out

    def substitute(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Compose: replace each mapped variable by a polynomial."""
        relevant = {v: p for v, p in mapping.items() if v in self.vars}
        if not relevant:
            return self
        target_vars = tuple(v for v in self.vars if v not in relevant)
        for p in relevant.values():
            target_vars = merge_vars(target_vars, p.vars)
        acc = MultiPoly.zero(target_vars)
        pow_cache: dict = {}

        def power(v: str, e: int) -> MultiPoly:
            key = (v, e)
            got = pow_cache.get(key)
            if got is None:
                got = relevant[v] ** e
                pow_cache[key] = got
            return got

        for mono, coeff in self.terms.items():
            piece = MultiPoly.const(coeff, target_vars)
            for i, e in enumerate(mono):
                if not e:
                    continue
                v = self.vars[i]
                if v in relevant:
                    piece = piece * power(v, e)
                else:
                    piece = piece * MultiPoly.var(v, target_vars) ** e
            acc = acc + piece
        return acc

    def rename_vars(self, mapping: Mapping[str, str]) -> "MultiPoly":
        new_names = [mapping.get(v, v) for v in self.vars]
        if len(set(new_names)) != len(new_names):
            raise ValueError("rename collides variables")
        out = MultiPoly(new_names, {})
        remap = [out.vars.index(n) for n in new_names]
        terms = {}
        for mono, coeff in self.terms.items():
            fixed = [0] * len(out.vars)
            for pos, e in enumerate(mono):
                fixed[remap[pos]] = e
            terms[tuple(fixed)] = coeff
        out.terms = terms
        return out

    # -- univariate views ---------------------------------------------

    def as_univar(self, main: str) -> list:
        """Dense coefficient list in ``main``; entry i is a MultiPoly
        over the remaining variables."""
        others = tuple(v for v in self.vars if v != main)
        if main not in self.vars:
            return [self]
        i_main = self.vars.index(main)
        d = self.degree(main)
        coeffs = [MultiPoly.zero(others) for _ in range(d + 1)]
        buckets: list = [dict() for _ in range(d + 1)]
        for mono, coeff in self.terms.items():
            rest = tuple(e for j, e in enumerate(mono) if j != i_main)
            buckets[mono[i_main]][rest] = buckets[mono[i_main]].get(rest, Fraction(0)) + coeff
        for k, b in enumerate(buckets):
            p = MultiPoly.zero(others)
            p.terms = {m: c for m, c in b.items() if c != 0}
            coeffs[k] = p
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs.pop()
        return coeffs

    @staticmethod
    def from_univar(coeffs: Iterable["MultiPoly"], main: str) -> "MultiPoly":
        acc = MultiPoly.zero((main,))
        x = MultiPoly.var(main)
        for k, c in enumerate(coeffs):
            if isinstance(c, MultiPoly) and c.is_zero:
                continue
            acc = acc + c * x ** k
        return acc

    def leading_coeff(self, main: str) -> "MultiPoly":
        return self.as_univar(main)[-1]

    def derivative(self, name: str) -> "MultiPoly":
        if name not in self.vars:
            return MultiPoly.zero(self.vars)
        i = self.vars.index(name)
        terms = {}
        for mono, coeff in self.terms.items():
            e = mono[i]
            if e:
                m2 = mono[:i] + (e - 1,) + mono[i + 1:]
                terms[m2] = terms.get(m2, Fraction(0)) + coeff * e
        out = MultiPoly.zero(self.vars)
        out.terms = {m: c for m, c in terms.items() if c != 0}
        return out

    # -- normalization ------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient primitive."""
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive(self) -> "MultiPoly":
        """Integer-coefficient primitive part with canonical sign
        (coefficient of the lexicographically greatest monomial > 0)."""
        if not self.terms:
            return self
        c = self.content()
        lead = max(self.terms)
        if self.terms[lead] < 0:
            c = -c
        out = MultiPoly.zero(self.vars)
        out.terms = {m: k / c for m, k in self.terms.items()}
        return out

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises if not divisible."""
        if divisor.is_zero:
            raise ZeroDivisionError("exact_div by zero polynomial")
        dc = divisor.constant_value()
        if dc is not None:
            return self * (Fraction(1) / dc)
        a, b = MultiPoly._aligned(self, divisor)
        rem = dict(a.terms)
        lead_b = max(b.terms)
        cb = b.terms[lead_b]
        q: dict = {}
        while rem:
            lead_r = max(rem)
            mono = tuple(er - eb for er, eb in zip(lead_r, lead_b))
            if any(e < 0 for e in mono):
                raise ValueError("exact_div: not divisible")
            coeff = rem[lead_r] / cb
            q[mono] = q.get(mono, Fraction(0)) + coeff
            for m2, c2 in b.terms.items():
                key = tuple(e1 + e2 for e1, e2 in zip(mono, m2))
                s = rem.get(key, Fraction(0)) - coeff * c2
                if s == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = s
        out = MultiPoly.zero(a.vars)
        out.terms = {m: c for m, c in q.items() if c != 0}
        return out

    # -- printing ------------------------------------------------------

    def to_text(self) -> str:
        """Render in the shared polynomial grammar (parse round-trips)."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))
        parts = []
        for mono, coeff in items:
            factors = []
            for v, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            coeff_txt = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([coeff_txt] + factors)
            else:
                body = coeff_txt
            parts.append(("-" if coeff < 0 else "+", body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


