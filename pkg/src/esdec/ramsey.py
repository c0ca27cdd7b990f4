"""Constructive extraction pipelines on rational sequences.

The chain of extractions here turns an arbitrary host sequence into a
fast-growing ("R-growing") sequence together with an exactly verified
embedding witness:

  1. repeated values  -> constant image (Y = 0);
  2. a strictly monotone subsequence (decreasing handled by negating,
     which folds into the witness parameters);
  3. an additive R-fold chain ("x3 - x1 >= R*(x2 - x1)" on all triples),
     obtained by striding a doubling-differences (DDC) chain or, below
     the guaranteed lengths, by direct dynamic programming;
  4. a shift by the first term, making values positive with consecutive
     ratios >= R;
  5. a multiplicative R-fold pass.  Logarithms never appear: the
     comparisons are done in exact multiplicative form (DDC on logs is
     b_i*b_k >= b_j^2, the midpoint split is x^2 <= lo*hi, R-fold is
     b_k*b_i^(R-1) >= b_j^R), with the reciprocal branch producing the
     X + Y/x witness;
  6. a final ratio normalization folded into the scale parameter.

Every extraction re-verifies its defining inequality before returning;
failures are reported, never fabricated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra import TransformKind
from .errors import ExtractionFailure, InconsistentTypeError


@dataclass(frozen=True)
class GrowthParams:
    R: int
    n: int

    def __post_init__(self):
        if not isinstance(self.R, int) or self.R < 3:
            raise ValueError("R must be an integer >= 3")
        if self.n < 1:
            raise ValueError("target length must be >= 1")


@dataclass(frozen=True)
class EmbeddingWitness:
    kind: TransformKind
    A: Fraction
    B: Fraction
    orientation: str  # forward | reversed
    index_map: tuple  # strictly increasing indices into the host

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "A": str(self.A),
            "B": str(self.B),
            "orientation": self.orientation,
            "indexMap": list(self.index_map),
        }


def canonical_growing(R: int, n: int, start: Fraction | None = None) -> list:
    """The tightest admissible R-growing sequence from ``start`` (default R)."""
    first = Fraction(start) if start is not None else Fraction(R)
    seq = [first]
    while len(seq) < n:
        seq.append(seq[-1] ** R)
    return seq


def is_R_growing(b: Sequence[Fraction], R: int) -> bool:
    """Exact check: b1 >= R and b_{i+1} >= b_i^R."""
    if not isinstance(R, int) or R < 3:
        raise ValueError("R must be an integer >= 3")
    b = [Fraction(x) for x in b]
    if not b:
        return False
    if b[0] < R:
        return False
    return all(b[i + 1] >= b[i] ** R for i in range(len(b) - 1))


def apply_transform(kind: TransformKind, x: Fraction, A: Fraction, B: Fraction) -> Fraction:
    if kind is TransformKind.F1:
        return A + B * x
    if x == 0:
        raise ZeroDivisionError("X + Y/x at x = 0")
    return A + B / x


def verify_embedding(a: Sequence[Fraction], b: Sequence[Fraction], witness: EmbeddingWitness) -> bool:
    """Exact recomputation of the transformed sequence against the host."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    idx = witness.index_map
    if len(idx) != len(b) or any(i < 0 or i >= len(a) for i in idx):
        return False
    if any(j <= i for i, j in zip(idx, idx[1:])):
        return False
    used = b if witness.orientation == "forward" else list(reversed(b))
    if witness.kind is TransformKind.F2 and any(x == 0 for x in used):
        return False  # division by zero
    for pos, x in zip(idx, used):
        if apply_transform(witness.kind, x, witness.A, witness.B) != a[pos]:
            return False
    return True


# -- comparison scales -------------------------------------------------


class _Additive:
    @staticmethod
    def ddc_ok(x, y, z):  # z - y >= y - x
        return z + x >= 2 * y

    @staticmethod
    def mid_le(x, lo, hi):  # x <= (lo + hi)/2
        return 2 * x <= lo + hi

    @staticmethod
    def rfold_append(first, last, z, R):  # z - first >= R*(last - first)
        return z - first >= R * (last - first)

    @staticmethod
    def invert(v):
        return -v


class _Multiplicative:
    """Log-domain comparisons carried out exactly on positive rationals."""

    @staticmethod
    def ddc_ok(x, y, z):  # log z - log y >= log y - log x
        return z * x >= y * y

    @staticmethod
    def mid_le(x, lo, hi):
        return x * x <= lo * hi

    @staticmethod
    def rfold_append(first, last, z, R):  # z/first >= (last/first)^R
        return z * first ** (R - 1) >= last ** R

    @staticmethod
    def invert(v):
        return 1 / v


ADDITIVE = _Additive()
MULTIPLICATIVE = _Multiplicative()


def _check_increasing(seq, scale=None) -> list:
    vals = [Fraction(x) for x in seq]
    if any(y <= x for x, y in zip(vals, vals[1:])):
        raise ValueError("input sequence must be strictly increasing")
    if scale is MULTIPLICATIVE and vals and vals[0] <= 0:
        raise ValueError("multiplicative comparisons need positive values")
    return vals


def check_ddc(seq: Sequence[Fraction]) -> bool:
    """Doubling differences, via the equivalent local form
    b_{j+1} - b_j >= b_j - b_1 (strictly increasing input required)."""
    vals = _check_increasing(seq)
    return all(vals[j + 1] - vals[j] >= vals[j] - vals[0] for j in range(1, len(vals) - 1))


def check_ddc_triples(seq: Sequence[Fraction]) -> bool:
    """The all-triples form |b_k - b_i| >= 2|b_j - b_i|; test oracle."""
    vals = [Fraction(x) for x in seq]
    return all(
        abs(vals[k] - vals[i]) >= 2 * abs(vals[j] - vals[i])
        for i, j, k in combinations(range(len(vals)), 3)
    )


@lru_cache(maxsize=None)
def ddc_guarantee_length(k: int, l: int) -> int:
    """Smallest guaranteed input length for the split extraction."""
    if k <= 0 or l <= 0:
        return 0
    if k == 1 or l == 1:
        return 1
    if k == 2 or l == 2:
        return 2
    return ddc_guarantee_length(k - 1, l) + ddc_guarantee_length(k, l - 1) - 1


@dataclass(frozen=True)
class Extraction:
    direction: str  # forward | reverse-negated
    indices: tuple  # into the input sequence, strictly increasing
    values: tuple  # input values at those indices

    def normalized(self, scale=ADDITIVE) -> list:
        """The increasing sequence the stated direction refers to:
        the values themselves, or rev(invert(values))."""
        if self.direction == "forward":
            return list(self.values)
        return [scale.invert(v) for v in reversed(self.values)]


def _ddc_split(items, k, l, scale):
    """Midpoint-split recursion; ``items`` is a list of (value, index)
    pairs, strictly increasing in value, of length >= guarantee(k, l)."""
    if k <= 1:
        return ("forward", items[:k])
    if l <= 1:
        return ("reverse-negated", items[:l])
    if k == 2:
        return ("forward", items[:2])
    if l == 2:
        return ("reverse-negated", items[:2])
    lo, hi = items[0][0], items[-1][0]
    left = [it for it in items if scale.mid_le(it[0], lo, hi)]
    right = items[len(left):]
    if len(left) >= ddc_guarantee_length(k - 1, l):
        direction, sub = _ddc_split(left, k - 1, l, scale)
        if direction == "reverse-negated":
            return direction, sub
        return "forward", sub + [items[-1]]
    direction, sub = _ddc_split(right, k, l - 1, scale)
    if direction == "forward":
        return direction, sub
    return "reverse-negated", [items[0]] + sub


def _longest_chain(values, append_ok, want=None):
    """Longest subsequence whose every append step satisfies
    ``append_ok(first, last, new)``.

    The triple conditions used here (DDC and R-fold, in either scale)
    are tightest at (first, last, new), so a chain's extendability
    depends only on its first and last elements and the O(n^3) dynamic
    program below is exact.  Returns the index list of a longest chain
    (earliest start wins ties); stops early once ``want`` is reached.
    """
    n = len(values)
    if n == 0:
        return []
    best = [0]
    for f in range(n):
        length = [0] * n
        parent: list = [None] * n
        length[f] = 1
        for j in range(f, n):
            if not length[j]:
                continue
            for t in range(j + 1, n):
                if length[j] == 1 or append_ok(values[f], values[j], values[t]):
                    if length[t] < length[j] + 1:
                        length[t] = length[j] + 1
                        parent[t] = j
        jbest = max(range(f, n), key=lambda t: (length[t], -t))
        if length[jbest] > len(best):
            chain = []
            t = jbest
            while t is not None:
                chain.append(t)
                t = parent[t]
            best = chain[::-1]
        if want is not None and len(best) >= want:
            return best
    return best

def _verify_ddc(values, scale) -> bool:
    return all(
        scale.ddc_ok(values[i], values[j], values[k])
        for i, j, k in combinations(range(len(values)), 3)
    )


def _verify_rfold(values, R, scale) -> bool:
    return all(
        scale.rfold_append(values[i], values[j], values[k], R)
        for i, j, k in combinations(range(len(values)), 3)
    )


def extract_ddc(seq: Sequence[Fraction], k: int, l: int, mode: str = "proof",
                scale=ADDITIVE) -> Extraction:
    """A subsequence of length k satisfying the doubling-differences
    condition, or one of length l whose reverse-negation does.

    ``proof`` mode runs the midpoint-split recursion and needs input
    length >= the recurrence guarantee; ``optimal`` mode runs a dynamic
    program on any input and returns the longest chain found.  Either
    way the output is re-verified exactly.
    """
    vals = _check_increasing(seq, scale)
    items = list(zip(vals, range(len(vals))))
    if mode == "proof":
        need = ddc_guarantee_length(k, l)
        if len(items) < need:
            raise ExtractionFailure(
                f"proof mode needs length >= {need} for (k={k}, l={l}), got {len(items)}",
                stage="precondition",
            )
        direction, sub = _ddc_split(items, k, l, scale)
    elif mode == "optimal":
        fwd = _longest_chain(vals, scale.ddc_ok)
        rev_vals = [scale.invert(v) for v in reversed(vals)]
        rev = _longest_chain(rev_vals, scale.ddc_ok)
        if len(fwd) >= len(rev):
            direction, sub = "forward", [(vals[i], i) for i in fwd]
        else:
            n = len(vals)
            idx = sorted(n - 1 - i for i in rev)
            direction, sub = "reverse-negated", [(vals[i], i) for i in idx]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = Extraction(direction, tuple(i for _, i in sub), tuple(v for v, _ in sub))
    if not _verify_ddc(out.normalized(scale), scale):
        raise ExtractionFailure("extracted chain failed the doubling check", stage="verify")
    return out


def extract_rfold(seq: Sequence[Fraction], n: int, R: int, scale=ADDITIVE) -> Extraction:
    """A subsequence on which "x3 - x1 >= R*(x2 - x1)" (in the given
    scale) holds everywhere, in forward or reverse-negated direction.

    Construction: extract a doubling-differences chain of length
    r*(n-1)+1 with r = ceil(log2 R) and keep every r-th element, which
    turns each doubling step into an R-fold one.  Guaranteed when the
    input reaches the recurrence length; otherwise best effort, first
    by the same striding on an optimal chain, then by a direct dynamic
    program.  The R-fold property is verified exactly before returning.
    """
    if not isinstance(R, int) or R < 2:
        raise ValueError("R must be an integer >= 2")
    vals = _check_increasing(seq, scale)
    if n <= 0:
        return Extraction("forward", (), ())
    if n <= 2:
        take = min(n, len(vals))
        return Extraction("forward", tuple(range(take)), tuple(vals[:take]))
    r = (R - 1).bit_length()  # ceil(log2 R) for R >= 2
    m = r * (n - 1) + 1

    def stride(chain: Extraction) -> Extraction | None:
        if len(chain.indices) < m:
            return None
        if chain.direction == "forward":
            picked = [chain.indices[t * r] for t in range(n)]
        else:
            top = len(chain.indices) - 1
            picked = sorted(chain.indices[top - t * r] for t in range(n))
        ext = Extraction(chain.direction, tuple(picked), tuple(vals[i] for i in picked))
        return ext if _verify_rfold(ext.normalized(scale), R, scale) else None

    if len(vals) >= ddc_guarantee_length(m, m):
        got = stride(extract_ddc(vals, m, m, "proof", scale))
        if got is not None:
            return got
    got = stride(extract_ddc(vals, m, m, "optimal", scale))
    if got is not None:
        return got
    # direct search, still exact
    fwd = _longest_chain(vals, lambda x, y, z: scale.rfold_append(x, y, z, R), want=n)
    if len(fwd) >= n:
        idx = fwd[:n]
        ext = Extraction("forward", tuple(idx), tuple(vals[i] for i in idx))
        if _verify_rfold(ext.normalized(scale), R, scale):
            return ext
    rev_vals = [scale.invert(v) for v in reversed(vals)]
    rev = _longest_chain(rev_vals, lambda x, y, z: scale.rfold_append(x, y, z, R), want=n)
    if len(rev) >= n:
        top = len(vals) - 1
        idx = sorted(top - i for i in rev[:n])
        ext = Extraction("reverse-negated", tuple(idx), tuple(vals[i] for i in idx))
        if _verify_rfold(ext.normalized(scale), R, scale):
            return ext
    raise ExtractionFailure(
        f"no {n}-term R-fold chain found in length-{len(vals)} input (R={R})",
        stage="rfold",
    )


# -- the embedding pipeline --------------------------------------------


def _strictly_monotone(a):
    """Longest strictly increasing and strictly decreasing subsequences,
    as index lists; classic O(n^2) with parent links."""
    n = len(a)
    results = []
    for cmp in (lambda u, v: u < v, lambda u, v: u > v):
        length = [1] * n
        parent: list = [None] * n
        for j in range(n):
            for i in range(j):
                if cmp(a[i], a[j]) and length[i] + 1 > length[j]:
                    length[j] = length[i] + 1
                    parent[j] = i
        jbest = max(range(n), key=lambda j: (length[j], -j)) if n else 0
        chain = []
        t = jbest if n else None
        while t is not None:
            chain.append(t)
            t = parent[t]
        results.append(chain[::-1] if n else [])
    return results[0], results[1]


@dataclass(frozen=True)
class GrowingEmbedding:
    sequence: tuple  # the R-growing sequence b
    witness: EmbeddingWitness


def _finish(a, c_vals, positions, kind, A, B) -> GrowingEmbedding:
    if all(p < q for p, q in zip(positions, positions[1:])):
        orientation, index_map, b = "forward", tuple(positions), tuple(c_vals)
    elif all(p > q for p, q in zip(positions, positions[1:])):
        orientation, index_map, b = "reversed", tuple(reversed(positions)), tuple(c_vals)
    else:
        raise ExtractionFailure("internal: non-monotone index map", stage="finish")
    witness = EmbeddingWitness(kind, Fraction(A), Fraction(B), orientation, index_map)
    emb = GrowingEmbedding(b, witness)
    if not verify_embedding(a, emb.sequence, witness):
        raise ExtractionFailure("internal: witness failed exact verification", stage="finish")
    return emb


def extract_growing_embedding(a: Sequence[Fraction], params: GrowthParams) -> GrowingEmbedding:
    """An R-growing sequence b with an exactly verified two-parameter
    embedding (x -> A + B*x or x -> A + B/x, possibly of rev(b)) into
    the host sequence.

    Raises ExtractionFailure with the losing stage when the host is too
    short or too unstructured for every branch; guarantees exist only
    at lengths far beyond desk scale, so failures are honest outcomes.
    """
    R, n = params.R, params.n
    host = [Fraction(x) for x in a]
    if not host:
        raise ExtractionFailure("empty host sequence", stage="input")

    # repeated value: constant image under B = 0
    counts: dict = {}
    for i, v in enumerate(host):
        counts.setdefault(v, []).append(i)
    value, positions = max(counts.items(), key=lambda kv: (len(kv[1]), -kv[1][0]))
    if len(positions) >= n:
        b = canonical_growing(R, n)
        witness = EmbeddingWitness(TransformKind.F1, value, Fraction(0), "forward",
                                   tuple(positions[:n]))
        emb = GrowingEmbedding(tuple(b), witness)
        if not verify_embedding(host, b, witness):
            raise ExtractionFailure("internal: constant witness failed", stage="repeat")
        return emb
    if n < 2:
        raise ExtractionFailure("internal: n=1 should use the repeat branch", stage="input")

    inc, dec = _strictly_monotone(host)
    if len(inc) >= len(dec):
        nu, mono = 1, inc
    else:
        nu, mono = -1, dec
    s_vals = [nu * host[i] for i in mono]  # strictly increasing
    s_pos = list(mono)
    if len(s_vals) < n + 1:
        raise ExtractionFailure(
            f"monotone stage found only {len(s_vals)} terms, need >= {n + 1}",
            stage="monotone",
        )

    # additive R-fold pass (prefer the longer outcome, need n+1, ideally n+2)
    try:
        pass1 = extract_rfold(s_vals, min(n + 2, len(s_vals)), R, ADDITIVE)
    except ExtractionFailure:
        try:
            pass1 = extract_rfold(s_vals, n + 1, R, ADDITIVE)
        except ExtractionFailure as exc:
            raise ExtractionFailure(
                f"additive pass found no chain of length {n + 1}", stage="pass1"
            ) from exc

    w = [s_vals[i] for i in pass1.indices]
    wpos = [s_pos[i] for i in pass1.indices]
    m = len(w)
    if pass1.direction == "forward":
        t = [w[j + 1] - w[0] for j in range(m - 1)]
        t_pos = [wpos[j + 1] for j in range(m - 1)]
        A2, eps2 = nu * w[0], nu
    else:
        t = [w[m - 1] - w[m - 2 - j] for j in range(m - 1)]
        t_pos = [wpos[m - 2 - j] for j in range(m - 1)]
        A2, eps2 = nu * w[m - 1], -nu
    assert t[0] > 0 and all(t[j + 1] >= R * t[j] for j in range(len(t) - 1))

    # rescale shortcut: t / (t1/R) starts exactly at R and often already grows fast
    lam = t[0] / R
    b_try = [x / lam for x in t[:n]]
    if len(b_try) == n and is_R_growing(b_try, R):
        return _finish(host, b_try, t_pos[:n], TransformKind.F1, A2, eps2 * lam)

    # multiplicative pass
    if len(t) < n + 1:
        raise ExtractionFailure(
            f"shifted chain has {len(t)} terms, need {n + 1} for the ratio pass",
            stage="pass2",
        )
    pass2 = extract_rfold(t, n + 1, R, MULTIPLICATIVE)
    v = [t[i] for i in pass2.indices]
    vpos = [t_pos[i] for i in pass2.indices]
    M = len(v)
    if pass2.direction == "forward":
        c = [v[i + 1] / v[0] for i in range(M - 1)]
        c_pos = [vpos[i + 1] for i in range(M - 1)]
        kind, B = TransformKind.F1, eps2 * v[0]
    else:
        c = [v[M - 1] / v[M - 2 - i] for i in range(M - 1)]
        c_pos = [vpos[M - 2 - i] for i in range(M - 1)]
        kind, B = TransformKind.F2, eps2 * v[M - 1]
    c, c_pos = c[:n], c_pos[:n]
    if not is_R_growing(c, R):
        raise ExtractionFailure("ratio-normalized chain is not R-growing", stage="pass2")
    if kind is TransformKind.F2:
        # host = A2 + eps2 * v_max / c  ==  A2 + B / c
        return _finish(host, c, c_pos, TransformKind.F2, A2, B)
    return _finish(host, c, c_pos, TransformKind.F1, A2, B)


# -- well-placed refinement and homogeneous extraction ------------------


@dataclass(frozen=True)
class RefineResult:
    values: tuple  # the surviving contiguous run of b, first/last dropped
    start: int  # slice bounds into the input b
    stop: int


def finite_ratio_magnitudes(Q, A: Fraction, B: Fraction) -> list:
    """All distinct finite nonzero |q_alpha/q_beta| over the coefficient
    system's entries, evaluated exactly at (A, B)."""
    point = {"X": Fraction(A), "Y": Fraction(B)}
    out = set()
    for entry in Q.entries:
        vals = {alpha: c.evaluate(point) for alpha, c in entry.decomp.coeffs.items()}
        for alpha, va in vals.items():
            for beta, vb in vals.items():
                if alpha == beta or vb == 0 or va == 0:
                    continue  # zero is always dwarfed, infinity always gigantic
                out.add(abs(va / vb))
    return sorted(out)


def refine_well_placed(b: Sequence[Fraction], Q, A: Fraction, B: Fraction,
                       params: GrowthParams) -> RefineResult:
    """Longest contiguous run of b avoiding every finite coefficient
    ratio, with its first and last terms dropped; verified well-placed
    (each ratio <= b1/R or >= bn^R) before returning."""
    vals = [Fraction(x) for x in b]
    if not is_R_growing(vals, params.R):
        raise ValueError("refine_well_placed: input must be R-growing")
    ratios = finite_ratio_magnitudes(Q, A, B)
    if not ratios:
        return RefineResult(tuple(vals), 0, len(vals))

    def cell(x: Fraction) -> int:
        lo, hi = 0, len(ratios)
        while lo < hi:
            mid = (lo + hi) // 2
            if ratios[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        # 2*lo for the open interval below ratios[lo], 2*lo+1 for an exact hit
        if lo < len(ratios) and ratios[lo] == x:
            return 2 * lo + 1
        return 2 * lo

    cells = [cell(x) for x in vals]
    best_start, best_stop = 0, 0
    i = 0
    while i < len(cells):
        j = i
        while j < len(cells) and cells[j] == cells[i]:
            j += 1
        if j - i > best_stop - best_start:
            best_start, best_stop = i, j
        i = j
    start, stop = best_start + 1, best_stop - 1
    if stop - start < 1:
        raise ExtractionFailure(
            "no ratio-free run long enough to refine", stage="refine"
        )
    refined = vals[start:stop]
    low, high = refined[0] / params.R, refined[-1] ** params.R
    for rho in ratios:
        if not (rho <= low or rho >= high):
            raise ExtractionFailure(
                f"ratio {rho} is neither dwarfed nor gigantic after refinement",
                stage="refine",
            )
    return RefineResult(tuple(refined), start, stop)


@dataclass(frozen=True)
class HomogeneousResult:
    indices: tuple  # into the host sequence
    values: tuple
    verdicts: dict  # member index -> "everywhere" | "nowhere"
    method: str  # "constructive" | "bruteforce"


def _homogeneous_bruteforce(host, pset, n, node_budget):
    from .predicates import member_verdicts

    N = len(host)
    nodes = 0

    def ok(prefix_vals) -> dict | None:
        v = member_verdicts(pset, prefix_vals)
        if all(s in ("everywhere", "nowhere") for s in v.values()):
            return v
        return None

    def dfs(prefix, next_start):
        nonlocal nodes
        if len(prefix) == n:
            vals = [host[i] for i in prefix]
            v = ok(vals)
            return (tuple(prefix), v) if v else None
        if len(prefix) + (N - next_start) < n:
            return None
        for t in range(next_start, N):
            nodes += 1
            if nodes > node_budget:
                raise ExtractionFailure("node budget exhausted", stage="bruteforce")
            cand = prefix + [t]
            if len(cand) >= pset.arity and ok([host[i] for i in cand]) is None:
                continue
            got = dfs(cand, t + 1)
            if got:
                return got
        return None

    found = dfs([], 0)
    if not found:
        raise ExtractionFailure(
            f"no homogeneous subsequence of length {n} found", stage="bruteforce"
        )
    idx, verdicts = found
    return HomogeneousResult(idx, tuple(host[i] for i in idx), verdicts, "bruteforce")


def extract_homogeneous(a: Sequence[Fraction], pset, n: int,
                        node_budget: int = 500_000) -> HomogeneousResult:
    """An n-term subsequence on which every member of the set holds
    everywhere or nowhere; constructive pipeline first, brute force as
    the desk-scale fallback.  Output is re-verified by definition."""
    from . import typesys
    from .algebra import sufficient_R
    from .predicates import atoms_of, member_verdicts

    host = [Fraction(x) for x in a]
    if n < 1:
        raise ValueError("n must be >= 1")

    R = 4
    for member in pset.members:
        for atom in atoms_of(member.root):
            R = max(R, sufficient_R(atom.poly))
    try:
        emb = extract_growing_embedding(host, GrowthParams(R, n + 2))
        w = emb.witness
        Q = typesys.build_Q(pset, w.kind)
        refined = refine_well_placed(emb.sequence, Q, w.A, w.B, GrowthParams(R, n + 2))
        typ = typesys.compute_type(Q, w.A, w.B, list(refined.values), R)
        if not isinstance(typ, typesys.NotWellPlaced):
            orientation = "ascending" if w.orientation == "forward" else "descending"
            typesys.eval_predicates_from_type(pset, w.kind, typ, orientation)
            start, stop = refined.start, min(refined.stop, refined.start + n)
            n_all = len(emb.sequence)
            if w.orientation == "forward":
                hostpos = w.index_map[start:stop]
            else:
                hostpos = w.index_map[n_all - stop:n_all - start]
            vals = [host[i] for i in hostpos]
            if len(vals) == n:
                verdicts = member_verdicts(pset, vals)
                if all(s in ("everywhere", "nowhere") for s in verdicts.values()):
                    return HomogeneousResult(tuple(hostpos), tuple(vals), verdicts,
                                             "constructive")
    except (ExtractionFailure, InconsistentTypeError):
        pass
    return _homogeneous_bruteforce(host, pset, n, node_budget)
