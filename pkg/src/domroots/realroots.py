"""Certified real-root counting, isolation and refinement.

All certification is exact: Sturm chains over the integers (with primitive
reduction after every Euclidean step), interval endpoints as rationals, and
sign evaluations on homogenised integer forms.  Floating point appears only
in :func:`lambert_w` / :func:`star_root_estimate`, which serve as search
seeds and reporting checks, never as evidence.

Counting convention: an interval ``(lo, hi]`` is half-open on the left, so a
root exactly at ``hi`` is counted and a root exactly at ``lo`` is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import intpoly
from .errors import DomainError, EndpointRootError, InternalInvariantError

DEFAULT_TOL = Fraction(1, 10 ** 9)

NOTE_SIMPLE = "simple-certified"
NOTE_STURM = "sturm-counted"
NOTE_EXACT = "exact"

Rational = Fraction
"""Exact rational scalar.

`fractions.Fraction` already maintains the canonical form this package
needs (positive denominator, reduced by gcd), so it is used directly.
"""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise DomainError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class RationalInterval:
    """Closed rational interval with ``lo <= hi``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, q: Fraction, strict: bool = False) -> bool:
        q = _as_fraction(q)
        if strict:
            return self.lo < q < self.hi
        return self.lo <= q <= self.hi


@dataclass(frozen=True)
class RootEnclosure:
    """An interval proven to contain a real root.

    ``note`` records how the enclosure was certified: ``simple-certified``
    means the endpoint signs differ, ``sturm-counted`` means a Sturm count of
    exactly one distinct root, and ``exact`` marks a degenerate point interval
    where the polynomial evaluates to zero.
    """

    interval: RationalInterval
    sign_lo: int
    sign_hi: int
    note: str

    @property
    def midpoint(self) -> Fraction:
        return self.interval.midpoint

    @property
    def width(self) -> Fraction:
        return self.interval.width

    def __post_init__(self):
        if self.note == NOTE_SIMPLE and self.sign_lo * self.sign_hi != -1:
            raise DomainError("simple-certified enclosures need opposite endpoint signs")
        if self.note == NOTE_EXACT and self.interval.width != 0:
            raise DomainError("exact enclosures are point intervals")


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the square-free part; last element a nonzero constant."""

    polys: tuple

    @property
    def squarefree(self) -> tuple:
        return self.polys[0]


PolyLike = Union[Sequence, "object"]


def _coeffs(p) -> list:
    if hasattr(p, "coeffs"):
        return intpoly.normalize(list(p.coeffs))
    return intpoly.normalize(list(p))


def sturm_chain(p: PolyLike) -> SturmChain:
    """Build the Sturm chain on the square-free part of ``p``.

    Content is removed after every Euclidean step, which keeps coefficient
    growth manageable at the degrees the witness search produces.
    """
    coeffs = _coeffs(p)
    if not coeffs:
        raise DomainError("cannot build a Sturm chain for the zero polynomial")
    f = intpoly.squarefree_part(coeffs)
    if intpoly.degree(f) == 0:
        return SturmChain((tuple(f),))
    chain = [f, intpoly.primitive(intpoly.derivative(f))]
    while intpoly.degree(chain[-1]) > 0:
        r = intpoly.pseudo_rem_positive(chain[-2], chain[-1])
        if not r:
            raise InternalInvariantError("square-free Sturm chain hit a zero remainder")
        chain.append(intpoly.neg(r))
    return SturmChain(tuple(tuple(q) for q in chain))


def _variations(chain: SturmChain, num: int, den: int) -> int:
    prev = 0
    var = 0
    for q in chain.polys:
        v = intpoly.eval_homogeneous(list(q), num, den)
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            var += 1
        prev = s
    return var


def count_roots_in(chain: SturmChain, interval: RationalInterval) -> int:
    """Number of distinct real roots in ``(lo, hi]`` by sign-variation difference.

    Raises :class:`EndpointRootError` when either endpoint is itself a root of
    the square-free part; callers are expected to nudge and recount.
    """
    f = list(chain.squarefree)
    lo, hi = interval.lo, interval.hi
    if intpoly.sign_at(f, lo) == 0 or intpoly.sign_at(f, hi) == 0:
        raise EndpointRootError(f"interval endpoint is a root: ({lo}, {hi}]")
    if lo == hi:
        return 0
    count = _variations(chain, lo.numerator, lo.denominator) - _variations(
        chain, hi.numerator, hi.denominator
    )
    if count < 0:
        raise InternalInvariantError("negative Sturm variation difference")
    return count


def _exact_enclosure(point: Fraction) -> RootEnclosure:
    return RootEnclosure(RationalInterval(point, point), 0, 0, NOTE_EXACT)


def _sign_for_cert(p, work, t: Fraction) -> int:
    s = intpoly.sign_at(p, t)
    if s == 0:
        # only possible when 0 was deflated and the endpoint is exactly 0
        s = intpoly.sign_at(work, t)
    return s


def isolate_real_roots(
    p: PolyLike, interval: RationalInterval, tol: Fraction = DEFAULT_TOL
) -> list:
    """Isolate every distinct real root of ``p`` in ``(lo, hi]``.

    Returns pairwise-disjoint enclosures of width <= ``tol`` in ascending
    order, one per distinct root, driven by Sturm-count bisection.  A root at
    0 is split off exactly first (the constant-free part is deflated), and an
    endpoint that happens to be a root is nudged outward by ``tol/4`` until
    clean, which may pull in roots just outside the requested interval.
    """
    tol = _as_fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    coeffs = _coeffs(p)
    if not coeffs:
        raise DomainError("cannot isolate roots of the zero polynomial")
    lo, hi = interval.lo, interval.hi
    results = []
    t0 = intpoly.trailing_zeros(coeffs)
    work = coeffs[t0:] if t0 else coeffs
    if t0 and lo < 0 <= hi:
        results.append(_exact_enclosure(Fraction(0)))
    if intpoly.degree(work) < 1:
        return results
    f = intpoly.squarefree_part(work)
    chain = sturm_chain(work)
    step = tol / 4
    while intpoly.sign_at(f, lo) == 0:
        lo -= step
    while intpoly.sign_at(f, hi) == 0:
        hi += step
    total = count_roots_in(chain, RationalInterval(lo, hi))
    stack = [(lo, hi, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            results.append(_refine_one(coeffs, work, f, chain, a, b, tol))
            continue
        mid = (a + b) / 2
        if intpoly.sign_at(f, mid) == 0:
            results.append(_exact_enclosure(mid))
            gap = min(step, (b - a) / 8)
            while True:
                ml, mr = mid - gap, mid + gap
                if intpoly.sign_at(f, ml) != 0 and intpoly.sign_at(f, mr) != 0:
                    cl = count_roots_in(chain, RationalInterval(a, ml))
                    cr = count_roots_in(chain, RationalInterval(mr, b))
                    if cl + cr + 1 == cnt:
                        break
                gap /= 2
            stack.append((a, ml, cl))
            stack.append((mr, b, cr))
        else:
            cl = count_roots_in(chain, RationalInterval(a, mid))
            stack.append((a, mid, cl))
            stack.append((mid, b, cnt - cl))
    results.sort(key=lambda e: (e.interval.lo, e.interval.hi))
    _separate(results, coeffs, work, f, chain)
    return results


def _refine_one(orig, work, f, chain, a: Fraction, b: Fraction, tol) -> RootEnclosure:
    while b - a > tol:
        mid = (a + b) / 2
        s = intpoly.sign_at(f, mid)
        if s == 0:
            return _exact_enclosure(mid)
        if count_roots_in(chain, RationalInterval(a, mid)) == 1:
            b = mid
        else:
            a = mid
    sl = _sign_for_cert(orig, work, a)
    sh = _sign_for_cert(orig, work, b)
    note = NOTE_SIMPLE if sl * sh == -1 else NOTE_STURM
    return RootEnclosure(RationalInterval(a, b), sl, sh, note)


def _shrink(enc: RootEnclosure, orig, work, f, chain) -> RootEnclosure:
    a, b = enc.interval.lo, enc.interval.hi
    mid = (a + b) / 2
    if intpoly.sign_at(f, mid) == 0:
        return _exact_enclosure(mid)
    if count_roots_in(chain, RationalInterval(a, mid)) == 1:
        b = mid
    else:
        a = mid
    sl = _sign_for_cert(orig, work, a)
    sh = _sign_for_cert(orig, work, b)
    note = NOTE_SIMPLE if sl * sh == -1 else NOTE_STURM
    return RootEnclosure(RationalInterval(a, b), sl, sh, note)


def _separate(results: list, orig, work, f, chain) -> None:
    """Bisect adjacent enclosures until they are strictly disjoint."""
    for i in range(len(results) - 1):
        guard = 0
        while results[i].interval.hi >= results[i + 1].interval.lo:
            if results[i].note != NOTE_EXACT:
                results[i] = _shrink(results[i], orig, work, f, chain)
            if results[i + 1].note != NOTE_EXACT:
                results[i + 1] = _shrink(results[i + 1], orig, work, f, chain)
            guard += 1
            if guard > 512:
                raise InternalInvariantError("failed to separate adjacent enclosures")


# ---------------------------------------------------------------------------
# Lambert W and the star-root sequence
# ---------------------------------------------------------------------------

def lambert_w(x: float) -> float:
    """Principal-branch Lambert W on the nonnegative reals.

    Halley iteration, seeded by ``ln x - ln ln x`` for ``x >= e`` and by the
    leading series terms ``x(1 - x)`` in the small-x region; the residual
    ``|w e^w - x|`` is driven below ``1e-12 * max(1, x)``.
    """
    x = float(x)
    if x < 0:
        raise DomainError("lambert_w is only defined for x >= 0 here")
    if x == 0.0:
        return 0.0
    if x >= math.e:
        lx = math.log(x)
        w = lx - math.log(lx) if lx > 0 else lx
    elif x <= 1.0:
        w = x * (1.0 - x)
    else:
        w = 0.7
    target = 1e-13 * max(1.0, x)
    for _ in range(60):
        ew = math.exp(w)
        err = w * ew - x
        if abs(err) <= target:
            break
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * err / (2.0 * wp1)
        w -= err / denom
    return w


def star_root_estimate(k: int) -> float:
    """Leading asymptotic terms ``k/W(k) + W(k)/(2(1+W(k)))`` for the star root."""
    if k < 1:
        raise DomainError("star index must be >= 1")
    w = lambert_w(float(k))
    return k / w + w / (2.0 * (1.0 + w))


def star_shifted_polynomial(k: int) -> list:
    """Coefficients of ``g(R) = R(R-1)^k - R^k``.

    ``R`` is a root of ``g`` in (1, oo) exactly when ``-R`` is a real root of
    the domination polynomial of the star with ``k`` leaves.
    """
    if k < 1:
        raise DomainError("star index must be >= 1")
    g = intpoly.mul([0, 1], intpoly.pow_([-1, 1], k))
    g = intpoly.add(g, [0] * k + [-1])
    return g


def _g_sign(k: int, q: Fraction) -> int:
    # sign of g(u/v) from the homogenised closed form u(u-v)^k - u^k v
    u, v = q.numerator, q.denominator
    val = u * (u - v) ** k - u ** k * v
    return (val > 0) - (val < 0)


def star_root(k: int, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Certified enclosure of the unique root of ``R(R-1)^k - R^k`` above 1.

    On (1, oo) the equation ``(R/(R-1))^k = R`` balances a strictly decreasing
    against a strictly increasing side, so there is exactly one crossing; the
    enclosure is certified by exact endpoint signs (``g(1) = -1`` always).
    The search is seeded by the floating asymptotic estimate but all evidence
    is exact.
    """
    if k < 1:
        raise DomainError("star index must be >= 1")
    tol = _as_fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    est = star_root_estimate(k)
    for cand in (round(est), round(est) - 1, round(est) + 1):
        if cand > 1 and _g_sign(k, Fraction(cand)) == 0:
            return _exact_enclosure(Fraction(cand))
    lo = Fraction(max(1, math.floor(est) - 2))
    if lo > 1 and _g_sign(k, lo) >= 0:
        lo = Fraction(1)
    hi = Fraction(math.ceil(est) + 2)
    while _g_sign(k, hi) < 0:
        hi *= 2
    if _g_sign(k, hi) == 0:
        return _exact_enclosure(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _g_sign(k, mid)
        if s == 0:
            return _exact_enclosure(mid)
        if s < 0:
            lo = mid
        else:
            hi = mid
    return RootEnclosure(RationalInterval(lo, hi), -1, +1, NOTE_SIMPLE)


def star_domination_root(k: int, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Certified enclosure of the extremal real root of the star's domination polynomial.

    Negates :func:`star_root` and fixes up the endpoint signs so they refer to
    ``D(K_{1,k}, x) = x(x+1)^k + x^k`` itself (the two polynomials differ by a
    mirror and a factor of ``(-1)^(k+1)``).
    """
    enc = star_root(k, tol)
    if enc.note == NOTE_EXACT:
        return _exact_enclosure(-enc.interval.lo)
    sigma = 1 if k % 2 == 1 else -1
    return RootEnclosure(
        RationalInterval(-enc.interval.hi, -enc.interval.lo),
        sigma * enc.sign_hi,
        sigma * enc.sign_lo,
        enc.note,
    )


@dataclass(frozen=True)
class StarGapRecord:
    """One row of the star-root progression report."""

    k: int
    enclosure: RootEnclosure
    gap: Optional[Fraction]
    estimate: float
    abs_err: float


def star_gap_report(k_max: int, tol: Fraction = DEFAULT_TOL) -> list:
    """Certified star roots for k = 1..k_max with gaps and asymptotic errors.

    ``gap`` is the midpoint difference to the next root (None on the last
    row).  Successive enclosures are checked to be disjoint and increasing,
    which certifies strict monotonicity of the sequence.
    """
    if k_max < 2:
        raise DomainError("the gap report needs k_max >= 2")
    roots = [star_root(k, tol) for k in range(1, k_max + 1)]
    for k in range(len(roots) - 1):
        if not roots[k].interval.hi < roots[k + 1].interval.lo:
            raise InternalInvariantError(
                f"star root enclosures for k={k + 1},{k + 2} are not increasing"
            )
    records = []
    for i, enc in enumerate(roots):
        k = i + 1
        est = star_root_estimate(k)
        gap = roots[i + 1].midpoint - enc.midpoint if i + 1 < len(roots) else None
        records.append(
            StarGapRecord(k, enc, gap, est, abs(float(enc.midpoint) - est))
        )
    return records


def format_fixed(q: Fraction, digits: int = 12) -> str:
    """Render a rational as a fixed-point decimal with ``digits`` places."""
    q = _as_fraction(q)
    scaled = q * 10 ** digits
    i = round(scaled)
    sign = "-" if i < 0 else ""
    whole, frac = divmod(abs(i), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def star_gap_csv(records) -> str:
    """CSV rows ``k,r_k_lo,r_k_hi,gap,estimate,abs_err`` (12-digit fixed point)."""
    lines = ["k,r_k_lo,r_k_hi,gap,estimate,abs_err"]
    for r in records:
        gap = format_fixed(r.gap) if r.gap is not None else ""
        lines.append(
            f"{r.k},{format_fixed(r.enclosure.interval.lo)},"
            f"{format_fixed(r.enclosure.interval.hi)},{gap},"
            f"{r.estimate:.12f},{r.abs_err:.12f}"
        )
    return "\n".join(lines) + "\n"
