"""Exact arithmetic on integer-coefficient polynomials.

Polynomials are plain lists of Python ints in little-endian order
(``p[i]`` is the coefficient of ``x**i``).  The zero polynomial is the
empty list.  Everything here is exact; no floats enter these routines.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError

Poly = list


def normalize(p) -> list:
    """Strip trailing zero coefficients."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def is_zero(p) -> bool:
    return not p


def add(p, q) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def neg(p) -> list:
    return [-c for c in p]


def sub(p, q) -> list:
    return add(p, neg(q))


def mul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return normalize(out)


def scale(p, c: int) -> list:
    if c == 0:
        return []
    return [c * a for a in p]


def pow_(p, e: int) -> list:
    """``p**e`` by binary powering; ``e >= 0``."""
    if e < 0:
        raise DomainError("negative polynomial power")
    out = [1]
    base = list(p)
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def derivative(p) -> list:
    return normalize([i * p[i] for i in range(1, len(p))])


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(p) -> list:
    """Divide out the (positive) content; preserves sign."""
    p = normalize(p)
    if not p:
        return []
    g = content(p)
    if g <= 1:
        return p
    return [c // g for c in p]


def eval_homogeneous(p, num: int, den: int) -> int:
    """Return ``den**deg(p) * p(num/den)`` as an exact integer.

    ``den`` must be positive, so the sign of the result equals the sign of
    ``p(num/den)``.  This avoids all rational reductions on the hot path.
    """
    if not p:
        return 0
    acc = p[-1]
    pw = 1
    for i in range(len(p) - 2, -1, -1):
        pw *= den
        acc = acc * num + p[i] * pw
    return acc


def sign_at(p, q: Fraction) -> int:
    v = eval_homogeneous(p, q.numerator, q.denominator)
    return (v > 0) - (v < 0)


def eval_at(p, q: Fraction) -> Fraction:
    if not p:
        return Fraction(0)
    v = eval_homogeneous(p, q.numerator, q.denominator)
    return Fraction(v, q.denominator ** degree(p))


def exact_div(p, d) -> list:
    """Exact quotient ``p / d`` in Z[x]; raises if the division is not exact."""
    p = normalize(p)
    d = normalize(d)
    if not d:
        raise DomainError("division by the zero polynomial")
    rem = [Fraction(c) for c in p]
    lead = Fraction(d[-1])
    dd = degree(d)
    out = [Fraction(0)] * max(len(p) - dd, 0)
    for i in range(len(p) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c / lead
        out[i - dd] = q
        for j, dc in enumerate(d):
            rem[i - dd + j] -= q * dc
    if any(c != 0 for c in rem):
        raise DomainError("inexact polynomial division")
    coeffs = []
    for q in out:
        if q.denominator != 1:
            raise DomainError("quotient is not an integer polynomial")
        coeffs.append(q.numerator)
    return normalize(coeffs)


def pseudo_rem_positive(f, g) -> list:
    """Primitive part of a *positive* rational multiple of ``rem(f, g)``.

    Classical pseudo-division multiplies ``f`` by ``lc(g)**steps`` before each
    elimination; when that multiplier is negative the result is negated so the
    returned polynomial always has the same signs as the true remainder.
    """
    f = normalize(f)
    g = normalize(g)
    if not g:
        raise DomainError("pseudo-remainder by the zero polynomial")
    dg = degree(g)
    lc = g[-1]
    r = list(f)
    steps = 0
    while r and degree(r) >= dg:
        dr = degree(r)
        coef = r[-1]
        r = [lc * c for c in r]
        off = dr - dg
        for j, gc in enumerate(g):
            r[off + j] -= coef * gc
        r = normalize(r)
        steps += 1
    if lc < 0 and steps % 2 == 1:
        r = neg(r)
    return primitive(r)


def poly_gcd(f, g) -> list:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    f = primitive(f)
    g = primitive(g)
    while g:
        f, g = g, pseudo_rem_positive(f, g)
    if f and f[-1] < 0:
        f = neg(f)
    return f


def squarefree_part(p) -> list:
    """Primitive square-free part with positive leading coefficient."""
    p = normalize(p)
    if not p:
        raise DomainError("square-free part of the zero polynomial")
    if degree(p) == 0:
        return [1]
    d = derivative(p)
    g = poly_gcd(p, d)
    if degree(g) == 0:
        out = primitive(p)
    else:
        out = exact_div(p, g)
        out = primitive(out)
    if out[-1] < 0:
        out = neg(out)
    return out


def trailing_zeros(p) -> int:
    """Multiplicity of the root at 0 (index of the first nonzero coefficient)."""
    for i, c in enumerate(p):
        if c:
            return i
    return len(p)


def cauchy_root_bound(p) -> Fraction:
    """A bound B with every real root of ``p`` in [-B, B] (Cauchy's bound)."""
    p = normalize(p)
    if degree(p) < 1:
        raise DomainError("root bound needs degree >= 1")
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1])
    return 1 + Fraction(m, lead)
