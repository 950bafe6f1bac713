"""Exact domination polynomials.

``D(G, x) = sum_k d_k x^k`` where ``d_k`` counts dominating sets of size
``k``.  Two independent general algorithms are provided (a direct subset
scan and an inclusion-exclusion sum over undominated vertex sets) plus the
closed forms for complete graphs, complete bipartite graphs and stars, and
exact composition under clique substitution.  Coefficients are Python ints
(arbitrary precision) from the start; nothing here ever wraps around.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import intpoly
from .errors import CapacityError, DomainError
from .graph import Graph

BRUTE_FORCE_CAP = 24


@dataclass(frozen=True)
class DomPolynomial:
    """Dense coefficient vector; ``coeffs[k]`` counts dominating sets of size k."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a domination polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def domination_number(self) -> int:
        """Index of the lowest nonzero coefficient (gamma for graph-derived polynomials)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise DomainError("the zero polynomial has no domination number")

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "-" if c < 0 else ""
                var = "x" if k == 1 else f"x^{k}"
                terms.append(f"{sign}{mag}{var}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _nbh_masks(g: Graph) -> list:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def dom_poly_bruteforce(g: Graph) -> DomPolynomial:
    """Count dominating sets by scanning all 2^n subsets.

    A subset S dominates iff the union of closed neighbourhoods over S covers
    every vertex; the union is memoised over the subset lattice so each subset
    costs O(1) mask work.
    """
    n = g.n
    if n > BRUTE_FORCE_CAP:
        raise CapacityError(f"brute force is capped at {BRUTE_FORCE_CAP} vertices, got {n}")
    nbh = _nbh_masks(g)
    full = (1 << n) - 1
    counts = [0] * (n + 1)
    size = 1 << n
    if n > 20:
        from array import array
        dominated = array("Q", bytes(8 * size))
    else:
        dominated = [0] * size
    for s in range(1, size):
        low = s & -s
        d = dominated[s ^ low] | nbh[low.bit_length() - 1]
        dominated[s] = d
        if d == full:
            counts[s.bit_count()] += 1
    return DomPolynomial(tuple(counts))


def dom_poly_inclusion_exclusion(g: Graph) -> DomPolynomial:
    """Inclusion-exclusion over sets of undominated vertices.

    For each A subseteq V, the k-subsets avoiding N[A] number C(n-|N[A]|, k),
    so ``d_k = sum_A (-1)^{|A|} C(n-|N[A]|, k)``; equivalently
    ``D(G,x) = sum_A (-1)^{|A|} (1+x)^{n-|N[A]|}``.  The subsets A are walked
    in Gray-code order so that |N[A]| is maintained incrementally via
    per-vertex coverage counters - this loop is the atlas hot path.
    """
    n = g.n
    nbh_bits = [list(_iter_bits(g.adj[v] | (1 << v))) for v in range(n)]
    weight = [0] * (n + 1)
    weight[n] += 1  # A = {} covers nothing
    cover = [0] * n
    covered = 0
    prev = 0
    for i in range(1, 1 << n):
        gray = i ^ (i >> 1)
        flip = gray ^ prev
        prev = gray
        v = flip.bit_length() - 1
        if gray & flip:
            for u in nbh_bits[v]:
                cover[u] += 1
                if cover[u] == 1:
                    covered += 1
        else:
            for u in nbh_bits[v]:
                cover[u] -= 1
                if cover[u] == 0:
                    covered -= 1
        weight[n - covered] += -1 if gray.bit_count() & 1 else 1
    coeffs = [0] * (n + 1)
    for s, w in enumerate(weight):
        if w:
            for k in range(s + 1):
                coeffs[k] += w * comb(s, k)
    return DomPolynomial(tuple(coeffs))


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _one_plus_x_pow(e: int) -> list:
    return [comb(e, i) for i in range(e + 1)]


def closed_form_complete(n: int) -> DomPolynomial:
    """D(K_n) = (1+x)^n - 1: every nonempty subset dominates."""
    if n < 1:
        raise DomainError("complete graph needs order >= 1")
    c = _one_plus_x_pow(n)
    c[0] -= 1
    return DomPolynomial(tuple(c))


def closed_form_complete_bipartite(k: int, ell: int) -> DomPolynomial:
    """D(K_{k,l}) = ((1+x)^k - 1)((1+x)^l - 1) + x^k + x^l."""
    if k < 1 or ell < 1:
        raise DomainError("complete bipartite sides must be >= 1")
    a = _one_plus_x_pow(k)
    a[0] -= 1
    b = _one_plus_x_pow(ell)
    b[0] -= 1
    out = intpoly.mul(a, b)
    out = intpoly.add(out, [0] * k + [1])
    out = intpoly.add(out, [0] * ell + [1])
    out = out + [0] * (k + ell + 1 - len(out))
    return DomPolynomial(tuple(out))


def closed_form_star(k: int) -> DomPolynomial:
    """D(K_{1,k}) = x(x+1)^k + x^k."""
    if k < 1:
        raise DomainError("star needs at least one leaf")
    out = [0] + _one_plus_x_pow(k)
    out[k] += 1
    return DomPolynomial(tuple(out))


def closed_form_k2_ell(ell: int) -> DomPolynomial:
    """D(K_{2,l}) = (1+x)^l (x^2 + 2x) + x^l - 2x."""
    if ell < 1:
        raise DomainError("K_{2,l} needs l >= 1")
    out = intpoly.mul(_one_plus_x_pow(ell), [0, 2, 1])
    out = intpoly.add(out, [0] * ell + [1])
    out = intpoly.add(out, [0, -2])
    out = out + [0] * (ell + 3 - len(out))
    return DomPolynomial(tuple(out))


def closed_form_kkk(k: int) -> DomPolynomial:
    """D(K_{k,k}) = (1+x)^{2k} - 2(1+x)^k + 2x^k + 1."""
    if k < 1:
        raise DomainError("K_{k,k} needs k >= 1")
    out = _one_plus_x_pow(2 * k)
    out = intpoly.add(out, intpoly.scale(_one_plus_x_pow(k), -2))
    out = intpoly.add(out, [0] * k + [2])
    out[0] += 1
    out = out + [0] * (2 * k + 1 - len(out))
    return DomPolynomial(tuple(out))


_CLOSED_FORMS = {
    "complete": (closed_form_complete, 1),
    "complete_bipartite": (closed_form_complete_bipartite, 2),
    "star": (closed_form_star, 1),
    "K22ell": (closed_form_k2_ell, 1),
    "Kkk": (closed_form_kkk, 1),
}


def dom_poly_closed_form(kind: str, *params: int) -> DomPolynomial:
    """Dispatch: complete n | complete_bipartite k l | star k | K22ell l | Kkk k."""
    try:
        fn, arity = _CLOSED_FORMS[kind]
    except KeyError:
        raise DomainError(f"no closed form named {kind!r}") from None
    if len(params) != arity:
        raise DomainError(f"closed form {kind!r} takes {arity} parameter(s)")
    return fn(*params)


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

def compose_with_complete(p: DomPolynomial, m: int) -> DomPolynomial:
    """Evaluate ``p`` at ``(1+x)^m - 1``, expanded exactly.

    This is the domination polynomial of G[K_m] whenever ``p = D(G)``.
    Implemented as a Horner walk over a single cached expansion of
    ``(1+x)^m - 1``; the degree multiplies by ``m``.
    """
    if m < 1:
        raise DomainError("substitution order must be >= 1")
    if m == 1:
        return p
    inner = _one_plus_x_pow(m)
    inner[0] = 0
    acc = [p.coeffs[p.degree]]
    for k in range(p.degree - 1, -1, -1):
        acc = intpoly.mul(acc, inner)
        if p.coeffs[k]:
            if acc:
                acc[0] += p.coeffs[k]
            else:
                acc = [p.coeffs[k]]
    acc = acc + [0] * (p.degree * m + 1 - len(acc))
    return DomPolynomial(tuple(acc))


def multiply(p: DomPolynomial, q: DomPolynomial) -> DomPolynomial:
    """Exact coefficient convolution; D(G)D(H) = D(G + H) for disjoint unions."""
    out = intpoly.mul(list(p.coeffs), list(q.coeffs))
    out = out + [0] * (p.degree + q.degree + 1 - len(out))
    return DomPolynomial(tuple(out))


def eval_rational(p: DomPolynomial, q: Fraction) -> Fraction:
    """Exact value of ``p`` at a rational point (Horner on homogenised ints)."""
    return intpoly.eval_at(list(p.coeffs), Fraction(q))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_json(p: DomPolynomial) -> str:
    """Serialise as {"n": degree, "coeffs": [decimal strings]}.

    Coefficients are decimal strings because they routinely exceed the range
    of native integers in composed polynomials.
    """
    return json.dumps({"n": p.degree, "coeffs": [str(c) for c in p.coeffs]})


def from_json(text: str) -> DomPolynomial:
    obj = json.loads(text)
    coeffs = tuple(int(c) for c in obj["coeffs"])
    if len(coeffs) != obj["n"] + 1:
        raise DomainError("coefficient vector length disagrees with the stated degree")
    return DomPolynomial(coeffs)
