"""Real-root localization for rational polynomials.

Cauchy-style root bounds, Sturm sequences and sign-alternation counting on
half-open intervals (a, b], a Mahler-type root separation lower bound, and
bisection isolation into intervals of prescribed width.  Sturm chains are
normalized to primitive integer polynomials so all hot-path arithmetic is
integer only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import (
    Poly,
    coeff_one_norm,
    discriminant,
    is_square_free,
    poly_divmod,
    square_free_part,
)
from .rationals import sqrt_lower


@dataclass(frozen=True)
class RootBound:
    """Open symmetric interval (-bound, bound) containing all real roots."""

    bound: Fraction


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval (lo, hi] holding exactly one root of the
    polynomial it was certified against."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo < x <= self.hi


def root_bound(p: Poly) -> RootBound:
    """All real roots of p lie in (-M, M) with M = 1 + a/|lead|, a the
    largest magnitude among the non-leading coefficients."""
    if p.is_zero:
        raise ValueError("root bound of the zero polynomial")
    if p.degree == 0:
        return RootBound(Fraction(1))
    a = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return RootBound(1 + a / abs(p.lead))


def _int_normalize(p: Poly) -> list[int]:
    """Primitive integer coefficients with the same sign pattern as p."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints] if g > 1 else ints


def _int_eval_sign(ints: list[int], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, by homogeneous Horner."""
    acc = 0
    scale = 1
    for c in reversed(ints):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Positive multiple of (a mod b) over the integers.

    Classical pseudo-division scales by lc(b) once per cancellation; the
    net sign is fixed afterwards so the result is rem(a, b) times a
    positive rational, which is all sign-based counting needs.
    """
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    steps = 0
    while r and r[-1] == 0:
        r.pop()
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [c * lead for c in r]
        steps += 1
        for j in range(db + 1):
            r[shift + j] -= top * b[j]
        while r and r[-1] == 0:
            r.pop()
    if lead < 0 and steps % 2:
        r = [-c for c in r]
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return [c // g for c in a] if g > 1 else a


class SturmChain:
    """Sturm sequence of a square-free rational polynomial.

    Sign counting runs on primitive integer polynomials built by a
    positive-scaled pseudo-remainder sequence; positive rescaling preserves
    every sign evaluation, so variation counts match the classical chain
    p0 = p, p1 = p', p_j = -rem(p_{j-2}, p_{j-1}) exposed by ``polys``.
    """

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ValueError("Sturm chain of the zero polynomial")
        self._p = p
        ints = [_int_normalize(p)]
        if p.degree >= 1:
            ints.append(_int_normalize(p.derivative()))
            while len(ints[-1]) - 1 >= 1:
                rem = _int_prem(ints[-2], ints[-1])
                if not rem:
                    break
                ints.append(_int_primitive([-c for c in rem]))
        self._ints = ints

    @property
    def polys(self) -> tuple[Poly, ...]:
        """The classical rational chain (computed on demand)."""
        p = self._p
        chain = [p, p.derivative()]
        while not chain[-1].is_zero and chain[-1].degree >= 1:
            rem = poly_divmod(chain[-2], chain[-1])[1]
            if rem.is_zero:
                break
            chain.append(-rem)
        return tuple(chain)

    def variations(self, x: Fraction) -> int:
        signs = []
        num, den = x.numerator, x.denominator
        for ints in self._ints:
            s = _int_eval_sign(ints, num, den)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Number of real roots in the half-open interval (a, b]."""
        if a >= b:
            raise ValueError("need a < b")
        return self.variations(a) - self.variations(b)


def sturm_count(p: Poly, a: Fraction, b: Fraction) -> int:
    """Real roots of square-free p in (a, b] by sign alternation counts."""
    if a >= b:
        raise ValueError("need a < b")
    return SturmChain(p).count(a, b)


def separation_lower_bound(p: Poly) -> Fraction:
    """Positive rational strictly below the smallest distance between
    distinct roots of p, from the weakened Mahler bound
    m^-(m+2) * |D|^(1/2) * L^-(m-1) of the square-free part."""
    if p.is_zero or p.degree < 2:
        raise ValueError("separation bound needs degree >= 2")
    q = p if is_square_free(p) else square_free_part(p)
    if q.degree < 2:
        # all roots collapse to a single simple root; report a harmless gap
        return Fraction(1)
    m = q.degree
    d = abs(discriminant(q))
    el = coeff_one_norm(q)
    root_d = sqrt_lower(d, bits=16)
    if root_d == 0:
        # |D| tiny; retry with enough extra bits to see it
        bits = 16
        while root_d == 0:
            bits *= 2
            root_d = sqrt_lower(d, bits=bits)
    return Fraction(1, m ** (m + 2)) * root_d * el ** (-(m - 1))


def isolate_real_roots(p: Poly, eps: Fraction) -> list[IsolatingInterval]:
    """Ordered disjoint half-open intervals of width <= eps, each holding
    exactly one real root of the square-free part of p."""
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if p.degree == 0:
        return []
    q = p if is_square_free(p) else square_free_part(p)
    if q.degree == 1:
        root = -q.coeffs[0] / q.coeffs[1]
        return [IsolatingInterval(root - eps / 2, root)]
    chain = SturmChain(q)
    bound = root_bound(q).bound
    delta = separation_lower_bound(q)
    stop_width = min(eps, delta)
    out: list[IsolatingInterval] = []

    def recurse(lo: Fraction, hi: Fraction, n_roots: int):
        if n_roots == 0:
            return
        if n_roots == 1 and hi - lo <= eps:
            out.append(IsolatingInterval(lo, hi))
            return
        mid = (lo + hi) / 2
        if q.eval(mid) == 0:
            # root exactly at the bisection point: pinch it with a width
            # below the separation bound so no other root can slip in
            w = stop_width / 2
            left_edge = max(lo, mid - w)
            out.append(IsolatingInterval(left_edge, mid))
            n_left = chain.count(lo, left_edge) if lo < left_edge else 0
            recurse(lo, left_edge, n_left)
            n_right = chain.count(mid, hi)
            recurse(mid, hi, n_right)
            return
        n_left = chain.count(lo, mid)
        recurse(lo, mid, n_left)
        recurse(mid, hi, n_roots - n_left)

    total = chain.count(-bound, bound)
    recurse(-bound, bound, total)
    out.sort(key=lambda iv: iv.lo)
    return out
