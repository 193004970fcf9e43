"""Exact real and complex algebraic numbers.

An AlgebraicReal is a square-free monic rational polynomial together with a
half-open isolating interval (lo, hi] holding exactly one of its real roots
(the root-index representation).  Arithmetic produces defining polynomials
by resultant elimination and re-isolates with interval refinement plus
Sturm certification; no step searches unboundedly.  Complex numbers are
pairs of reals with componentwise closure arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .factorization import factor_rational
from .isolation import (
    IsolatingInterval,
    SturmChain,
    isolate_real_roots,
    root_bound,
    square_free_part,
)
from .poly import Poly, lagrange_interpolate, poly_gcd, qpoly, resultant
from .rationals import QONE, QZERO, sqrt_lower, sqrt_upper

_MAX_REFINE = 20000  # far beyond any separation bound at desk scale


class AlgebraicReal:
    """Exact real algebraic number (defining polynomial + isolating interval)."""

    __slots__ = ("defpoly", "_lo", "_hi", "_chain", "_v_lo", "_v_hi", "_minpoly")

    def __init__(self, defpoly: Poly, lo: Fraction, hi: Fraction, _chain: SturmChain | None = None):
        """Internal constructor: defpoly must be monic square-free with
        exactly one real root in (lo, hi].  Use the factory functions."""
        self.defpoly = defpoly
        self._lo = lo
        self._hi = hi
        self._chain = _chain if _chain is not None else SturmChain(defpoly)
        self._v_lo = None
        self._v_hi = None
        self._minpoly = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_rational(r) -> "AlgebraicReal":
        r = Fraction(r)
        return AlgebraicReal(Poly((-r, QONE)), r - 1, r)

    @property
    def interval(self) -> IsolatingInterval:
        return IsolatingInterval(self._lo, self._hi)

    @property
    def root_index(self) -> int:
        """Position of this root among defpoly's real roots, from 0."""
        bound = root_bound(self.defpoly).bound
        if self._lo <= -bound:
            return 0
        return self._chain.count(-bound, self._lo)

    def as_rational(self) -> Fraction | None:
        """Exact rational value when the defining polynomial is linear."""
        if self.defpoly.degree == 1:
            return -self.defpoly.coeffs[0]
        return None

    # -- refinement --------------------------------------------------------

    def _variations(self):
        if self._v_lo is None:
            self._v_lo = self._chain.variations(self._lo)
            self._v_hi = self._chain.variations(self._hi)
        return self._v_lo, self._v_hi

    def refine(self) -> None:
        """Halve the isolating interval."""
        v_lo, v_hi = self._variations()
        mid = (self._lo + self._hi) / 2
        v_mid = self._chain.variations(mid)
        if v_mid - v_hi == 1:
            self._lo, self._v_lo = mid, v_mid
        else:
            self._hi, self._v_hi = mid, v_mid

    def refine_below(self, width: Fraction) -> None:
        for _ in range(_MAX_REFINE):
            if self._hi - self._lo <= width:
                return
            self.refine()
        raise RuntimeError("refinement budget exhausted")

    def _refine_off_zero(self) -> None:
        """Narrow the interval until it excludes 0 (value must be nonzero)."""
        for _ in range(_MAX_REFINE):
            if not (self._lo < 0 <= self._hi):
                return
            self.refine()
        raise RuntimeError("refinement budget exhausted (is the value zero?)")

    # -- predicates --------------------------------------------------------

    def sign(self) -> int:
        """Exact trichotomy: -1, 0, +1."""
        if self.defpoly.eval(QZERO) == 0 and self._lo < 0 <= self._hi:
            return 0
        self._refine_off_zero()
        return 1 if self._lo >= 0 else -1

    def is_zero(self) -> bool:
        return self.sign() == 0

    def compare_rational(self, r) -> int:
        """Sign of self - r, exactly."""
        r = Fraction(r)
        if self.defpoly.eval(r) == 0 and self._lo < r <= self._hi:
            return 0
        for _ in range(_MAX_REFINE):
            if not (self._lo < r <= self._hi):
                return 1 if self._lo >= r else -1
            self.refine()
        raise RuntimeError("refinement budget exhausted")

    def compare(self, other: "AlgebraicReal") -> int:
        """Sign of self - other, exactly."""
        r = other.as_rational()
        if r is not None:
            return self.compare_rational(r)
        if self.as_rational() is not None:
            return -other.compare_rational(self.as_rational())
        for _ in range(3):
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            self.refine()
            other.refine()
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraicReal):
            return self.compare(other) == 0
        if isinstance(other, (int, Fraction)):
            return self.compare_rational(other) == 0
        return NotImplemented

    __hash__ = None

    def __lt__(self, other):
        o = other if isinstance(other, AlgebraicReal) else AlgebraicReal.from_rational(other)
        return self.compare(o) < 0

    def __le__(self, other):
        o = other if isinstance(other, AlgebraicReal) else AlgebraicReal.from_rational(other)
        return self.compare(o) <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    # -- approximation -----------------------------------------------------

    def approx(self, k: int) -> Fraction:
        """Rational within 2^-k; successive k give a fast Cauchy sequence."""
        r = self.as_rational()
        if r is not None:
            return r
        self.refine_below(Fraction(1, 1 << (k + 2)))
        return self._hi

    def __float__(self) -> float:
        return float(self.approx(60))

    def __repr__(self) -> str:
        return f"AlgebraicReal(~{float(self):.6g})"

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "AlgebraicReal":
        r = self.as_rational()
        if r is not None:
            return AlgebraicReal.from_rational(-r)
        q = square_free_part(self.defpoly.reflect())

        def window():
            w = self._hi - self._lo
            return -self._hi - w, -self._lo

        return _certify(q, window, [self])

    def _add_rational(self, r: Fraction) -> "AlgebraicReal":
        if not r:
            return self
        q = self.defpoly.shift_arg(-r)
        return AlgebraicReal(q, self._lo + r, self._hi + r)

    def _mul_rational(self, r: Fraction) -> "AlgebraicReal":
        if not r:
            return AlgebraicReal.from_rational(0)
        if r == 1:
            return self
        if r < 0:
            return (-self)._mul_rational(-r)
        q = self.defpoly.scale_arg(1 / r).monic()
        return AlgebraicReal(q, self._lo * r, self._hi * r)

    def __add__(self, other) -> "AlgebraicReal":
        other = _coerce(other)
        r = other.as_rational()
        if r is not None:
            return self._add_rational(r)
        if self.as_rational() is not None:
            return other._add_rational(self.as_rational())
        p, q = self.defpoly, other.defpoly
        m = p.degree
        elim = _elim_resultant(lambda xs: _compose_linear(p, xs, Fraction(-1)), q, m * q.degree)
        elim_sf = square_free_part(elim)

        def window():
            return self._lo + other._lo, self._hi + other._hi

        return _certify(elim_sf, window, [self, other])

    def __sub__(self, other) -> "AlgebraicReal":
        other = _coerce(other)
        r = other.as_rational()
        if r is not None:
            return self._add_rational(-r)
        if self.as_rational() is not None:
            return (-other)._add_rational(self.as_rational())
        p, q = self.defpoly, other.defpoly
        elim = _elim_resultant(lambda xs: _compose_linear(p, xs, QONE), q, p.degree * q.degree)
        elim_sf = square_free_part(elim)

        def window():
            return self._lo - other._hi, self._hi - other._lo

        return _certify(elim_sf, window, [self, other])

    def __mul__(self, other) -> "AlgebraicReal":
        other = _coerce(other)
        r = other.as_rational()
        if r is not None:
            return self._mul_rational(r)
        if self.as_rational() is not None:
            return other._mul_rational(self.as_rational())
        if self.sign() == 0 or other.sign() == 0:
            return AlgebraicReal.from_rational(0)
        p = _strip_origin(self.defpoly)
        q = _strip_origin(other.defpoly)
        m = p.degree

        def build(xs: Fraction) -> Poly:
            # y^m * p(xs / y) = sum_i a_i xs^i y^(m-i); lc in y is a_0 != 0
            scaled = []
            power = QONE
            for i in range(m + 1):
                scaled.append(p.coeffs[i] * power)
                power *= xs
            return Poly(list(reversed(scaled)))

        elim = _elim_resultant(build, q, m * q.degree)
        elim_sf = square_free_part(elim)

        def window():
            prods = [self._lo * other._lo, self._lo * other._hi,
                     self._hi * other._lo, self._hi * other._hi]
            mn, mx = min(prods), max(prods)
            pad = (mx - mn) / 2 if mx > mn else Fraction(1, 1 << 16)
            return mn - pad, mx

        return _certify(elim_sf, window, [self, other])

    def invert(self) -> "AlgebraicReal":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        r = self.as_rational()
        if r is not None:
            if not r:
                raise ZeroDivisionError("invert of zero")
            return AlgebraicReal.from_rational(1 / r)
        if self.sign() == 0:
            raise ZeroDivisionError("invert of zero")
        p = _strip_origin(self.defpoly)
        q = p.reversed_coeffs().monic()
        self._refine_off_zero()
        for _ in range(_MAX_REFINE):
            if self._lo != 0 and self._hi != 0:
                break
            self.refine()

        def window():
            a, b = 1 / self._hi, 1 / self._lo
            pad = (b - a) / 2 if b > a else Fraction(1, 1 << 16)
            return a - pad, b

        return _certify(q, window, [self])

    def __truediv__(self, other) -> "AlgebraicReal":
        return self * _coerce(other).invert()

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __rsub__(self, other):
        return (-self)._add_rational(Fraction(other))

    def __rtruediv__(self, other):
        return self.invert()._mul_rational(Fraction(other))

    def sqrt(self) -> "AlgebraicReal":
        """Non-negative square root; raises on negative input."""
        s = self.sign()
        if s < 0:
            raise ValueError("sqrt of a negative algebraic real")
        if s == 0:
            return AlgebraicReal.from_rational(0)
        r = self.as_rational()
        if r is not None:
            num, den = r.numerator, r.denominator
            ns, ds = math.isqrt(num), math.isqrt(den)
            if ns * ns == num and ds * ds == den:
                return AlgebraicReal.from_rational(Fraction(ns, ds))
        q = square_free_part(self.defpoly.compose_square())
        for _ in range(_MAX_REFINE):
            if self._lo > 0:
                break
            self.refine()

        def window():
            return sqrt_lower(self._lo), sqrt_upper(self._hi)

        return _certify(q, window, [self])

    # -- structure ---------------------------------------------------------

    def minimal_polynomial(self) -> Poly:
        """Monic irreducible rational polynomial vanishing here; cached, and
        the defining polynomial is replaced by it."""
        if self._minpoly is not None:
            return self._minpoly
        if self.defpoly.degree == 1:
            self._minpoly = self.defpoly
            return self._minpoly
        fac = factor_rational(self.defpoly)
        for f, _ in fac.factors:
            if f.degree == 1:
                root = -f.coeffs[0]
                if self._lo < root <= self._hi:
                    self._replace_defpoly(f)
                    return f
            else:
                chain = SturmChain(f)
                if chain.count(self._lo, self._hi) == 1:
                    self._replace_defpoly(f, chain)
                    return f
        raise AssertionError("no irreducible factor isolates the root")

    def _replace_defpoly(self, f: Poly, chain: SturmChain | None = None):
        self.defpoly = f
        self._chain = chain if chain is not None else SturmChain(f)
        self._v_lo = None
        self._v_hi = None
        self._minpoly = f

    def degree(self) -> int:
        return self.minimal_polynomial().degree

    def floor(self) -> int:
        """Exact integer part."""
        r = self.as_rational()
        if r is not None:
            return r.numerator // r.denominator
        self.refine_below(Fraction(1, 2))
        n0 = self._hi.numerator // self._hi.denominator
        if self.compare_rational(Fraction(n0)) >= 0:
            return n0
        return n0 - 1

    def continued_fraction(self, n: int) -> list[int]:
        """First n terms of the canonical continued fraction, padding with
        zeros once the expansion terminates (rational values)."""
        terms: list[int] = []
        x: AlgebraicReal = self
        while len(terms) < n:
            t = x.floor()
            terms.append(t)
            if len(terms) == n:
                break
            d = x._add_rational(Fraction(-t))
            if d.sign() == 0:
                terms.extend([0] * (n - len(terms)))
                break
            x = d.invert()
        return terms[:n]


def _coerce(value) -> AlgebraicReal:
    if isinstance(value, AlgebraicReal):
        return value
    return AlgebraicReal.from_rational(Fraction(value))


def _strip_origin(p: Poly) -> Poly:
    """Remove the root at 0 (divide by x) if present; keeps monic."""
    if p.eval(QZERO) == 0:
        return Poly(p.coeffs[1:])
    return p


def _compose_linear(p: Poly, xs: Fraction, slope: Fraction) -> Poly:
    """p(xs + slope * y) as a polynomial in y."""
    out = Poly(())
    lin = Poly((xs, slope))
    for c in reversed(p.coeffs):
        out = out * lin + Poly((c,))
    return out


def _elim_resultant(build_u, q: Poly, deg_bound: int) -> Poly:
    """Interpolate x -> res_y(u_x(y), q(y)) through deg_bound + 1 integer
    sample points.  build_u must give polynomials whose leading coefficient
    does not depend on the sample (so specialization commutes with res)."""
    pts = []
    s = 0
    while len(pts) < deg_bound + 1:
        xs = Fraction(s)
        pts.append((xs, resultant(build_u(xs), q)))
        s = -s if s > 0 else -s + 1
    return lagrange_interpolate(pts)


def _certify(defpoly_sf: Poly, window_fn, operands, max_rounds: int = 200) -> AlgebraicReal:
    """Find a certified isolating interval for the value known to lie in the
    half-open window; refining the operands shrinks the window onto it."""
    chain = SturmChain(defpoly_sf)
    for _ in range(max_rounds):
        wlo, whi = window_fn()
        if wlo < whi and chain.count(wlo, whi) == 1:
            return AlgebraicReal(defpoly_sf, wlo, whi, chain)
        for op in operands:
            op.refine()
    raise RuntimeError("could not certify isolating interval")


# ---------------------------------------------------------------------------
# module-level operation surface

def from_root_index(p: Poly, k: int) -> AlgebraicReal | None:
    """The (k+1)-st real root of p in increasing order, or None when p is
    zero or has at most k real roots."""
    if p.is_zero or p.degree == 0:
        return None
    sf = p.monic() if p.degree == 1 else square_free_part(p)
    if sf.degree == 1:
        return AlgebraicReal.from_rational(-sf.coeffs[0]) if k == 0 else None
    intervals = isolate_real_roots(sf, QONE)
    if k >= len(intervals):
        return None
    iv = intervals[k]
    return AlgebraicReal(sf, iv.lo, iv.hi)


def field_op(a: AlgebraicReal, b: AlgebraicReal, op: str) -> AlgebraicReal:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def invert(a: AlgebraicReal) -> AlgebraicReal:
    return a.invert()


def sign(a: AlgebraicReal) -> int:
    return a.sign()


def compare(a: AlgebraicReal, b: AlgebraicReal) -> int:
    return a.compare(b)


def approx(a: AlgebraicReal, k: int) -> Fraction:
    return a.approx(k)


def minimal_polynomial(a: AlgebraicReal) -> Poly:
    return a.minimal_polynomial()


def sqrt(a) -> AlgebraicReal:
    return _coerce(a).sqrt()


def floor(a: AlgebraicReal) -> int:
    return _coerce(a).floor()


def continued_fraction(a: AlgebraicReal, n: int) -> list[int]:
    return _coerce(a).continued_fraction(n)


def sign_of_poly_at(q: Poly, a: AlgebraicReal) -> int:
    """Exact sign of the rational polynomial q at the algebraic point a."""
    if q.is_zero:
        return 0
    if q.degree == 0:
        v = q.coeffs[0]
        return (v > 0) - (v < 0)
    r = a.as_rational()
    if r is not None:
        v = q.eval(r)
        return (v > 0) - (v < 0)
    g = poly_gcd(q, a.defpoly)
    if g.degree >= 1 and SturmChain(g).count(a._lo, a._hi) == 1:
        return 0
    # nonzero at a: push q's roots out of the interval, then read the sign
    q_sf = square_free_part(q)
    chain = SturmChain(q_sf)
    for _ in range(_MAX_REFINE):
        if chain.count(a._lo, a._hi) == 0:
            v = q.eval(a._hi)
            return (v > 0) - (v < 0)
        a.refine()
    raise RuntimeError("refinement budget exhausted")


def real_imag_annihilators(r: Poly) -> tuple[Poly, Poly]:
    """Polynomials q1, q2 over the rationals such that for every complex
    root b of r, Re(b) is a root of q1 and Im(b) is a root of q2."""
    if r.is_zero:
        raise ValueError("zero polynomial")
    if r.degree == 0:
        raise ValueError("constant polynomial has no roots")
    rm = r.monic()
    m = rm.degree
    # sums of pairs of roots, then halve: q1(x) = S(2x)
    s_elim = _elim_resultant(lambda xs: _compose_linear(rm, xs, Fraction(-1)), rm, m * m)
    q1 = s_elim.scale_arg(Fraction(2)).monic()
    # differences of pairs of roots, halve, then the alternating even part
    d_elim = _elim_resultant(lambda xs: _compose_linear(rm, xs, QONE), rm, m * m)
    t = d_elim.scale_arg(Fraction(2))
    # T(i*b2) = T(-i*b2) = 0 for every root; the sum kills odd powers and
    # gives the alternating even part, the difference the odd part.  One of
    # the two is nonzero since T is.
    even = []
    for k in range(0, t.degree + 1, 2):
        c = t.coeffs[k]
        even.append(c if (k // 2) % 2 == 0 else -c)
        even.append(QZERO)
    q2 = Poly(even)
    if q2.is_zero:
        odd = [QZERO]
        for k in range(1, t.degree + 1, 2):
            c = t.coeffs[k]
            odd.append(c if ((k - 1) // 2) % 2 == 0 else -c)
            odd.append(QZERO)
        q2 = Poly(odd)
    return q1, q2.monic()


class AlgebraicComplex:
    """Complex algebraic number as a pair of real parts (closure by i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: AlgebraicReal, im: AlgebraicReal):
        self.re = re
        self.im = im

    @staticmethod
    def from_real(a) -> "AlgebraicComplex":
        return AlgebraicComplex(_coerce(a), AlgebraicReal.from_rational(0))

    @staticmethod
    def from_rationals(re, im) -> "AlgebraicComplex":
        return AlgebraicComplex(AlgebraicReal.from_rational(re), AlgebraicReal.from_rational(im))

    def is_real(self) -> bool:
        return self.im.sign() == 0

    def __add__(self, other: "AlgebraicComplex") -> "AlgebraicComplex":
        return AlgebraicComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "AlgebraicComplex") -> "AlgebraicComplex":
        return AlgebraicComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "AlgebraicComplex") -> "AlgebraicComplex":
        a, b, c, d = self.re, self.im, other.re, other.im
        return AlgebraicComplex(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "AlgebraicComplex":
        return AlgebraicComplex(-self.re, -self.im)

    def conjugate(self) -> "AlgebraicComplex":
        return AlgebraicComplex(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re.sign() == 0 and self.im.sign() == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicComplex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    __hash__ = None

    def lex_key(self):
        """Comparable proxy for the (Re, Im) lexicographic order: compare
        through AlgebraicReal comparisons."""
        return (self.re, self.im)

    def __repr__(self) -> str:
        return f"AlgebraicComplex(~{float(self.re):.6g}{float(self.im):+.6g}i)"


def complex_lex_compare(a: AlgebraicComplex, b: AlgebraicComplex) -> int:
    c = a.re.compare(b.re)
    if c:
        return c
    return a.im.compare(b.im)
