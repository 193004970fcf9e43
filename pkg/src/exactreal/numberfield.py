"""Fixed real number fields Q(theta) for bulk exact arithmetic.

A NumberFieldContext pins a monic irreducible minimal polynomial together
with an isolating interval for the real generator theta.  Elements are
rational coefficient vectors modulo the minimal polynomial; addition and
multiplication are componentwise / convolution-with-reduction, inversion
is the extended Euclidean algorithm, and zero tests are free because the
power basis is a basis.  Signs come from interval refinement of theta.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraic import AlgebraicReal, _certify, _coerce, _elim_resultant
from .factorization import factor_rational, is_irreducible
from .isolation import SturmChain, square_free_part
from .poly import Poly, lagrange_interpolate, poly_divmod, qpoly, resultant
from .rationals import QONE, QZERO

_MAX_REFINE = 20000


class NumberFieldContext:
    """The field Q(theta), theta a fixed real algebraic number."""

    def __init__(self, theta: AlgebraicReal, _trusted_irreducible: bool = False):
        minpoly = theta.minimal_polynomial() if not _trusted_irreducible else theta.defpoly
        self.minpoly = minpoly
        self.theta = theta
        self.degree = minpoly.degree
        self._reduction_table = self._build_reduction()

    def _build_reduction(self) -> list[tuple[Fraction, ...]]:
        """x^(d+k) mod minpoly for k = 0 .. d-2, as coefficient tuples."""
        d = self.degree
        table = []
        # x^d = -(lower part of minpoly)
        cur = [-c for c in self.minpoly.coeffs[:-1]]
        table.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [QZERO] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(d):
                    nxt[i] += top * table[0][i]
            cur = nxt
            table.append(tuple(cur))
        return table

    def zero(self) -> "NFElem":
        return NFElem(self, (QZERO,) * self.degree)

    def one(self) -> "NFElem":
        return NFElem(self, (QONE,) + (QZERO,) * (self.degree - 1))

    def from_rational(self, r) -> "NFElem":
        return NFElem(self, (Fraction(r),) + (QZERO,) * (self.degree - 1))

    def from_poly(self, p: Poly) -> "NFElem":
        """Reduce a rational polynomial in theta modulo the minimal polynomial."""
        rem = poly_divmod(p, self.minpoly)[1] if not p.is_zero and p.degree >= self.degree else p
        coeffs = list(rem.coeffs) + [QZERO] * (self.degree - len(rem.coeffs))
        return NFElem(self, tuple(coeffs))

    def generator(self) -> "NFElem":
        if self.degree == 1:
            return self.from_rational(self.theta.as_rational())
        return NFElem(self, (QZERO, QONE) + (QZERO,) * (self.degree - 2))

    def __repr__(self) -> str:
        return f"NumberFieldContext(deg={self.degree}, theta~{float(self.theta):.6g})"


class NFElem:
    """Element of a NumberFieldContext: rational vector in the power basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: NumberFieldContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElem):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return self.coeffs[0] == r and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "NFElem":
        other = self._coerce(other)
        return NFElem(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other) -> "NFElem":
        other = self._coerce(other)
        return NFElem(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "NFElem":
        return NFElem(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "NFElem":
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return NFElem(self.ctx, tuple(a * r for a in self.coeffs))
        if not isinstance(other, NFElem):
            return NotImplemented
        d = self.ctx.degree
        a, b = self.coeffs, other.coeffs
        conv = [QZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = list(conv[:d])
        table = self.ctx._reduction_table
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = table[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return NFElem(self.ctx, tuple(out))

    __rmul__ = __mul__

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.ctx is not self.ctx:
                raise ValueError("mixing elements from different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        raise TypeError(f"cannot coerce {type(other)} into number field")

    def inverse(self) -> "NFElem":
        """Extended Euclid against the minimal polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        a = Poly(self.coeffs)
        b = self.ctx.minpoly
        # bezout: s*a + t*b = gcd = constant
        r0, r1 = a, b
        s0, s1 = qpoly(1), Poly(())
        while not r1.is_zero:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 constant (minpoly irreducible)
        c = r0.coeffs[0]
        inv_poly = s0.scale(1 / c)
        return self.ctx.from_poly(inv_poly)

    def __truediv__(self, other) -> "NFElem":
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return NFElem(self.ctx, tuple(a / r for a in self.coeffs))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_poly(self) -> Poly:
        return Poly(self.coeffs)

    def interval_bounds(self) -> tuple[Fraction, Fraction]:
        """Rational enclosure of the real value from theta's interval."""
        theta = self.ctx.theta
        return _interval_horner(self.coeffs, theta._lo, theta._hi)

    def sign(self) -> int:
        """Exact sign; zero iff the coefficient vector is zero."""
        if not self:
            return 0
        r = self.as_rational()
        if r is not None:
            return 1 if r > 0 else -1
        theta = self.ctx.theta
        for _ in range(_MAX_REFINE):
            lo, hi = _interval_horner(self.coeffs, theta._lo, theta._hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            theta.refine()
        raise RuntimeError("sign refinement budget exhausted")

    def compare(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def abs_upper(self) -> Fraction:
        lo, hi = self.interval_bounds()
        return max(abs(lo), abs(hi))

    def min_poly_over_q(self) -> Poly:
        """Characteristic polynomial prod_j (x - g(theta_j)) over Q, a power
        of the minimal polynomial; callers factor when they need minimality."""
        if self.ctx.degree == 1:
            return Poly((-self.coeffs[0], QONE))
        g = self.as_poly()
        t = self.ctx.minpoly
        pts = []
        s = 0
        while len(pts) < self.ctx.degree + 1:
            xs = Fraction(s)
            pts.append((xs, resultant(t, Poly((xs,)) - g)))
            s = -s if s > 0 else -s + 1
        return lagrange_interpolate(pts).monic()

    def to_algebraic(self) -> AlgebraicReal:
        """The value as a stand-alone AlgebraicReal."""
        r = self.as_rational()
        if r is not None:
            return AlgebraicReal.from_rational(r)
        char = self.min_poly_over_q()
        sf = square_free_part(char)
        theta = self.ctx.theta

        def window():
            lo, hi = _interval_horner(self.coeffs, theta._lo, theta._hi)
            pad = (hi - lo) / 2 if hi > lo else Fraction(1, 1 << 16)
            return lo - pad, hi

        return _certify(sf, window, [theta])

    def __repr__(self) -> str:
        return f"NFElem({[str(c) for c in self.coeffs]})"


def _interval_horner(coeffs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p(x) for x in [lo, hi], rational interval arithmetic."""
    acc_lo = acc_hi = coeffs[-1] if coeffs else QZERO
    for c in reversed(coeffs[:-1]):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


# ---------------------------------------------------------------------------
# primitive elements

def primitive_element(gens: list[AlgebraicReal]) -> tuple[AlgebraicReal, list[Poly]]:
    """A single generator theta = g0 + s1*g1 + ... with small integer s_i,
    plus rational polynomials expressing each generator at theta.  The
    expressions are verified exactly before returning."""
    if not gens:
        raise ValueError("need at least one generator")
    gens = [_coerce(g) for g in gens]
    theta = gens[0]
    theta.minimal_polynomial()
    exprs = [Poly((QZERO, QONE))]
    for g in gens[1:]:
        theta, glue, new_expr = _primitive_pair(theta, g)
        theta.minimal_polynomial()
        exprs = [_compose_mod(e, glue, theta.minimal_polynomial()) for e in exprs]
        exprs.append(new_expr)
    # verify each expression exactly
    ctx = NumberFieldContext(theta, _trusted_irreducible=True)
    for g, e in zip(gens, exprs):
        val = ctx.from_poly(e)
        if not _nf_equals_algebraic(val, g):
            raise AssertionError("primitive element expression failed verification")
    return theta, exprs


def _primitive_pair(a: AlgebraicReal, b: AlgebraicReal) -> tuple[AlgebraicReal, Poly, Poly]:
    """theta = a + s*b generating Q(a, b); returns (theta, expr_a, expr_b)."""
    pa = a.minimal_polynomial()
    pb = b.minimal_polynomial()
    da, db = pa.degree, pb.degree
    if db == 1:
        rb = b.as_rational()
        theta = a._add_rational(rb)
        return theta, Poly((-rb, QONE)), Poly((rb,))
    if da == 1:
        ra = a.as_rational()
        # theta = a + 1*b, expr_b = x - a
        theta = b._add_rational(ra)
        return theta, Poly((ra,)), Poly((-ra, QONE))
    for s in range(1, da * db + 2):
        theta = a + b._mul_rational(Fraction(s))
        t = theta.minimal_polynomial()
        ctx = NumberFieldContext(theta, _trusted_irreducible=True)
        # gcd over Q(theta) of pb(y) and pa(theta - s*y)
        pb_ctx = Poly([ctx.from_rational(c) for c in pb.coeffs])
        shifted = _pa_of_theta_minus_sy(pa, ctx, s)
        g = _nf_poly_gcd(pb_ctx, shifted)
        if g.degree == 1:
            beta = -g.coeffs[0] / g.coeffs[1]
            expr_b = beta.as_poly()
            # a = theta - s*b
            expr_a = Poly((QZERO, QONE)) - expr_b.scale(Fraction(s))
            expr_a = poly_divmod(expr_a, t)[1] if expr_a.degree and expr_a.degree >= t.degree else expr_a
            return theta, expr_a, expr_b
    raise AssertionError("no valid primitive-element multiplier found in bound")


def _pa_of_theta_minus_sy(pa: Poly, ctx: NumberFieldContext, s: int) -> Poly:
    """pa(theta - s*y) as a polynomial in y with NFElem coefficients."""
    th = ctx.generator()
    lin = Poly((th, ctx.from_rational(-s)))
    out = Poly(())
    for c in reversed(pa.coeffs):
        out = out * lin + Poly((ctx.from_rational(c),))
    return out


def _nf_poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of polynomials with NFElem coefficients."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def _compose_mod(e: Poly, glue: Poly, modulus: Poly) -> Poly:
    """e(glue(x)) mod modulus."""
    out = Poly(())
    for c in reversed(e.coeffs):
        out = out * glue + Poly((c,))
        if not out.is_zero and out.degree >= modulus.degree:
            out = poly_divmod(out, modulus)[1]
    return out


def _nf_equals_algebraic(val: NFElem, g: AlgebraicReal) -> bool:
    """Exact equality of an NFElem value and an AlgebraicReal.

    Two steps: val must satisfy g's minimal polynomial (free zero test in
    the field), and its interval enclosure must land inside g's isolating
    interval, which pins the conjugate.
    """
    r = val.as_rational()
    if r is not None:
        return g.compare_rational(r) == 0
    pg = g.minimal_polynomial()
    acc = val.ctx.zero()
    for c in reversed(pg.coeffs):
        acc = acc * val + val.ctx.from_rational(c)
    if acc:
        return False
    # val is some root of pg; g's interval isolates exactly one root of pg,
    # so val == g iff val's enclosure ends up inside it.  Only theta is
    # refined: g's interval stays fixed, so the comparison cannot chase a
    # moving target, and g sits strictly inside its own interval (it is
    # irrational while the endpoints are rational).
    theta = val.ctx.theta
    for _ in range(_MAX_REFINE):
        vlo, vhi = val.interval_bounds()
        if vhi <= g._lo or vlo > g._hi:
            return False
        if g._lo < vlo and vhi <= g._hi:
            return True
        theta.refine()
    raise RuntimeError("equality refinement budget exhausted")


def as_number_field(gens: list[AlgebraicReal]) -> tuple[NumberFieldContext, list[NFElem]]:
    """Context generated by the given reals, plus their exact images."""
    theta, exprs = primitive_element(gens)
    ctx = NumberFieldContext(theta, _trusted_irreducible=True)
    images = [ctx.from_poly(e) for e in exprs]
    return ctx, images


def embed_into(ctx_small: NumberFieldContext, ctx_big: NumberFieldContext,
               theta_image: NFElem):
    """Embedding of ctx_small into ctx_big given the image of the small
    generator; returns a function on NFElems."""

    def embed(x: NFElem) -> NFElem:
        acc = ctx_big.zero()
        for c in reversed(x.coeffs):
            acc = acc * theta_image + ctx_big.from_rational(c)
        return acc

    return embed


class ComplexNF:
    """Complex value over a real number field: re + i*im, both NFElems.

    The closure of a real field by i; arithmetic is the usual pair
    arithmetic, zero tests are exact and free.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: NFElem, im: NFElem):
        self.re = re
        self.im = im

    @staticmethod
    def from_real(x: NFElem) -> "ComplexNF":
        return ComplexNF(x, x.ctx.zero())

    @property
    def ctx(self) -> NumberFieldContext:
        return self.re.ctx

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, ComplexNF):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re.coeffs, self.im.coeffs))

    def _coerce(self, other) -> "ComplexNF":
        if isinstance(other, ComplexNF):
            return other
        if isinstance(other, NFElem):
            return ComplexNF.from_real(other)
        if isinstance(other, (int, Fraction)):
            return ComplexNF.from_real(self.ctx.from_rational(other))
        raise TypeError(f"cannot coerce {type(other)} to ComplexNF")

    def __add__(self, other) -> "ComplexNF":
        other = self._coerce(other)
        return ComplexNF(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexNF":
        other = self._coerce(other)
        return ComplexNF(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self) -> "ComplexNF":
        return ComplexNF(-self.re, -self.im)

    def __mul__(self, other) -> "ComplexNF":
        if isinstance(other, (int, Fraction)):
            return ComplexNF(self.re * other, self.im * other)
        other = self._coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexNF(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexNF":
        return ComplexNF(self.re, -self.im)

    def norm_sq(self) -> NFElem:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "ComplexNF":
        if not self:
            raise ZeroDivisionError("inverse of complex zero")
        n = self.norm_sq().inverse()
        return ComplexNF(self.re * n, -self.im * n)

    def __truediv__(self, other) -> "ComplexNF":
        return self * self._coerce(other).inverse()

    def __repr__(self) -> str:
        return f"ComplexNF(re={self.re!r}, im={self.im!r})"
