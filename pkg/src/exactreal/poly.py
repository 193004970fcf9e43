"""Dense univariate polynomials over an exact field.

Coefficients are stored constant term first.  Any coefficient type with
exact +, -, *, /, bool (zero test) and == works: Fraction, NFElem, and the
algebraic number types all qualify.  The zero polynomial has an empty
coefficient tuple and its degree is the sentinel None, never -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import QONE, QZERO


class Poly:
    """Immutable dense polynomial, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = list(self.coeffs)
        for i, c in enumerate(other.coeffs):
            if i < len(out):
                out[i] = out[i] - c
            else:
                out.append(-c)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        zero = a[0] * b[0] - a[0] * b[0]
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(())
        return Poly([a * c for a in self.coeffs])

    def eval(self, x):
        """Horner evaluation.  The zero polynomial evaluates to 0*x."""
        if not self.coeffs:
            return x - x
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs) if k >= 1])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.lead
        return Poly([c / lead for c in self.coeffs])

    def shift_arg(self, r) -> "Poly":
        """p(x + r)."""
        if self.is_zero:
            return self
        one = self.lead / self.lead
        out = Poly(())
        lin = Poly((r, one))
        for c in reversed(self.coeffs):
            out = out * lin + Poly((c,))
        return out

    def scale_arg(self, r) -> "Poly":
        """p(r * x)."""
        if self.is_zero:
            return self
        out = [self.coeffs[0]]
        power = None
        for c in self.coeffs[1:]:
            power = r if power is None else power * r
            out.append(c * power)
        return Poly(out)

    def reversed_coeffs(self) -> "Poly":
        """x^deg * p(1/x); requires a nonzero constant term for root
        reciprocity to hold."""
        return Poly(tuple(reversed(self.coeffs)))

    def compose_square(self) -> "Poly":
        """p(x^2)."""
        out = []
        for c in self.coeffs:
            out.append(c)
            out.append(c - c)
        return Poly(out[:-1]) if out else Poly(())

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly([-c if k % 2 else c for k, c in enumerate(self.coeffs)])


def qpoly(*coeffs) -> Poly:
    """Rational polynomial from int/Fraction/str coefficients, constant first."""
    out = []
    for c in coeffs:
        if isinstance(c, str):
            num, _, den = c.partition("/")
            c = Fraction(int(num), int(den)) if den else Fraction(int(num))
        out.append(Fraction(c))
    return Poly(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(remainder) < deg(q)."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    if p.is_zero or p.degree < q.degree:
        return Poly(()), p
    rem = list(p.coeffs)
    qn = q.degree
    qlead = q.lead
    quot = [None] * (len(rem) - qn)
    for k in range(len(rem) - 1, qn - 1, -1):
        c = rem[k] / qlead
        quot[k - qn] = c
        if c:
            for j in range(qn):
                rem[k - qn + j] = rem[k - qn + j] - c * q.coeffs[j]
        rem[k] = rem[k] - rem[k]
    zero = qlead - qlead
    quot = [zero if c is None else c for c in quot]
    return Poly(quot), Poly(rem[:qn])


def poly_rem(p: Poly, q: Poly) -> Poly:
    return poly_divmod(p, q)[1]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Normalized (monic) greatest common divisor.

    Rational polynomials go through a primitive integer remainder sequence
    (content stripped every step) to keep coefficients determinant-sized;
    other exact fields use the plain Euclidean algorithm.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if isinstance(p.lead, Fraction) and isinstance(q.lead, Fraction):
        return _qpoly_gcd(p, q)
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_rem(a, b)
    return a.monic()


def _int_normalize_coeffs(p: Poly) -> list[int]:
    from math import gcd as igcd

    den = 1
    for c in p.coeffs:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = igcd(g, abs(c))
    return [c // g for c in ints] if g > 1 else ints


def _qpoly_gcd(p: Poly, q: Poly) -> Poly:
    from math import gcd as igcd

    a = _int_normalize_coeffs(p)
    b = _int_normalize_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        # pseudo-remainder, then strip content
        db = len(b) - 1
        lead = b[-1]
        r = list(a)
        while len(r) - 1 >= db and r:
            top = r[-1]
            shift = len(r) - 1 - db
            r = [c * lead for c in r]
            for j in range(db + 1):
                r[shift + j] -= top * b[j]
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return Poly([Fraction(c) for c in b]).monic()
        g = 0
        for c in r:
            g = igcd(g, abs(c))
        if g > 1:
            r = [c // g for c in r]
        a, b = b, r
    return Poly((QONE,))


def poly_exact_div(p: Poly, q: Poly) -> Poly:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero:
        raise ValueError("inexact polynomial division")
    return quot


def square_free_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic: same roots, all simple.

    Requires deg(p) >= 1 over a characteristic-0 field.
    """
    if p.is_zero or p.degree == 0:
        raise ValueError("square-free part needs degree >= 1")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return poly_exact_div(p, g).monic()


def is_square_free(p: Poly) -> bool:
    if p.is_zero or p.degree == 0:
        return False
    return poly_gcd(p, p.derivative()).degree == 0


def yun_squarefree(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's square-free decomposition: p = lead * prod g_i^i with the g_i
    monic, square-free and pairwise coprime.  Returns [(g_i, i)] skipping
    trivial g_i = 1."""
    if p.is_zero:
        raise ValueError("square-free decomposition of zero polynomial")
    out: list[tuple[Poly, int]] = []
    if p.degree == 0:
        return out
    p = p.monic()
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    w = poly_exact_div(p, g)
    y = poly_exact_div(dp, g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        f = poly_gcd(w, z) if not z.is_zero else w.monic()
        if f.degree > 0:
            out.append((f.monic(), i))
        w2 = poly_exact_div(w, f)
        y = poly_exact_div(z, f)
        w = w2
        i += 1
    return out


def sylvester_matrix(p: Poly, q: Poly) -> list[list]:
    """Sylvester matrix of p, q (both of positive degree), row-major.

    First deg(q) rows carry p's coefficients highest first, then deg(p)
    rows carry q's.
    """
    m, n = p.degree, q.degree
    if not m or not n:
        raise ValueError("Sylvester matrix needs positive degrees")
    size = m + n
    zero = p.lead - p.lead
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - i - len(pc)))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - i - len(qc)))
    return rows


def resultant(p: Poly, q: Poly):
    """Resultant res(p, q), equal to det of the Sylvester matrix.

    Degenerate degrees follow the determinant convention: res = a0^n for
    deg p = 0 < n = deg q, res = b0^m symmetrically, and res = 1 when both
    degrees are 0.  A zero polynomial against positive degree gives 0.
    Computed by the Euclidean remainder recursion, not the determinant.
    """
    if p.is_zero and q.is_zero:
        return QONE
    if p.is_zero:
        return QONE if q.degree == 0 else q.lead - q.lead
    if q.is_zero:
        return QONE if p.degree == 0 else p.lead - p.lead
    m, n = p.degree, q.degree
    if m == 0 and n == 0:
        one = p.lead / p.lead
        return one
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    sign_flip = False
    one = p.lead / p.lead
    acc = one
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        if m < n:
            a, b = b, a
            m, n = n, m
            if m % 2 and n % 2:
                sign_flip = not sign_flip
        if n == 0:
            acc = acc * b.coeffs[0] ** m
            break
        r = poly_rem(a, b)
        if r.is_zero:
            return a.lead - a.lead
        if m % 2 and n % 2:
            sign_flip = not sign_flip
        acc = acc * b.lead ** (m - r.degree)
        a, b = b, r
    return -acc if sign_flip else acc


def discriminant(p: Poly):
    """Discriminant via res(p, p') = +-lead * D(p); zero iff p has a
    multiple root.  Requires deg(p) >= 2."""
    if p.is_zero or p.degree < 2:
        raise ValueError("discriminant needs degree >= 2")
    m = p.degree
    r = resultant(p, p.derivative())
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    d = r / p.lead
    return -d if sign < 0 else d


def coeff_one_norm(p: Poly) -> Fraction:
    """Sum of absolute coefficient values (rational polynomials)."""
    return sum((abs(c) for c in p.coeffs), QZERO)


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Rational polynomial through the given (x, y) pairs, Newton form."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    # Newton divided differences
    coeffs = [y for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    out = Poly((coeffs[-1],))
    for i in range(n - 2, -1, -1):
        out = out * Poly((-xs[i], QONE)) + Poly((coeffs[i],))
    return out
