"""Complete root-finding for polynomials with algebraic coefficients.

The real pipeline: lift coefficients into one number-field context, obtain
a rational eliminant through the resultant with the context's minimal
polynomial, isolate the eliminant's real roots, then keep exactly the
candidates where the polynomial vanishes (a gcd argument decided by Sturm
counting over the field).  Complex roots work through real/imaginary part
annihilators with an exact evaluation filter in a joint field.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraic import (
    AlgebraicComplex,
    AlgebraicReal,
    _coerce,
    complex_lex_compare,
    real_imag_annihilators,
)
from .factorization import factor_rational
from .isolation import IsolatingInterval, SturmChain, isolate_real_roots
from .numberfield import ComplexNF, NFElem, NumberFieldContext, as_number_field, embed_into
from .poly import Poly, lagrange_interpolate, poly_divmod, resultant, square_free_part
from .rationals import QONE, QZERO


# ---------------------------------------------------------------------------
# Sturm counting for polynomials over a number field

def _nf_poly_monic_gcd(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def _nf_sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 1:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero]


def _nf_variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        s = q.eval(q.coeffs[0].ctx.from_rational(x)).sign()
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _nf_count(chain: list[Poly], lo: Fraction, hi: Fraction) -> int:
    return _nf_variations(chain, lo) - _nf_variations(chain, hi)


def _nf_squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over the coefficient field (char 0)."""
    out = []
    p = p.monic()
    dp = p.derivative()
    g = _nf_poly_monic_gcd(p, dp) if p.degree >= 1 else p
    if p.degree == 0:
        return out
    if g.degree == 0:
        return [(p, 1)]
    from .poly import poly_exact_div

    w = poly_exact_div(p, g)
    y = poly_exact_div(dp, g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        f = _nf_poly_monic_gcd(w, z) if not z.is_zero else w.monic()
        if f.degree > 0:
            out.append((f.monic(), i))
        w = poly_exact_div(w, f)
        y = poly_exact_div(z, f)
        i += 1
    return out


def _norm_to_rational(ctx: NumberFieldContext, p: Poly) -> Poly:
    """prod over conjugates theta_j of p^{(j)}(x), a rational polynomial
    whose roots include all roots of p.  p has NFElem coefficients."""
    d = ctx.degree
    if d == 1:
        r = ctx.theta.as_rational()
        return Poly([c.as_poly().eval(r) if c else QZERO for c in p.coeffs])
    t = ctx.minpoly
    n = p.degree
    coeff_polys = [c.as_poly() for c in p.coeffs]
    pts = []
    s = 0
    while len(pts) < d * n + 1:
        xs = Fraction(s)
        # u(y) = sum_i coeff_i(y) * xs^i
        u = Poly(())
        power = QONE
        for cp in coeff_polys:
            u = u + cp.scale(power)
            power *= xs
        pts.append((xs, resultant(t, u)))
        s = -s if s > 0 else -s + 1
    return lagrange_interpolate(pts)


def real_roots_nf(ctx: NumberFieldContext, p: Poly) -> list[tuple[AlgebraicReal, int]]:
    """Ordered real roots with multiplicities of a polynomial with NFElem
    coefficients over ctx."""
    if p.is_zero:
        raise ValueError("root-finding on the zero polynomial")
    if p.degree == 0:
        return []
    if ctx.degree == 1 or all(c.as_rational() is not None for c in p.coeffs):
        qp = Poly([c.as_rational() if isinstance(c, NFElem) else Fraction(c) for c in p.coeffs])
        return real_roots_rational(qp)

    parts = _nf_squarefree_decomposition(p)
    p_sf = parts[0][0]
    for f, _ in parts[1:]:
        p_sf = p_sf * f
    r = _norm_to_rational(ctx, p_sf)
    r_sf = square_free_part(r)
    candidates = isolate_real_roots(r_sf, QONE)
    r_sf_ctx = Poly([ctx.from_rational(c) for c in r_sf.coeffs])
    g = _nf_poly_monic_gcd(p_sf, r_sf_ctx)
    g_chain = _nf_sturm_chain(g)
    out: list[tuple[AlgebraicReal, int]] = []
    for iv in candidates:
        if _nf_count(g_chain, iv.lo, iv.hi) != 1:
            continue
        root = AlgebraicReal(r_sf, iv.lo, iv.hi)
        mult = None
        for part, k in parts:
            h = _nf_poly_monic_gcd(part, r_sf_ctx)
            if h.degree >= 1 and _nf_count(_nf_sturm_chain(h), iv.lo, iv.hi) == 1:
                mult = k
                break
        if mult is None:
            raise AssertionError("accepted root missing from square-free parts")
        out.append((root, mult))
    return out


def real_roots_rational(p: Poly) -> list[tuple[AlgebraicReal, int]]:
    """Ordered real roots with multiplicities of a rational polynomial."""
    if p.is_zero:
        raise ValueError("root-finding on the zero polynomial")
    if p.degree == 0:
        return []
    fac = factor_rational(p)
    found: list[tuple[AlgebraicReal, int]] = []
    for f, mult in fac.factors:
        if f.degree == 1:
            found.append((AlgebraicReal.from_rational(-f.coeffs[0]), mult))
            continue
        for iv in isolate_real_roots(f, QONE):
            found.append((AlgebraicReal(f, iv.lo, iv.hi), mult))
    found.sort(key=_root_sort_key)
    return found


class _root_sort_key:
    """Exact comparison-based sort key for AlgebraicReal roots."""

    def __init__(self, pair):
        self.value = pair[0]

    def __lt__(self, other) -> bool:
        return self.value.compare(other.value) < 0


def real_roots_of(p: Poly) -> list[tuple[AlgebraicReal, int]]:
    """Real roots (with multiplicities) of a polynomial whose coefficients
    are AlgebraicReal or rational."""
    coeffs = [_coerce(c) if not isinstance(c, AlgebraicReal) else c for c in p.coeffs]
    if p.is_zero:
        raise ValueError("root-finding on the zero polynomial")
    if all(c.as_rational() is not None for c in coeffs):
        return real_roots_rational(Poly([c.as_rational() for c in coeffs]))
    ctx, images = as_number_field(coeffs)
    return real_roots_nf(ctx, Poly(images))


# ---------------------------------------------------------------------------
# complex roots

def complex_roots_of(p: Poly) -> list[tuple[AlgebraicComplex, int]]:
    """All complex roots with multiplicities of a polynomial whose
    coefficients are AlgebraicComplex (or real/rational).  The sum of the
    multiplicities equals the degree."""
    if p.is_zero:
        raise ValueError("root-finding on the zero polynomial")
    coeffs = [_to_algebraic_complex(c) for c in p.coeffs]
    if p.degree == 0:
        return []
    gens: list[AlgebraicReal] = []
    for c in coeffs:
        gens.append(c.re)
        gens.append(c.im)
    if all(g.as_rational() is not None for g in gens):
        re_q = [c.re.as_rational() for c in coeffs]
        im_q = [c.im.as_rational() for c in coeffs]
        if not any(im_q):
            return _complex_roots_rational(Poly(re_q))
    ctx, images = as_number_field(gens)
    cpoly = Poly([ComplexNF(images[2 * i], images[2 * i + 1]) for i in range(len(coeffs))])
    return _complex_roots_cnf(ctx, cpoly)


def _to_algebraic_complex(c) -> AlgebraicComplex:
    if isinstance(c, AlgebraicComplex):
        return c
    if isinstance(c, AlgebraicReal):
        return AlgebraicComplex.from_real(c)
    return AlgebraicComplex.from_rationals(Fraction(c), QZERO)


def _complex_roots_rational(p: Poly) -> list[tuple[AlgebraicComplex, int]]:
    """Complex roots of a rational polynomial via its irreducible factors."""
    fac = factor_rational(p)
    out: list[tuple[AlgebraicComplex, int]] = []
    for f, mult in fac.factors:
        out.extend((z, mult) for z in _complex_roots_irreducible(f))
    out.sort(key=_complex_sort_key)
    assert sum(m for _, m in out) == p.degree
    return out


def _complex_roots_irreducible(f: Poly) -> list[AlgebraicComplex]:
    """All complex roots of an irreducible rational polynomial."""
    if f.degree == 1:
        return [AlgebraicComplex.from_rationals(-f.coeffs[0], QZERO)]
    if f.degree == 2:
        c0, c1, _ = f.coeffs
        disc = c1 * c1 - 4 * c0
        re = AlgebraicReal.from_rational(-c1 / 2)
        if disc > 0:
            half = AlgebraicReal.from_rational(disc / 4).sqrt()
            return [AlgebraicComplex.from_real(re - half), AlgebraicComplex.from_real(re + half)]
        if disc == 0:
            return [AlgebraicComplex.from_real(re)]
        half = AlgebraicReal.from_rational(-disc / 4).sqrt()
        return [AlgebraicComplex(re, -half), AlgebraicComplex(re, half)]
    # general: candidate grid from the real/imaginary annihilators
    reals = [AlgebraicComplex.from_real(z) for z, _ in real_roots_rational(f)]
    n_real = len(reals)
    remaining = f.degree - n_real
    out = list(reals)
    if remaining:
        q1, q2 = real_imag_annihilators(f)
        re_cands = [z for z, _ in real_roots_rational(q1)]
        im_cands = [z for z, _ in real_roots_rational(q2) if z.sign() > 0]
        found_pairs = []
        for re_c in re_cands:
            for im_c in im_cands:
                if _is_root_pair(f, re_c, im_c):
                    found_pairs.append((re_c, im_c))
        for re_c, im_c in found_pairs:
            out.append(AlgebraicComplex(re_c, -im_c))
            out.append(AlgebraicComplex(re_c, im_c))
    assert len(out) == f.degree, "incomplete complex root set"
    return out


def _is_root_pair(f: Poly, re_c: AlgebraicReal, im_c: AlgebraicReal) -> bool:
    """Exact test f(re + i*im) == 0 for a rational polynomial f."""
    # interval screening first
    for _ in range(6):
        if not _complex_eval_may_vanish(f, re_c, im_c):
            return False
        re_c.refine()
        im_c.refine()
    ctx, (re_img, im_img) = as_number_field([re_c, im_c])
    z = ComplexNF(re_img, im_img)
    acc = ComplexNF(ctx.zero(), ctx.zero())
    for c in reversed(f.coeffs):
        acc = acc * z + ComplexNF(ctx.from_rational(c), ctx.zero())
    return not acc


def _complex_eval_may_vanish(f: Poly, re_c: AlgebraicReal, im_c: AlgebraicReal) -> bool:
    """Could f(re + i*im) be zero, judging from interval enclosures?"""
    rlo, rhi = re_c._lo, re_c._hi
    ilo, ihi = im_c._lo, im_c._hi
    alo = ahi = QZERO
    blo = bhi = QZERO
    for c in reversed(f.coeffs):
        # (a+bi)(x+yi) = (ax - by) + (ay + bx)i, interval version
        ax = _imul(alo, ahi, rlo, rhi)
        by = _imul(blo, bhi, ilo, ihi)
        ay = _imul(alo, ahi, ilo, ihi)
        bx = _imul(blo, bhi, rlo, rhi)
        alo, ahi = ax[0] - by[1] + c, ax[1] - by[0] + c
        blo, bhi = ay[0] + bx[0], ay[1] + bx[1]
    return alo <= 0 <= ahi and blo <= 0 <= bhi


def _imul(alo, ahi, blo, bhi):
    cands = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
    return min(cands), max(cands)


class _complex_sort_key:
    def __init__(self, pair):
        self.value = pair[0]

    def __lt__(self, other) -> bool:
        return complex_lex_compare(self.value, other.value) < 0


def _complex_roots_cnf(ctx: NumberFieldContext, p: Poly) -> list[tuple[AlgebraicComplex, int]]:
    """Complex roots of a ComplexNF-coefficient polynomial over ctx."""
    # R = p * conj(p) has real NFElem coefficients
    conj = Poly([c.conjugate() for c in p.coeffs])
    rr = p * conj
    rr_real = Poly([c.re for c in rr.coeffs])
    r = _norm_to_rational(ctx, rr_real)
    r_sf = square_free_part(r)
    q1, q2 = real_imag_annihilators(r_sf)
    re_cands = [z for z, _ in real_roots_rational(q1)]
    im_cands = [z for z, _ in real_roots_rational(q2)]
    parts = _cnf_squarefree_decomposition(p)
    out: list[tuple[AlgebraicComplex, int]] = []
    for re_c in re_cands:
        for im_c in im_cands:
            mult = _cnf_root_multiplicity(ctx, parts, p, re_c, im_c)
            if mult:
                out.append((AlgebraicComplex(re_c, im_c), mult))
    out.sort(key=_complex_sort_key)
    assert sum(m for _, m in out) == p.degree, "incomplete complex root set"
    return out


def _cnf_squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    return _nf_squarefree_decomposition(p)


def _cnf_root_multiplicity(ctx, parts, p, re_c, im_c) -> int:
    """Multiplicity of re + i*im as a root of p (0 when not a root)."""
    # cheap screen on the full polynomial
    for _ in range(8):
        if not _cnf_eval_may_vanish(ctx, p, re_c, im_c):
            return 0
        re_c.refine()
        im_c.refine()
        ctx.theta.refine()
    big_ctx, images = as_number_field([ctx.theta, re_c, im_c])
    theta_img, re_img, im_img = images
    lift = embed_into(ctx, big_ctx, theta_img)
    z = ComplexNF(re_img, im_img)

    def vanishes(q: Poly) -> bool:
        acc = ComplexNF(big_ctx.zero(), big_ctx.zero())
        for c in reversed(q.coeffs):
            cc = ComplexNF(lift(c.re), lift(c.im))
            acc = acc * z + cc
        return not acc

    if not vanishes(p):
        return 0
    for part, k in parts:
        if vanishes(part):
            return k
    raise AssertionError("root vanished on p but on no square-free part")


def _cnf_eval_may_vanish(ctx, p, re_c, im_c) -> bool:
    rlo, rhi = re_c._lo, re_c._hi
    ilo, ihi = im_c._lo, im_c._hi
    alo = ahi = QZERO
    blo = bhi = QZERO
    for c in reversed(p.coeffs):
        ax = _imul(alo, ahi, rlo, rhi)
        by = _imul(blo, bhi, ilo, ihi)
        ay = _imul(alo, ahi, ilo, ihi)
        bx = _imul(blo, bhi, rlo, rhi)
        crlo, crhi = c.re.interval_bounds()
        cilo, cihi = c.im.interval_bounds()
        alo, ahi = ax[0] - by[1] + crlo, ax[1] - by[0] + crhi
        blo, bhi = ay[0] + bx[0] + cilo, ay[1] + bx[1] + cihi
    return alo <= 0 <= ahi and blo <= 0 <= bhi