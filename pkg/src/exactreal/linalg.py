"""Exact linear algebra over algebraic numbers and number fields.

Matrices are generic over any exact field element type (Fraction, NFElem,
ComplexNF, AlgebraicReal).  Decompositions lift all entries into one
number-field context where zero tests are free; eigenvector normalizers
1/sqrt(norm) are kept symbolic (core vector + squared norm) so every
invariant check stays inside the field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebraic import AlgebraicComplex, AlgebraicReal, _coerce, complex_lex_compare
from .errors import (
    DegenerateCoefficientError,
    NonSymmetricMatrixError,
    NotNormalMatrixError,
    NotPositiveDefiniteError,
    SingularMatrixError,
)
from .numberfield import (
    ComplexNF,
    NFElem,
    NumberFieldContext,
    as_number_field,
    embed_into,
    primitive_element,
)
from .poly import Poly
from .rationals import QONE, QZERO


class Matrix:
    """Immutable row-major matrix over an exact field."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one entry")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]))
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]!r})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @staticmethod
    def diag(values: Sequence, zero=QZERO) -> "Matrix":
        n = len(values)
        return Matrix([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def identity(n: int, one=QONE, zero=QZERO) -> "Matrix":
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.entries])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = other.transpose().entries
            return Matrix([[_dot(row, col) for col in cols] for row in self.entries])
        return self.map(lambda x: x * other)

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [_dot(row, vec) for row in self.entries]

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of non-square matrix")
        t = self.entries[0][0]
        for i in range(1, self.rows):
            t = t + self.entries[i][i]
        return t


def _dot(a: Sequence, b: Sequence):
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        acc = acc + x * y
    return acc


def _one_like(zero):
    """Multiplicative unit of the field a zero element belongs to."""
    if isinstance(zero, ComplexNF):
        return ComplexNF.from_real(zero.ctx.one())
    if isinstance(zero, NFElem):
        return zero.ctx.one()
    if isinstance(zero, AlgebraicReal):
        return AlgebraicReal.from_rational(1)
    if isinstance(zero, AlgebraicComplex):
        return AlgebraicComplex.from_rationals(1, 0)
    return QONE


def _field_zero_one(entries):
    """(zero, one) of the entry field, from any sample."""
    for row in entries:
        for x in row:
            if x:
                return x - x, x / x
    x = entries[0][0]
    zero = x - x if not isinstance(x, (int, Fraction)) else QZERO
    return zero, _one_like(zero)


def det(m: Matrix):
    """Exact determinant by Gaussian elimination with exact division."""
    if not m.is_square:
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    zero, one = _field_zero_one(m.entries)
    acc = one
    sign_flip = False
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign_flip = not sign_flip
        pivot = a[col][col]
        acc = acc * pivot
        inv = one / pivot
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f * inv
                for c in range(col, n):
                    a[r][c] = a[r][c] - f * a[col][c]
    return -acc if sign_flip else acc


def char_poly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(x*I - M), Faddeev-LeVerrier."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.rows
    zero, one = _field_zero_one(m.entries)
    ident = Matrix.identity(n, one, zero)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    mk = ident
    for k in range(1, n + 1):
        mk = m * mk
        c = mk.trace() / (-k)
        coeffs[n - k] = c
        if k < n:
            mk = mk + ident * c
    return Poly(coeffs)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when det = 0."""
    if not m.is_square:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    zero, one = _field_zero_one(m.entries)
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        inv_p = one / a[col][col]
        a[col] = [x * inv_p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return Matrix([row[n:] for row in a])


class GeneralSolution:
    """Outcome of solving M x = rhs: a particular solution (None when the
    system is inconsistent) and a basis of the nullspace."""

    __slots__ = ("particular", "nullspace")

    def __init__(self, particular, nullspace):
        self.particular = particular
        self.nullspace = nullspace

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def solve_general(m: Matrix, rhs: Sequence) -> GeneralSolution:
    """Gaussian elimination: particular solution plus fundamental system."""
    if len(rhs) != m.rows:
        raise ValueError("shape mismatch")
    zero, one = _field_zero_one(m.entries)
    a = [list(row) + [rhs[i]] for i, row in enumerate(m.entries)]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv_p = one / a[row][col]
        a[row] = [x * inv_p for x in a[row]]
        for r in range(nrows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    # inconsistency: zero row with nonzero rhs
    for r in range(row, nrows):
        if a[r][ncols]:
            return GeneralSolution(None, _nullspace_from_rref(a, pivots, ncols, zero, one))
    nullspace = _nullspace_from_rref(a, pivots, ncols, zero, one)
    particular = [zero] * ncols
    for r, col in enumerate(pivots):
        particular[col] = a[r][ncols]
    return GeneralSolution(particular, nullspace)


def _nullspace_from_rref(a, pivots, ncols, zero, one):
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def nullspace(m: Matrix) -> list[list]:
    zero, _ = _field_zero_one(m.entries)
    return solve_general(m, [zero] * m.rows).nullspace


def rank(m: Matrix) -> int:
    zero, _ = _field_zero_one(m.entries)
    return m.cols - len(solve_general(m, [zero] * m.rows).nullspace)


# ---------------------------------------------------------------------------
# shared eigen machinery

def _entries_to_context(m: Matrix) -> tuple[NumberFieldContext, Matrix]:
    """Lift AlgebraicReal/rational entries into one real context."""
    gens: list[AlgebraicReal] = []
    for row in m.entries:
        for x in row:
            gens.append(x if isinstance(x, AlgebraicReal) else _coerce(Fraction(x)))
    ctx, images = as_number_field(gens)
    it = iter(images)
    return ctx, Matrix([[next(it) for _ in range(m.cols)] for _ in range(m.rows)])


def _is_symmetric_ctx(m: Matrix) -> bool:
    return all(m.entries[i][j] == m.entries[j][i] for i in range(m.rows) for j in range(m.cols))


def _extend_context(base_ctx: NumberFieldContext, extra: list[AlgebraicReal]):
    """Context containing base_ctx and the extra reals; returns
    (ctx, base_embedding, extra_images)."""
    gens = [base_ctx.theta] + extra
    theta, exprs = primitive_element(gens)
    ctx = NumberFieldContext(theta, _trusted_irreducible=True)
    images = [ctx.from_poly(e) for e in exprs]
    lift = embed_into(base_ctx, ctx, images[0])
    return ctx, lift, images[1:]


def _eigen_common_context(ctx0: NumberFieldContext, mat: Matrix,
                          distinct: list[tuple[AlgebraicReal, int]]):
    """One context holding the matrix entries and every eigenvalue.

    The last distinct eigenvalue is recovered from the trace identity
    rather than by another primitive-element extension.
    """
    tr = mat.trace()
    if len(distinct) == 1:
        lam, mult = distinct[0]
        lam_img = tr / mult
        return ctx0, (lambda x: x), [lam_img]
    head = [lam for lam, _ in distinct[:-1]]
    ctx, lift, images = _extend_context(ctx0, head)
    tr_big = lift(tr)
    acc = tr_big
    for img, (_, mult) in zip(images, distinct[:-1]):
        acc = acc - img * mult
    last_img = acc / distinct[-1][1]
    return ctx, lift, images + [last_img]


class RadicalVector:
    """Vector core / sqrt(normsq) with core entries and normsq in one
    number-field context; materializes AlgebraicReal entries on demand."""

    __slots__ = ("ctx", "core", "normsq")

    def __init__(self, ctx: NumberFieldContext, core: Sequence[NFElem], normsq: NFElem):
        self.ctx = ctx
        self.core = tuple(core)
        self.normsq = normsq

    def algebraic_entries(self) -> list[AlgebraicReal]:
        denom = self.normsq.to_algebraic().sqrt()
        return [c.to_algebraic() / denom for c in self.core]

    def __repr__(self):
        return f"RadicalVector(core={list(self.core)!r}, normsq={self.normsq!r})"


def _gram_schmidt(vectors: list[list[NFElem]], inner) -> list[list[NFElem]]:
    """Orthogonalize without normalizing (the paper's recurrence)."""
    out: list[list[NFElem]] = []
    for w in vectors:
        v = list(w)
        for u in out:
            coeff = inner(v, u) / inner(u, u)
            v = [a - coeff * b for a, b in zip(v, u)]
        out.append(v)
    return out


def _sign_normalize(v: list[NFElem]) -> list[NFElem]:
    for c in v:
        s = c.sign()
        if s:
            return v if s > 0 else [-x for x in v]
    raise AssertionError("zero eigenvector")


def _clear_denominators(v: list[NFElem]) -> list[NFElem]:
    """Scale by a positive rational to keep coefficients small-ish."""
    den = 1
    num_gcd = 0
    from math import gcd as igcd

    for c in v:
        for q in c.coeffs:
            den = den * q.denominator // igcd(den, q.denominator)
    scaled = [c * den for c in v]
    for c in scaled:
        for q in c.coeffs:
            num_gcd = igcd(num_gcd, abs(q.numerator))
    if num_gcd > 1:
        scaled = [c / num_gcd for c in scaled]
    return scaled


class SpectralDecomposition:
    """Nondecreasing eigenvalues with an orthonormal eigenbasis, exactly.

    Eigenvectors are RadicalVectors in one shared context; verify_exact
    checks A v_i = lambda_i v_i, orthonormality, and the completeness
    identity sum_i lambda_i v_i v_i^T = A with free field zero tests.
    """

    def __init__(self, matrix: Matrix, ctx: NumberFieldContext, mat_ctx: Matrix,
                 eigenvalues: list[AlgebraicReal], eig_images: list[NFElem],
                 vectors: list[RadicalVector]):
        self.matrix = matrix
        self.ctx = ctx
        self._mat_ctx = mat_ctx
        self.eigenvalues = eigenvalues
        self._eig_images = eig_images
        self.eigenvectors = vectors

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def eigenvectors_algebraic(self) -> list[list[AlgebraicReal]]:
        return [v.algebraic_entries() for v in self.eigenvectors]

    def verify_exact(self) -> None:
        n = self.n
        mat = self._mat_ctx
        zero = self.ctx.zero()
        # eigen equations
        for lam, vec in zip(self._eig_images, self.eigenvectors):
            image = mat.apply(list(vec.core))
            for got, c in zip(image, vec.core):
                assert got == lam * c, "A v != lambda v"
        # orthogonality and exact norms
        for i in range(n):
            vi = self.eigenvectors[i]
            assert _dot(vi.core, vi.core) == vi.normsq, "normsq mismatch"
            assert vi.normsq.sign() > 0, "nonpositive squared norm"
            for j in range(i + 1, n):
                vj = self.eigenvectors[j]
                assert _dot(vi.core, vj.core) == zero, "eigenvectors not orthogonal"
        # completeness: sum lambda_i (core core^T)/normsq == A
        for r in range(n):
            for c in range(n):
                acc = zero
                for lam, vec in zip(self._eig_images, self.eigenvectors):
                    acc = acc + lam * vec.core[r] * vec.core[c] / vec.normsq
                assert acc == mat.entries[r][c], "spectral completeness failed"
        # ordering
        for a, b in zip(self.eigenvalues, self.eigenvalues[1:]):
            assert a.compare(b) <= 0, "eigenvalues not nondecreasing"


def spectrum(m: Matrix, *, check_symmetric: bool = True) -> list[AlgebraicReal]:
    """All eigenvalues of a symmetric matrix, nondecreasing with
    multiplicity."""
    from .rootfinding import real_roots_nf

    if not m.is_square:
        raise ValueError("spectrum of non-square matrix")
    ctx, mat = _entries_to_context(m)
    if check_symmetric and not _is_symmetric_ctx(mat):
        raise NonSymmetricMatrixError("matrix is not symmetric")
    roots = real_roots_nf(ctx, char_poly(mat))
    out: list[AlgebraicReal] = []
    for lam, mult in roots:
        out.extend([lam] * mult)
    if len(out) != m.rows:
        raise NonSymmetricMatrixError("characteristic polynomial has non-real roots")
    return out


def spectral_decomposition(m: Matrix) -> SpectralDecomposition:
    """Exact spectral decomposition of a symmetric matrix."""
    from .rootfinding import real_roots_nf

    if not m.is_square:
        raise ValueError("spectral decomposition of non-square matrix")
    ctx0, mat0 = _entries_to_context(m)
    if not _is_symmetric_ctx(mat0):
        raise NonSymmetricMatrixError("matrix is not symmetric")
    n = m.rows
    distinct = real_roots_nf(ctx0, char_poly(mat0))
    if sum(mult for _, mult in distinct) != n:
        raise NonSymmetricMatrixError("characteristic polynomial has non-real roots")
    ctx, lift, images = _eigen_common_context(ctx0, mat0, distinct)
    mat = mat0.map(lift)
    eigenvalues: list[AlgebraicReal] = []
    eig_images: list[NFElem] = []
    vectors: list[RadicalVector] = []
    ident = Matrix.identity(n, ctx.one(), ctx.zero())
    for (lam, mult), lam_img in zip(distinct, images):
        shifted = ident * lam_img - mat
        basis = nullspace(shifted)
        if len(basis) != mult:
            raise AssertionError("eigenspace dimension != multiplicity")
        ortho = _gram_schmidt(basis, _dot)
        for v in ortho:
            v = _sign_normalize(_clear_denominators(v))
            vectors.append(RadicalVector(ctx, v, _dot(v, v)))
            eigenvalues.append(lam)
            eig_images.append(lam_img)
    return SpectralDecomposition(m, ctx, mat, eigenvalues, eig_images, vectors)
