"""Factorization of rational polynomials into monic irreducible factors.

The pipeline is square-free decomposition (Yun), then for each square-free
primitive integer part: a deterministic Berlekamp factorization modulo a
small good prime, Hensel lifting to a Landau-Mignotte coefficient bound,
and bounded subset recombination.  Every search is explicitly bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .poly import Poly, poly_exact_div, qpoly, yun_squarefree
from .rationals import QONE


@dataclass(frozen=True)
class Factorization:
    """Canonical decomposition unit * prod(factor^multiplicity), factors
    monic irreducible over the rationals, pairwise distinct."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = qpoly(self.unit)
        for f, k in self.factors:
            for _ in range(k):
                out = out * f
        return out


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, constant first)

def _content(ints: list[int]) -> int:
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return g or 1


def _to_int_primitive(p: Poly) -> tuple[list[int], Fraction]:
    """p = scale * primitive(ints) with primitive positive-leading."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    cont = _content(ints)
    if ints[-1] < 0:
        cont = -cont
    ints = [c // cont for c in ints]
    return ints, Fraction(cont, den)


def _int_to_poly(ints: list[int]) -> Poly:
    return Poly([Fraction(c) for c in ints])


def _zx_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zx_divides(num: list[int], den: list[int]) -> bool:
    """Exact division test in Z[x]."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c == 0:
            continue
        if c % lead:
            return False
        q = c // lead
        for j in range(dn + 1):
            num[k - dn + j] -= q * den[j]
    return all(c == 0 for c in num)


# ---------------------------------------------------------------------------
# arithmetic mod p

def _mod_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _mod_trim(out)


def _mod_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quot = [0] * max(0, len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return quot, _mod_trim(a[:db])


def _mod_gcd(a, b, p):
    a, b = _mod_trim(list(a)), _mod_trim(list(b))
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _mod_pow_x(e: int, f, p):
    """x^e mod (f, p) by square and multiply."""
    result = [1]
    base = _mod_divmod([0, 1], f, p)[1] if len(f) <= 2 else [0, 1]
    while e:
        if e & 1:
            result = _mod_divmod(_mod_mul(result, base, p), f, p)[1]
        base = _mod_divmod(_mod_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Factor a monic square-free f mod p into monic irreducibles.

    Deterministic: nullspace of the Frobenius map, then splitting with
    gcd(g, v - c) over all residues c.  Intended for small p.
    """
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Q matrix: row i = coefficients of x^(i*p) mod f
    xp = _mod_pow_x(p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _mod_divmod(_mod_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # nullspace of (Q - I)^T; we solve v Q = v, i.e. (Q^T - I) v = 0
    mat = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _mod_nullspace(mat, p)
    r = len(basis)
    factors = [f]
    if r == 1:
        return factors
    for v in basis:
        vv = _mod_trim(list(v))
        if len(vv) <= 1:
            continue  # constant vector splits nothing
        next_factors = []
        for g in factors:
            if len(g) - 1 <= 1:
                next_factors.append(g)
                continue
            pieces = [g]
            for c in range(p):
                shifted = list(vv)
                shifted[0] = (shifted[0] - c) % p
                shifted = _mod_trim(shifted)
                new_pieces = []
                for piece in pieces:
                    if len(piece) - 1 <= 1:
                        new_pieces.append(piece)
                        continue
                    h = _mod_gcd(piece, shifted, p)
                    if 0 < len(h) - 1 < len(piece) - 1:
                        new_pieces.append(h)
                        new_pieces.append(_mod_divmod(piece, h, p)[0])
                    else:
                        new_pieces.append(piece)
                pieces = new_pieces
            next_factors.extend(pieces)
        factors = next_factors
        if len(factors) == r:
            break
    return factors


def _mod_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Nullspace basis of a square matrix over F_p."""
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col] % p:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [0] * n
        v[col] = 1
        for pc, pr in pivots.items():
            v[pc] = (-m[pr][col]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Hensel lifting (linear steps; Bezout data stays valid mod p throughout)

def _zx_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _mod_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p (g, h coprime mod p)."""
    r0, r1 = _mod_trim([c % p for c in g]), _mod_trim([c % p for c in h])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mod_trim([(a - b) % p for a, b in _zip_pad(s0, _mod_mul(q, s1, p))])
        t0, t1 = t1, _mod_trim([(a - b) % p for a, b in _zip_pad(t0, _mod_mul(q, t1, p))])
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _hensel_pair(f, g, h, p, bound):
    """Lift f = g*h (mod p) to f = G*H (mod p^k), p^k > bound.

    Invariants kept exactly in Z: lc(G) = lc(f) representative, H monic.
    g, h must be coprime mod p with lc(g) = lc(f) mod p and h monic.
    Returns (G, H, p^k).
    """
    s, t = _mod_bezout(g, h, p)
    gbar = _mod_trim([c % p for c in g])
    hbar = _mod_trim([c % p for c in h])
    true_lc = f[-1]
    G = [c % p for c in g[:-1]] + [true_lc]
    H = list(h)
    modulus = p
    while modulus <= bound:
        new_mod = modulus * p
        err = _zx_sub(f, _zx_mul(G, H))
        e = _mod_trim([(c // modulus) % p for c in err])
        if e:
            w = _mod_mul(t, e, p)
            qq, u = _mod_divmod(w, gbar, p)
            v = _mod_trim([(a + b) % p for a, b in _zip_pad(_mod_mul(s, e, p), _mod_mul(qq, hbar, p))])
            if len(v) >= len(H) or len(u) >= len(G):
                raise AssertionError("hensel step degree overflow")
            G = [(a + modulus * b) % new_mod for a, b in _zip_pad(G[:-1], u)] + [true_lc]
            H = [(a + modulus * b) % new_mod for a, b in _zip_pad(H[:-1], v)] + [1]
        else:
            G = [c % new_mod for c in G[:-1]] + [true_lc]
            H = [c % new_mod for c in H[:-1]] + [1]
        modulus = new_mod
    return G, H, modulus


def _hensel_multifactor(f: list[int], mod_factors: list[list[int]], p: int, bound: int):
    """Lift f = lc(f) * prod(mod_factors) (mod p) to mod q > bound.

    mod_factors are monic mod p.  Returns (lifted factors, q); the lifted
    factors are monic mod q except possibly the first of each split, which
    carries the leading coefficient.  Pair-tree of two-factor lifts.
    """
    if len(mod_factors) == 1:
        q = p
        while q <= bound:
            q *= p
        return [[c % q for c in f]], q

    half = (len(mod_factors) + 1) // 2
    left, right = mod_factors[:half], mod_factors[half:]
    gl = [f[-1] % p]
    for m in left:
        gl = _mod_mul(gl, m, p)
    gr = [1]
    for m in right:
        gr = _mod_mul(gr, m, p)
    G, H, q = _hensel_pair(f, gl, gr, p, bound)
    out_left = _hensel_multifactor(G, left, p, bound)[0] if len(left) > 1 else [G]
    out_right = _hensel_multifactor(H, right, p, bound)[0] if len(right) > 1 else [H]
    return out_left + out_right, q


# ---------------------------------------------------------------------------
# Zassenhaus driver

_SMALL_PRIMES: list[int] = []


def _primes():
    if not _SMALL_PRIMES:
        sieve_limit = 2000
        sieve = bytearray([1]) * (sieve_limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, isqrt(sieve_limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
        _SMALL_PRIMES.extend(i for i, fl in enumerate(sieve) if fl)
    return _SMALL_PRIMES


def _mignotte_bound(f: list[int]) -> int:
    """Coefficient bound for any integer factor of f times lc(f)."""
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (1 << n) * norm2 * abs(f[-1])


def _factor_squarefree_int(f: list[int]) -> list[list[int]]:
    """Irreducible integer factors of a primitive square-free f,
    deg f >= 1, positive leading coefficient."""
    n = len(f) - 1
    if n == 1:
        return [f]

    # pick a good small prime: not dividing lc, f square-free mod p
    fp_factors = None
    prime = None
    for p in _primes():
        if f[-1] % p == 0:
            continue
        fbar = [c % p for c in f]
        if len(_mod_trim(list(fbar))) - 1 != n:
            continue
        dbar = _mod_trim([c * k % p for k, c in enumerate(fbar)][1:])
        if not dbar:
            continue
        if len(_mod_gcd(fbar, dbar, p)) - 1 == 0:
            prime = p
            inv = pow(f[-1] % p, p - 2, p)
            monic = [c * inv % p for c in fbar]
            fp_factors = _berlekamp(monic, p)
            break
    if fp_factors is None:
        raise RuntimeError("no good prime below sieve limit, increase it")
    if len(fp_factors) == 1:
        return [f]

    bound = 2 * _mignotte_bound(f)
    lifted, q = _hensel_multifactor(f, fp_factors, prime, bound)

    # normalize lifted factors to monic mod q for recombination
    monic_lifted = []
    for g in lifted:
        g = _mod_trim([c % q for c in g])
        inv = pow(g[-1], -1, q)
        monic_lifted.append([c * inv % q for c in g])

    def symmetric(c: int) -> int:
        c %= q
        return c - q if c > q // 2 else c

    result: list[list[int]] = []
    remaining = list(range(len(monic_lifted)))
    current = list(f)
    trailing = [g[0] % q for g in monic_lifted]

    found = True
    while found and remaining:
        found = False
        lc_cur = current[-1]
        tail_cur = current[0] * lc_cur
        for size in range(1, len(remaining) // 2 + 1):
            for subset in _subsets(remaining, size):
                # cheap filter: a true factor's trailing coefficient times
                # the stripped content divides lc * f(0) over the integers
                t = lc_cur % q
                for idx in subset:
                    t = t * trailing[idx] % q
                t = symmetric(t)
                if t == 0:
                    if current[0] != 0:
                        continue
                elif tail_cur % t:
                    continue
                prod = [lc_cur % q]
                for idx in subset:
                    prod = [c % q for c in _zx_mul(prod, monic_lifted[idx])]
                cand = [symmetric(c) for c in prod]
                cont = _content(cand)
                cand = [c // cont for c in cand]
                if cand[-1] < 0:
                    cand = [-c for c in cand]
                if len(cand) - 1 >= 1 and _zx_divides(current, cand):
                    result.append(cand)
                    current_poly = poly_exact_div(_int_to_poly(current), _int_to_poly(cand))
                    current, _ = _to_int_primitive(current_poly)
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
            if found:
                break
    if len(current) - 1 >= 1:
        result.append(current)
    return result


def _subsets(items: list[int], size: int):
    from itertools import combinations

    return combinations(items, size)


def factor_rational(p: Poly) -> Factorization:
    """Canonical decomposition of a nonzero rational polynomial: a rational
    unit times monic irreducible factors with multiplicities."""
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return Factorization(p.coeffs[0], ())
    unit = p.lead
    parts = yun_squarefree(p)
    factors: list[tuple[Poly, int]] = []
    for part, mult in parts:
        ints, _ = _to_int_primitive(part)
        for g in _factor_squarefree_int(ints):
            gp = _int_to_poly(g).monic()
            factors.append((gp, mult))
    factors.sort(key=lambda fk: (fk[0].degree, fk[0].coeffs))
    return Factorization(unit, tuple(factors))


def is_irreducible(p: Poly) -> bool:
    """Irreducibility over the rationals, degree >= 1."""
    if p.is_zero or p.degree == 0:
        return False
    fac = factor_rational(p)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
