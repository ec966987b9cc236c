"""Factorization of integer polynomials over Q and modulo primes.

The pipeline is classical Zassenhaus: reduce a primitive squarefree
polynomial modulo several primes, keep the prime with the fewest modular
factors, Hensel-lift those factors past the Mignotte coefficient bound,
then recombine subsets with exact trial division.  Recombination is
exhaustive over subsets of size <= m/2, so the routine is complete without
any lattice step.

Modulo-p polynomials are plain ascending coefficient lists with entries in
[0, p); the public wrapper type is `ModPoly`.  Equal-degree splitting uses
a fixed PRNG seed, so factorizations are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactpoly import IntPoly, RatPoly, format_poly

__all__ = [
    "ModPoly",
    "DegreePattern",
    "FactorizationQ",
    "BadPrimeError",
    "factor_mod_p",
    "degree_pattern",
    "possible_degrees",
    "hensel_lift",
    "factor_over_q",
    "is_irreducible_over_q",
    "rational_roots",
    "squarefree_by_reduction",
    "coprime_by_reduction",
]

_EDF_SEED = 0x9E3779B9


class BadPrimeError(ValueError):
    """The chosen prime violates a precondition (lc or squarefree reduction)."""


# ---------------------------------------------------------------------------
# primes

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_from(start: int):
    n = max(2, start)
    while True:
        if _is_prime(n):
            yield n
        n += 1


# ---------------------------------------------------------------------------
# arithmetic in F_p[x]; ascending coefficient lists, entries in [0, p)

def gf_strip(f):
    n = len(f)
    while n and not f[n - 1]:
        n -= 1
    return f[:n]


def gf_from_int(coeffs, p):
    return gf_strip([c % p for c in coeffs])


def gf_add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return gf_strip(out)


def gf_sub(f, g, p):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return gf_strip(out)


def gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return gf_strip([v % p for v in out])


def gf_mul_scalar(f, c, p):
    c %= p
    if not c:
        return []
    return [a * c % p for a in f]


def gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return [], list(f)
    inv = pow(g[-1], -1, p)
    r = list(f)
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = r[k + dg] % p
        if c:
            c = c * inv % p
            q[k] = c
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    return gf_strip(q), gf_strip([v % p for v in r[:dg]])


def gf_rem(f, g, p):
    return gf_divmod(f, g, p)[1]


def gf_quo(f, g, p):
    return gf_divmod(f, g, p)[0]


def gf_monic(f, p):
    if not f or f[-1] == 1:
        return list(f)
    return gf_mul_scalar(f, pow(f[-1], -1, p), p)


def gf_gcd(f, g, p):
    a, b = list(f), list(g)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(f, g, p):
    """Extended Euclid: returns (s, t, h) with s*f + t*g = h, h monic gcd."""
    a, b = list(f), list(g)
    sa, sb = [1], []
    ta, tb = [], [1]
    while b:
        q, r = gf_divmod(a, b, p)
        a, b = b, r
        sa, sb = sb, gf_sub(sa, gf_mul(q, sb, p), p)
        ta, tb = tb, gf_sub(ta, gf_mul(q, tb, p), p)
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = gf_mul_scalar(a, inv, p)
        sa = gf_mul_scalar(sa, inv, p)
        ta = gf_mul_scalar(ta, inv, p)
    return sa, ta, a


def gf_deriv(f, p):
    return gf_strip([i * c % p for i, c in enumerate(f)][1:])


def gf_pow_mod(f, e, g, p):
    result = [1]
    base = gf_rem(f, g, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), g, p)
        base = gf_rem(gf_mul(base, base, p), g, p)
        e >>= 1
    return result


def gf_sqf_p(f, p) -> bool:
    """True iff f mod p is squarefree (nonzero, no repeated factor)."""
    f = gf_strip(list(f))
    if not f:
        return False
    if len(f) == 1:
        return True
    d = gf_deriv(f, p)
    if not d:
        return False
    return len(gf_gcd(f, d, p)) == 1


def gf_pth_root(f, p):
    return gf_strip([f[i] for i in range(0, len(f), p)])


def squarefree_by_reduction(F: IntPoly, tries: int = 8):
    """True when a modular reduction certifies that F is squarefree over Z.

    For a prime q > deg F with q not dividing lc(F), a squarefree reduction
    forces Res(F, F') != 0, hence squarefreeness over Q.  Returns None when
    `tries` usable reductions all have repeated factors (the caller must
    then decide exactly); never claims squarefreeness wrongly.
    """
    d = F.degree
    if d <= 0:
        return None
    seen = 0
    for q in _primes_from(d + 1):
        if F.lc % q == 0:
            continue
        if gf_sqf_p(gf_from_int(F.coeffs, q), q):
            return True
        seen += 1
        if seen >= tries:
            return None
    return None


def coprime_by_reduction(a: IntPoly, b: IntPoly, tries: int = 8):
    """True when a modular reduction certifies gcd(a, b) = 1 over Q.

    A trivial gcd of the reductions at a prime not dividing either leading
    coefficient forces Res(a, b) != 0.  Returns None when inconclusive.
    """
    if a.is_zero or b.is_zero:
        return None
    seen = 0
    for q in _primes_from(max(a.degree, b.degree) + 1):
        if a.lc % q == 0 or b.lc % q == 0:
            continue
        if gf_gcd(gf_from_int(a.coeffs, q), gf_from_int(b.coeffs, q), q) == [1]:
            return True
        seen += 1
        if seen >= tries:
            return None
    return None


def gf_sqf_list(f, p):
    """Squarefree decomposition of a monic f mod p: list of (factor, mult)."""
    result = []
    n = 1
    f = list(f)
    while len(f) - 1 > 0:
        d = gf_deriv(f, p)
        if not d:
            f = gf_pth_root(f, p)
            n *= p
            continue
        t = gf_gcd(f, d, p)
        v = gf_quo(f, t, p)
        i = 1
        while len(v) - 1 > 0:
            u = gf_gcd(t, v, p)
            z = gf_quo(v, u, p)
            if len(z) - 1 > 0:
                result.append((z, i * n))
            v = u
            t = gf_quo(t, u, p)
            i += 1
        f = t
    return result


def _gf_frobenius_base(f, p):
    """Monomial images [x^(j*p) mod f for j in 0..deg f - 1], zero padded."""
    n = len(f) - 1
    pad = lambda v: list(v) + [0] * (n - len(v))
    base = [pad([1])]
    if n > 1:
        xp = gf_pow_mod([0, 1], p, f, p)
        base.append(pad(xp))
        if n >= 48 and 4 * n * (p - 1) * (p - 1) < (1 << 62):
            base.extend(_frobenius_base_numpy(f, pad(xp), n, p))
        else:
            cur = xp
            for _ in range(2, n):
                cur = gf_rem(gf_mul(cur, xp, p), f, p)
                base.append(pad(cur))
    return base


def _frobenius_base_numpy(f, xp, n, p):
    """Columns x^(j*p) mod f for j >= 2, via vectorized mul-and-reduce.

    Intermediate magnitudes stay below 4*n*p^2, guarded by the caller, so
    int64 convolution is exact.
    """
    import numpy as np

    fv = np.array(f[:n], dtype=np.int64)
    xpv = np.array(xp, dtype=np.int64)
    out = []
    cur = xpv
    for _ in range(2, n):
        r = np.convolve(cur, xpv) % p
        for k in range(len(r) - 1, n - 1, -1):
            c = int(r[k]) % p
            if c:
                r[k - n : k] -= c * fv
        cur = r[:n] % p
        out.append([int(v) for v in cur])
    return out


def _gf_frobenius_map(h, base, p):
    """h^p mod f, using Fermat on the coefficients: sum h[j] * x^(j*p)."""
    n = len(base)
    out = [0] * n
    for j, c in enumerate(h):
        if c:
            bj = base[j]
            for k in range(n):
                out[k] += c * bj[k]
    return gf_strip([v % p for v in out])


def gf_ddf(f, p):
    """Distinct-degree split of a monic squarefree f mod p: [(product, d)]."""
    n = len(f) - 1
    if n == 1:
        return [(list(f), 1)]
    base = _gf_frobenius_base(f, p)
    h = [0, 1]
    fstar = list(f)
    out = []
    i = 1
    while 2 * i <= len(fstar) - 1:
        h = _gf_frobenius_map(h, base, p)
        g = gf_gcd(gf_sub(gf_rem(h, fstar, p), [0, 1], p), fstar, p)
        if len(g) > 1:
            out.append((g, i))
            fstar = gf_quo(fstar, g, p)
        i += 1
    if len(fstar) > 1:
        out.append((fstar, len(fstar) - 1))
    return out


def gf_edf(f, d, p, rng):
    """Cantor-Zassenhaus equal-degree split: all irreducible factors of
    a monic squarefree f mod p whose factors all have degree d."""
    out = []
    stack = [list(f)]
    while stack:
        h = stack.pop()
        nh = len(h) - 1
        if nh == d:
            out.append(h)
            continue
        while True:
            r = gf_strip([rng.randrange(p) for _ in range(nh)])
            if len(r) - 1 < 1:
                continue
            if p == 2:
                w = list(r)
                trace = list(r)
                for _ in range(d - 1):
                    w = gf_rem(gf_mul(w, w, p), h, p)
                    trace = gf_add(trace, w, p)
                g = gf_gcd(trace, h, p)
            else:
                w = gf_pow_mod(r, (p ** d - 1) // 2, h, p)
                g = gf_gcd(gf_sub(w, [1], p), h, p)
            if 0 < len(g) - 1 < nh:
                stack.append(g)
                stack.append(gf_quo(h, g, p))
                break
    out.sort(key=lambda v: (len(v), v))
    return out


def gf_factor_sqf_monic(f, p, seed=_EDF_SEED):
    """Irreducible monic factors of a monic squarefree f mod p, sorted."""
    rng = random.Random(seed)
    out = []
    for prod, d in gf_ddf(f, p):
        out.extend(gf_edf(prod, d, p, rng))
    out.sort(key=lambda v: (len(v), v))
    return out


# ---------------------------------------------------------------------------
# public mod-p surface

@dataclass(frozen=True)
class ModPoly:
    """A polynomial over F_p: ascending coefficients in [0, p)."""

    coeffs: tuple
    p: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return format_poly(self.coeffs) + f"  (mod {self.p})"


@dataclass(frozen=True)
class DegreePattern:
    """Multiset of irreducible factor degrees of f mod p (Frobenius cycle type)."""

    p: int
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))


def factor_mod_p(f: IntPoly, p: int) -> list[tuple[ModPoly, int]]:
    """Monic irreducible factors of f mod p with multiplicities.

    Squarefree decomposition, then distinct-degree and equal-degree
    splitting.  Raises BadPrimeError when p divides lc(f).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.lc % p == 0:
        raise BadPrimeError(f"p={p} divides the leading coefficient")
    fp = gf_monic(gf_from_int(f.coeffs, p), p)
    out = []
    if len(fp) - 1 >= 1:
        for g, mult in gf_sqf_list(fp, p):
            for h in gf_factor_sqf_monic(g, p):
                out.append((ModPoly(tuple(h), p), mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def degree_pattern(f: IntPoly, p: int) -> DegreePattern:
    """Factor-degree multiset of f mod p; requires a squarefree reduction."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.lc % p == 0:
        raise BadPrimeError(f"p={p} divides the leading coefficient")
    fp = gf_from_int(f.coeffs, p)
    if not gf_sqf_p(fp, p):
        raise BadPrimeError(f"f mod {p} is not squarefree; choose another prime")
    fp = gf_monic(fp, p)
    degs = []
    for prod, d in gf_ddf(fp, p):
        degs.extend([d] * ((len(prod) - 1) // d))
    return DegreePattern(p, tuple(sorted(degs)))


def possible_degrees(patterns: Iterable[DegreePattern], d: int) -> frozenset:
    """Degrees a true factor over Q can have, from modular degree patterns.

    Intersection over the patterns of the subset-sum closures of each degree
    multiset; always contains 0 and d.  Result == {0, d} proves
    irreducibility.
    """
    result = None
    for pat in patterns:
        sums = {0}
        for deg in pat.degrees:
            sums |= {s + deg for s in sums}
        result = sums if result is None else (result & sums)
    if result is None:
        return frozenset(range(d + 1))
    return frozenset(result)


# ---------------------------------------------------------------------------
# Hensel lifting over Z

def _ztrunc(f, m):
    """Coefficients reduced into the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    n = len(out)
    while n and not out[n - 1]:
        n -= 1
    return out[:n]


def _zmul_raw(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _zsub_raw(f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return out


def _zadd_raw(f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] += c
    return out


def _zdiv_monic_mod(f, g, m):
    """Division with remainder mod m by a monic g; coefficients in [0, m)."""
    r = [c % m for c in f]
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], gf_strip(r)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - dg - 1, -1, -1):
        c = r[k + dg] % m
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] = (r[k + j] - c * g[j]) % m
    return gf_strip(q), gf_strip(r[:dg])


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step: from mod m to mod m**2.

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), h monic, and lc(f)
    invertible mod m.  Returns (G, H, S, T) with the same relations mod m**2.
    """
    M = m * m
    e = _ztrunc(_zsub_raw(f, _zmul_raw(g, h)), M)
    q, r = _zdiv_monic_mod(_zmul_raw(s, e), h, M)
    q = _ztrunc(q, M)
    r = _ztrunc(r, M)
    u = _zadd_raw(_zmul_raw(t, e), _zmul_raw(q, g))
    G = _ztrunc(_zadd_raw(g, u), M)
    H = _ztrunc(_zadd_raw(h, r), M)
    u = _zadd_raw(_zmul_raw(s, G), _zmul_raw(t, H))
    b = _ztrunc(_zsub_raw(u, [1]), M)
    c, d = _zdiv_monic_mod(_zmul_raw(s, b), H, M)
    c = _ztrunc(c, M)
    d = _ztrunc(d, M)
    u = _zadd_raw(_zmul_raw(t, b), _zmul_raw(c, G))
    S = _ztrunc(_zsub_raw(s, d), M)
    T = _ztrunc(_zsub_raw(t, u), M)
    return G, H, S, T


def _hensel_lift_list(p, f, f_list, l):
    """Lift monic pairwise-coprime mod-p factors of f to factors mod p**l.

    f = lc(f) * prod(f_list) (mod p); the result multiplies back to f
    modulo p**l the same way.
    """
    r = len(f_list)
    lc = f[-1]
    pl = p ** l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_ztrunc([c * inv for c in f], pl)]
    m = p
    k = r // 2
    d = int(math.ceil(math.log2(l))) if l > 1 else 1
    g = [lc % p]
    for fi in f_list[:k]:
        g = gf_mul(g, fi, p)
    h = [1]
    for fi in f_list[k:]:
        h = gf_mul(h, fi, p)
    s, t, one = gf_gcdex(g, h, p)
    if one != [1]:
        raise ValueError("modular factors are not pairwise coprime")
    g, h, s, t = list(g), list(h), list(s), list(t)
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift_list(p, g, f_list[:k], l) + _hensel_lift_list(
        p, h, f_list[k:], l
    )


def hensel_lift(
    f: IntPoly, modular_factors: Sequence[ModPoly], bound: int
) -> tuple[list[IntPoly], int]:
    """Lift a mod-p factorization of f to precision p**k >= 2*bound*|lc(f)|.

    ``modular_factors`` must be the monic factors of a squarefree reduction
    of f modulo their common prime.  Returns (lifted, modulus): monic
    integer polynomials with coefficients in the symmetric range, whose
    product times lc(f) is congruent to f modulo the returned modulus.
    """
    if not modular_factors:
        raise ValueError("no modular factors supplied")
    p = modular_factors[0].p
    if any(mf.p != p for mf in modular_factors):
        raise ValueError("modular factors use different primes")
    if f.lc % p == 0:
        raise BadPrimeError(f"p={p} divides the leading coefficient")
    fp = gf_from_int(f.coeffs, p)
    if not gf_sqf_p(fp, p):
        raise BadPrimeError(f"f mod {p} is not squarefree")
    prod = [f.lc % p]
    for mf in modular_factors:
        prod = gf_mul(prod, list(mf.coeffs), p)
    if prod != fp:
        raise ValueError("modular factors do not multiply back to f mod p")
    target = 2 * bound * abs(f.lc)
    k = 1
    while p ** k < target:
        k += 1
    lifted = _hensel_lift_list(p, list(f.coeffs), [list(mf.coeffs) for mf in modular_factors], k)
    return [IntPoly(v) for v in lifted], p ** k


# ---------------------------------------------------------------------------
# factorization over Q

@dataclass(frozen=True)
class FactorizationQ:
    """unit * prod(factor**multiplicity) == the input, exactly.

    Factors are primitive irreducible integer polynomials with positive
    leading coefficient, sorted by (degree, coefficient tuple).
    """

    unit: Fraction
    factors: tuple  # of (IntPoly, int)

    def expand(self) -> RatPoly:
        acc = RatPoly((self.unit,))
        for g, mult in self.factors:
            acc = acc * (g.to_rat() ** mult)
        return acc

    def degrees(self) -> tuple:
        out = []
        for g, mult in self.factors:
            out.extend([g.degree] * mult)
        return tuple(sorted(out))


def _mignotte_bound(F: IntPoly) -> int:
    """2**deg * l2norm * |lc|, rounded up; bounds any factor's coefficients."""
    n = F.degree
    l2 = math.isqrt(sum(c * c for c in F.coeffs)) + 1
    return (1 << n) * l2 * abs(F.lc)


def _candidate_primes(F: IntPoly, want: int = 8, max_scan: int = 400):
    """First `want` primes > deg F giving a squarefree reduction, with their
    modular factor counts and degree patterns (from distinct-degree data)."""
    out = []
    scanned = 0
    for p in _primes_from(F.degree + 1):
        scanned += 1
        if scanned > max_scan and out:
            break
        if F.lc % p == 0:
            continue
        fp = gf_from_int(F.coeffs, p)
        if not gf_sqf_p(fp, p):
            continue
        degs = []
        for prodpoly, d in gf_ddf(gf_monic(fp, p), p):
            degs.extend([d] * ((len(prodpoly) - 1) // d))
        out.append((len(degs), p, tuple(sorted(degs))))
        if len(degs) == 1:
            break
        if len(out) >= want:
            break
    if not out:
        raise RuntimeError("no usable prime found (is the input squarefree?)")
    return out


def _zassenhaus(F: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree F with lc > 0."""
    n = F.degree
    if n == 1:
        return [F]
    cands = _candidate_primes(F)
    if min(c[0] for c in cands) == 1:
        return [F]
    allowed = possible_degrees(
        [DegreePattern(p, degs) for _, p, degs in cands], n
    )
    if allowed == {0, n}:
        return [F]
    nf, p, _ = min(cands)
    fp = gf_monic(gf_from_int(F.coeffs, p), p)
    modular = gf_factor_sqf_monic(fp, p)
    bound = _mignotte_bound(F)
    k = 1
    target = 2 * bound * abs(F.lc)
    while p ** k < target:
        k += 1
    lifted = _hensel_lift_list(p, list(F.coeffs), modular, k)
    pl = p ** k
    half = pl // 2

    def centered(c):
        c %= pl
        return c - pl if c > half else c

    T = list(range(len(lifted)))
    factors = []
    cur = list(F.coeffs)
    s = 1
    while 2 * s <= len(T):
        found = False
        for S in itertools.combinations(T, s):
            dtot = sum(len(lifted[i]) - 1 for i in S)
            if dtot not in allowed:
                continue
            lc_cur = cur[-1]
            # constant-term divisibility filter
            tc = lc_cur
            for i in S:
                tc = tc * lifted[i][0] % pl
            tc = centered(tc)
            if tc != 0 and cur[0] != 0 and (cur[0] * lc_cur) % tc != 0:
                continue
            G = [lc_cur]
            for i in S:
                G = [c % pl for c in _zmul_raw(G, lifted[i])]
            G = IntPoly([centered(c) for c in G]).primitive()
            Q = IntPoly(cur).exact_div(G)
            if Q is not None:
                factors.append(G)
                cur = list(Q.coeffs)
                T = [i for i in T if i not in S]
                found = True
                break
        if not found:
            s += 1
    rest = IntPoly(cur)
    if rest.degree >= 1:
        factors.append(rest)
    return factors


def _int_squarefree_decomposition(F: IntPoly):
    """Yun's algorithm over Z on a primitive F with lc > 0: [(part, mult)]."""
    if squarefree_by_reduction(F):
        return [(F, 1)]
    out = []
    u = F.gcd(F.derivative())
    if u.degree == 0:
        return [(F, 1)]
    v = F.exact_div(u)
    w = F.derivative().exact_div(u)
    i = 1
    while v.degree > 0:
        z = w - v.derivative()
        h = v.gcd(z) if not z.is_zero else v
        if h.degree > 0:
            out.append((h, i))
        v_next = v.exact_div(h)
        if z.is_zero:
            w_next = w  # unused: v_next is constant next round
        else:
            w_next = z.exact_div(h)
        v, w = v_next, w_next
        i += 1
    return out


def factor_over_q(f: RatPoly) -> FactorizationQ:
    """Complete factorization of f into irreducibles over Q.

    >>> fac = factor_over_q(RatPoly([-1, 0, 1]))
    >>> [str(g) for g, m in fac.factors]
    ['x - 1', 'x + 1']
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content, F = f.to_int()
    if F.degree == 0:
        return FactorizationQ(content, ())
    factors = []
    for part, mult in _int_squarefree_decomposition(F):
        for g in _zassenhaus(part):
            factors.append((g, mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    result = FactorizationQ(content, tuple(factors))
    if result.expand() != f:
        raise RuntimeError("factorization identity check failed")
    return result


def is_irreducible_over_q(f: RatPoly, max_primes: int = 12) -> bool:
    """True iff f is irreducible over Q (degree >= 1).

    Fast path: degree patterns at up to ``max_primes`` good primes; the
    subset-sum intersection {0, deg} certifies irreducibility.  Falls back
    to full factorization when the patterns stay inconclusive.
    """
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if d == 1:
        return True
    _, F = f.to_int()
    if not squarefree_by_reduction(F) and F.gcd(F.derivative()).degree > 0:
        return False
    patterns = []
    good = 0
    for p in _primes_from(d + 1):
        try:
            patterns.append(degree_pattern(F, p))
        except BadPrimeError:
            continue
        good += 1
        if possible_degrees(patterns, d) == {0, d}:
            return True
        if good >= max_primes:
            break
    fac = factor_over_q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def rational_roots(f: RatPoly) -> tuple:
    """All rational roots of a nonzero f, sorted, via its linear factors."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    for g, _mult in factor_over_q(f).factors:
        if g.degree == 1:
            roots.append(Fraction(-g.coeffs[0], g.coeffs[1]))
    return tuple(sorted(set(roots)))
