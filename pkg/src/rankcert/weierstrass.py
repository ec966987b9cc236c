"""Hyperelliptic curves y^2 = f(x), their two-torsion, and its resolvent.

Nonzero two-torsion classes of the Jacobian correspond to even-cardinality
subsets of the Weierstrass roots modulo complementation.  Each class gets a
numeric label built from certified root enclosures (sum of u_c(alpha) over
the class representative, with u_c(x) = x + c*x^2; even-degree models use
the complement-invariant product of the two subset sums).  The resolvent
chi is the exact integer polynomial whose roots are these labels: the ball
product of the linear factors is snapped coefficient-by-coefficient to
integers and then checked squarefree by an exact gcd, which certifies that
the labeling is injective and Galois-equivariant.

An independent cross-check is available through `frobenius_orbit_oracle`:
factoring f modulo a good prime gives the Frobenius cycle type on the
roots, whose induced action on subset classes must reproduce the
factor-degree pattern of chi mod p.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .certroots import ComplexBall, ball_sum, isolate_roots, snap_to_integer
from .exactpoly import IntPoly, RatPoly, make_integral_monic, poly_digest, poly_gcd
from .factorq import (
    BadPrimeError,
    degree_pattern,
    factor_over_q,
    coprime_by_reduction,
    gf_from_int,
    gf_sqf_p,
    squarefree_by_reduction,
)

__all__ = [
    "ODD",
    "EVEN",
    "HyperellipticCurve",
    "SubsetClass",
    "Labeling",
    "TwoTorsionResolvent",
    "SingularModelError",
    "NoInjectiveLabelingError",
    "build_curve",
    "enumerate_j2_classes",
    "resolvent_j2",
    "orbit_decomposition",
    "frobenius_orbit_oracle",
    "build_label_resolvents",
]

ODD = "odd"
EVEN = "even"

MAX_GENUS = 4
MAX_LABELING = 64


class SingularModelError(ValueError):
    """f has a repeated root, so y^2 = f(x) is not a smooth model."""


class NoInjectiveLabelingError(RuntimeError):
    """No labeling index c <= 64 produced a squarefree resolvent."""


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(x) over Q together with its monic integral model.

    `f` is the monic integral polynomial whose roots are `scale` times the
    roots of the original; genus and parity refer to the original model.
    """

    original: RatPoly
    f: IntPoly
    scale: Fraction
    genus: int
    parity: str
    lc_is_square: bool

    @property
    def nroots(self) -> int:
        return self.f.degree

    def digest(self) -> str:
        return poly_digest(self.f.coeffs)


@dataclass(frozen=True)
class SubsetClass:
    """An even subset of the Weierstrass roots modulo complementation.

    The stored bitmask is the canonical representative: odd-degree models
    keep the even-cardinality member supported on the finite roots,
    even-degree models the lexicographically smaller of {S, S^c}.
    """

    mask: int
    nroots: int

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def indices(self) -> tuple:
        return tuple(i for i in range(self.nroots) if self.mask >> i & 1)


@dataclass(frozen=True)
class Labeling:
    """Index c of the labeling map u_c(x) = x + c*x^2."""

    c: int


@dataclass(frozen=True)
class TwoTorsionResolvent:
    """Squarefree chi in Z[x] of degree 2^(2g) - 1 labeling J[2] \\ {0}."""

    chi: IntPoly
    labeling: Labeling
    curve_digest: str


def _fraction_is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def build_curve(f: RatPoly) -> HyperellipticCurve:
    """Validate and normalize y^2 = f(x)."""
    d = f.degree
    if d < 3:
        raise ValueError("need deg f >= 3 (genus >= 1); got degree %d" % d)
    if d > 2 * MAX_GENUS + 2:
        raise ValueError(
            "degree %d exceeds the genus cap g <= %d (resolvent degree would "
            "pass the practical factorization ceiling)" % (d, MAX_GENUS)
        )
    if poly_gcd(f, f.derivative()).degree > 0:
        raise SingularModelError("f has a repeated root: singular model")
    genus = (d - 1) // 2
    if genus < 2:
        warnings.warn(
            "genus-1 model accepted, but the rank criterion needs genus > 1",
            stacklevel=2,
        )
    monic, scale = make_integral_monic(f)
    return HyperellipticCurve(
        original=f,
        f=monic,
        scale=scale,
        genus=genus,
        parity=ODD if d % 2 else EVEN,
        lc_is_square=_fraction_is_square(f.lc),
    )


# ---------------------------------------------------------------------------
# class enumeration

def _popcount(x: int) -> int:
    return bin(x).count("1")


def enumerate_j2_classes(curve: HyperellipticCurve) -> tuple:
    """All 2^(2g) - 1 nonzero two-torsion classes, canonical, ascending."""
    n = curve.nroots
    full = (1 << n) - 1
    masks = []
    if curve.parity == ODD:
        for m in range(1, 1 << n):
            if _popcount(m) % 2 == 0:
                masks.append(m)
    else:
        for m in range(1, full):
            if _popcount(m) % 2 == 0 and m < full ^ m:
                masks.append(m)
    expected = (1 << (2 * curve.genus)) - 1
    if len(masks) != expected:
        raise AssertionError("class count mismatch: %d != %d" % (len(masks), expected))
    return tuple(SubsetClass(m, n) for m in masks)


# ---------------------------------------------------------------------------
# resolvent construction

def _initial_precision(curve: HyperellipticCurve, nclasses: int, c: int) -> int:
    # resolvent coefficient sizes are strongly data dependent (symmetric
    # functions of the labels cancel massively), so a worst-case bound is
    # useless; start near the typical need and let snap failures double
    # the precision (the rebuild ladder is geometric)
    return max(128, ((nclasses + 8 * c + 96 + 63) // 64) * 64)


def _u_values(iso, c: int) -> list:
    out = []
    for b in iso.balls:
        u = b
        if c:
            u = b.add(b.mul(b).mul_int(c))
        out.append(u)
    return out


def _subset_sum(uvals, mask: int, prec: int) -> ComplexBall:
    if mask == 0:
        return ComplexBall.exact_int(0, prec)
    return ball_sum([uvals[i] for i in range(len(uvals)) if mask >> i & 1])


def _resolvent_from_labels(labels, prec: int):
    """Monic ball product of (x - label); None when a coefficient fails to snap."""
    coeffs = [ComplexBall.exact_int(1, prec)]
    for lam in labels:
        neg = lam.neg()
        new = []
        for k in range(len(coeffs) + 1):
            term = coeffs[k].mul(neg) if k < len(coeffs) else None
            if k > 0:
                term = coeffs[k - 1] if term is None else term.add(coeffs[k - 1])
            new.append(term)
        coeffs = new
    out = []
    for b in coeffs:
        v = snap_to_integer(b)
        if v is None:
            return None
        out.append(v)
    return IntPoly(out)


def _squarefree_int(p: IntPoly) -> bool:
    if squarefree_by_reduction(p):
        return True
    return p.gcd(p.derivative()).degree == 0


def build_label_resolvents(
    curve: HyperellipticCurve,
    mask_groups,
    zero_exempt=frozenset(),
    start_c: int = 0,
):
    """Exact squarefree resolvents for groups of subset classes.

    ``mask_groups`` is a sequence of mask tuples; one integer polynomial is
    produced per group (product over the group of x - label).  The label of
    a mask is the subset sum of u_c over the mask for odd-degree models and
    the product of the sums over mask and complement for even-degree
    models.  Retry protocol: a label ball containing zero (outside
    ``zero_exempt``) or a squarefreeness failure increments c; a snap
    failure doubles the precision.  After c > 64 a final pass permits
    zero-containing labels, still insisting on exact squarefreeness.

    Returns (polys, Labeling, precision).
    """
    n = curve.nroots
    full = (1 << n) - 1
    total = sum(len(g) for g in mask_groups)
    even_model = curve.parity == EVEN

    for allow_zero in (False, True):
        c = start_c
        prec_req = _initial_precision(curve, total, start_c)
        while c <= MAX_LABELING:
            iso = isolate_roots(curve.f, prec_req)
            prec = iso.precision
            uvals = _u_values(iso, c)
            zero_hit = False
            group_labels = []
            for masks in mask_groups:
                labels = []
                for m in masks:
                    if even_model:
                        v1 = _subset_sum(uvals, m, prec)
                        v2 = _subset_sum(uvals, full ^ m, prec)
                        if (
                            not allow_zero
                            and m not in zero_exempt
                            and (v1.contains_zero() or v2.contains_zero())
                        ):
                            zero_hit = True
                            break
                        labels.append(v1.mul(v2))
                    else:
                        v = _subset_sum(uvals, m, prec)
                        if (
                            not allow_zero
                            and m not in zero_exempt
                            and v.contains_zero()
                        ):
                            zero_hit = True
                            break
                        labels.append(v)
                if zero_hit:
                    break
                group_labels.append(labels)
            if zero_hit:
                c += 1
                continue
            polys = []
            snap_failed = False
            for labels in group_labels:
                chi = _resolvent_from_labels(labels, prec)
                if chi is None:
                    snap_failed = True
                    break
                polys.append(chi)
            if snap_failed:
                prec_req = prec * 2
                continue
            ok = all(_squarefree_int(chi) for chi in polys)
            if ok and len(polys) > 1:
                for i in range(len(polys)):
                    for j in range(i + 1, len(polys)):
                        if coprime_by_reduction(polys[i], polys[j]):
                            continue
                        if polys[i].gcd(polys[j]).degree > 0:
                            ok = False
            if ok:
                return polys, Labeling(c), prec
            c += 1
    raise NoInjectiveLabelingError(
        "no injective labeling found with c <= %d" % MAX_LABELING
    )


def resolvent_j2(curve: HyperellipticCurve) -> TwoTorsionResolvent:
    """Exact squarefree chi in Z[x] of degree 2^(2g) - 1 for J[2] \\ {0}.

    >>> curve = build_curve(RatPoly([1, 1, 0, 0, 0, 0, 1]))  # y^2 = x^6+x+1
    >>> resolvent_j2(curve).chi.degree
    15
    """
    classes = enumerate_j2_classes(curve)
    masks = tuple(cl.mask for cl in classes)
    polys, labeling, _prec = build_label_resolvents(curve, [masks])
    chi = polys[0]
    expected = (1 << (2 * curve.genus)) - 1
    if chi.degree != expected:
        raise AssertionError("resolvent degree %d != %d" % (chi.degree, expected))
    return TwoTorsionResolvent(chi, labeling, curve.digest())


def orbit_decomposition(r: TwoTorsionResolvent) -> tuple:
    """Sorted degrees of the irreducible factors of chi over Q."""
    return factor_over_q(r.chi.to_rat()).degrees()


# ---------------------------------------------------------------------------
# Frobenius oracle

def _perm_from_cycle_type(degrees) -> list:
    perm = list(range(sum(degrees)))
    base = 0
    for d in sorted(degrees):
        for k in range(d):
            perm[base + k] = base + (k + 1) % d
        base += d
    return perm


def _apply_perm(mask: int, perm) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _orbit_lengths(masks, image) -> tuple:
    index = {m: k for k, m in enumerate(masks)}
    seen = [False] * len(masks)
    out = []
    for k in range(len(masks)):
        if seen[k]:
            continue
        length = 0
        cur = k
        while not seen[cur]:
            seen[cur] = True
            length += 1
            cur = index[image(masks[cur])]
        out.append(length)
    return tuple(sorted(out))


def frobenius_orbit_oracle(
    curve: HyperellipticCurve, p: int, resolvent: TwoTorsionResolvent | None = None
) -> tuple:
    """Cycle-length multiset of Frobenius acting on the two-torsion classes.

    Factors f mod p, realizes the factor-degree multiset as a permutation
    of the roots, and returns the cycle type of the induced action on the
    subset classes.  For a good prime this equals
    ``degree_pattern(chi, p).degrees``; pass the resolvent to have the
    chi-side goodness (squarefree reduction) checked too.
    """
    pattern = degree_pattern(curve.f, p)
    if resolvent is not None:
        if not gf_sqf_p(gf_from_int(resolvent.chi.coeffs, p), p):
            raise BadPrimeError(f"chi mod {p} is not squarefree")
    perm = _perm_from_cycle_type(pattern.degrees)
    classes = enumerate_j2_classes(curve)
    masks = tuple(cl.mask for cl in classes)
    n = curve.nroots
    full = (1 << n) - 1
    if curve.parity == ODD:
        image = lambda m: _apply_perm(m, perm)
    else:
        def image(m):
            im = _apply_perm(m, perm)
            return min(im, full ^ im)
    return _orbit_lengths(masks, image)
