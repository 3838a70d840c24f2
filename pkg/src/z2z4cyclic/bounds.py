"""Closed-form bounds and exact probabilities for random pair-generated codes.

Everything rational is returned as an exact Fraction; transcendental
quantities (entropy and the 2**x bounds built from it) are IEEE doubles.
Bounds that exceed 1 are reported as-is with a ``vacuous`` flag rather
than clamped, so a formula error cannot hide behind min(1, .).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import poly2
from .errors import DomainError


def entropy(x: float) -> float:
    """Binary entropy -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0."""
    if not 0.0 <= x <= 1.0:
        raise DomainError("invalid-argument", f"entropy needs 0 <= x <= 1, got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


@dataclass(frozen=True)
class AdmissibleDelta:
    """A relative-distance threshold delta with 0 < delta < 1/3 and H(3*delta/2) < 1/2."""

    delta: float
    entropy_at_3d2: float


def check_admissible(delta: float) -> AdmissibleDelta:
    """Validate both admissibility conditions; the error names the failed one."""
    if not delta > 0.0:
        raise DomainError("inadmissible-delta", f"delta must be strictly positive, got {delta}")
    if not delta < 1.0 / 3.0:
        raise DomainError("inadmissible-delta", f"delta must be below 1/3, got {delta}")
    h = entropy(1.5 * delta)
    if not h < 0.5:
        raise DomainError(
            "inadmissible-delta",
            f"H(3*delta/2) = {h:.6g} is not below 1/2 at delta = {delta}",
        )
    return AdmissibleDelta(delta=delta, entropy_at_3d2=h)


def _ideal_weight_histogram(c: int, m: int) -> tuple[int, list[int]]:
    # dimension of the ideal <c> in R_m and Hamming-weight counts over it
    gc = poly2.poly_gcd(c, poly2.cycle_poly(m)) if c else poly2.cycle_poly(m)
    d = m - (gc.bit_length() - 1)
    hist = [0] * (m + 1)
    if d == 0:
        hist[0] = 1
        return 0, hist
    base = poly2.poly_mul_mod(gc, 1, m)
    basis = []
    mask = (1 << m) - 1
    cur = base
    for _ in range(d):
        basis.append(cur)
        cur = ((cur << 1) | (cur >> (m - 1))) & mask
    v = 0
    hist[0] = 1
    for t in range(1, 1 << d):
        v ^= basis[(t & -t).bit_length() - 1]
        hist[v.bit_count()] += 1
    return d, hist


def low_weight_pair_count(c: int, m: int, delta: AdmissibleDelta, cap: int = 13) -> tuple[int, float]:
    """Exhaustive count of pairs (f, g) in <c> x <c> with joint weight <= 3m*delta.

    The pair (0, 0) is included, matching the set being counted. Returns
    (count, 2**(2*d*H(3*delta/2))) where d = dim <c>, and raises if the
    count ever exceeded the bound.
    """
    poly2.check_modulus(m)
    poly2.check_residue(c, m, "c")
    if not poly2.in_augmentation_ideal(c):
        raise DomainError("not-in-augmentation-ideal", "c has odd weight")
    d, hist = _ideal_weight_histogram(c, m)
    if d > cap:
        raise DomainError("cap-exceeded", f"ideal dimension {d} exceeds pair-scan cap {cap}")
    threshold = 3.0 * m * delta.delta
    count = 0
    for w1 in range(m + 1):
        if not hist[w1]:
            continue
        for w2 in range(m + 1):
            if hist[w2] and w1 + w2 <= threshold:
                count += hist[w1] * hist[w2]
    bound = 2.0 ** (2 * d * delta.entropy_at_3d2)
    if count > bound:
        raise DomainError("bound-violation", f"pair count {count} exceeds 2^(2dH) = {bound}")
    return count, bound


def expectation_bound(d_c: int, delta: AdmissibleDelta) -> float:
    """2**(-2*d + 2*d*H(3*delta/2)): per-multiplier low-weight expectation bound."""
    if d_c < 0:
        raise DomainError("invalid-argument", f"ideal dimension must be >= 0, got {d_c}")
    return 2.0 ** (-2 * d_c + 2 * d_c * delta.entropy_at_3d2)


@dataclass(frozen=True)
class DistanceBound:
    """Union-bound value for Pr(relative distance <= delta) at cycle length m."""

    m: int
    delta: float
    min_factor_degree: int
    value: float
    vacuous: bool


def pr_delta_bound(m: int, delta: AdmissibleDelta) -> DistanceBound:
    """Sum of 2**(-2j(1/2 - H(3*delta/2) - log2(m)/L)) for j = L .. m-1.

    L is the smallest nontrivial factor degree. Values above 1 are
    returned unclamped and flagged vacuous.
    """
    ell = poly2.min_factor_degree(m)
    coeff = 0.5 - delta.entropy_at_3d2 - math.log2(m) / ell
    total = 0.0
    for j in range(ell, m):
        try:
            total += 2.0 ** (-2 * j * coeff)
        except OverflowError:
            total = math.inf
            break
    return DistanceBound(
        m=m,
        delta=delta.delta,
        min_factor_degree=ell,
        value=total,
        vacuous=not total <= 1.0,
    )


def exact_pr_full_dim(m: int) -> Fraction:
    """Exact Pr(dim = m - 1) over uniform even-weight pairs (a, b).

    Equals the product over irreducible factors p of (X^m - 1)/(X - 1)
    of (1 - 2**(-2 deg p)): the pair must avoid (0, 0) in each residue
    field component.
    """
    poly2.check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "needs m >= 3")
    prod = Fraction(1)
    for _, d in poly2.factor_xm1(m).nontrivial():
        prod *= 1 - Fraction(1, 1 << (2 * d))
    return prod


def _subset_degree_counts(m: int) -> list[int]:
    # ways[d] = number of subsets of the nontrivial factor degrees summing to d
    degrees = [d for _, d in poly2.factor_xm1(m).nontrivial()]
    ways = [0] * (m + 1)
    ways[0] = 1
    for d in degrees:
        for s in range(m - d, -1, -1):
            if ways[s]:
                ways[s + d] += ways[s]
    return ways


def count_ideals_of_dim(m: int, d: int) -> tuple[int, float]:
    """Number of d-dimensional ideals inside the augmentation ideal, with its bound m**(d/L).

    Valid for L <= d < m where L is the smallest nontrivial factor
    degree; also verifies that no nonzero ideal there has dimension
    below L.
    """
    ell = poly2.min_factor_degree(m)
    if not ell <= d < m:
        raise DomainError("invalid-argument", f"need {ell} <= d < {m}, got d = {d}")
    ways = _subset_degree_counts(m)
    for small in range(1, ell):
        if ways[small]:
            raise DomainError("bound-violation", f"ideal of dimension {small} < {ell} exists")
    count = ways[d]
    bound = m ** (d / ell)
    if count > bound:
        raise DomainError("bound-violation", f"{count} ideals of dim {d} exceed m^(d/L) = {bound}")
    return count, bound
