"""Arithmetic in Z2[X] and in the residue ring R_m = Z2[X]/<X^m - 1>.

Polynomials over Z2 are plain Python ints: bit i holds the coefficient
of X^i, so 0b101 = 5 is X^2 + 1 and the zero polynomial is 0. Addition
is ``^``. Free polynomials are ints of any size; residue representatives
in R_m are ints below 2**m. The degree of the zero polynomial is the
sentinel ``ZERO_DEGREE`` (minus infinity), never -1.

Throughout, m must be an odd positive integer, which makes X^m - 1
squarefree over Z2 and its irreducible factors correspond one-to-one to
the 2-cyclotomic cosets mod m (coset sizes = factor degrees).

Text encoding: the canonical form is the LSB-first bit string
("101" = 1 + X^2, "011" = X + X^2). The parser also accepts symbolic
input such as "1+x^2" (case-insensitive, '+'-separated monomials).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

ZERO_DEGREE = float("-inf")


def check_modulus(m) -> None:
    """Reject a cycle length that is not an odd positive integer."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1 or m % 2 == 0:
        raise DomainError("invalid-modulus", f"cycle length must be an odd positive integer, got {m!r}")


def check_residue(p: int, m: int, name: str = "polynomial") -> None:
    """Reject p unless it is a residue representative in R_m (degree < m)."""
    if not isinstance(p, int) or p < 0:
        raise DomainError("bad-polynomial", f"{name} must be a nonnegative int bit vector, got {p!r}")
    if p >> m:
        raise DomainError("bad-polynomial", f"{name} has degree >= {m}, not a residue representative")


def poly_degree(p: int):
    """Degree of p; ``ZERO_DEGREE`` for the zero polynomial."""
    return p.bit_length() - 1 if p else ZERO_DEGREE


def cycle_poly(m: int) -> int:
    """X^m - 1 (== X^m + 1 over Z2)."""
    return (1 << m) | 1


def _mul(a: int, b: int) -> int:
    # carry-less multiplication
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        a <<= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dn = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= dn and a:
        shift = a.bit_length() - 1 - dn
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _square(p: int) -> int:
    # Frobenius: squaring spreads bits (coefficient of X^i moves to X^2i).
    return int(format(p, "b"), 4) if p else 0


def poly_mul_mod(p: int, q: int, m: int) -> int:
    """Product of residue representatives p and q in R_m."""
    check_modulus(m)
    check_residue(p, m, "left factor")
    check_residue(q, m, "right factor")
    r = _mul(p, q)
    mask = (1 << m) - 1
    while r > mask:
        r = (r & mask) ^ (r >> m)
    return r


def poly_gcd(p: int, q: int) -> int:
    """Greatest common divisor in Z2[X]; gcd(p, 0) = p, gcd(0, 0) = 0."""
    if p < 0 or q < 0:
        raise DomainError("bad-polynomial", "polynomials are nonnegative int bit vectors")
    return _gcd(p, q)


def generator_check_pair(a: int, b: int, m: int) -> tuple[int, int]:
    """Generator and check polynomials of the pair (a, b) in R_m.

    Returns (g, h) with g = gcd(a, b, X^m - 1) and h = (X^m - 1) / g,
    so g * h = X^m - 1 exactly. For a = b = 0 this is (X^m - 1, 1).
    """
    check_modulus(m)
    check_residue(a, m, "a")
    check_residue(b, m, "b")
    f = cycle_poly(m)
    g = _gcd(_gcd(a, b), f)
    h, rem = _divmod(f, g)
    if rem:
        raise DomainError("bound-violation", "gcd does not divide X^m - 1")  # unreachable
    return g, h


def in_augmentation_ideal(p: int) -> bool:
    """True iff p(1) = 0 over Z2, i.e. p has evenly many nonzero terms."""
    if p < 0:
        raise DomainError("bad-polynomial", "polynomials are nonnegative int bit vectors")
    return p.bit_count() % 2 == 0


@dataclass(frozen=True)
class FactorSet:
    """Irreducible factorization of X^m - 1 over Z2.

    ``factors`` holds (poly, degree) pairs sorted by degree then by the
    coefficient bits as an integer; X + 1 is always present.
    ``min_degree`` is the smallest degree among the other factors
    (None when m = 1 and there are no others). ``nontrivial_count`` is
    the number of factors besides X + 1.
    """

    m: int
    factors: tuple[tuple[int, int], ...]
    min_degree: int | None
    nontrivial_count: int

    def nontrivial(self) -> tuple[tuple[int, int], ...]:
        """The factors of (X^m - 1)/(X - 1), same order."""
        return tuple(f for f in self.factors if f[0] != 0b11)


def _distinct_degree_split(f: int) -> list[tuple[int, int]]:
    # f squarefree; returns (product of irreducible factors of degree d, d)
    out = []
    h = 2  # X
    d = 0
    while f.bit_length() - 1 > 0:
        d += 1
        if 2 * d > f.bit_length() - 1:
            out.append((f, f.bit_length() - 1))
            break
        h = _mod(_square(h), f)
        g = _gcd(f, h ^ 2)
        if g != 1:
            out.append((g, d))
            f = _divmod(f, g)[0]
            h = _mod(h, f)
    return out


def _equal_degree_split(f: int, d: int, rng: random.Random) -> list[int]:
    # f = product of distinct irreducibles, all of degree d
    n = f.bit_length() - 1
    if n == d:
        return [f]
    while True:
        u = rng.randrange(1, 1 << n)
        # trace map u + u^2 + u^4 + ... + u^(2^(d-1)) mod f takes values
        # in Z2 on each irreducible component, so its gcd with f splits
        t = u
        cur = u
        for _ in range(d - 1):
            cur = _mod(_square(cur), f)
            t ^= cur
        g = _gcd(f, t)
        if 0 < g.bit_length() - 1 < n:
            rest = _divmod(f, g)[0]
            return _equal_degree_split(g, d, rng) + _equal_degree_split(rest, d, rng)


@lru_cache(maxsize=None)
def factor_xm1(m: int) -> FactorSet:
    """Complete irreducible factorization of X^m - 1 over Z2 (m odd)."""
    check_modulus(m)
    rng = random.Random(m)  # fixed split seed; output order is canonical anyway
    factors: list[tuple[int, int]] = []
    for prod, d in _distinct_degree_split(cycle_poly(m)):
        for p in _equal_degree_split(prod, d, rng):
            factors.append((p, d))
    factors.sort(key=lambda fd: (fd[1], fd[0]))
    check = 1
    for p, _ in factors:
        check = _mul(check, p)
    if check != cycle_poly(m):
        raise DomainError("bound-violation", f"factorization self-check failed at m={m}")  # unreachable
    others = [d for p, d in factors if p != 0b11]
    return FactorSet(
        m=m,
        factors=tuple(factors),
        min_degree=min(others) if others else None,
        nontrivial_count=len(factors) - 1,
    )


@lru_cache(maxsize=None)
def cyclotomic_cosets(m: int) -> tuple[tuple[int, ...], ...]:
    """2-cyclotomic cosets {s, 2s, 4s, ...} mod m, partitioning 0..m-1.

    Each coset is sorted ascending; cosets are ordered by their smallest
    element. Coset sizes equal the degrees of the irreducible factors of
    X^m - 1, which supplies a factorization cross-check.
    """
    check_modulus(m)
    seen = bytearray(m)
    cosets = []
    for s in range(m):
        if seen[s]:
            continue
        orbit = []
        j = s
        while not seen[j]:
            seen[j] = 1
            orbit.append(j)
            j = (2 * j) % m
        cosets.append(tuple(sorted(orbit)))
    return tuple(cosets)


def min_factor_degree(m: int) -> int:
    """Smallest degree among irreducible factors of (X^m - 1)/(X - 1).

    Equals the smallest nonzero 2-cyclotomic coset size mod m. Requires
    m >= 3: at m = 1 there is no nonzero coset.
    """
    check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "no nontrivial factor exists for m = 1")
    return min(len(c) for c in cyclotomic_cosets(m) if c != (0,))


def parse_poly(text: str) -> int:
    """Parse an LSB-first bit string ("101" = 1 + X^2) or symbolic form ("1+x^2")."""
    s = text.strip()
    if not s:
        raise DomainError("bad-polynomial", "empty polynomial string")
    if set(s) <= {"0", "1"}:
        p = 0
        for i, ch in enumerate(s):
            if ch == "1":
                p |= 1 << i
        return p
    p = 0
    for term in s.lower().replace(" ", "").split("+"):
        if term == "1":
            p ^= 1
        elif term == "x":
            p ^= 2
        elif term.startswith("x^"):
            try:
                e = int(term[2:])
            except ValueError:
                e = -1
            if e < 0:
                raise DomainError("bad-polynomial", f"bad exponent in term {term!r} of {text!r}")
            p ^= 1 << e
        else:
            raise DomainError("bad-polynomial", f"cannot parse term {term!r} of {text!r}")
    return p


def poly_to_bits(p: int, width: int | None = None) -> str:
    """Emit the LSB-first bit string; pad/fix to ``width`` characters if given."""
    if p < 0:
        raise DomainError("bad-polynomial", "polynomials are nonnegative int bit vectors")
    if width is None:
        width = max(p.bit_length(), 1)
    elif p >> width:
        raise DomainError("bad-polynomial", f"degree {p.bit_length() - 1} does not fit width {width}")
    return "".join("1" if (p >> i) & 1 else "0" for i in range(width))
