"""Additive cyclic codes in Z2^m x Z4^m generated by a polynomial pair.

A pair (a, b) of residue representatives in R_m = Z2[X]/<X^m - 1>
generates the code {(c*a, 2*c*b) : c in R_m}: binary part c*a, and c*b
doubled into the {0, 2} subgroup of Z4. Its Z2-dimension equals
deg h where h = (X^m - 1)/gcd(a, b, X^m - 1), and the map c -> (c*a, 2*c*b)
is a bijection from the ideal <g> onto the code, which is what the
enumeration and minimum-weight scans below walk.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import poly2
from .alphabet import Z2Z4Word
from .errors import DomainError

#: Default cap on code dimension for enumeration / exact minimum weight.
DEFAULT_ENUM_CAP = 28


@dataclass(frozen=True)
class AdditiveCyclicCode:
    """An (m, a, b) code with its derived generator data.

    ``gen`` = gcd(a, b, X^m - 1), ``check`` = (X^m - 1)/gen, and
    ``dim`` = deg(check) = m - deg(gen); the code has 2**dim elements,
    all of additive order <= 2 (quaternary symbols stay in {0, 2}).
    """

    m: int
    a: int
    b: int
    gen: int
    check: int
    dim: int

    @property
    def n(self) -> int:
        """Gray-image length m + 2m."""
        return 3 * self.m


def build_code(m: int, a: int, b: int) -> AdditiveCyclicCode:
    """Construct the code generated by (a, 2b); accepts any a, b in R_m."""
    g, h = poly2.generator_check_pair(a, b, m)
    return AdditiveCyclicCode(m=m, a=a, b=b, gen=g, check=h, dim=h.bit_length() - 1)


def _rotate(p: int, i: int, m: int) -> int:
    # X^i * p in R_m == coefficient vector rotated right by i
    i %= m
    mask = (1 << m) - 1
    return ((p << i) | (p >> (m - i))) & mask if i else p


def circulant(p: int, m: int) -> tuple[tuple[int, ...], ...]:
    """m x m circulant: row 0 is the coefficient vector of p, rows rotate right."""
    poly2.check_modulus(m)
    poly2.check_residue(p, m)
    rows = []
    for i in range(m):
        r = _rotate(p, i, m)
        rows.append(tuple((r >> j) & 1 for j in range(m)))
    return tuple(rows)


def matrix_hat(code: AdditiveCyclicCode) -> tuple[tuple[int, ...], ...]:
    """The m x 2m matrix (A | 2B): circulant of a beside the doubled circulant of b."""
    left = circulant(code.a, code.m)
    right = circulant(code.b, code.m)
    return tuple(la + tuple(2 * x for x in rb) for la, rb in zip(left, right))


@dataclass(frozen=True)
class GeneratorMatrix:
    """dim x 2m generator rows; left block in Z2, right block in {0, 2}."""

    rows: tuple[tuple[int, ...], ...]


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}  # MSB position -> pivot row
    for r in rows:
        while r:
            msb = r.bit_length() - 1
            if msb in pivots:
                r ^= pivots[msb]
            else:
                pivots[msb] = r
                break
    return len(pivots)


def _pack_mixed_row(row: tuple[int, ...], m: int) -> int:
    # halve the right block so the whole row lives over Z2
    v = 0
    for j in range(m):
        if row[j]:
            v |= 1 << j
    for j in range(m):
        if row[m + j]:
            v |= 1 << (m + j)
    return v


def generator_matrix(code: AdditiveCyclicCode) -> GeneratorMatrix:
    """First dim rows of (A | 2B), verified to be independent over Z2.

    The independence of the leading rows is a known property of this
    construction; it is still checked, and on failure an independent
    row subset is selected by elimination instead.
    """
    if code.dim == 0:
        raise DomainError("zero-code", "the zero code has no generator matrix")
    hat = matrix_hat(code)
    head = hat[: code.dim]
    packed = [_pack_mixed_row(r, code.m) for r in head]
    if _rank_gf2(packed) == code.dim:
        return GeneratorMatrix(rows=head)
    # fallback: greedy independent subset of all of (A | 2B)
    chosen: list[tuple[int, ...]] = []
    pivots: dict[int, int] = {}
    for row in hat:
        r = _pack_mixed_row(row, code.m)
        while r:
            msb = r.bit_length() - 1
            if msb in pivots:
                r ^= pivots[msb]
            else:
                pivots[msb] = r
                chosen.append(row)
                break
        if len(chosen) == code.dim:
            break
    return GeneratorMatrix(rows=tuple(chosen))


def _ideal_image_basis(code: AdditiveCyclicCode) -> tuple[list[int], list[int]]:
    # images of the ideal basis {gen * X^i : i < dim} under c -> (c*a, c*b);
    # empty for the zero code, whose gen = X^m - 1 is not a residue
    m = code.m
    ba: list[int] = []
    bb: list[int] = []
    if code.dim:
        ca = poly2.poly_mul_mod(code.gen, code.a, m)
        cb = poly2.poly_mul_mod(code.gen, code.b, m)
        for _ in range(code.dim):
            ba.append(ca)
            bb.append(cb)
            ca = _rotate(ca, 1, m)
            cb = _rotate(cb, 1, m)
    return ba, bb


def _word_from_pair(ca: int, cb: int, m: int) -> Z2Z4Word:
    return Z2Z4Word(
        tuple((ca >> j) & 1 for j in range(m)),
        tuple(2 * ((cb >> j) & 1) for j in range(m)),
    )


def enumerate_codewords(code: AdditiveCyclicCode, cap: int = DEFAULT_ENUM_CAP) -> set[Z2Z4Word]:
    """All 2**dim codewords, walked in Gray-code order over the ideal basis."""
    if code.dim > cap:
        raise DomainError("cap-exceeded", f"dim {code.dim} exceeds enumeration cap {cap}")
    ba, bb = _ideal_image_basis(code)
    out = set()
    ca = cb = 0
    out.add(_word_from_pair(0, 0, code.m))
    for t in range(1, 1 << code.dim):
        j = (t & -t).bit_length() - 1
        ca ^= ba[j]
        cb ^= bb[j]
        out.add(_word_from_pair(ca, cb, code.m))
    return out


def _block_min(ba: list[int], bb: list[int], lo: int, hi: int) -> int | None:
    # minimum weight over Gray patterns of mask indices in [lo, hi), skipping mask 0
    g0 = lo ^ (lo >> 1)
    ca = cb = 0
    gg = g0
    while gg:
        j = (gg & -gg).bit_length() - 1
        ca ^= ba[j]
        cb ^= bb[j]
        gg &= gg - 1
    best = ca.bit_count() + 2 * cb.bit_count() if lo > 0 else None
    for t in range(lo + 1, hi):
        j = (t & -t).bit_length() - 1
        ca ^= ba[j]
        cb ^= bb[j]
        w = ca.bit_count() + 2 * cb.bit_count()
        if best is None or w < best:
            best = w
    return best


def min_weight(code: AdditiveCyclicCode, cap: int = DEFAULT_ENUM_CAP, workers: int = 1) -> int:
    """Exact minimum weight: min over nonzero c in <gen> of |c*a| + 2|c*b|.

    The scan may be split into contiguous mask blocks; the merged result
    does not depend on the split.
    """
    if code.dim == 0:
        raise DomainError("zero-code", "minimum weight of the zero code is undefined")
    if code.dim > cap:
        raise DomainError("cap-exceeded", f"dim {code.dim} exceeds enumeration cap {cap}")
    ba, bb = _ideal_image_basis(code)
    total = 1 << code.dim
    if workers <= 1 or total < 4 * workers:
        return _block_min(ba, bb, 0, total)  # type: ignore[return-value]
    step = total // workers
    bounds = [(i * step, (i + 1) * step if i + 1 < workers else total) for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda be: _block_min(ba, bb, *be), bounds))
    return min(p for p in parts if p is not None)


def relative_distance(code: AdditiveCyclicCode, cap: int = DEFAULT_ENUM_CAP) -> Fraction:
    """Minimum weight divided by the Gray-image length 3m, exact."""
    return Fraction(min_weight(code, cap=cap), code.n)


def rate(code: AdditiveCyclicCode) -> Fraction:
    """dim / 3m, exact (the code is an elementary 2-group, type 2^dim 4^0)."""
    return Fraction(code.dim, code.n)


def dim_is_max(code: AdditiveCyclicCode) -> tuple[bool, int | None]:
    """Whether dim = m - 1; if not, a witness factor dividing both a and b.

    Requires a and b in the augmentation ideal (even weight), where
    dim <= m - 1 always holds and equality fails exactly when some
    irreducible factor of (X^m - 1)/(X - 1) divides both a and b.
    """
    if not poly2.in_augmentation_ideal(code.a):
        raise DomainError("not-in-augmentation-ideal", "a has odd weight")
    if not poly2.in_augmentation_ideal(code.b):
        raise DomainError("not-in-augmentation-ideal", "b has odd weight")
    if code.gen == 0b11:
        return True, None
    for p, _ in poly2.factor_xm1(code.m).nontrivial():
        if poly2._mod(code.gen, p) == 0:
            return False, p
    raise DomainError("bound-violation", "no witness factor found")  # unreachable


def code_json(code: AdditiveCyclicCode) -> dict:
    """The wire descriptor, e.g. {"m":3,"a":"101","b":"110","g":"11",...}."""
    return {
        "m": code.m,
        "a": poly2.poly_to_bits(code.a, width=code.m),
        "b": poly2.poly_to_bits(code.b, width=code.m),
        "g": poly2.poly_to_bits(code.gen),
        "h": poly2.poly_to_bits(code.check),
        "dim": code.dim,
        "n": code.n,
        "rate": str(rate(code)),
    }


def matrix_rows_text(rows) -> list[str]:
    """Rows as digit strings ("101220"), binary digits then quaternary digits."""
    return ["".join(str(x) for x in row) for row in rows]
