"""Words over the mixed alphabet Z2^alpha x Z4^beta.

The weight of a word is Hamming weight on the binary part plus Lee
weight on the quaternary part; the Lee weights per symbol are
(0, 1, 2, 1) for (0, 1, 2, 3), which makes the Gray map below an
isometry onto binary Hamming space of length alpha + 2*beta.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

LEE_WEIGHT = (0, 1, 2, 1)

#: Gray images of the Z4 symbols 0..3.
GRAY_TABLE = ((0, 0), (0, 1), (1, 1), (1, 0))


@dataclass(frozen=True)
class Z2Z4Word:
    """A word (binary part, quaternary part); symbols are small ints."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (0, 1) for s in self.alpha):
            raise DomainError("bad-word", f"binary symbols must be 0/1: {self.alpha}")
        if any(not 0 <= s <= 3 for s in self.beta):
            raise DomainError("bad-word", f"quaternary symbols must be 0..3: {self.beta}")

    @property
    def n(self) -> int:
        """Length of the Gray image: alpha + 2*beta."""
        return len(self.alpha) + 2 * len(self.beta)


def _check_shapes(u: Z2Z4Word, v: Z2Z4Word):
    if len(u.alpha) != len(v.alpha) or len(u.beta) != len(v.beta):
        raise DomainError(
            "dimension-mismatch",
            f"({len(u.alpha)},{len(u.beta)}) vs ({len(v.alpha)},{len(v.beta)})",
        )


def weight(w: Z2Z4Word) -> int:
    """Hamming weight of the binary part plus Lee weight of the quaternary part."""
    return sum(w.alpha) + sum(LEE_WEIGHT[s] for s in w.beta)


def gray_map(w: Z2Z4Word) -> tuple[int, ...]:
    """Binary image of length w.n: binary part verbatim, each Z4 symbol expanded."""
    out = list(w.alpha)
    for s in w.beta:
        out.extend(GRAY_TABLE[s])
    return tuple(out)


def cyclic_shift(w: Z2Z4Word) -> Z2Z4Word:
    """Rotate both parts right by one position simultaneously."""
    a, b = w.alpha, w.beta
    return Z2Z4Word(a[-1:] + a[:-1], b[-1:] + b[:-1])


def inner_product(u: Z2Z4Word, v: Z2Z4Word) -> int:
    """Standard inner product in Z4 (binary coordinates lifted by a -> 2a)."""
    _check_shapes(u, v)
    s = 2 * sum(x * y for x, y in zip(u.alpha, v.alpha))
    s += sum(x * y for x, y in zip(u.beta, v.beta))
    return s % 4

def word_add(u: Z2Z4Word, v: Z2Z4Word) -> Z2Z4Word:
    """Componentwise sum, mod 2 on the binary part and mod 4 on the quaternary part."""
    _check_shapes(u, v)
    return Z2Z4Word(
        tuple((x + y) % 2 for x, y in zip(u.alpha, v.alpha)),
        tuple((x + y) % 4 for x, y in zip(u.beta, v.beta)),
    )


def parse_word(text: str) -> Z2Z4Word:
    """Parse "110|022" (binary part, '|', quaternary part)."""
    if text.count("|") != 1:
        raise DomainError("bad-word", f"expected 'alpha|beta', got {text!r}")
    a, b = text.split("|")
    try:
        alpha = tuple(int(c) for c in a)
        beta = tuple(int(c) for c in b)
    except ValueError:
        raise DomainError("bad-word", f"non-digit symbol in {text!r}") from None
    return Z2Z4Word(alpha, beta)


def format_word(w: Z2Z4Word) -> str:
    """Concatenated digits, binary part then quaternary part ("110022")."""
    return "".join(map(str, w.alpha)) + "".join(map(str, w.beta))


def word_json(w: Z2Z4Word) -> dict:
    return {"alpha": "".join(map(str, w.alpha)), "beta": "".join(map(str, w.beta))}
