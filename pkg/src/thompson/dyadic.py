"""Exact dyadic rationals on the unit circle.

A dyadic rational is ``p / 2**k``.  Values live on the circle ``[0, 1)``,
so 1 is identified with 0 and everything is reduced modulo 1.

Binary words are plain tuples of bits; ``(1, 0, 1)`` is ``0.101 = 5/8``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union

BinaryWord = tuple  # tuple[int, ...] of 0/1 digits

_FRACTION_RE = re.compile(r"^\s*(\d+)\s*/\s*(?:2\s*\^\s*(\d+)|(\d+))\s*$")
_POINT_RE = re.compile(r"^\s*0?\.([01]*)\s*$")


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """The circle point ``numerator / 2**exponent`` in canonical form."""

    numerator: int
    exponent: int

    def __post_init__(self):
        p, k = self.numerator, self.exponent
        if not isinstance(p, int) or not isinstance(k, int):
            raise TypeError("numerator and exponent must be integers")
        if k < 0:
            raise ValueError("exponent must be non-negative")
        p %= 1 << k  # circle convention: reduce mod 1
        while k > 0 and p % 2 == 0:
            p //= 2
            k -= 1
        if p == 0:
            k = 0
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "exponent", k)

    @classmethod
    def of(cls, value: Union["DyadicRational", Fraction, int, str]) -> "DyadicRational":
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, str):
            return parse_dyadic(value)
        frac = Fraction(value)
        den = frac.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not a dyadic rational")
        k = den.bit_length() - 1
        return cls(frac.numerator % den, k)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __lt__(self, other):
        if not isinstance(other, DyadicRational):
            return NotImplemented
        k = max(self.exponent, other.exponent)
        return (self.numerator << (k - self.exponent)) < (other.numerator << (k - other.exponent))

    def __add__(self, other):
        other = DyadicRational.of(other)
        k = max(self.exponent, other.exponent)
        p = (self.numerator << (k - self.exponent)) + (other.numerator << (k - other.exponent))
        return DyadicRational(p, k)

    def __str__(self):
        if self.exponent == 0:
            return "0"
        return f"{self.numerator}/2^{self.exponent}"

    def binary_point(self) -> str:
        """The ``0.b1b2...`` form of the value."""
        return "0." + "".join(map(str, dyadic_to_word(self))) if self.numerator else "0"


ZERO = DyadicRational(0, 0)
HALF = DyadicRational(1, 1)


def parse_dyadic(text: str) -> DyadicRational:
    """Parse ``p/2^k``, ``p/q`` with ``q`` a power of two, ``0.b1b2...`` or an integer."""
    m = _POINT_RE.match(text)
    if m:
        return word_to_dyadic(tuple(int(b) for b in m.group(1)))
    m = _FRACTION_RE.match(text)
    if m:
        p = int(m.group(1))
        if m.group(2) is not None:
            return DyadicRational(p, int(m.group(2)))
        return DyadicRational.of(Fraction(p, int(m.group(3))))
    if text.strip().isdigit():
        return DyadicRational(int(text), 0)
    raise ValueError(f"cannot parse dyadic rational {text!r}")


def word_to_dyadic(word: Sequence[int]) -> DyadicRational:
    p = 0
    for bit in word:
        if bit not in (0, 1):
            raise ValueError(f"binary word has non-bit digit {bit!r}")
        p = 2 * p + bit
    return DyadicRational(p, len(word))


def dyadic_to_word(d: DyadicRational, length: int | None = None) -> BinaryWord:
    """Binary expansion of ``d``; zero-padded to ``length`` when given."""
    k = d.exponent
    if length is None:
        length = k
    elif length < k:
        raise ValueError(f"{d} needs {k} binary digits, {length} requested")
    p = d.numerator << (length - k)
    return tuple((p >> (length - 1 - i)) & 1 for i in range(length))


def parity(d: DyadicRational) -> int:
    """Digit-sum parity of the binary expansion (0 for even, 1 for odd)."""
    return bin(d.numerator).count("1") % 2


def word_parity(word: Sequence[int]) -> int:
    return sum(word) % 2
