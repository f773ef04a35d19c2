"""Formal words over the generator alphabet ``x_i``, ``c_n``, ``g_n``.

Textual grammar: whitespace separated letters, each ``NAME`` or
``NAME^EXP`` with ``EXP`` a non-zero integer, e.g. ``"x0 x1^-1 c2^3 f12"``.
``c`` is an alias of ``c1`` and ``f12`` of ``c0``; an underscore between
family and index (``x_3``) is accepted.  Adjacent equal letters are merged
and zero exponents dropped.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

_LETTER_RE = re.compile(r"^(f12|[xcg])_?(\d*)(?:\^\(?([+-]?\d+)\)?)?$")
_MIN_INDEX = {"x": 0, "c": 0, "g": 1}


class WordSyntaxError(ValueError):
    """Malformed word; ``token`` is the offending piece of text."""

    def __init__(self, token: str, reason: str):
        super().__init__(f"{reason}: {token!r}")
        self.token = token


def canonical_name(name: str) -> str:
    if name == "c":
        return "c1"
    if name == "f12":
        return "c0"
    m = re.fullmatch(r"([xcg])_?(\d+)", name)
    if not m:
        raise WordSyntaxError(name, "unknown generator")
    family, index = m.group(1), int(m.group(2))
    if index < _MIN_INDEX[family]:
        raise WordSyntaxError(name, "index out of range")
    return f"{family}{index}"


def split_name(name: str) -> tuple[str, int]:
    name = canonical_name(name)
    return name[0], int(name[1:])


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        merged: list[list] = []
        for name, exp in self.letters:
            name = canonical_name(name)
            if not isinstance(exp, int):
                raise TypeError("exponents must be integers")
            if merged and merged[-1][0] == name:
                merged[-1][1] += exp
                if merged[-1][1] == 0:
                    merged.pop()
            elif exp:
                merged.append([name, exp])
        object.__setattr__(self, "letters", tuple((n, e) for n, e in merged))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        letters = []
        for token in text.replace(",", " ").replace("*", " ").split():
            m = _LETTER_RE.match(token)
            if not m:
                raise WordSyntaxError(token, "malformed letter")
            family, index, exp = m.groups()
            if family == "f12":
                if index:
                    raise WordSyntaxError(token, "malformed letter")
                name = "c0"
            elif family == "c" and not index:
                name = "c1"
            elif not index:
                raise WordSyntaxError(token, "missing index")
            else:
                name = family + index
            try:
                name = canonical_name(name)
            except WordSyntaxError as err:
                raise WordSyntaxError(token, str(err).split(":")[0]) from None
            e = 1 if exp is None else int(exp)
            if e == 0:
                raise WordSyntaxError(token, "zero exponent")
            letters.append((name, e))
        return cls(tuple(letters))

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((n, -e) for n, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))

    def syllables(self) -> Iterator[tuple[str, int, int]]:
        """Yield ``(family, index, exponent)`` per letter."""
        for name, exp in self.letters:
            yield name[0], int(name[1:]), exp

    def __str__(self):
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)


def word(text: str | GroupWord) -> GroupWord:
    return text if isinstance(text, GroupWord) else GroupWord.parse(text)


def from_letters(items: Iterable[tuple[str, int]]) -> GroupWord:
    return GroupWord(tuple(items))
