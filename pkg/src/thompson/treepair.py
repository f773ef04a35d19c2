"""Tree-pair diagrams for Thompson's groups F, T and T_a.

A full ``a``-ary tree is stored as the left-to-right tuple of its leaf
addresses, each address a tuple of digits in ``0..a-1``.  A tree pair
``(R, S, n)`` identifies leaf ``i`` of the domain ``R`` with leaf
``(i - 1 + n - 1) mod L + 1`` of the range ``S`` (1-based).

Products are read left to right: ``evaluate(a * b, t) == evaluate(b, evaluate(a, t))``.

Trees serialize as balanced parentheses, a leaf being ``()`` and an internal
node ``(`` followed by its children and ``)``; the caret is ``(()())``.
A pair prints as ``R ; S ; n``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from .dyadic import DyadicRational, dyadic_to_word, word_to_dyadic
from .words import GroupWord, WordSyntaxError, split_name, word

Address = tuple  # tuple[int, ...]


class ArityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Tree:
    """A full ``arity``-ary tree given by its leaf addresses in order."""

    arity: int
    leaves: tuple

    @classmethod
    def trivial(cls, arity: int = 2) -> "Tree":
        return cls(arity, ((),))

    @classmethod
    def from_leaves(cls, leaves: Iterable[Sequence[int]], arity: int = 2) -> "Tree":
        tree = cls(arity, tuple(tuple(w) for w in leaves))
        tree.validate()
        return tree

    @classmethod
    def from_internal(cls, internal: Iterable[Address], arity: int = 2) -> "Tree":
        """The tree whose internal nodes are exactly ``internal`` (prefix closed)."""
        internal = set(internal)
        if not internal:
            return cls.trivial(arity)
        leaves = [p + (d,) for p in internal for d in range(arity) if p + (d,) not in internal]
        return cls(arity, tuple(sorted(leaves)))

    @classmethod
    def parse(cls, text: str, arity: Optional[int] = None) -> "Tree":
        text = "".join(text.split())
        pos = 0
        found: set[int] = set()

        def node(prefix):
            nonlocal pos
            if pos >= len(text) or text[pos] != "(":
                raise ValueError(f"expected '(' at position {pos} in {text!r}")
            pos += 1
            children = []
            while pos < len(text) and text[pos] == "(":
                children.append(node(prefix + (len(children),)))
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at position {pos} in {text!r}")
            pos += 1
            if not children:
                return [prefix]
            found.add(len(children))
            return [leaf for child in children for leaf in child]

        leaves = node(())
        if pos != len(text):
            raise ValueError(f"trailing characters in tree {text!r}")
        if len(found) > 1:
            raise ValueError(f"tree {text!r} mixes arities {sorted(found)}")
        a = found.pop() if found else (arity or 2)
        if arity is not None and a != arity:
            raise ArityMismatch(f"tree {text!r} has arity {a}, expected {arity}")
        if a < 2:
            raise ValueError("arity must be at least 2")
        return cls(a, tuple(leaves))

    def validate(self):
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        internal = self.internal_nodes()
        expected = Tree.from_internal(internal, self.arity).leaves
        if expected != self.leaves:
            raise ValueError(f"leaf addresses {self.leaves} do not form a full {self.arity}-ary tree")

    def __len__(self):
        return len(self.leaves)

    def internal_nodes(self) -> frozenset:
        return frozenset(w[:i] for w in self.leaves for i in range(len(w)))

    def subtree_first_leaf(self, prefix: Address) -> int:
        """Index of the leftmost leaf below the node ``prefix``."""
        for i, w in enumerate(self.leaves):
            if w[: len(prefix)] == prefix:
                return i
        raise KeyError(prefix)

    def to_parens(self) -> str:
        internal = self.internal_nodes()

        def render(p):
            if p not in internal:
                return "()"
            return "(" + "".join(render(p + (d,)) for d in range(self.arity)) + ")"

        return render(())

    def to_nested(self):
        internal = self.internal_nodes()

        def render(p):
            if p not in internal:
                return []
            return [render(p + (d,)) for d in range(self.arity)]

        return render(())

    @classmethod
    def from_nested(cls, nested, arity: Optional[int] = None) -> "Tree":
        def render(n):
            return "(" + "".join(render(c) for c in n) + ")"

        return cls.parse(render(nested), arity)

    def __str__(self):
        return self.to_parens()


def right_comb(n: int) -> Tree:
    """The binary tree ``S_n``: a right vine with ``n + 2`` leaves."""
    if n < 0:
        raise ValueError("S_n needs n >= 0")
    return Tree(2, tuple((1,) * i + (0,) for i in range(n + 1)) + ((1,) * (n + 1),))


def address_interval(w: Address, base: int) -> tuple[Fraction, Fraction]:
    start = Fraction(0)
    for i, d in enumerate(w, 1):
        start += Fraction(d, base**i)
    return start, start + Fraction(1, base ** len(w))


@dataclass(frozen=True)
class TreePair:
    """An element of T_a as ``(domain, range, rotation)``; rotation is in ``1..L``."""

    domain: Tree
    range: Tree
    rotation: int = 1

    def __post_init__(self):
        if self.domain.arity != self.range.arity:
            raise ArityMismatch("domain and range trees have different arities")
        if len(self.domain) != len(self.range):
            raise ValueError("domain and range trees need the same number of leaves")
        if not 1 <= self.rotation <= len(self.domain):
            raise ValueError(f"rotation {self.rotation} outside 1..{len(self.domain)}")

    @classmethod
    def identity(cls, arity: int = 2) -> "TreePair":
        t = Tree.trivial(arity)
        return cls(t, t, 1)

    @classmethod
    def parse(cls, text: str) -> "TreePair":
        parts = text.split(";")
        if len(parts) not in (2, 3):
            raise ValueError(f"expected 'R ; S ; n', got {text!r}")
        dom, rng = Tree.parse(parts[0]), Tree.parse(parts[1])
        if len(dom) > 1 and len(rng) > 1 and dom.arity != rng.arity:
            raise ArityMismatch("domain and range trees have different arities")
        arity = dom.arity if len(dom) > 1 else rng.arity
        n = int(parts[2]) if len(parts) == 3 else 1
        return cls(Tree(arity, dom.leaves), Tree(arity, rng.leaves), n)

    @classmethod
    def from_json(cls, data: dict) -> "TreePair":
        arity = data.get("arity")
        dom = Tree.from_nested(data["domain"], arity)
        rng = Tree.from_nested(data["range"], arity)
        arity = arity or (dom.arity if len(dom) > 1 else rng.arity)
        return cls(Tree(arity, dom.leaves), Tree(arity, rng.leaves), int(data["rotation"]))

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "domain": self.domain.to_nested(),
            "range": self.range.to_nested(),
            "rotation": self.rotation,
        }

    @property
    def arity(self) -> int:
        return self.domain.arity

    @property
    def leaf_count(self) -> int:
        return len(self.domain)

    @property
    def shift(self) -> int:
        """Zero-based rotation: domain leaf ``i`` goes to range leaf ``(i + shift) % L``."""
        return self.rotation - 1

    def image_index(self, i: int) -> int:
        return (i + self.shift) % self.leaf_count

    def preimage_index(self, j: int) -> int:
        return (j - self.shift) % self.leaf_count

    def leaf_pairs(self) -> Iterator[tuple[Address, Address]]:
        """Identified ``(domain address, range address)`` pairs, in domain order."""
        for i, w in enumerate(self.domain.leaves):
            yield w, self.range.leaves[self.image_index(i)]

    def key(self) -> tuple:
        return (self.arity, self.domain.leaves, self.range.leaves, self.rotation)

    def is_identity(self) -> bool:
        return self.leaf_count == 1

    def is_reduced(self) -> bool:
        return not find_dipoles(self)

    def __str__(self):
        return f"{self.domain} ; {self.range} ; {self.rotation}"

    def __mul__(self, other: "TreePair") -> "TreePair":
        return multiply(self, other)

    def __pow__(self, k: int) -> "TreePair":
        return power(self, k)

    def __invert__(self) -> "TreePair":
        return invert(self)


def _pair(domain_leaves, range_leaves, shift, arity) -> TreePair:
    L = len(domain_leaves)
    return TreePair(Tree(arity, tuple(domain_leaves)), Tree(arity, tuple(range_leaves)), shift % L + 1)


# -- dipoles --------------------------------------------------------------


def _is_caret_run(leaves: Sequence[Address], i: int, arity: int) -> bool:
    if i + arity > len(leaves):
        return False
    first = leaves[i]
    if not first or first[-1] != 0:
        return False
    prefix = first[:-1]
    return all(leaves[i + d] == prefix + (d,) for d in range(arity))


def find_dipoles(tp: TreePair) -> list[int]:
    """Domain indices ``i`` whose caret ``i..i+a-1`` is matched, in order, by a range caret."""
    a, L = tp.arity, tp.leaf_count
    out = []
    for i in range(L - a + 1):
        if not _is_caret_run(tp.domain.leaves, i, a):
            continue
        j = tp.image_index(i)
        if _is_caret_run(tp.range.leaves, j, a):
            out.append(i)
    return out


def remove_dipole(tp: TreePair, i: int) -> TreePair:
    a = tp.arity
    j = tp.image_index(i)
    dom = list(tp.domain.leaves)
    rng = list(tp.range.leaves)
    dom[i : i + a] = [dom[i][:-1]]
    rng[j : j + a] = [rng[j][:-1]]
    if i == 0:
        shift = j
    else:
        s = tp.shift
        shift = s if s < j else s - (a - 1)
    return _pair(dom, rng, shift, a)


def split_leaf(tp: TreePair, i: int) -> TreePair:
    """Insert a dipole: add a caret under domain leaf ``i`` and its range partner."""
    a = tp.arity
    j = tp.image_index(i)
    dom = list(tp.domain.leaves)
    rng = list(tp.range.leaves)
    dom[i : i + 1] = [dom[i] + (d,) for d in range(a)]
    rng[j : j + 1] = [rng[j] + (d,) for d in range(a)]
    if i == 0:
        shift = j
    else:
        s = tp.shift
        shift = s if s < j else s + (a - 1)
    return _pair(dom, rng, shift, a)


def reduce(tp: TreePair, rng: Optional[random.Random] = None) -> TreePair:
    """Remove dipoles until none remain.

    With ``rng`` the dipole to remove is picked at random each round, which
    exercises confluence; the result is the same either way.
    """
    while True:
        found = find_dipoles(tp)
        if not found:
            return tp
        i = rng.choice(found) if rng is not None else found[0]
        tp = remove_dipole(tp, i)


# -- group operations -------------------------------------------------------


def _expand_range_to(tp: TreePair, target_internal: frozenset) -> TreePair:
    while True:
        for j, w in enumerate(tp.range.leaves):
            if w in target_internal:
                tp = split_leaf(tp, tp.preimage_index(j))
                break
        else:
            return tp


def _expand_domain_to(tp: TreePair, target_internal: frozenset) -> TreePair:
    while True:
        for i, w in enumerate(tp.domain.leaves):
            if w in target_internal:
                tp = split_leaf(tp, i)
                break
        else:
            return tp


def multiply_unreduced(a: TreePair, b: TreePair) -> TreePair:
    """The product diagram before dipole removal."""
    if a.arity != b.arity:
        raise ArityMismatch(f"cannot multiply arity {a.arity} by arity {b.arity}")
    common = a.range.internal_nodes() | b.domain.internal_nodes()
    a = _expand_range_to(a, common)
    b = _expand_domain_to(b, common)
    assert a.range.leaves == b.domain.leaves
    return _pair(a.domain.leaves, b.range.leaves, a.shift + b.shift, a.arity)


def multiply(a: TreePair, b: TreePair) -> TreePair:
    return reduce(multiply_unreduced(a, b))


def invert(tp: TreePair) -> TreePair:
    return _pair(tp.range.leaves, tp.domain.leaves, -tp.shift, tp.arity)


def power(tp: TreePair, k: int) -> TreePair:
    base = tp if k >= 0 else invert(tp)
    result = TreePair.identity(tp.arity)
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def equal(a: TreePair, b: TreePair) -> bool:
    if a.arity != b.arity:
        raise ArityMismatch(f"cannot compare arity {a.arity} with arity {b.arity}")
    return reduce(a).key() == reduce(b).key()


def order(tp: TreePair, cap: int) -> Optional[int]:
    """Least ``k <= cap`` with ``tp**k`` trivial, else ``None``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    acc = reduce(tp)
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = multiply(acc, tp)
    return None


# -- evaluation -------------------------------------------------------------


def _digits(value: Fraction, base: int) -> tuple:
    value %= 1
    digits = []
    den = value.denominator
    while den % base == 0:
        den //= base
    if den != 1:
        raise ValueError(f"{value} has no finite base-{base} expansion")
    while value:
        value *= base
        d = int(value)
        digits.append(d)
        value -= d
    return tuple(digits)


def _digits_value(digits: Sequence[int], base: int) -> Fraction:
    v = Fraction(0)
    for i, d in enumerate(digits, 1):
        v += Fraction(d, base**i)
    return v


def evaluate_word(tp: TreePair, digits: Sequence[int]) -> tuple:
    """Rewrite a base-``a`` digit word by the prefix substitution of ``tp``."""
    digits = tuple(digits)
    for w, u in tp.leaf_pairs():
        head = digits[: len(w)]
        head = head + (0,) * (len(w) - len(head))
        if head == w:
            return u + digits[len(w) :]
    raise AssertionError("domain leaves do not cover the word")


def evaluate(tp: TreePair, t: Union[DyadicRational, Fraction, int, str]):
    """Image of the circle point ``t``.

    Binary pairs take and return :class:`DyadicRational`; other arities
    work on :class:`~fractions.Fraction` with a finite base-``a`` expansion.
    """
    if tp.arity == 2:
        d = DyadicRational.of(t)
        return word_to_dyadic(evaluate_word(tp, dyadic_to_word(d)))
    value = Fraction(t) if not isinstance(t, str) else Fraction(t.replace(" ", ""))
    return _digits_value(evaluate_word(tp, _digits(value, tp.arity)), tp.arity) % 1


@dataclass(frozen=True)
class Piece:
    """``t -> base**slope_exponent * t + offset`` on ``[start, end)``, read mod 1."""

    start: Fraction
    end: Fraction
    slope_exponent: int
    offset: Fraction

    def __call__(self, t: Fraction, base: int = 2) -> Fraction:
        return (Fraction(base) ** self.slope_exponent * t + self.offset) % 1


@dataclass(frozen=True)
class PLMap:
    pieces: tuple
    base: int = 2

    def __call__(self, t) -> Fraction:
        t = Fraction(t) % 1
        for p in self.pieces:
            if p.start <= t < p.end:
                return p(t, self.base)
        raise AssertionError("pieces do not cover [0, 1)")

    def is_homeomorphism(self) -> bool:
        """Pieces partition ``[0, 1)`` and their images tile the circle contiguously."""
        if not self.pieces or self.pieces[0].start != 0 or self.pieces[-1].end != 1:
            return False
        if any(a.end != b.start for a, b in zip(self.pieces, self.pieces[1:])):
            return False
        total = Fraction(0)
        for p in self.pieces:
            slope = Fraction(self.base) ** p.slope_exponent
            total += slope * (p.end - p.start)
        if total != 1:
            return False
        # continuity across every breakpoint, including the seam at 1 ~ 0
        for a, b in zip(self.pieces, self.pieces[1:] + self.pieces[:1]):
            left_limit = (Fraction(self.base) ** a.slope_exponent * a.end + a.offset) % 1
            if left_limit != b(b.start, self.base):
                return False
        return True


def to_plmap(tp: TreePair) -> PLMap:
    pieces = []
    base = tp.arity
    for w, u in tp.leaf_pairs():
        a0, a1 = address_interval(w, base)
        b0, _ = address_interval(u, base)
        e = len(w) - len(u)
        pieces.append(Piece(a0, a1, e, b0 - Fraction(base) ** e * a0))
    return PLMap(tuple(pieces), base)


# -- F-specific structure ---------------------------------------------------


def oplus(f: TreePair, g: TreePair) -> TreePair:
    """``f`` acting on ``[0, 1/2]`` and ``g`` on ``[1/2, 1]``; both must fix 0."""
    if f.rotation != 1 or g.rotation != 1:
        raise ValueError("oplus is only defined on elements of F (rotation 1)")
    if f.arity != 2 or g.arity != 2:
        raise ArityMismatch("oplus is defined for binary tree pairs")
    dom = [(0,) + w for w in f.domain.leaves] + [(1,) + w for w in g.domain.leaves]
    rng = [(0,) + w for w in f.range.leaves] + [(1,) + w for w in g.range.leaves]
    return reduce(_pair(dom, rng, 0, 2))


def leaf_exponent(tree: Tree, i: int) -> int:
    """Longest left-edge path ending at leaf ``i`` that does not start on the right spine."""
    w = tree.leaves[i]
    k = 0
    while k < len(w) and w[len(w) - 1 - k] == 0:
        k += 1
    if k == 0:
        return 0
    head = w[: len(w) - k]
    return k - 1 if all(d == 1 for d in head) else k


def normal_form(f: TreePair) -> GroupWord:
    """``x0^a0 ... xn^an xn^-bn ... x0^-b0`` read off the reduced diagram."""
    if f.rotation != 1 or f.arity != 2:
        raise ValueError("normal form is defined for binary elements of F")
    f = reduce(f)
    n = f.leaf_count
    pos = [(f"x{i}", leaf_exponent(f.domain, i)) for i in range(n)]
    neg = [(f"x{i}", -leaf_exponent(f.range, i)) for i in reversed(range(n))]
    return GroupWord(tuple(pos + neg))


@lru_cache(maxsize=None)
def _generator(family: str, index: int) -> TreePair:
    if family == "x":
        if index == 0:
            dom = Tree(2, ((0, 0), (0, 1), (1,)))
            rng = Tree(2, ((0,), (1, 0), (1, 1)))
            return TreePair(dom, rng, 1)
        return oplus(TreePair.identity(), _generator("x", index - 1))
    if family == "c":
        s = right_comb(index)
        return TreePair(s, s, 2)
    if family == "g":
        return multiply(_generator("x", index - 1), _generator("x", index))
    raise KeyError(family)


def generator(name: str) -> TreePair:
    """Reduced diagram of ``x_i``, ``c_n`` (``c`` = ``c_1``, ``f12`` = ``c_0``) or ``g_n = x_{n-1} x_n``."""
    family, index = split_name(name)
    return _generator(family, index)


def from_word(w: Union[GroupWord, str]) -> TreePair:
    result = TreePair.identity()
    for family, index, exp in word(w).syllables():
        result = multiply(result, power(_generator(family, index), exp))
    return result


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def trees_with_leaves(arity: int, leaves: int) -> tuple:
    """All full ``arity``-ary trees with exactly ``leaves`` leaves."""
    if leaves == 1:
        return (Tree.trivial(arity),)
    if (leaves - 1) % (arity - 1):
        return ()
    out = []
    for sizes in _compositions(leaves, arity):
        options = [trees_with_leaves(arity, s) for s in sizes]
        for combo in itertools.product(*options):
            out.append(
                Tree(arity, tuple((d,) + w for d, t in enumerate(combo) for w in t.leaves))
            )
    return tuple(out)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_elements(arity: int, max_leaves: int) -> list[TreePair]:
    """Every distinct reduced element with a diagram of at most ``max_leaves`` leaves.

    Sorted by leaf count, then serialization, so output is deterministic.
    """
    if arity < 2 or max_leaves < 1:
        raise ValueError("need arity >= 2 and max_leaves >= 1")
    seen: dict[tuple, TreePair] = {}
    for L in range(1, max_leaves + 1):
        shapes = trees_with_leaves(arity, L)
        for dom in shapes:
            for rng in shapes:
                for n in range(1, L + 1):
                    tp = reduce(TreePair(dom, rng, n))
                    seen.setdefault(tp.key(), tp)
    return sorted(seen.values(), key=lambda t: (t.leaf_count, str(t)))
