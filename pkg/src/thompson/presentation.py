"""Relations of T and of Jones' subgroup, checked in tree-pair semantics.

Relation families live in ``suites/relations.json`` as word templates; a
``{expr}`` hole is an integer expression over the family's index variables
and the range bound ``N``.

Also here: the rewriting of words over ``g_n`` and ``c_{2n}`` into
``p c_{2n}^m q^-1`` and the quotient map onto the infinite dihedral group.
"""
from __future__ import annotations

import ast
import json
import operator
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator, Optional, Union

from .treepair import TreePair, equal, from_word, reduce
from .words import GroupWord, WordSyntaxError, word

DEFAULT_RANGES = {"t1-t5": 8, "jones": 5, "raise": 4, "slide": 4, "finite-presentation": 0}
SUITE_ALIASES = {"t": "t1-t5", "fp": "finite-presentation"}

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv}


def _eval_int(expr: str, env: dict[str, int]) -> int:
    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise ValueError(f"unsupported expression {expr!r}")

    return walk(ast.parse(expr, mode="eval"))


def _fill(template: str, env: dict[str, int]) -> str:
    return re.sub(r"\{([^}]*)\}", lambda m: str(_eval_int(m.group(1), env)), template)


def load_suites() -> dict:
    text = resources.files("thompson").joinpath("suites/relations.json").read_text()
    return json.loads(text)


def suite_names() -> list[str]:
    return sorted(set(load_suites()) | set(SUITE_ALIASES))


def instances(family: dict, N: int) -> Iterator[tuple[str, str, dict]]:
    """Instantiate one family for every admissible index assignment."""
    specs = family.get("vars", [])

    def rec(i, env):
        if i == len(specs):
            yield _fill(family["lhs"], env), _fill(family["rhs"], env), dict(env)
            return
        name, lo, hi = specs[i]
        for v in range(_eval_int(lo, env), _eval_int(hi, env) + 1):
            env[name] = v
            yield from rec(i + 1, env)
        env.pop(name, None)

    yield from rec(0, {"N": N})


def verify_relation(lhs: Union[str, GroupWord], rhs: Union[str, GroupWord]) -> bool:
    return equal(from_word(word(lhs)), from_word(word(rhs)))


@dataclass(frozen=True)
class RelationCheck:
    label: str
    lhs: str
    rhs: str
    holds: bool
    lhs_pair: Optional[TreePair] = None
    rhs_pair: Optional[TreePair] = None

    def line(self) -> str:
        rhs = self.rhs or "1"
        verdict = "ok" if self.holds else f"FAIL  [{self.lhs_pair}]  vs  [{self.rhs_pair}]"
        return f"{self.label}: {self.lhs} = {rhs} : {verdict}"

    def to_json(self) -> dict:
        out = {"label": self.label, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}
        if not self.holds:
            out["lhs_pair"] = self.lhs_pair.to_json()
            out["rhs_pair"] = self.rhs_pair.to_json()
        return out


@dataclass(frozen=True)
class SuiteReport:
    name: str
    bound: int
    checks: tuple = field(default_factory=tuple)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.holds]

    def __bool__(self):
        return not self.failures

    def summary(self) -> str:
        held = sum(c.holds for c in self.checks)
        return f"{held}/{len(self.checks)} relations hold"

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks] + [self.summary()]

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "range": self.bound,
            "total": len(self.checks),
            "failed": len(self.failures),
            "relations": [c.to_json() for c in self.checks],
        }


def relation_suite(name: str, N: Optional[int] = None) -> SuiteReport:
    suites = load_suites()
    key = SUITE_ALIASES.get(name, name)
    if key not in suites:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    if N is None:
        N = DEFAULT_RANGES.get(name, DEFAULT_RANGES.get(key, 1))
    if N < 1 and key != "finite-presentation":
        raise ValueError("range must be >= 1")
    checks = []
    for family in suites[key]:
        for lhs, rhs, _ in instances(family, N):
            a, b = reduce(from_word(lhs)), reduce(from_word(rhs))
            ok = a.key() == b.key()
            checks.append(RelationCheck(family["label"], lhs, rhs, ok, None if ok else a, None if ok else b))
    return SuiteReport(name, N, tuple(checks))


# -- standard form p c_{2n}^m q^-1 ------------------------------------------


@dataclass(frozen=True)
class StandardForm:
    """``p * c_{2n}**m * q**-1`` with ``p`` and ``q`` positive words in the ``g_k``."""

    p: GroupWord
    n: int
    m: int
    q: GroupWord

    def as_word(self) -> GroupWord:
        middle = GroupWord(((f"c{2 * self.n}", self.m),))
        return self.p * middle * self.q.inverse()

    def __str__(self):
        return f"p = {self.p or '1'} ; c{2 * self.n}^{self.m} ; q = {self.q or '1'}"


def _g_word(indices: list[int]) -> GroupWord:
    return GroupWord(tuple((f"g{k}", 1) for k in indices))


def _push_left(prefix: list[int], n: int, m: int, k: int) -> tuple[int, int]:
    """Rewrite ``c_{2n}^m g_k`` as ``g_? ... c_{2n'}^{m'}``, appending the ``g`` letters to ``prefix``."""
    if m == 0:
        prefix.append(k)
        return n, m
    while k >= 2 * n + 2:
        # c_{2n}^m = g_{2n+2-m} c_{2n+2}^m
        prefix.append(2 * n + 2 - m)
        n += 1
    if k > m:
        prefix.append(k - m)
        return n + 1, m
    if k == m:
        return n + 1, m + 2
    prefix.append(2 * n + 2 + k - m)
    return n + 1, m + 2


def _split_positive_negative(letters: list[tuple[int, int]]) -> tuple[list[int], list[int]]:
    """Rewrite a word in ``g_k^{+-1}`` as ``p q^-1``; returns ``(p, q)`` as index lists.

    Each step moves a negative letter right past a positive one, so the
    number of (negative, positive) inversions drops and the loop ends.
    """
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            (a, ea), (b, eb) = letters[i], letters[i + 1]
            if ea < 0 < eb:
                if a == b:
                    letters[i : i + 2] = []
                elif a < b:
                    letters[i : i + 2] = [(b + 2, 1), (a, -1)]
                else:
                    letters[i : i + 2] = [(b, 1), (a + 2, -1)]
                changed = True
                break
    pos = [k for k, e in letters if e > 0]
    neg = [k for k, e in letters if e < 0]
    return pos, neg[::-1]


def symbolic_standard_form(w: Union[str, GroupWord]) -> StandardForm:
    """Rewrite a word over ``g_n`` and ``c_{2n}`` into ``p c_{2n}^m q^-1`` with ``0 <= m < 2n+2``.

    The word is consumed letter by letter, keeping the running product in
    standard form.  A positive ``g_k`` entering on the right is first
    combined with ``q^-1`` into ``p' q'^-1``, then ``p'`` moves left through
    the ``c`` power.  A ``c`` power entering on the right swaps places with
    ``q^-1`` the same way, and the two ``c`` powers are merged after
    raising the smaller index.
    """
    w = word(w)
    P: list[int] = []
    Q: list[int] = []
    n, m = 0, 0
    for family, index, exp in w.syllables():
        if family == "g":
            for _ in range(abs(exp)):
                if exp < 0:
                    Q = [index] + Q
                    continue
                tail = [(k, -1) for k in reversed(Q)] + [(index, 1)]
                pos, Q = _split_positive_negative(tail)
                for k in pos:
                    n, m = _push_left(P, n, m, k)
        elif family == "c" and index % 2 == 0:
            j = index // 2
            period = 2 * j + 2
            e = exp % period
            if e == 0:
                continue
            # Q^-1 c^e = (c^-e Q)^-1 and c^-e Q = Pq c_{2nn}^mm
            Pq: list[int] = []
            nn, mm = j, (-e) % period
            for k in Q:
                nn, mm = _push_left(Pq, nn, mm, k)
            n2, m2 = nn, (-mm) % (2 * nn + 2)
            Q = Pq
            if m2 == 0:
                continue
            if m == 0:
                n, m = n2, m2
                continue
            while n < n2:
                P.append(2 * n + 2 - m)
                n += 1
            while n2 < n:
                # c_{2b}^k = c_{2b+2}^{k+2} g_k^-1
                Q.append(m2)
                m2 += 2
                n2 += 1
            m = (m + m2) % (2 * n + 2)
        else:
            raise WordSyntaxError(f"{family}{index}", "only g_n and even c_n letters are allowed")
    return StandardForm(_g_word(P), n, m, _g_word(Q))


# -- dihedral quotient --------------------------------------------------------


@dataclass(frozen=True)
class DihedralElement:
    """The integer map ``t -> (-1)**flip * t + translation``.

    Products are read left to right like everywhere else: ``(u * v)(t) == v(u(t))``.
    """

    translation: int = 0
    flip: int = 0

    def __call__(self, t: int) -> int:
        return (-t if self.flip else t) + self.translation

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        k = -self.translation if other.flip else self.translation
        return DihedralElement(k + other.translation, self.flip ^ other.flip)

    def inverse(self) -> "DihedralElement":
        return self if self.flip else DihedralElement(-self.translation, 0)

    def __pow__(self, k: int) -> "DihedralElement":
        base = self if k >= 0 else self.inverse()
        out = DihedralElement()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.translation == 0 and self.flip == 0

    def __str__(self):
        return f"({self.translation}, {self.flip})"


DIHEDRAL_C0 = DihedralElement(0, 1)
DIHEDRAL_G1 = DihedralElement(1, 0)


def alpha_letter(family: str, index: int) -> DihedralElement:
    if family == "g":
        return DIHEDRAL_G1 if index % 2 else DihedralElement()
    if family == "c" and index % 2 == 0:
        # c_{2n} = g_{2n-1}^-1 c_{2n-2} forces c_{2n} -> g1^-n c0
        return DIHEDRAL_G1 ** (-(index // 2)) * DIHEDRAL_C0
    raise WordSyntaxError(f"{family}{index}", "the dihedral quotient is defined on g_n and c_{2n}")


def dihedral_alpha(w: Union[str, GroupWord]) -> DihedralElement:
    out = DihedralElement()
    for family, index, exp in word(w).syllables():
        out = out * alpha_letter(family, index) ** exp
    return out
