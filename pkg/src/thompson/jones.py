"""Jones' subgroup of T: Thompson graphs, membership, factorization.

Vertex ``v_i`` of a Thompson graph sits just left of leaf ``i`` (1-based).
Each internal node ``u`` of a binary tree contributes the edge
``{v_firstleaf(u), v_firstleaf(right child of u)}``; this is the pair of
gaps joined by a path crossing only the left edge below ``u``.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .dyadic import word_parity
from .treepair import (
    ArityMismatch,
    Tree,
    TreePair,
    equal,
    generator,
    invert,
    multiply,
    power,
    reduce,
    right_comb,
    split_leaf,
)


class NotInJonesSubgroup(ValueError):
    pass


class InJonesSubgroup(ValueError):
    """Raised when an operation needs an element outside the subgroup."""


class SearchExhausted(RuntimeError):
    """The search cap was reached; this is not a proof that nothing exists."""


class ParityClass(enum.Enum):
    PRESERVES = "preserves"
    SWITCHES = "switches"
    NEITHER = "neither"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ThompsonGraph:
    vertex_count: int
    edges: frozenset
    coloring: Optional[tuple] = field(default=None, compare=False)

    def neighbours(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.vertex_count + 1)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_dot(self, name: str = "thompson") -> str:
        lines = [f"graph {name} {{"]
        for v in range(1, self.vertex_count + 1):
            attrs = f'label="{v}"'
            if self.coloring is not None:
                attrs += ', style=filled, fillcolor="%s"' % ("white", "gray")[self.coloring[v - 1]]
            lines.append(f"  v{v} [{attrs}];")
        for u, v in sorted(self.edges):
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _tree_edges(tree: Tree) -> list[tuple[int, int]]:
    first = {}
    for i, w in enumerate(tree.leaves):
        for k in range(len(w) + 1):
            first.setdefault(w[:k], i)
    return [_edge(first[p] + 1, first[p + (1,)] + 1) for p in tree.internal_nodes()]


def thompson_graph_of_tree(tree: Tree) -> ThompsonGraph:
    if tree.arity != 2:
        raise ArityMismatch("Thompson graphs are defined for binary trees")
    return ThompsonGraph(len(tree), frozenset(_tree_edges(tree)))


def diagram_graph(tp: TreePair) -> ThompsonGraph:
    """Thompson graph of the given (not necessarily reduced) diagram."""
    if tp.arity != 2:
        raise ArityMismatch("Thompson graphs are defined for binary tree pairs")
    edges = set(_tree_edges(tp.domain))
    # range vertex j sits left of range leaf j, which is identified with domain leaf j - shift
    for u, v in _tree_edges(tp.range):
        edges.add(_edge(tp.preimage_index(u - 1) + 1, tp.preimage_index(v - 1) + 1))
    return ThompsonGraph(tp.leaf_count, frozenset(edges))


def thompson_graph_of_pair(tp: TreePair) -> ThompsonGraph:
    return diagram_graph(reduce(tp))


@dataclass(frozen=True)
class Bipartition:
    """Result of a 2-colouring attempt: a colouring, or an odd cycle."""

    coloring: Optional[tuple] = None
    odd_cycle: Optional[tuple] = None

    def __bool__(self):
        return self.coloring is not None


def is_bipartite(g: ThompsonGraph) -> Bipartition:
    adj = g.neighbours()
    color: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for start in range(1, g.vertex_count + 1):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(odd_cycle=_cycle_through(u, v, parent))
    return Bipartition(coloring=tuple(color[v] for v in range(1, g.vertex_count + 1)))


def _cycle_through(u, v, parent) -> tuple:
    def path(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x]
            out.append(x)
        return out

    pu, pv = path(u), path(v)
    on_pv = set(pv)
    meet = next(x for x in pu if x in on_pv)
    left = pu[: pu.index(meet) + 1]
    right = pv[: pv.index(meet)]
    return tuple(left + right[::-1])


def member_vect_bipartite(tp: TreePair) -> bool:
    return bool(is_bipartite(thompson_graph_of_pair(tp)))


def member_vect_parity(tp: TreePair) -> ParityClass:
    """Compare digit-sum parities of every identified leaf pair of the reduced diagram."""
    if tp.arity != 2:
        raise ArityMismatch("dyadic parity is defined for binary tree pairs")
    flips = {word_parity(w) ^ word_parity(u) for w, u in reduce(tp).leaf_pairs()}
    if flips == {0}:
        return ParityClass.PRESERVES
    if flips == {1}:
        return ParityClass.SWITCHES
    return ParityClass.NEITHER


def is_member(tp: TreePair) -> bool:
    return member_vect_bipartite(tp)


def alternating_form(tp: TreePair) -> TreePair:
    """An equivalent diagram with an even number of leaves whose colouring alternates.

    Scans adjacent vertices left to right and inserts a dipole between every
    equally coloured pair, then one at the last leaf if the count is odd.
    """
    tp = reduce(tp)
    colouring = is_bipartite(diagram_graph(tp)).coloring
    if colouring is None:
        raise NotInJonesSubgroup(f"{tp} is not in the Jones subgroup")
    # leaf m (0-based) lies between vertices m+1 and m+2; split right to left to keep indices valid
    for m in reversed(range(tp.leaf_count - 1)):
        if colouring[m] == colouring[m + 1]:
            tp = split_leaf(tp, m)
    if tp.leaf_count % 2:
        tp = split_leaf(tp, tp.leaf_count - 1)
    colouring = is_bipartite(diagram_graph(tp)).coloring
    assert colouring is not None and all(colouring[i] != colouring[i + 1] for i in range(len(colouring) - 1))
    return tp


@dataclass(frozen=True)
class Factorization:
    """``p * c_{2n}**m * q`` with ``p`` positive and ``q`` negative in F."""

    p: TreePair
    n: int
    m: int
    q: TreePair

    def product(self) -> TreePair:
        c = generator(f"c{2 * self.n}")
        return multiply(multiply(self.p, power(c, self.m)), self.q)


def factorize(tp: TreePair) -> Factorization:
    alt = alternating_form(tp)
    L = alt.leaf_count
    n = (L - 2) // 2
    comb = right_comb(2 * n)
    p = reduce(TreePair(alt.domain, comb, 1))
    q = reduce(TreePair(comb, alt.range, 1))
    return Factorization(p, n, alt.rotation - 1, q)


def commensurator_witness(f: TreePair, cap: int = 30) -> int:
    """Least ``n <= cap`` with ``f^-1 g^n f`` outside the subgroup, where ``g = (x0 x1)^-1``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if member_vect_bipartite(f):
        raise InJonesSubgroup(f"{reduce(f)} lies in the Jones subgroup")
    g = invert(multiply(generator("x0"), generator("x1")))
    f_inv = invert(f)
    gn = TreePair.identity()
    for n in range(1, cap + 1):
        gn = multiply(gn, g)
        if not member_vect_bipartite(multiply(multiply(f_inv, gn), f)):
            return n
    raise SearchExhausted(f"no witness exponent up to {cap}")


JONES_GENERATORS = ("x0 x1", "x1 x2", "x2 x3", "f12")


def jones_generators() -> list[TreePair]:
    from .treepair import from_word

    return [from_word(w) for w in JONES_GENERATORS]
