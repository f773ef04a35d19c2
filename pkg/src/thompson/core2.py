"""Stallings 2-cores of finitely generated subgroups of T.

The diagram of a binary tree pair is the directed graph made of both trees
with roots at the top and identified leaves; left edges carry label 0 and
right edges label 1.  The core glues the reduced diagrams of all
generators at their roots and then saturates two folding rules:

1. identified vertices get their left children identified and their right
   children identified;
2. vertices whose left and right children are identified are identified.

Folding is union-find with a worklist (congruence closure).  Vertices of a
finished core are numbered in breadth-first order from the root, which
makes the result canonical.
"""
from __future__ import annotations

import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .dyadic import DyadicRational, dyadic_to_word
from .treepair import ArityMismatch, Tree, TreePair, evaluate, reduce, split_leaf


class UnionFind:
    def __init__(self, n: int = 0):
        self.parent = list(range(n))

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        a, b = self.find(a), self.find(b)
        if a == b:
            return a
        if b < a:
            a, b = b, a
        self.parent[b] = a
        return a


def diagram_vertices(tp: TreePair):
    """Vertices and child map of a diagram.

    Keys are ``("R", prefix)`` and ``("S", prefix)`` for internal nodes and
    ``("L", i)`` for the ``i``-th identified leaf (domain order).  Returns
    ``(keys, children, roots)``.
    """
    if tp.arity != 2:
        raise ArityMismatch("2-cores are defined for binary tree pairs")
    dom_index = {w: i for i, w in enumerate(tp.domain.leaves)}
    rng_index = {u: tp.preimage_index(j) for j, u in enumerate(tp.range.leaves)}

    def key(side, prefix):
        table = dom_index if side == "R" else rng_index
        if prefix in table:
            return ("L", table[prefix])
        return (side, prefix)

    keys = [("L", i) for i in range(tp.leaf_count)]
    children = {}
    for side, tree in (("R", tp.domain), ("S", tp.range)):
        for p in sorted(tree.internal_nodes()):
            keys.append((side, p))
            children[(side, p)] = (key(side, p + (0,)), key(side, p + (1,)))
    roots = (key("R", ()), key("S", ()))
    return keys, children, roots


@dataclass(frozen=True)
class CoreGraph:
    """A folded core; vertex 0 is the root and ``children[v]`` is ``(left, right)`` or ``None``."""

    children: tuple
    provenance: tuple = ()  # ((generator index, diagram vertex key), core vertex) pairs

    @property
    def root(self) -> int:
        return 0

    @property
    def vertex_count(self) -> int:
        return len(self.children)

    def name(self, v: int) -> str:
        letters = string.ascii_lowercase[4:]  # e, f, g, ...
        return letters[v] if v < len(letters) else f"v{v}"

    def is_folded(self) -> bool:
        sigs = [c for c in self.children if c is not None]
        return len(sigs) == len(set(sigs))

    def is_reachable(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            kids = self.children[stack.pop()]
            for k in kids or ():
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return len(seen) == self.vertex_count

    def to_dot(self) -> str:
        lines = ["digraph core {"]
        for v in range(self.vertex_count):
            shape = "doublecircle" if v == self.root else "circle"
            lines.append(f'  {self.name(v)} [shape={shape}];')
        for v, kids in enumerate(self.children):
            if kids is None:
                continue
            for label, k in enumerate(kids):
                lines.append(f'  {self.name(v)} -> {self.name(k)} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)


def build_core(generators: Sequence[TreePair], rng: Optional[random.Random] = None) -> CoreGraph:
    """Fold the generator diagrams into the 2-core.

    ``rng`` shuffles the generators and the worklist; the result does not
    depend on it.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    order = list(range(len(generators)))
    if rng is not None:
        rng.shuffle(order)

    uf = UnionFind()
    ids: dict[tuple, int] = {}
    kids: dict[int, tuple[int, int]] = {}
    roots = []
    for g in order:
        keys, children, diagram_roots = diagram_vertices(reduce(generators[g]))
        for k in keys:
            ids[(g, k)] = uf.add()
        for k, (l, r) in children.items():
            kids[ids[(g, k)]] = (ids[(g, l)], ids[(g, r)])
        roots.extend(ids[(g, k)] for k in diagram_roots)

    # class representative -> (left, right) of some member with children
    class_kids: dict[int, tuple[int, int]] = dict(kids)
    pending = [(roots[0], r) for r in roots[1:]]

    def merge(a: int, b: int):
        ra, rb = uf.find(a), uf.find(b)
        if ra == rb:
            return
        ka, kb = class_kids.pop(ra, None), class_kids.pop(rb, None)
        top = uf.union(ra, rb)
        if ka is not None and kb is not None:
            pending.extend([(ka[0], kb[0]), (ka[1], kb[1])])  # rule 1
        if ka is not None or kb is not None:
            class_kids[top] = ka if ka is not None else kb

    while True:
        while pending:
            if rng is not None:
                idx = rng.randrange(len(pending))
                pending[idx], pending[-1] = pending[-1], pending[idx]
            merge(*pending.pop())
        # rule 2: classes with identified children are identified
        seen: dict[tuple[int, int], int] = {}
        for cls in sorted(class_kids):
            sig = (uf.find(class_kids[cls][0]), uf.find(class_kids[cls][1]))
            if sig in seen:
                pending.append((seen[sig], cls))
            else:
                seen[sig] = cls
        if not pending:
            break

    root = uf.find(roots[0])
    number = {root: 0}
    queue = [root]
    children: list = []
    for cls in queue:  # breadth first; queue grows while iterating
        kids_of = class_kids.get(cls)
        if kids_of is None:
            children.append(None)
            continue
        pair = []
        for k in kids_of:
            k = uf.find(k)
            if k not in number:
                number[k] = len(number)
                queue.append(k)
            pair.append(number[k])
        children.append(tuple(pair))
    provenance = tuple(sorted(((g, k), number[uf.find(v)]) for (g, k), v in ids.items()))
    return CoreGraph(tuple(children), provenance)


def accepts(core: CoreGraph, tp: TreePair, reduce_first: bool = True) -> bool:
    """Whether the diagram of ``tp`` maps into the core with both roots on the core root."""
    if reduce_first:
        tp = reduce(tp)
    keys, children, roots = diagram_vertices(tp)
    image: dict[tuple, int] = {}
    stack = []
    for r in roots:
        if image.setdefault(r, core.root) != core.root:
            return False
        stack.append(r)
    while stack:
        v = stack.pop()
        if v not in children:
            continue
        target = core.children[image[v]]
        if target is None:
            return False
        for child, t in zip(children[v], target):
            if child in image:
                if image[child] != t:
                    return False
            else:
                image[child] = t
                stack.append(child)
    return True


def _refine_at(tp: TreePair, alpha: DyadicRational) -> TreePair:
    """Add dipoles until ``alpha`` is a leaf endpoint in both trees."""
    w = dyadic_to_word(alpha)
    path = {w[:k] for k in range(len(w))}
    while True:
        for i, leaf in enumerate(tp.domain.leaves):
            if leaf in path:
                tp = split_leaf(tp, i)
                break
        else:
            for j, leaf in enumerate(tp.range.leaves):
                if leaf in path:
                    tp = split_leaf(tp, tp.preimage_index(j))
                    break
            else:
                return tp


def components(f: TreePair, alpha) -> tuple[TreePair, TreePair]:
    """Split ``f`` at a fixed interior point ``alpha`` into ``(f on [0, alpha], f on [alpha, 1])``."""
    alpha = DyadicRational.of(alpha)
    if f.rotation != 1 or f.arity != 2:
        raise ValueError("components are defined for binary elements of F")
    if alpha.numerator == 0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if evaluate(f, alpha) != alpha:
        raise ValueError(f"f does not fix {alpha}")
    tp = _refine_at(reduce(f), alpha)
    target = alpha.to_fraction()
    from .treepair import address_interval

    cut = next(i for i, w in enumerate(tp.domain.leaves) if address_interval(w, 2)[0] == target)
    dom, rng = tp.domain.leaves, tp.range.leaves
    assert address_interval(rng[cut], 2)[0] == target
    first = TreePair(Tree(2, dom), Tree(2, rng[:cut] + dom[cut:]), 1)
    second = TreePair(Tree(2, dom), Tree(2, dom[:cut] + rng[cut:]), 1)
    return reduce(first), reduce(second)


@dataclass(frozen=True)
class SemigroupPresentation:
    letters: tuple
    rules: tuple  # (letter, (left letter, right letter))
    base: str

    def __str__(self):
        body = ", ".join(f"{x} = {y}{z}" for x, (y, z) in self.rules)
        return f"{body} ; base {self.base}" if body else f"; base {self.base}"


def core_presentation(core: CoreGraph) -> SemigroupPresentation:
    """One rewriting rule ``x = yz`` per core vertex with children."""
    if not core.is_folded():
        raise ValueError("core is not folded")
    rules = tuple(
        (core.name(v), (core.name(kids[0]), core.name(kids[1])))
        for v, kids in enumerate(core.children)
        if kids is not None
    )
    letters = tuple(core.name(v) for v in range(core.vertex_count))
    return SemigroupPresentation(letters, rules, core.name(core.root))


@dataclass(frozen=True)
class ClosureReport:
    checked: int
    disagreements: tuple  # (element, accepted, member)

    def __bool__(self):
        return not self.disagreements


def core_closed_on(core: CoreGraph, sample: Iterable[TreePair], membership: Callable[[TreePair], bool]) -> ClosureReport:
    checked = 0
    bad = []
    for tp in sample:
        checked += 1
        a, m = accepts(core, tp), bool(membership(tp))
        if a != m:
            bad.append((tp, a, m))
    return ClosureReport(checked, tuple(bad))
