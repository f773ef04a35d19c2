"""Brute-force torsion searches in T_a.

Negative results only mean "none among diagrams up to the leaf bound".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .treepair import TreePair, address_interval, enumerate_elements, order, reduce


def search_torsion(arity: int, target_order: int, max_leaves: int = 7) -> list[TreePair]:
    """Reduced elements with at most ``max_leaves`` leaves of order exactly ``target_order``."""
    if arity < 2:
        raise ValueError("arity must be >= 2")
    if target_order < 2:
        raise ValueError("target order must be >= 2")
    return [tp for tp in enumerate_elements(arity, max_leaves) if order(tp, target_order) == target_order]


@dataclass(frozen=True)
class LeafParityReport:
    alpha: Fraction
    r_minus: int
    r_plus: int
    s_minus: int
    s_plus: int
    alpha_is_range_breakpoint: bool

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.r_minus, self.r_plus, self.s_minus, self.s_plus)

    @property
    def parities(self) -> tuple[int, int, int, int]:
        return tuple(c % 2 for c in self.counts)

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "counts": list(self.counts),
            "parities": list(self.parities),
            "alpha_is_range_breakpoint": self.alpha_is_range_breakpoint,
        }


def leaf_parity_report(tp: TreePair, split: int) -> LeafParityReport:
    """Count leaves of both trees on either side of ``alpha``, the left end of domain leaf ``split`` (1-based).

    A range leaf counts as left of ``alpha`` when it starts before it.
    """
    if not 1 <= split <= tp.leaf_count:
        raise IndexError(f"split {split} outside 1..{tp.leaf_count}")
    a = tp.arity
    alpha = address_interval(tp.domain.leaves[split - 1], a)[0]
    starts = [address_interval(u, a)[0] for u in tp.range.leaves]
    s_minus = sum(s < alpha for s in starts)
    r_minus = split - 1
    return LeafParityReport(
        alpha,
        r_minus,
        tp.leaf_count - r_minus,
        s_minus,
        tp.leaf_count - s_minus,
        alpha in starts,
    )


def leaf_counts_congruent(arity: int, max_leaves: int) -> bool:
    """Every enumerated tree has ``1 mod (arity - 1)`` leaves."""
    return all((reduce(tp).leaf_count - 1) % (arity - 1) == 0 for tp in enumerate_elements(arity, max_leaves))
