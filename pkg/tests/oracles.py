"""Independent reference implementations used by the tests.

Nothing here imports the package: generators are the explicit piecewise
formulas, trees are nested tuples, and elements are compared through
their action on a fine dyadic grid.
"""
from __future__ import annotations

import itertools
from fractions import Fraction as Fr
from functools import lru_cache

# (start, end, slope, intercept) pieces on [0, 1)
X0 = [(Fr(0), Fr(1, 4), Fr(2), Fr(0)), (Fr(1, 4), Fr(1, 2), Fr(1), Fr(1, 4)), (Fr(1, 2), Fr(1), Fr(1, 2), Fr(1, 2))]
X1 = [
    (Fr(0), Fr(1, 2), Fr(1), Fr(0)),
    (Fr(1, 2), Fr(5, 8), Fr(2), Fr(-1, 2)),
    (Fr(5, 8), Fr(3, 4), Fr(1), Fr(1, 8)),
    (Fr(3, 4), Fr(1), Fr(1, 2), Fr(1, 2)),
]
C = [(Fr(0), Fr(1, 2), Fr(1, 2), Fr(1, 2)), (Fr(1, 2), Fr(3, 4), Fr(1), Fr(1, 4)), (Fr(3, 4), Fr(1), Fr(2), Fr(-3, 2))]
PIECES = {"x0": X0, "x1": X1, "c": C}


def breakpoints(name):
    return [p[0] for p in PIECES[name]]


def apply_pieces(pieces, t):
    t = Fr(t) % 1
    for a, b, m, k in pieces:
        if a <= t < b:
            return (m * t + k) % 1
    raise AssertionError(t)


def invert_pieces(pieces):
    out = []
    for a, b, m, k in pieces:
        lo = (m * a + k) % 1
        # none of the three generators wraps an image piece past 1
        assert lo + m * (b - a) <= 1
        out.append((lo, lo + m * (b - a), 1 / m, a - lo / m))
    return sorted(out)


def word_map(letters):
    """``letters`` is a list of ``(name, exponent)``; leftmost acts first."""

    def f(t):
        for name, e in letters:
            pieces = PIECES[name] if e > 0 else invert_pieces(PIECES[name])
            for _ in range(abs(e)):
                t = apply_pieces(pieces, t)
        return t

    return f


# -- nested tuple trees ---------------------------------------------------

LEAF = None


@lru_cache(maxsize=None)
def shapes(n):
    """All full binary trees with ``n`` leaves."""
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in shapes(k):
            for right in shapes(n - k):
                out.append((left, right))
    return tuple(out)


def leaf_intervals(tree, lo=Fr(0), hi=Fr(1)):
    if tree is LEAF:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    return leaf_intervals(tree[0], lo, mid) + leaf_intervals(tree[1], mid, hi)


def pair_map(dom, rng, rotation):
    """Piecewise map of ``(dom, rng, rotation)``: domain leaf i goes to range leaf i + rotation - 1."""
    d, r = leaf_intervals(dom), leaf_intervals(rng)
    L = len(d)

    def f(t):
        t = Fr(t) % 1
        for i, (a, b) in enumerate(d):
            if a <= t < b:
                c, e = r[(i + rotation - 1) % L]
                return (c + (t - a) * (e - c) / (b - a)) % 1
        raise AssertionError(t)

    return f


def signature(f, depth=6):
    return tuple(f(Fr(k, 2**depth)) for k in range(2**depth))


def distinct_elements(max_leaves):
    """Count elements of T with a diagram of at most ``max_leaves`` leaves, by action."""
    seen = set()
    for L in range(1, max_leaves + 1):
        for dom, rng in itertools.product(shapes(L), repeat=2):
            for n in range(1, L + 1):
                seen.add(signature(pair_map(dom, rng, n)))
    return len(seen)


def has_dipole(dom, rng, rotation):
    """Some domain caret lands, in order, on a range caret."""
    d, r = leaf_intervals(dom), leaf_intervals(rng)
    L = len(d)
    dom_carets = {(d[i], d[i + 1]) for i in range(L - 1) if _is_caret(d[i], d[i + 1])}
    for i in range(L - 1):
        if (d[i], d[i + 1]) not in dom_carets:
            continue
        j = (i + rotation - 1) % L
        if j + 1 < L and _is_caret(r[j], r[j + 1]) and (i + rotation) % L == j + 1:
            return True
    return False


def _is_caret(a, b):
    (a0, a1), (b0, b1) = a, b
    width = a1 - a0
    return width == b1 - b0 and a1 == b0 and (a0 / (2 * width)).denominator == 1


def digit_sum_parity(interval_start, width):
    """Parity of the binary address of a standard dyadic interval."""
    depth = width.denominator.bit_length() - 1
    return bin(int(interval_start * 2**depth)).count("1") % 2
