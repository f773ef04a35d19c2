import random

import pytest

from thompson.core2 import (
    CoreGraph,
    accepts,
    build_core,
    components,
    core_closed_on,
    core_presentation,
    diagram_vertices,
)
from thompson.dyadic import DyadicRational
from thompson.jones import ParityClass, jones_generators, member_vect_bipartite, member_vect_parity
from thompson.treepair import (
    TreePair,
    address_interval,
    evaluate,
    from_word,
    generator,
    invert,
    multiply,
    oplus,
    split_leaf,
)

X0, X1, C = generator("x0"), generator("x1"), generator("c")
ID = TreePair.identity()


@pytest.fixture(scope="module")
def f_core():
    return build_core([X0, X1])


@pytest.fixture(scope="module")
def t_core():
    return build_core(jones_generators())


def check_invariants(core: CoreGraph):
    assert core.is_folded() and core.is_reachable()
    for kids in core.children:
        assert kids is None or all(0 <= k < core.vertex_count for k in kids)


def test_core_examples(f_core, t_core):
    assert f_core.vertex_count == 4
    assert build_core([ID]).children == (None,)
    assert t_core.children == ((1, 1), (1, 0))
    for core in (f_core, t_core, build_core([ID]), build_core([X0])):
        check_invariants(core)


def test_presentations(f_core, t_core):
    assert str(core_presentation(t_core)) == "e = ff, f = fe ; base e"
    single = core_presentation(build_core([ID]))
    assert single.rules == () and single.base == "e"
    pres = core_presentation(f_core)
    assert len(pres.letters) == 4
    assert str(pres) == "e = fg, f = fh, g = hg, h = hh ; base e"


def test_accepts_examples(f_core, t_core):
    assert accepts(f_core, from_word("x0 x1"))
    assert not accepts(f_core, C)
    assert not accepts(t_core, X0)
    for g in jones_generators():
        assert accepts(t_core, g)


def test_cyclic_core_on_x1():
    core = build_core([X0])
    check_invariants(core)
    # computed: the core of <x0> rejects x1
    assert not accepts(core, X1)
    assert accepts(core, multiply(X0, X0))


def test_t_core_matches_membership(t_core, ball6):
    report = core_closed_on(t_core, ball6, member_vect_bipartite)
    assert report.checked == len(ball6) and report


def test_f_core_matches_rotation(f_core, ball5):
    report = core_closed_on(f_core, ball5, lambda tp: tp.rotation == 1)
    assert report


def test_accepted_are_piecewise_dyadic(t_core, ball6):
    for tp in ball6:
        if accepts(t_core, tp):
            assert member_vect_parity(tp) != ParityClass.NEITHER


def test_unreduced_diagrams_are_accepted_equally(t_core, f_core, ball5):
    rng = random.Random(4)
    for tp in ball5[::3]:
        big = tp
        for _ in range(rng.randint(1, 3)):
            big = split_leaf(big, rng.randrange(big.leaf_count))
        for core in (t_core, f_core):
            assert accepts(core, big, reduce_first=False) == accepts(core, tp)


def test_acceptance_closure(f_core, t_core, ball5):
    rng = random.Random(9)
    for core in (f_core, t_core):
        accepted = [tp for tp in ball5 if accepts(core, tp)]
        for _ in range(1000):
            u, v = rng.choice(accepted), rng.choice(accepted)
            assert accepts(core, multiply(u, v))
            assert accepts(core, invert(u))


def test_folding_confluence():
    rng = random.Random(12)
    cases = [[X0, X1], jones_generators(), [X0], [from_word("x0 x1^-1"), C], [from_word("c x0"), X1, ID]]
    for gens in cases:
        ref = build_core(gens)
        for _ in range(10):
            assert build_core(gens, rng=random.Random(rng.random())).children == ref.children


def test_components_examples():
    first, second = components(X1, DyadicRational(1, 1))
    assert first == ID and second == X1
    f = oplus(X0, X0)
    assert components(f, DyadicRational(1, 1)) == (oplus(X0, ID), oplus(ID, X0))
    with pytest.raises(ValueError):
        components(X0, DyadicRational(1, 1))
    with pytest.raises(ValueError):
        components(C, DyadicRational(1, 1))


def test_components_recompose(ball6):
    for f, alpha in _fixed_points(ball6):
        a, b = components(f, alpha)
        assert multiply(a, b) == f
        for k in range(16):
            t = DyadicRational(k, 4)
            inside = t < alpha
            assert evaluate(a, t) == (evaluate(f, t) if inside else t)
            assert evaluate(b, t) == (t if inside else evaluate(f, t))


def test_component_closure(f_core, t_core, ball6):
    checked = 0
    for f, alpha in _fixed_points(ball6):
        for core in (f_core, t_core):
            if accepts(core, f):
                a, b = components(f, alpha)
                assert accepts(core, a) and accepts(core, b)
                checked += 1
    assert checked > 100


def _fixed_points(sample):
    for f in sample:
        if f.rotation != 1 or f.is_identity():
            continue
        for w in f.domain.leaves[1:]:
            alpha = DyadicRational.of(address_interval(w, 2)[0])
            if evaluate(f, alpha) == alpha:
                yield f, alpha


def test_diagram_vertices_shape():
    keys, children, roots = diagram_vertices(X0)
    assert len(keys) == 3 + 2 + 2
    assert roots == (("R", ()), ("S", ()))
    assert len(children) == 4


def test_dot(t_core):
    dot = t_core.to_dot()
    assert "e [shape=doublecircle]" in dot
    assert dot.count("->") == 4
    assert 'label="0"' in dot and 'label="1"' in dot
