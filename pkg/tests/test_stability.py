from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from upqtriples import (
    InputError,
    SubtripleClass,
    TripleType,
    alpha_max,
    alpha_slope,
    critical_values,
    dual,
    slope,
    subtriple_margin,
)
from upqtriples.walls import walls_in_range

alphas = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@st.composite
def triples(draw, max_rank=4, ordered=False):
    n1 = draw(st.integers(1, max_rank))
    n2 = draw(st.integers(1, n1 if ordered else max_rank))
    return TripleType(n1, n2, draw(st.integers(-15, 15)), draw(st.integers(-15, 15)))


@st.composite
def triples_with_sub(draw):
    t = draw(triples())
    pairs = [(a, b) for a in range(t.n1 + 1) for b in range(t.n2 + 1)
             if (a, b) not in ((0, 0), (t.n1, t.n2))]
    a, b = draw(st.sampled_from(pairs))
    return t, SubtripleClass(a, b, draw(st.integers(-20, 20)))


@pytest.mark.parametrize("n,d,expected", [(2, 3, Fraction(3, 2)), (5, 0, 0), (3, -6, -2)])
def test_slope(n, d, expected):
    assert slope(n, d) == expected


def test_slope_rank_zero():
    with pytest.raises(InputError):
        slope(0, 1)


@pytest.mark.parametrize("t,alpha,expected", [
    (TripleType(2, 1, 3, 0), 0, 1),
    (TripleType(2, 1, 3, 0), 3, 2),
    (TripleType(2, 3, 4, 0), 2, 2),
])
def test_alpha_slope(t, alpha, expected):
    assert alpha_slope(t, alpha) == expected


def test_alpha_max_examples():
    assert alpha_max(TripleType(2, 1, 3, 0)).value == 6
    assert alpha_max(TripleType(1, 1, 5, 2)).unbounded
    assert alpha_max(TripleType(2, 1, -3, -2)).value == 2


def test_alpha_max_refuses_n1_below_n2():
    with pytest.raises(InputError, match="dual"):
        alpha_max(TripleType(1, 2, 2, 3))


def test_dual_examples():
    assert dual(TripleType(1, 2, 2, 3)) == TripleType(2, 1, -3, -2)
    assert dual(dual(TripleType(3, 2, 7, -1))) == TripleType(3, 2, 7, -1)
    assert dual(TripleType(1, 1, 0, 0)) == TripleType(1, 1, 0, 0)


def test_dual_example_wall_sets_agree():
    # walls of (1,2,2,3) read off in the range of its normalized dual
    t = TripleType(1, 2, 2, 3)
    upper = alpha_max(dual(t)).value
    assert [w.alpha for w in walls_in_range(t, upper)] == \
        [w.alpha for w in critical_values(dual(t))]


@pytest.mark.parametrize("sub,t,alpha,expected", [
    (SubtripleClass(1, 1, 2), TripleType(2, 1, 3, 0), 2, Fraction(-1, 3)),
    (SubtripleClass(1, 0, 1), TripleType(2, 1, 3, 0), 0, 0),
    (SubtripleClass(1, 0, 0), TripleType(2, 2, 0, 0), 0, 0),
    (SubtripleClass(1, 0, 0), TripleType(2, 2, 0, 0), 7, Fraction(7, 2)),
])
def test_subtriple_margin(sub, t, alpha, expected):
    assert subtriple_margin(sub, t, alpha) == expected


def test_margin_zero_for_equal_slopes():
    # (1,1,0) in (2,2,0,0): same proportion of E2, same slope
    for a in range(0, 10):
        assert subtriple_margin(SubtripleClass(1, 1, 0), TripleType(2, 2, 0, 0), a) == 0


@pytest.mark.parametrize("sub", [SubtripleClass(0, 0, 0), SubtripleClass(2, 1, 3),
                                 SubtripleClass(3, 0, 1)])
def test_margin_rejects_non_proper(sub):
    with pytest.raises(InputError):
        subtriple_margin(sub, TripleType(2, 1, 3, 0), 1)


@given(triples(), alphas, alphas)
def test_alpha_slope_affine(t, a, b):
    coeff = Fraction(t.n2, t.rank)
    assert alpha_slope(t, a) - alpha_slope(t, b) == coeff * (a - b)


@given(triples(ordered=True))
def test_full_e1_class_and_alpha_max(t):
    # the class (n1, 0, d1) balances at alpha = mu(E1) - mu(E2); alpha_M rescales that gap
    gap = slope(t.n1, t.d1) - slope(t.n2, t.d2)
    assert subtriple_margin(SubtripleClass(t.n1, 0, t.d1), t, gap) == 0
    if t.n1 > t.n2:
        assert alpha_max(t).value == Fraction(2 * t.n1, t.n1 - t.n2) * gap


@given(triples())
def test_dual_involution(t):
    assert dual(dual(t)) == t


@given(triples_with_sub(), alphas)
def test_sub_and_quotient_average_to_total(pair, alpha):
    t, sub = pair
    quo = sub.quotient_in(t)
    w_sub, w_quo = Fraction(sub.rank, t.rank), Fraction(quo.rank, t.rank)
    assert w_sub * subtriple_margin(sub, t, alpha) + w_quo * subtriple_margin(quo, t, alpha) == 0
