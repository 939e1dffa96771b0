from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alpert.exact import pochhammer
from alpert.hypergeom import HypTerminatingSpec, hyp, hyp_eval, hyp_terms, verify_chu_vandermonde, verify_saalschutz
from alpert.refinement import balanced_4f3_spec


def test_zero_numerator_parameter():
    assert hyp((0, 7), (3,), Fraction(5, 3)) == 1


def test_small_2f1():
    assert hyp((-1, 2), (2,), 1) == 0


def test_chu_vandermonde_worked_case():
    # (j, k) = (2, 3): both sides evaluate to 1/5
    lhs = hyp((-2, 3), (5,), 1)
    rhs = pochhammer(2, 2) / pochhammer(5, 2)
    assert lhs == rhs == Fraction(1, 5)


@pytest.mark.parametrize("j,k", [(0, 0), (3, 1), (2, 5), (6, 6)])
def test_chu_vandermonde(j, k):
    assert verify_chu_vandermonde(j, k)


@pytest.mark.parametrize("j,m", [(0, 0), (1, 1), (2, 3), (5, 2)])
def test_saalschutz(j, m):
    assert verify_saalschutz(j, m)


def test_non_terminating_rejected():
    with pytest.raises(ValueError):
        HypTerminatingSpec((Fraction(1, 2), 1), (2,), 1)


def test_zero_denominator_inside_range_rejected():
    with pytest.raises(ValueError):
        HypTerminatingSpec((-3, 1), (-1,), 1)


def test_nonpositive_denominator_beyond_range_allowed():
    # the 2F1 at argument 2 form: denominator -2i, series stops after i-j terms
    assert hyp((-1, -4), (-4,), 2) == 1 + Fraction(-1 * -4, -4) * 2


def test_balanced_flag():
    with pytest.raises(ValueError):
        HypTerminatingSpec((-2, 1, 1), (1, 1), 1, require_balanced=True)


def test_length_uses_smallest_stop():
    assert HypTerminatingSpec((-5, -2), (1,), 1).length == 2


@given(st.integers(0, 14), st.integers(0, 14))
def test_every_refinement_4f3_is_balanced(row, j):
    if j <= row:
        assert balanced_4f3_spec(row, j).is_balanced()


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=0, max_size=3),
       st.integers(0, 6))
def test_zero_argument_gives_one(params, n):
    assert hyp((-n, *params), (Fraction(7, 2),), 0) == 1


@given(st.integers(0, 10), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_term_order_independence(n, t):
    spec = HypTerminatingSpec((-n, n + 1), (Fraction(3, 2),), t)
    terms = hyp_terms(spec)
    assert sum(reversed(terms), Fraction(0)) == hyp_eval(spec)
