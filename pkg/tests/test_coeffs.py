import pytest
from hypothesis import given, settings, strategies as st

from alterna.coeffs import (
    a_one_param,
    a_vector,
    alpha_one_param,
    alpha_table,
    binom,
    gen_check_C,
    gen_check_D,
    support_ok,
)
from alterna.exactmath import LaurentPoly

b0, b1 = LaurentPoly.var("b0"), LaurentPoly.var("b1")


def test_alpha_small_tables():
    assert alpha_table(0).entries == {(0, 0, 0): 1}
    assert alpha_table(1).entries == {(1, 0, 0): 1, (0, 1, 0): 1}
    assert alpha_table(2).entries == {(2, 0, 0): 1, (1, 0, 1): 1, (-1, 1, 0): 1, (0, 1, 1): 1}


# frozen from the recursion
ALPHA_3 = {(-2, 1, 0): 1, (-1, 2, 0): 1, (0, 0, 1): 1, (0, 2, 1): 1, (1, 1, 1): 2, (2, 1, 0): 1, (3, 0, 0): 1}
ALPHA_4 = {(-3, 1, 0): 1, (-2, 1, 1): 1, (-1, 0, 1): 1, (-1, 2, 1): 2, (0, 0, 2): 1, (0, 2, 0): 1, (0, 2, 2): 1,
           (1, 1, 0): 1, (1, 1, 2): 2, (2, 1, 1): 3, (3, 0, 1): 1, (4, 0, 0): 1}


def test_alpha_frozen_tables():
    assert alpha_table(3).entries == ALPHA_3
    assert alpha_table(4).entries == ALPHA_4


@pytest.mark.parametrize("m, k, L, value", [(3, 3, 0, 1), (3, 1, 0, 0), (3, 0, 1, 1), (5, 1, 2, 3)])
def test_alpha_one_param_examples(m, k, L, value):
    assert alpha_one_param(m, k, L) == value
    assert alpha_table(m).one_param(k, L) == value


def test_a_vector_examples():
    assert a_vector(2).nonzero() == {2: LaurentPoly.const(1)}
    assert a_vector(3, True).nonzero() == {3: LaurentPoly.const(1), 1: b0 ** 2}
    assert a_vector(4).nonzero() == {4: LaurentPoly.const(1), 2: 2 * b0 * b1}
    assert a_vector(6).nonzero() == {6: LaurentPoly.const(1), 4: 4 * b0 * b1,
                                     2: 3 * b0 ** 2 * b1 ** 2 + b0 ** 2 + b1 ** 2}
    assert a_one_param(5).nonzero() == {5: LaurentPoly.const(1), 3: 3 * b0 ** 2, 1: b0 ** 4 + b0 ** 2}
    assert a_one_param(2).nonzero() == {2: LaurentPoly.const(1)}


# frozen from the recursion oracle
FROZEN = {
    7: "a7 = 1, a5 = 5*b0^2, a3 = 6*b0^4 + 3*b0^2, a1 = b0^6 + 3*b0^4 + b0^2",
    8: "a8 = 1, a6 = 6*b0*b1, a4 = 10*b0^2*b1^2 + 2*b0^2 + 2*b1^2, a2 = 4*b0^3*b1^3 + 4*b0^3*b1 + 4*b0*b1^3 + 2*b0*b1",
    9: "a9 = 1, a7 = 7*b0^2, a5 = 15*b0^4 + 5*b0^2, a3 = 10*b0^6 + 15*b0^4 + 3*b0^2, "
       "a1 = b0^8 + 6*b0^6 + 6*b0^4 + b0^2",
    10: "a10 = 1, a8 = 8*b0*b1, a6 = 21*b0^2*b1^2 + 3*b0^2 + 3*b1^2, "
        "a4 = 20*b0^3*b1^3 + 12*b0^3*b1 + 12*b0*b1^3 + 4*b0*b1, "
        "a2 = 5*b0^4*b1^4 + 10*b0^4*b1^2 + b0^4 + 10*b0^2*b1^4 + 13*b0^2*b1^2 + b0^2 + b1^4 + b1^2",
}


@pytest.mark.parametrize("m", sorted(FROZEN))
def test_a_vector_frozen(m):
    assert str(a_vector(m, m % 2 == 1)) == FROZEN[m]


def test_a_one_param_equals_specialization_m4():
    special = a_vector(4, True)
    assert all(a_one_param(4)[k] == special[k] for k in range(1, 5))


def test_odd_m_needs_equal_params():
    with pytest.raises(ValueError, match="odd"):
        a_vector(5)


def test_binom_convention():
    assert binom(-1, 0) == 1
    assert binom(4, -1) == 0
    with pytest.raises(AssertionError):
        binom(-1, 2)


def test_gen_checks():
    r0 = gen_check_C(0)
    assert r0.ok
    assert gen_check_C(1).ok and gen_check_C(12).ok
    assert gen_check_D(0).ok and gen_check_D(3).ok and gen_check_D(12).ok


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 14))
def test_alpha_support(m):
    for (k, l, lp), c in alpha_table(m).entries.items():
        assert c > 0
        assert support_ok(m, k, l, lp)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 24), st.integers(-24, 24), st.integers(0, 24))
def test_closed_form_matches_recursion(m, k, L):
    assert alpha_one_param(m, k, L) == alpha_table(m).one_param(k, L)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 16))
def test_a_vector_normalized_and_parity(m):
    vec = a_vector(m, m % 2 == 1)
    assert vec[m] == 1
    assert all(not vec[k] for k in range(1, m) if (m - k) % 2)
