from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doubletwist.knotalg import (DoubleTwist, LaurentPoly, alexander,
                                 alexander_from_seifert, algebraic_classify,
                                 branched_homology_order, fox_milnor,
                                 lt_signature, rho1_torus_integral,
                                 seifert_matrix,
                                 seifert_matrix_from_positive_braid, signature,
                                 torus_seifert_matrix)


def P(*coeffs):
    return LaurentPoly.from_list(list(coeffs))


# ---------------------------------------------------------------------------
# Laurent polynomials

def test_laurent_arithmetic():
    f = P(1, 2)          # 1 + 2t
    g = P(-1, 0, 3)      # -1 + 3t^2
    assert (f + g).coeff_list() == [2, 3] and (f + g).min_exp() == 1
    assert (f * g).coeff_list() == [-1, -2, 3, 6]
    assert (f - f).is_zero()
    assert f.shift(2) == LaurentPoly({2: 1, 3: 2})
    assert f.reverse() == LaurentPoly({0: 1, -1: 2})
    assert f.compose_power(3) == LaurentPoly({0: 1, 3: 2})


def test_laurent_normalized_and_units():
    f = LaurentPoly({-1: -2, 0: 3})
    assert f.normalized().coeff_list() == [2, -3] or \
        f.normalized().coeff_list() == [-2, 3]
    assert f.normalized()[f.normalized().max_exp()] > 0
    assert LaurentPoly({5: -1}).is_unit()
    assert not P(2).is_unit()
    assert P(1, 2).equals_up_to_unit(LaurentPoly({3: -1, 4: -2}))
    assert not P(1, 2).equals_up_to_unit(P(1, 3))


def test_laurent_evaluation():
    f = LaurentPoly({-1: 1, 1: 1})  # t + 1/t
    assert f(2) == Fraction(5, 2)
    assert P(1, -3, 1)(1) == -1


def test_laurent_json_roundtrip():
    f = LaurentPoly({-2: 7, 0: -1, 3: 4})
    assert LaurentPoly.from_json(f.to_json()) == f


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5))
@settings(max_examples=50, deadline=None)
def test_laurent_mul_commutes_and_evaluates(a, b):
    f, g = P(*a), P(*b)
    assert f * g == g * f
    assert (f * g)(3) == f(3) * g(3)


# ---------------------------------------------------------------------------
# Seifert matrix / Alexander polynomial

def test_seifert_matrix_examples():
    assert seifert_matrix(DoubleTwist(-1, 1)) == ((-1, 1), (0, 1))
    assert seifert_matrix(DoubleTwist(1, 1)) == ((1, 1), (0, 1))


@given(st.integers(-6, 6), st.integers(-6, 6))
@settings(max_examples=30, deadline=None)
def test_seifert_v_minus_vt_unimodular(m, n):
    (a, b), (c, d) = seifert_matrix(DoubleTwist(m, n))
    assert (a - a) * (d - d) - (b - c) * (c - b) == 1


def test_alexander_examples():
    assert alexander(DoubleTwist(-1, 1)) == P(1, -3, 1)
    assert alexander(DoubleTwist(-1, 6)) == P(6, -13, 6)
    assert alexander(DoubleTwist(1, 1)) == P(1, -1, 1)
    assert alexander(DoubleTwist(0, 5)) == P(1)
    assert alexander(DoubleTwist(3, 0)) == P(1)


@given(st.integers(-10, 10), st.integers(-10, 10))
@settings(max_examples=80, deadline=None)
def test_alexander_symmetric_and_unimodular_at_1(m, n):
    d = alexander(DoubleTwist(m, n))
    assert d.equals_up_to_unit(d.reverse())
    assert d(1) in (1, -1)


@given(st.integers(-5, 5), st.integers(-5, 5))
@settings(max_examples=40, deadline=None)
def test_mirror_alexander_and_signature(m, n):
    k, mk = DoubleTwist(m, n), DoubleTwist(-m, -n)
    assert alexander(k).equals_up_to_unit(alexander(mk))
    assert signature(mk) == -signature(k)


def test_alexander_matches_general_seifert_determinant():
    for m in range(-3, 4):
        for n in range(-3, 4):
            V = [list(r) for r in seifert_matrix(DoubleTwist(m, n))]
            d = alexander_from_seifert(V)
            assert d.equals_up_to_unit(alexander(DoubleTwist(m, n)))


# ---------------------------------------------------------------------------
# Signatures

def test_signature_examples():
    assert signature(DoubleTwist(-1, 1)) == 0
    assert signature(DoubleTwist(1, 1)) == 2
    assert signature(DoubleTwist(-1, -1)) == -2


def test_signature_vanishes_mixed_signs():
    for m in range(-5, 0):
        for n in range(1, 6):
            assert signature(DoubleTwist(m, n)) == 0


def test_signature_nonzero_like_signs():
    for m in range(1, 6):
        for n in range(1, 6):
            assert signature(DoubleTwist(m, n)) == 2
            assert signature(DoubleTwist(-m, -n)) == -2


def test_lt_signature_examples():
    assert lt_signature(DoubleTwist(-1, 2), Fraction(1, 2)) == 0
    assert lt_signature(DoubleTwist(1, 1), Fraction(1, 2)) == 2
    assert lt_signature(DoubleTwist(-1, 1), Fraction(1, 3)) == 0


def test_lt_signature_rejects_omega_one():
    with pytest.raises(ValueError):
        lt_signature(DoubleTwist(1, 1), Fraction(0))
    with pytest.raises(ValueError):
        lt_signature(DoubleTwist(1, 1), Fraction(2))


LT_SAMPLES = [Fraction(a, 7) for a in range(1, 7)] + \
    [Fraction(1, 2), Fraction(1, 3)]


def test_lt_signature_vanishes_mixed_signs():
    for m in range(-5, 0):
        for n in range(1, 6):
            for s in LT_SAMPLES:
                assert lt_signature(DoubleTwist(m, n), s) == 0


def test_lt_signature_mirror_negates():
    for m in range(-5, 6):
        for n in range(-5, 6):
            for s in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 7)):
                assert lt_signature(DoubleTwist(-m, -n), s) == \
                    -lt_signature(DoubleTwist(m, n), s)


def test_lt_signature_jump_average():
    # det factor (2-2c)mn - 1 vanishes for mn=1 at c=1/2, i.e. s=1/6:
    # the averaged one-sided limits give half the plateau value
    assert lt_signature(DoubleTwist(1, 1), Fraction(1, 6)) == 1
    assert lt_signature(DoubleTwist(1, 1), Fraction(1, 3)) == 2


# ---------------------------------------------------------------------------
# Fox-Milnor factorization

def test_fox_milnor_pronic_c1():
    d6 = P(6, -13, 6)
    got = fox_milnor(d6, 1)
    assert got is not None
    assert got.remultiply() == d6
    # 3t - 2 up to unit and t -> 1/t (its reversal 2t - 3 is equally valid)
    assert got.f.equals_up_to_unit(P(-2, 3)) or \
        got.f.equals_up_to_unit(P(-3, 2))


def test_fox_milnor_square_c2():
    d4 = P(4, -9, 4)
    assert fox_milnor(d4, 1) is None
    got = fox_milnor(d4, 2)
    assert got is not None
    assert got.remultiply() == d4.compose_power(2)
    assert got.f.equals_up_to_unit(P(-2, -1, 2))  # 2t^2 - t - 2


def test_fox_milnor_absent_for_three():
    d3 = P(3, -7, 3)
    assert fox_milnor(d3, 1) is None
    assert fox_milnor(d3, 2) is None


def test_fox_milnor_unit_input():
    got = fox_milnor(P(1), 3)
    assert got is not None and got.remultiply().is_unit()


def test_fox_milnor_rejects_bad_input():
    with pytest.raises(ValueError):
        fox_milnor(P(1, -3, 1), 0)
    with pytest.raises(ValueError):
        fox_milnor(P(1, 2, 3, 4), 1)
    with pytest.raises(ValueError):
        fox_milnor(LaurentPoly(), 1)


def _twist_alexander(n):
    return P(n, -(2 * n + 1), n).normalized()


def test_fox_milnor_classification_consistency():
    import math
    for n in range(-30, 31):
        d = _twist_alexander(n)
        pronic = n >= 0 and math.isqrt(4 * n + 1) ** 2 == 4 * n + 1
        square = n >= 0 and math.isqrt(n) ** 2 == n
        assert (fox_milnor(d, 1) is not None) == pronic, n
        assert (fox_milnor(d, 2) is not None) == (pronic or square), n


def test_algebraic_classify_examples():
    assert algebraic_classify(2) == "AlgebraicallySlice"
    assert algebraic_classify(9) == "AlgebraicallyRationallySliceOnly"
    assert algebraic_classify(3) == "NotAlgebraicallyRationallySlice"
    assert algebraic_classify(0) == "AlgebraicallySlice"
    assert algebraic_classify(1) == "AlgebraicallyRationallySliceOnly"
    assert algebraic_classify(-4) == "NotAlgebraicallyRationallySlice"


def test_algebraic_classify_agrees_with_factorization():
    for n in range(-30, 31):
        d = _twist_alexander(n)
        cls = algebraic_classify(n)
        assert (cls == "AlgebraicallySlice") == (fox_milnor(d, 1) is not None)
        assert (cls != "NotAlgebraicallyRationallySlice") == \
            (fox_milnor(d, 2) is not None)


# ---------------------------------------------------------------------------
# Branched-cover homology order

def test_branched_homology_order_examples():
    f8 = P(1, -3, 1)
    assert branched_homology_order(f8, 2) == 5
    assert branched_homology_order(f8, 3) == 16
    for p in (2, 3, 5, 7):
        assert branched_homology_order(P(1), p) == 1


def test_branched_homology_order_double_cover_is_det():
    for m in range(-4, 5):
        for n in range(-4, 5):
            d = alexander(DoubleTwist(m, n))
            assert branched_homology_order(d, 2) == abs(d(-1))


def test_branched_homology_order_rejects():
    with pytest.raises(ValueError):
        branched_homology_order(P(1, -3, 1), 1)
    with pytest.raises(ValueError):
        branched_homology_order(LaurentPoly(), 3)


# ---------------------------------------------------------------------------
# Torus knots and the signature integral

def test_positive_braid_trefoil():
    assert seifert_matrix_from_positive_braid([1, 1, 1]) == \
        [[-1, 1], [0, -1]]


def test_torus_seifert_alexander():
    # Delta_{T(k,k-1)} = (t^(k(k-1)) - 1)(t - 1) / ((t^k - 1)(t^(k-1) - 1))
    for k in (3, 4, 5):
        V = torus_seifert_matrix(k)
        assert len(V) == (k - 1) * (k - 2)  # twice the genus
        got = alexander_from_seifert(V).normalized()
        order = k * (k - 1)
        num = (P(*([-1] + [0] * (order - 1) + [1])) * P(-1, 1)).normalized()
        den = (P(*([-1] + [0] * (k - 1) + [1])) *
               P(*([-1] + [0] * (k - 2) + [1]))).normalized()
        assert (got * den).normalized() == num


def test_positive_braid_rejects_nonpositive():
    with pytest.raises(ValueError):
        seifert_matrix_from_positive_braid([1, 0, 1])


def test_rho1_trivial_and_trefoil():
    assert rho1_torus_integral(2) == \
        rho1_torus_integral(2, resolution=1)
    assert rho1_torus_integral(2).value == 0
    got = rho1_torus_integral(3)
    assert got.value == Fraction(4, 3)
    assert got.error == 0


@pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
def test_rho1_nonzero(k):
    got = rho1_torus_integral(k)
    assert got.error == 0
    assert got.value != 0


def test_rho1_rejects():
    with pytest.raises(ValueError):
        rho1_torus_integral(1)
    with pytest.raises(ValueError):
        rho1_torus_integral(3, resolution=0)
