"""Product integrals of Bernoulli polynomials: oracle equivalence, the worked
examples, and the reciprocity identities derived from them."""

import math
import random
from fractions import Fraction as F

import pytest

from dedsums.bernoulli import bernoulli_number, bernoulli_poly_value
from dedsums.dirichlet import enumerate_characters
from dedsums.exactnum import scalars_equal
from dedsums.integrals import (ProductIntegralSpec, bernoulli_pair_identity_polys,
                               char_two_factor_reciprocity,
                               equal_slope_reciprocity,
                               permutation_invariance_check,
                               product_integral_direct,
                               product_integral_direct_poly,
                               product_integral_formula,
                               reflective_slope_integral,
                               two_factor_constant_sum_poly,
                               two_factor_reciprocity)

CHI3 = enumerate_characters(3, "nonprincipal_primitive")[0]
CHI4 = enumerate_characters(4, "nonprincipal_primitive")[0]

# the two fully worked product-integral examples
EXAMPLE_A = ProductIntegralSpec((3, 4, 16), (F(-1), F(3), F(5)),
                                (F(1), F(-1), F(-2)), F(1))
EXAMPLE_B = ProductIntegralSpec((3, 4, 15), (F(-1), F(3), F(-3)),
                                (F(1), F(-1), F(2)), F(1))


def _rand_frac(rng, nonzero=False):
    while True:
        v = F(rng.randint(-9, 9), rng.randint(1, 9))
        if not nonzero or v != 0:
            return v


def test_spec_validation():
    with pytest.raises(ValueError):
        ProductIntegralSpec((), (), (), F(1))
    with pytest.raises(ValueError):
        ProductIntegralSpec((1,), (F(0),), (F(0),), F(1))
    with pytest.raises(ValueError):
        ProductIntegralSpec((1, 2), (F(1),), (F(0),), F(1))


def test_single_factor_is_the_antiderivative():
    # one factor: the integral is (B_{n+1}(bx+y) - B_{n+1}(y)) / (b (n+1))
    rng = random.Random(12)
    for _ in range(10):
        n = rng.randint(0, 6)
        b, y, x = _rand_frac(rng, True), _rand_frac(rng), _rand_frac(rng)
        spec = ProductIntegralSpec((n,), (b,), (y,), x)
        want = (bernoulli_poly_value(n + 1, b * x + y)
                - bernoulli_poly_value(n + 1, y)) / (b * (n + 1))
        assert product_integral_direct(spec) == want
        assert product_integral_formula(spec) == want


def test_zero_mean_single_period():
    spec = ProductIntegralSpec((2,), (F(1),), (F(0),), F(1))
    assert product_integral_direct(spec) == 0


def test_worked_example_vanishing():
    assert product_integral_direct(EXAMPLE_A) == 0
    assert product_integral_formula(EXAMPLE_A) == 0


def test_worked_example_double_sum():
    direct = product_integral_direct(EXAMPLE_B)
    assert product_integral_formula(EXAMPLE_B) == direct
    # the displayed double sum for the scaled integral:
    # -2 sum_{a<=7} B_{16+a}(2)/(16+a)! sum_i C(a,i) 3^-(i+1)
    #                       B_{3-i} B_{4-a+i}(-1) / ((3-i)! (4-a+i)!)
    displayed = F(0)
    for a in range(8):
        for i in range(min(a, 3) + 1):
            if 4 - a + i < 0:
                continue
            displayed += (bernoulli_poly_value(16 + a, F(2)) / math.factorial(16 + a)
                          * math.comb(a, i) * F(1, 3 ** (i + 1))
                          * bernoulli_number(3 - i)
                          * bernoulli_poly_value(4 - a + i, F(-1))
                          / (math.factorial(3 - i) * math.factorial(4 - a + i)))
    displayed *= -2
    scale = math.factorial(3) * math.factorial(4) * math.factorial(15)
    assert F(direct, 1) / scale == displayed


def test_oracle_equivalence_random_grid():
    rng = random.Random(20260810)
    for _ in range(60):
        r = rng.randint(1, 4)
        while True:
            degrees = tuple(rng.randint(0, 6) for _ in range(r))
            if sum(degrees) <= 20:
                break
        spec = ProductIntegralSpec(degrees,
                                   tuple(_rand_frac(rng, True) for _ in range(r)),
                                   tuple(_rand_frac(rng) for _ in range(r)),
                                   _rand_frac(rng))
        assert product_integral_formula(spec) == product_integral_direct(spec), spec


def test_unit_slope_specialization():
    # slopes 1, offsets 0 recovers the plain product-integral relation
    rng = random.Random(6)
    for _ in range(12):
        r = rng.randint(1, 4)
        degrees = tuple(rng.randint(0, 4) for _ in range(r))
        spec = ProductIntegralSpec(degrees, (F(1),) * r, (F(0),) * r, _rand_frac(rng))
        assert product_integral_formula(spec) == product_integral_direct(spec)


def test_three_factor_unit_case():
    # the classical three-factor formula is the r=3, unit-slope instance
    for l in range(5):
        for m in range(5):
            for n in range(5):
                spec = ProductIntegralSpec((l, m, n), (F(1),) * 3, (F(0),) * 3, F(2, 3))
                assert product_integral_formula(spec) == product_integral_direct(spec)


def test_symbolic_antiderivative():
    poly = product_integral_direct_poly((2, 1), (F(2), F(-1)), (F(0), F(1, 2)))
    assert poly.eval(F(0)) == 0
    spec = ProductIntegralSpec((2, 1), (F(2), F(-1)), (F(0), F(1, 2)), F(3, 4))
    assert poly.eval(F(3, 4)) == product_integral_direct(spec)


def test_permutation_invariance():
    assert permutation_invariance_check(EXAMPLE_A, (0, 1, 2))
    assert permutation_invariance_check(EXAMPLE_A, (2, 0, 1))
    assert permutation_invariance_check(EXAMPLE_B, (1, 2, 0))
    rng = random.Random(9)
    for _ in range(6):
        spec = ProductIntegralSpec((rng.randint(0, 4), rng.randint(0, 4)),
                                   (_rand_frac(rng, True), _rand_frac(rng, True)),
                                   (_rand_frac(rng), _rand_frac(rng)),
                                   _rand_frac(rng))
        assert permutation_invariance_check(spec, (1, 0))
    with pytest.raises(ValueError):
        permutation_invariance_check(EXAMPLE_A, (0, 0, 1))


def test_two_factor_reciprocity_random():
    rng = random.Random(14)
    for n in range(5):
        for m in range(5):
            b1, b2 = _rand_frac(rng, True), _rand_frac(rng, True)
            y1, y2, x = _rand_frac(rng), _rand_frac(rng), _rand_frac(rng)
            lhs, rhs = two_factor_reciprocity(n, m, b1, b2, y1, y2, x)
            assert lhs == rhs, (n, m, b1, b2, y1, y2, x)


def test_two_factor_degenerate():
    lhs, rhs = two_factor_reciprocity(0, 0, F(2), F(3), F(1, 2), F(1, 3), F(1, 5))
    assert lhs == rhs


def test_unit_slope_collapse_matches_shifted_identity():
    # with b1 = b2 = 1 the reciprocity collapses onto the shifted-argument form
    rng = random.Random(23)
    for _ in range(8):
        n, m = rng.randint(0, 4), rng.randint(0, 4)
        y1, y2, x = _rand_frac(rng), _rand_frac(rng), _rand_frac(rng)
        l24, r24 = two_factor_reciprocity(n, m, F(1), F(1), y1, y2, x)
        l28, r28 = equal_slope_reciprocity(n, m, y1, y2, x)
        assert l24 == r24 and l28 == r28


def test_equal_slope_known_points():
    for (n, m, y1, y2, x) in [(1, 1, F(1, 2), F(0), F(1, 3)),
                              (2, 3, F(2, 5), F(-1, 5), F(0))]:
        lhs, rhs = equal_slope_reciprocity(n, m, y1, y2, x)
        assert lhs == rhs
    # y1 = y2: the right side reduces to (-1)^m (m+n) B_{m+n+1}(0)
    for n in range(4):
        for m in range(4):
            lhs, rhs = equal_slope_reciprocity(n, m, F(1, 3), F(1, 3), F(2))
            assert lhs == rhs
            assert rhs == (-1) ** m * (m + n) * bernoulli_number(m + n + 1)


def test_constant_combination_in_x():
    rng = random.Random(4)
    for n in range(4):
        for m in range(4):
            b1, b2 = _rand_frac(rng, True), _rand_frac(rng, True)
            y1, y2 = _rand_frac(rng), _rand_frac(rng)
            poly = two_factor_constant_sum_poly(n, m, b1, b2, y1, y2)
            assert all(c == 0 for c in poly.coeffs[1:]), (n, m)


def test_reflective_slope_even_total_vanishes():
    assert reflective_slope_integral((3, 4, 16), (F(1), F(-1), F(-2)), F(1)) == 0
    assert product_integral_direct(EXAMPLE_A) == 0  # same spec, direct route
    rng = random.Random(2)
    for _ in range(8):
        r = rng.randint(1, 4)
        while True:
            degrees = tuple(rng.randint(0, 5) for _ in range(r))
            if (sum(degrees) + 1) % 2 == 0:
                break
        offsets = tuple(F(rng.randint(-2, 2)) + F(1, 3) for _ in range(r))
        assert reflective_slope_integral(degrees, offsets, F(2)) == 0


def test_reflective_slope_odd_total_matches_direct():
    cases = [((3, 4, 15), (F(1), F(-1), F(2)), F(1)),
             ((2, 0), (F(0), F(1)), F(2)),
             ((1, 1, 2), (F(1, 3), F(0), F(-1)), F(1, 2)),
             ((4,), (F(2),), F(3))]
    for degrees, offsets, q in cases:
        closed = reflective_slope_integral(degrees, offsets, q)
        spec = ProductIntegralSpec(degrees, tuple((1 - 2 * y) / q for y in offsets),
                                   offsets, q)
        assert closed == product_integral_direct(spec), (degrees, offsets, q)


def test_reflective_slope_rejects_half_offset():
    with pytest.raises(ValueError):
        reflective_slope_integral((2,), (F(1, 2),), F(1))
    with pytest.raises(ValueError):
        reflective_slope_integral((2,), (F(0),), F(0))


def test_char_reciprocity_exact():
    rng = random.Random(33)
    for (c1, c2) in [(CHI3, CHI3), (CHI3, CHI4), (CHI4, CHI3), (CHI4, CHI4)]:
        for n in (1, 2, 3):
            for m in (1, 2):
                b1, b2 = _rand_frac(rng, True), _rand_frac(rng, True)
                y1, y2, x = _rand_frac(rng), _rand_frac(rng), _rand_frac(rng)
                lhs, rhs = char_two_factor_reciprocity(n, m, b1, b2, y1, y2, x, c1, c2)
                assert scalars_equal(lhs, rhs), (c1.label, c2.label, n, m)


def test_char_reciprocity_mixed_orders():
    # mod 3 with mod 4: values land in a shared quadratic field
    lhs, rhs = char_two_factor_reciprocity(2, 1, F(1, 2), F(3), F(1, 3), F(-2),
                                           F(1, 5), CHI3, CHI4)
    assert scalars_equal(lhs, rhs)


def test_char_reciprocity_vanishing_right_side():
    # y1 = y2 = 0 with (-1)^(m+n) chi1(-1) chi2(-1) = 1 kills the right side
    lhs, rhs = char_two_factor_reciprocity(1, 1, F(2), F(3), F(0), F(0), F(1, 7),
                                           CHI3, CHI3)
    assert rhs.is_zero() and scalars_equal(lhs, rhs)


def test_char_reciprocity_requires_positive_degrees():
    with pytest.raises(ValueError):
        char_two_factor_reciprocity(0, 1, F(1), F(1), F(0), F(0), F(0), CHI3, CHI3)
    with pytest.raises(ValueError):
        char_two_factor_reciprocity(1, 0, F(1), F(1), F(0), F(0), F(0), CHI3, CHI3)


def test_char_reciprocity_extra_terms_vanish():
    # the boundary terms of the full-length sums carry the degree-0 twisted
    # polynomial, which is identically zero for non-principal characters
    from dedsums.charbernoulli import gen_bernoulli_poly
    for chi in (CHI3, CHI4):
        assert gen_bernoulli_poly(chi, 0).is_zero()


def test_pair_identity_polynomials():
    for p in range(1, 9):
        for i in range(p + 2):
            y = F(i, 3) - 1
            lhs, rhs = bernoulli_pair_identity_polys(p, y)
            assert lhs == rhs, (p, y)
