"""Dedekind-sum families: frozen values, parity vanishing, cross-family
consistency, and the scaling laws (each verified by direct summation)."""

from fractions import Fraction as F

import pytest

from dedsums.bernoulli import periodic_bernoulli
from dedsums.charbernoulli import gen_bernoulli_function
from dedsums.dedekind import (SumSpec, apostol_sum, char_pair_sum,
                              char_weighted_power_sum, classical_dedekind_sum,
                              compute_sum, hat_sum, tilde_sum,
                              tilde_weighted_power_sum)
from dedsums.dirichlet import enumerate_characters
from dedsums.exactnum import CyclotomicNumber


def _chars(k):
    return enumerate_characters(k, "nonprincipal_primitive")


CHI3 = _chars(3)[0]
CHI4 = _chars(4)[0]
CHI5_ODD = _chars(5)[0]             # exponent 1: chi(-1) = -1
CHI5_EVEN = [c for c in _chars(5) if c.parity == 1][0]


def test_classical_values():
    # ((1/3))^2 + ((2/3))^2 = 1/36 + 1/36
    assert classical_dedekind_sum(1, 3) == F(1, 18)
    assert classical_dedekind_sum(2, 3) == F(-1, 18)
    assert classical_dedekind_sum(1, 1) == 0
    assert classical_dedekind_sum(5, 1) == 0


def test_apostol_degree_one_is_classical():
    for b in range(1, 8):
        for c in range(1, 8):
            assert apostol_sum(1, b, c) == classical_dedekind_sum(b, c)


def test_apostol_values():
    assert apostol_sum(3, 1, 2) == 0
    # B3(1/3) = 1/27, B3(2/3) = -1/27; (1/27)(-1/6) + (-1/27)(1/6) = -1/81
    assert apostol_sum(3, 1, 3) == F(-1, 81)


def test_char_pair_requires_matching_modulus():
    with pytest.raises(ValueError, match="same modulus"):
        char_pair_sum(2, 1, 1, CHI3, CHI4)


def test_char_pair_requires_primitive():
    imprimitive = [c for c in enumerate_characters(6) if not c.is_principal()][0]
    with pytest.raises(ValueError, match="not primitive"):
        char_pair_sum(2, 1, 1, imprimitive, imprimitive)


def test_parity_forced_vanishing():
    # the pair sum dies when (-1)^(p+1) chi1(-1) chi2(-1) = -1: exhaustive
    # over k <= 5, p <= 5, b, c <= 6 (k <= 2 has no non-principal primitive)
    assert char_pair_sum(2, 1, 1, CHI3, CHI3).is_zero()
    for k, chars in ((3, _chars(3)), (4, _chars(4)), (5, _chars(5))):
        for chi1 in chars:
            for chi2 in chars:
                for p in (1, 2, 3, 4, 5):
                    sign = (-1) ** (p + 1) * chi1.parity * chi2.parity
                    if sign != -1:
                        continue
                    for b in range(1, 7):
                        for c in range(1, 7):
                            assert char_pair_sum(p, b, c, chi1, chi2).is_zero(), \
                                (k, chi1.label, chi2.label, p, b, c)


def test_char_pair_against_inline_reimplementation():
    # independent second implementation: literal term loop with no shared code
    for (chi1, chi2, p, b, c) in [(CHI5_ODD, CHI5_EVEN, 2, 1, 2),
                                  (CHI3, CHI3, 3, 2, 3),
                                  (CHI4, CHI4, 3, 3, 2)]:
        k = chi1.modulus
        total = CyclotomicNumber.zero(1)
        for n in range(c * k):
            total = total + chi1(n) * gen_bernoulli_function(chi2, p, F(b * n, c)) \
                * periodic_bernoulli(1, F(n, c * k))
        assert total == char_pair_sum(p, b, c, chi1, chi2)


def test_family_hierarchy():
    # equal moduli: the cross-modulus sum collapses onto the pair sum
    for (chi1, chi2) in [(CHI3, CHI3), (CHI5_ODD, CHI5_EVEN)]:
        for (p, b, c) in [(2, 2, 3), (3, 1, 2)]:
            assert tilde_sum(p, b, c, chi1, chi2) == char_pair_sum(p, b, c, chi1, chi2)
    # scaled arguments turn the tilde family into the hat family
    for (chi1, chi2) in [(CHI3, CHI4), (CHI3, CHI5_ODD), (CHI4, CHI5_EVEN)]:
        k1, k2 = chi1.modulus, chi2.modulus
        for (p, b, c) in [(2, 1, 1), (2, 2, 3), (3, 3, 2)]:
            assert tilde_sum(p, b * k1, c * k2, chi1, chi2) == \
                hat_sum(p, b, c, chi1, chi2)


def test_hat_tilde_parity_vanishing():
    for (chi1, chi2) in [(CHI3, CHI4), (CHI3, CHI5_ODD), (CHI4, CHI5_EVEN)]:
        for p in (1, 2, 3):
            if (-1) ** (p + 1) * chi1.parity * chi2.parity != -1:
                continue
            assert tilde_sum(p, 2, 3, chi1, chi2).is_zero()
            assert hat_sum(p, 2, 3, chi1, chi2).is_zero()


def test_period_respecting_in_b():
    # replacing b by b + c*k leaves the pair sum unchanged
    for (chi1, chi2) in [(CHI3, CHI3), (CHI5_ODD, CHI5_EVEN)]:
        k = chi1.modulus
        for (p, b, c) in [(2, 1, 2), (3, 2, 3)]:
            assert char_pair_sum(p, b + c * k, c, chi1, chi2) == \
                char_pair_sum(p, b, c, chi1, chi2)


def test_pair_sum_invariant_under_common_scaling():
    # direct summation shows s_p(qb, qc) = s_p(b, c) (the B1 weight averages
    # out over the q copies of each period)
    cases = [(CHI5_ODD, CHI5_EVEN, 2, 1, 1), (CHI5_EVEN, CHI5_ODD, 2, 1, 2),
             (CHI3, CHI3, 3, 2, 3), (CHI5_ODD, CHI5_ODD, 3, 1, 2)]
    saw_nonzero = False
    for chi1, chi2, p, b, c in cases:
        base = char_pair_sum(p, b, c, chi1, chi2)
        saw_nonzero = saw_nonzero or not base.is_zero()
        for q in (2, 3):
            assert char_pair_sum(p, q * b, q * c, chi1, chi2) == base
    assert saw_nonzero  # the invariance was exercised on substantive values


def test_weighted_power_sum_q_scaling():
    # the degree-(p+1) weighted sum picks up exactly one factor of q
    for (chi1, chi2) in [(CHI5_ODD, CHI5_EVEN), (CHI3, CHI3)]:
        for (p, b, c) in [(2, 1, 2), (3, 1, 1), (2, 2, 3)]:
            base = char_weighted_power_sum(p, b, c, chi1, chi2)
            for q in (2, 3):
                assert char_weighted_power_sum(p, q * b, q * c, chi1, chi2) == q * base


def test_weighted_power_sum_parity_vanishing():
    for (chi1, chi2) in [(CHI3, CHI3), (CHI5_ODD, CHI5_EVEN)]:
        for p in (1, 2, 3, 4):
            if (-1) ** (p + 1) * chi1.parity * chi2.parity != -1:
                continue
            assert char_weighted_power_sum(p, 2, 3, chi1, chi2).is_zero()
            assert tilde_weighted_power_sum(p, 2, 3, chi1, chi2).is_zero()


def test_weighted_sum_inclusive_upper_limit_agrees():
    # the cross-modulus weighted sum may be written to c*k1 inclusive or
    # exclusive: the top term carries chi1(c*k1) = 0, so they agree; asserted
    # against an inline exclusive loop rather than assumed
    for (chi1, chi2) in [(CHI3, CHI4), (CHI4, CHI5_ODD)]:
        k1, k2 = chi1.modulus, chi2.modulus
        for (p, b, c) in [(2, 1, 2), (3, 2, 1)]:
            span = c * k1
            exclusive = CyclotomicNumber.zero(1)
            for n in range(1, span):
                exclusive = exclusive + chi1(n) * gen_bernoulli_function(
                    chi2, p + 1, F(n * b * k2, span))
            assert tilde_weighted_power_sum(p, b, c, chi1, chi2) == exclusive
            assert chi1(span).is_zero()


def test_weighted_power_sum_b_c_one_double_sum():
    # at b = c = 1 the closed double-sum form is a plain finite identity
    for (chi1, chi2) in [(CHI5_ODD, CHI5_EVEN), (CHI5_EVEN, CHI5_ODD)]:
        k = chi1.modulus
        for p in (1, 2, 3):
            direct = char_weighted_power_sum(p, 1, 1, chi1, chi2)
            chib = chi2.conjugate()
            dbl = CyclotomicNumber.zero(1)
            for h in range(1, k):
                for j in range(1, k):
                    dbl = dbl + chi1(h) * chib(j) * periodic_bernoulli(p + 1, F(j + h, k))
            assert direct == F(k) ** p * dbl


def test_spec_record():
    spec = SumSpec("classical", 1, 4, 6)
    assert spec.q == 2
    assert compute_sum(spec) == classical_dedekind_sum(4, 6)
    spec = SumSpec("char_single", 2, 1, 2, CHI5_ODD)
    assert compute_sum(spec) == char_pair_sum(2, 1, 2, CHI5_ODD, CHI5_ODD)
    with pytest.raises(ValueError):
        SumSpec("classical", 1, 1, 0)
    with pytest.raises(ValueError):
        SumSpec("hat", 1, 1, 1)          # missing characters
    with pytest.raises(ValueError):
        SumSpec("apostol", 1, 1, 1, CHI3)  # stray character
    with pytest.raises(ValueError):
        SumSpec("nonesuch", 1, 1, 1)


def test_compute_sum_families():
    assert compute_sum(SumSpec("apostol", 3, 1, 3)) == F(-1, 81)
    v_pair = compute_sum(SumSpec("char_pair", 2, 1, 2, CHI5_ODD, CHI5_EVEN))
    assert v_pair == char_pair_sum(2, 1, 2, CHI5_ODD, CHI5_EVEN)
    assert compute_sum(SumSpec("hat", 2, 1, 1, CHI3, CHI4)) == hat_sum(2, 1, 1, CHI3, CHI4)
    assert compute_sum(SumSpec("tilde", 2, 1, 1, CHI3, CHI4)) == tilde_sum(2, 1, 1, CHI3, CHI4)
