"""Dirichlet characters: enumeration, values, conductor, parity, conjugation."""

import math
import random
from fractions import Fraction as F

import pytest

from dedsums.dirichlet import (DirichletCharacter, character_from_label,
                               char_eval, conductor, conjugate,
                               enumerate_characters, is_primitive, parity)
from dedsums.exactnum import CyclotomicNumber, euler_phi


def test_enumeration_counts():
    for k in (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 15, 24):
        assert len(enumerate_characters(k)) == euler_phi(k), k


def test_modulus_one():
    chars = enumerate_characters(1)
    assert len(chars) == 1
    chi = chars[0]
    assert chi.is_principal() and chi.is_primitive() and chi.conductor == 1
    assert chi(0) == 1 and chi(17) == 1


def test_mod3_nonprincipal():
    chars = enumerate_characters(3, "nonprincipal_primitive")
    assert len(chars) == 1
    chi = chars[0]
    assert chi.order == 2 and chi.parity == -1
    assert chi(2) == -1 and chi(1) == 1
    assert chi(3).is_zero()


def test_mod8_structure():
    # (Z/8)* = C2 x C2: 4 characters, 2 primitive
    allc = enumerate_characters(8)
    assert len(allc) == 4
    prims = enumerate_characters(8, "primitive")
    assert len(prims) == 2
    for chi in allc:
        if chi(5) == 1 and not chi.is_principal():
            assert chi.conductor == 4  # trivial on 5: induced mod 4
        if chi(5) == -1 and chi(7) == 1:
            assert chi.conductor == 8  # not induced mod 4 since 5 = 1 (mod 4)


def test_mod4_character():
    chi = enumerate_characters(4, "nonprincipal_primitive")[0]
    assert chi.conductor == 4 and chi.parity == -1
    assert chi(3) == -1


def test_principal_conductor():
    for k in (3, 4, 5, 6, 8, 12):
        chi0 = enumerate_characters(k)[0]
        assert chi0.is_principal()
        assert chi0.conductor == 1
        assert not chi0.is_primitive()


def test_periodicity_and_zero_off_units():
    for k in (5, 6, 8, 12):
        for chi in enumerate_characters(k):
            for n in range(-k, 2 * k):
                assert chi(n) == chi(n + k)
                if math.gcd(n, k) > 1:
                    assert chi(n).is_zero()


def test_complete_multiplicativity():
    rng = random.Random(17)
    for k in (3, 4, 5, 7, 8, 9, 12):
        for chi in enumerate_characters(k):
            for _ in range(8):
                m, n = rng.randint(-20, 40), rng.randint(-20, 40)
                assert chi(m * n) == chi(m) * chi(n)


def test_nonprincipal_sum_vanishes():
    for k in (3, 4, 5, 6, 7, 8, 9, 12):
        for chi in enumerate_characters(k):
            total = sum((chi(n) for n in range(1, k)), CyclotomicNumber.zero(1))
            if chi.is_principal():
                assert total == euler_phi(k)
            else:
                assert total.is_zero(), (k, chi.label)


def test_conjugation():
    for k in (5, 7, 8, 12):
        for chi in enumerate_characters(k):
            bar = chi.conjugate()
            assert bar.conjugate() == chi
            assert bar.parity == chi.parity
            for n in range(k):
                if math.gcd(n, k) == 1:
                    assert chi(n) * bar(n) == 1
                else:
                    assert (chi(n) * bar(n)).is_zero()


def test_parity_matches_value_at_minus_one():
    for k in (3, 4, 5, 7, 8, 9, 12):
        for chi in enumerate_characters(k):
            assert chi(-1) == chi.parity


def test_order_divides_group_exponent():
    for k in (5, 7, 8, 9, 12):
        for chi in enumerate_characters(k):
            e = chi.order
            for n in range(1, k):
                if math.gcd(n, k) == 1:
                    assert chi(n) ** e == 1


def test_conductor_restriction_agrees():
    for k in (6, 8, 9, 12):
        for chi in enumerate_characters(k):
            psi = chi.restrict_to_conductor()
            assert psi.modulus == chi.conductor
            assert psi.is_primitive()
            for n in range(1, 3 * k):
                if math.gcd(n, k) == 1:
                    assert psi(n) == chi(n)


def test_labels_round_trip_and_are_sorted():
    for k in (1, 2, 3, 8, 12):
        chars = enumerate_characters(k)
        labels = [c.label for c in chars]
        assert labels == sorted(labels, key=lambda s: [int(t) for t in s.split(".")])
        for chi in chars:
            assert character_from_label(k, chi.label) == chi


def test_json_shape():
    chi = enumerate_characters(5)[1]
    js = chi.to_json()
    assert set(js) == {"modulus", "conductor", "parity", "order", "exponents", "label"}
    assert js["modulus"] == 5 and js["order"] == 4


def test_operation_wrappers():
    chi = enumerate_characters(3, "nonprincipal_primitive")[0]
    assert char_eval(chi, 2) == -1
    assert conductor(chi) == 3
    assert is_primitive(chi)
    assert parity(chi) == -1
    assert conjugate(chi) == chi  # real quadratic character


def test_bad_exponent_length():
    with pytest.raises(ValueError):
        DirichletCharacter(8, (1,))
