"""Dedekind sums, classical and character-twisted, by literal direct summation.

Every sum here is computed term by term from its defining finite sum, with no
closed forms, so these values can serve as the independent side of every
reciprocity verification.  Families:

  classical:   s(b, c)                 = sum_{j mod c} ((j/c)) ((bj/c))
  apostol:     s_p(b, c)               = sum_{j=0}^{c-1} periodic_B_p(bj/c) ((j/c))
  char_pair:   s_p(b, c : chi1, chi2)  = sum_{n=0}^{ck-1}
                   chi1(n) periodic_B_{p,chi2}(bn/c) ((n/(ck)))       [same k]
  hat:         sum_{n=0}^{c k1 k2 - 1}
                   chi1(n) periodic_B_{p,chi2}(nb/c) ((n/(c k1 k2)))
  tilde:       sum_{n=0}^{c k1 - 1}
                   chi1(n) periodic_B_{p,chi2}(n b k2/(c k1)) ((n/(c k1)))

plus the weighted power sums sum_n chi1(n) periodic_B_{p+1,chi2}(...) used by
the closed-form identities.  Character sums require primitive characters (the
identities they feed are stated for primitive characters).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bernoulli import periodic_bernoulli
from .charbernoulli import gen_bernoulli_function
from .dirichlet import DirichletCharacter
from .exactnum import CyclotomicNumber

__all__ = [
    "SumSpec",
    "classical_dedekind_sum",
    "apostol_sum",
    "char_pair_sum",
    "hat_sum",
    "tilde_sum",
    "char_weighted_power_sum",
    "tilde_weighted_power_sum",
    "compute_sum",
]


FAMILIES = ("classical", "apostol", "char_single", "char_pair", "hat", "tilde")


@dataclass(frozen=True)
class SumSpec:
    """Parameter record for one Dedekind-type sum; q = gcd(b, c) is attached
    to reports because the reciprocity statements are phrased with it."""
    family: str
    p: int
    b: int
    c: int
    chi1: Optional[DirichletCharacter] = None
    chi2: Optional[DirichletCharacter] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.c < 1:
            raise ValueError("c must be >= 1")
        if self.p < 1:
            raise ValueError("p must be >= 1")
        needs_chars = self.family in ("char_single", "char_pair", "hat", "tilde")
        if needs_chars and (self.chi1 is None or
                            (self.family != "char_single" and self.chi2 is None)):
            raise ValueError(f"family {self.family!r} requires characters")
        if not needs_chars and (self.chi1 is not None or self.chi2 is not None):
            raise ValueError(f"family {self.family!r} takes no characters")

    @property
    def q(self) -> int:
        return math.gcd(self.b, self.c)


def _require_primitive(*chars: DirichletCharacter) -> None:
    for chi in chars:
        if not chi.is_primitive():
            raise ValueError(f"character {chi!r} is not primitive")


def classical_dedekind_sum(b: int, c: int) -> Fraction:
    """s(b, c) over the residues j mod c, exactly."""
    if c < 1:
        raise ValueError("c must be >= 1")
    total = Fraction(0)
    for j in range(c):
        total += periodic_bernoulli(1, Fraction(j, c)) * periodic_bernoulli(1, Fraction(b * j, c))
    return total


def apostol_sum(p: int, b: int, c: int) -> Fraction:
    """Degree-p generalization; coincides with the classical sum at p = 1."""
    if c < 1:
        raise ValueError("c must be >= 1")
    if p < 1:
        raise ValueError("p must be >= 1")
    total = Fraction(0)
    for j in range(c):
        total += periodic_bernoulli(p, Fraction(b * j, c)) * periodic_bernoulli(1, Fraction(j, c))
    return total


def char_pair_sum(p: int, b: int, c: int,
                  chi1: DirichletCharacter, chi2: DirichletCharacter) -> CyclotomicNumber:
    """Two-character sum with both characters of one modulus k.

    With chi1 = chi2 this is the single-character sum of the hierarchy.
    """
    if chi1.modulus != chi2.modulus:
        raise ValueError("char_pair_sum requires characters of the same modulus")
    _require_primitive(chi1, chi2)
    if c < 1 or p < 1:
        raise ValueError("need c >= 1 and p >= 1")
    k = chi1.modulus
    total = CyclotomicNumber.zero(math.lcm(chi1.order, chi2.order))
    for n in range(c * k):
        w1 = chi1(n)
        if w1.is_zero():
            continue
        saw = periodic_bernoulli(1, Fraction(n, c * k))
        if saw == 0:
            continue
        total = total + w1 * gen_bernoulli_function(chi2, p, Fraction(b * n, c)) * saw
    return total


def hat_sum(p: int, b: int, c: int,
            chi1: DirichletCharacter, chi2: DirichletCharacter) -> CyclotomicNumber:
    """Cross-modulus sum over c*k1*k2 terms with argument n*b/c."""
    _require_primitive(chi1, chi2)
    k1, k2 = chi1.modulus, chi2.modulus
    total = CyclotomicNumber.zero(math.lcm(chi1.order, chi2.order))
    span = c * k1 * k2
    for n in range(span):
        w1 = chi1(n)
        if w1.is_zero():
            continue
        saw = periodic_bernoulli(1, Fraction(n, span))
        if saw == 0:
            continue
        total = total + w1 * gen_bernoulli_function(chi2, p, Fraction(n * b, c)) * saw
    return total


def tilde_sum(p: int, b: int, c: int,
              chi1: DirichletCharacter, chi2: DirichletCharacter) -> CyclotomicNumber:
    """Cross-modulus sum over c*k1 terms with argument n*b*k2/(c*k1).

    Reduces to char_pair_sum for equal moduli, and evaluating it at
    (b*k1, c*k2) reproduces hat_sum(b, c).
    """
    _require_primitive(chi1, chi2)
    k1, k2 = chi1.modulus, chi2.modulus
    total = CyclotomicNumber.zero(math.lcm(chi1.order, chi2.order))
    span = c * k1
    for n in range(span):
        w1 = chi1(n)
        if w1.is_zero():
            continue
        saw = periodic_bernoulli(1, Fraction(n, span))
        if saw == 0:
            continue
        total = total + w1 * gen_bernoulli_function(chi2, p, Fraction(n * b * k2, span)) * saw
    return total


def char_weighted_power_sum(p: int, b: int, c: int,
                            chi1: DirichletCharacter, chi2: DirichletCharacter) -> CyclotomicNumber:
    """sum_{n=1}^{ck-1} chi1(n) periodic_B_{p+1,chi2}(bn/c), k = modulus of chi1.

    This is the degree-(p+1) sum whose closed double-sum form the verification
    engine checks; here it is always the literal direct sum.
    """
    _require_primitive(chi1, chi2)
    k = chi1.modulus
    total = CyclotomicNumber.zero(math.lcm(chi1.order, chi2.order))
    for n in range(1, c * k):
        w1 = chi1(n)
        if w1.is_zero():
            continue
        total = total + w1 * gen_bernoulli_function(chi2, p + 1, Fraction(b * n, c))
    return total


def tilde_weighted_power_sum(p: int, b: int, c: int,
                             chi1: DirichletCharacter, chi2: DirichletCharacter) -> CyclotomicNumber:
    """sum_{n=1}^{c*k1} chi1(n) periodic_B_{p+1,chi2}(n*b*k2/(c*k1)),
    the cross-modulus counterpart of char_weighted_power_sum."""
    _require_primitive(chi1, chi2)
    k1, k2 = chi1.modulus, chi2.modulus
    total = CyclotomicNumber.zero(math.lcm(chi1.order, chi2.order))
    span = c * k1
    for n in range(1, span + 1):
        w1 = chi1(n)
        if w1.is_zero():
            continue
        total = total + w1 * gen_bernoulli_function(chi2, p + 1, Fraction(n * b * k2, span))
    return total


def compute_sum(spec: SumSpec):
    """Evaluate a SumSpec; scalar result type follows the family."""
    if spec.family == "classical":
        return classical_dedekind_sum(spec.b, spec.c)
    if spec.family == "apostol":
        return apostol_sum(spec.p, spec.b, spec.c)
    if spec.family == "char_single":
        return char_pair_sum(spec.p, spec.b, spec.c, spec.chi1, spec.chi1)
    if spec.family == "char_pair":
        return char_pair_sum(spec.p, spec.b, spec.c, spec.chi1, spec.chi2)
    if spec.family == "hat":
        return hat_sum(spec.p, spec.b, spec.c, spec.chi1, spec.chi2)
    if spec.family == "tilde":
        return tilde_sum(spec.p, spec.b, spec.c, spec.chi1, spec.chi2)
    raise AssertionError
