"""The identity-verification engine.

A closed registry maps identity ids to checkers.  Every checker computes its
left and right side through independent code paths: left sides come from
literal direct summation (dedekind module) or piecewise integration
(bernoulli module), right sides from closed formulas assembled out of
Bernoulli and character-Bernoulli values.  A checker never calls the
summation routine of its own left side to build its right side.

Verdicts:
  exact-equal        both sides are bit-identical canonical scalars
  equal-within-tol   float check within tolerance (Laplace family only)
  vacuous-zero       the identity's parity argument forces 0 = 0 and both
                     sides were verified to be exactly 0
  hypothesis-not-met stated preconditions fail (never silently skipped)
  mismatch           sides differ

Where a stated identity admits two candidate formulations (or fails in its
common formulation), the checker computes every candidate and the report's
notes say which verified; nothing is guessed silently.  Known dual readings:

  * rp1's second sum: the displayed argument order (b, c) against the swapped
    (c, b) that the combination step actually produces.  The swapped reading
    is the one that verifies; the report carries both verdicts.
  * further-bc1's sign: the displayed (-1)^(l+1) against the (-1)^l that the
    summation-formula derivation gives.  The latter verifies.
  * rp3 carries no second reading, but when the displayed form fails the
    checker also evaluates the cross-modulus correction term implied by rp2
    at (b*k1, c*k2); the notes record whether that term explains the gap
    exactly.  The displayed corollary is only valid where this term vanishes.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import laplace
from .bernoulli import (Polynomial, PeriodicFactor, bernoulli_number,
                        bernoulli_poly_value, periodic_bernoulli,
                        piecewise_product_integral)
from .charbernoulli import gen_bernoulli_function, gen_bernoulli_number
from .dedekind import (apostol_sum, char_pair_sum, char_weighted_power_sum,
                       classical_dedekind_sum, hat_sum, tilde_sum,
                       tilde_weighted_power_sum)
from .dirichlet import DirichletCharacter, enumerate_characters
from .exactnum import CyclotomicNumber, scalar_to_json, scalars_equal
from .integrals import (ProductIntegralSpec, bernoulli_pair_identity_polys,
                        char_two_factor_reciprocity, equal_slope_reciprocity,
                        product_integral_direct, product_integral_formula,
                        reflective_slope_integral, two_factor_reciprocity)

__all__ = [
    "IDENTITY_IDS",
    "VerificationReport",
    "verify_identity",
    "verify_euler_maclaurin",
    "laplace_check",
    "sweep",
    "default_grid",
    "aggregate",
]

EXACT_EQUAL = "exact-equal"
WITHIN_TOL = "equal-within-tol"
MISMATCH = "mismatch"
HYP_NOT_MET = "hypothesis-not-met"
VACUOUS = "vacuous-zero"

REL_TOL = 1e-9
ABS_FLOOR = 1e-12
SMALL_MAGNITUDE = 1e-8


@dataclass
class VerificationReport:
    id: str
    params: dict
    lhs: object = None
    rhs: object = None
    verdict: str = MISMATCH
    residual: Optional[float] = None
    notes: str = ""

    def to_json_dict(self) -> dict:
        def enc(v):
            if v is None:
                return None
            if isinstance(v, float):
                return v
            if isinstance(v, complex):
                return {"re": v.real, "im": v.imag}
            return scalar_to_json(v)

        return {
            "id": self.id,
            "params": _encode_params(self.params),
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "verdict": self.verdict,
            "residual": self.residual,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _encode_params(params: dict) -> dict:
    out = {}
    for key, value in sorted(params.items()):
        if isinstance(value, DirichletCharacter):
            out[key] = f"{value.modulus}:{value.label}"
        elif isinstance(value, Fraction):
            out[key] = str(value)
        elif isinstance(value, Polynomial):
            out[key] = [str(Fraction(c)) for c in value.coeffs]
        elif isinstance(value, (list, tuple)):
            out[key] = [str(v) for v in value]
        else:
            out[key] = value
    return out


def _canonical_pair(lhs, rhs):
    """Embed both sides into one cyclotomic field so equal values serialize
    into bit-identical canonical scalars."""
    if isinstance(lhs, CyclotomicNumber) or isinstance(rhs, CyclotomicNumber):
        lhs = CyclotomicNumber._coerce(lhs)
        rhs = CyclotomicNumber._coerce(rhs)
        e = math.lcm(lhs.order, rhs.order)
        return lhs.embed(e), rhs.embed(e)
    return lhs, rhs


def _exact_report(rid: str, params: dict, lhs, rhs, notes: str = "",
                  vacuous: bool = False) -> VerificationReport:
    lhs, rhs = _canonical_pair(lhs, rhs)
    if scalars_equal(lhs, rhs):
        verdict = VACUOUS if vacuous and scalars_equal(lhs, 0) else EXACT_EQUAL
    else:
        verdict = MISMATCH
    return VerificationReport(rid, params, lhs, rhs, verdict, None, notes)


def _float_verdict(lhs: float, rhs: float, rel: float = REL_TOL):
    diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    if scale < SMALL_MAGNITUDE:
        ok = diff <= ABS_FLOOR
        residual = diff
        mode = f"absolute (both sides below {SMALL_MAGNITUDE:g})"
    else:
        ok = diff <= max(rel * scale, ABS_FLOOR)
        residual = diff / scale
        mode = "relative"
    return (WITHIN_TOL if ok else MISMATCH), residual, mode


def _sign_condition(p: int, chi1: DirichletCharacter, chi2: DirichletCharacter) -> int:
    return (-1) ** (p + 1) * chi1.parity * chi2.parity


def _check_nonprincipal_primitive(*chars):
    problems = [f"{c.modulus}:{c.label}" for c in chars
                if c.is_principal() or not c.is_primitive()]
    return problems


# ---------------------------------------------------------------------------
# Closed-form right-hand sides (built from bernoulli / charbernoulli only)
# ---------------------------------------------------------------------------

def _binom_charbernoulli_sum(p: int, wb: Fraction, wc: Fraction,
                             chi_left: DirichletCharacter,
                             chi_right: DirichletCharacter):
    """sum_{j=0}^{p+1} C(p+1, j) wb^j wc^(p+1-j) B_{j,chi_left} B_{p+1-j,chi_right}."""
    total = CyclotomicNumber.zero(1)
    for j in range(p + 2):
        total = total + math.comb(p + 1, j) * wb ** j * wc ** (p + 1 - j) \
            * gen_bernoulli_number(chi_left, j) * gen_bernoulli_number(chi_right, p + 1 - j)
    return total


def _char_double_sum(deg: int, chi1: DirichletCharacter, chi2bar: DirichletCharacter,
                     hmax: int, jmax: int, arg: Callable[[int, int], Fraction]):
    """sum_{h=1}^{hmax} sum_{j=1}^{jmax} chi1(h) chi2bar(j) periodic_B_deg(arg(h, j))."""
    total = CyclotomicNumber.zero(1)
    for h in range(1, hmax + 1):
        w1 = chi1(h)
        if w1.is_zero():
            continue
        for j in range(1, jmax + 1):
            w2 = chi2bar(j)
            if w2.is_zero():
                continue
            total = total + w1 * w2 * periodic_bernoulli(deg, arg(h, j))
    return total


def _char_product_integral(poly, deg1: int, psi1: DirichletCharacter, slope1: Fraction,
                           deg2: int, psi2: DirichletCharacter, slope2: Fraction,
                           alpha: Fraction, beta: Fraction):
    """integral_alpha^beta poly(x) periodic_B_{deg1,psi1}(slope1 x)
    periodic_B_{deg2,psi2}(slope2 x) dx, expanded through the defining sums
    (weights conj(psi)) into rational piecewise integrals."""
    k1, k2 = psi1.modulus, psi2.modulus
    w1s = psi1.conjugate()
    w2s = psi2.conjugate()
    total = CyclotomicNumber.zero(1)
    for m_res in range(1, k1):
        w1 = w1s(m_res)
        if w1.is_zero():
            continue
        for n_res in range(1, k2):
            w2 = w2s(n_res)
            if w2.is_zero():
                continue
            val = piecewise_product_integral(
                poly,
                [PeriodicFactor(deg1, Fraction(slope1, k1), Fraction(m_res, k1)),
                 PeriodicFactor(deg2, Fraction(slope2, k2), Fraction(n_res, k2))],
                alpha, beta)
            total = total + w1 * w2 * val
    return total * (Fraction(k1) ** (deg1 - 1) * Fraction(k2) ** (deg2 - 1))


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

def _check_classical_dr(params) -> VerificationReport:
    b, c = int(params["b"]), int(params["c"])
    if math.gcd(b, c) != 1:
        return VerificationReport("classical-dr", params, None, None, HYP_NOT_MET,
                                  None, f"gcd(b, c) = {math.gcd(b, c)} != 1")
    lhs = classical_dedekind_sum(b, c) + classical_dedekind_sum(c, b)
    rhs = Fraction(-1, 4) + Fraction(1, 12) * (Fraction(b, c) + Fraction(c, b)
                                               + Fraction(1, b * c))
    return _exact_report("classical-dr", params, lhs, rhs)


def _check_apostol_dr1(params) -> VerificationReport:
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    if p % 2 == 0 or math.gcd(b, c) != 1:
        return VerificationReport("apostol-dr1", params, None, None, HYP_NOT_MET,
                                  None, "requires odd p and gcd(b, c) = 1")
    lhs = (p + 1) * (b * Fraction(c) ** p * apostol_sum(p, b, c)
                     + c * Fraction(b) ** p * apostol_sum(p, c, b))
    rhs = Fraction(0)
    for j in range(p + 2):
        rhs += math.comb(p + 1, j) * (-1) ** j * Fraction(b) ** j * Fraction(c) ** (p + 1 - j) \
            * bernoulli_number(p + 1 - j) * bernoulli_number(j)
    rhs += p * bernoulli_number(p + 1)
    return _exact_report("apostol-dr1", params, lhs, rhs)


def _check_berndt_dkr(params) -> VerificationReport:
    chi: DirichletCharacter = params["char"]
    b, c = int(params["b"]), int(params["c"])
    force = bool(params.get("force", False))
    k = chi.modulus
    problems = _check_nonprincipal_primitive(chi)
    hyp_ok = not problems and math.gcd(b, c) == 1 and (b % k == 0 or c % k == 0)
    chib = chi.conjugate()
    lhs = char_pair_sum(1, c, b, chi, chi) + char_pair_sum(1, b, c, chib, chib)
    rhs = gen_bernoulli_number(chi, 1) * gen_bernoulli_number(chib, 1)
    report = _exact_report("berndt-dkr", params, lhs, rhs)
    if not hyp_ok:
        note = "hypothesis fails (need gcd(b,c)=1 and k | b or k | c)"
        if problems:
            note = f"characters not non-principal primitive: {problems}"
        equal = report.verdict == EXACT_EQUAL
        if force:
            report.notes = note + "; computed anyway"
        else:
            report.verdict = HYP_NOT_MET
            report.notes = note + ("; sides happen to agree" if equal else "; sides differ")
    return report


def _check_cck_rp(params) -> VerificationReport:
    chi: DirichletCharacter = params["char"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    force = bool(params.get("force", False))
    k = chi.modulus
    problems = _check_nonprincipal_primitive(chi)
    prime_ok = (math.gcd(k, b * c) > 1) or _is_prime(k)
    hyp_ok = not problems and p % 2 == 1 and math.gcd(b, c) == 1 and prime_ok
    if not hyp_ok and not force:
        return VerificationReport("cck-rp", params, None, None, HYP_NOT_MET, None,
                                  "requires odd p, gcd(b,c)=1, non-principal primitive "
                                  "chi, and k prime when gcd(k, bc) = 1")
    chib = chi.conjugate()
    lhs = (p + 1) * (b * Fraction(c) ** p * char_pair_sum(p, b, c, chi, chi)
                     + c * Fraction(b) ** p * char_pair_sum(p, c, b, chib, chib))
    rhs = _binom_charbernoulli_sum(p, Fraction(b), Fraction(c), chib, chi)
    rhs = rhs + Fraction(p, k) * chi(c) * chib(-b) * (k ** (p + 1) - 1) * bernoulli_number(p + 1)
    report = _exact_report("cck-rp", params, lhs, rhs)
    if not hyp_ok:
        report.notes = "hypothesis violated; computed for exploration"
    return report


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_rp1(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus or p <= 1:
        return VerificationReport("rp1", params, None, None, HYP_NOT_MET, None,
                                  "requires p > 1 and non-principal primitive "
                                  "characters of one modulus")
    k = chi1.modulus
    q = math.gcd(b, c)
    c1b, c2b = chi1.conjugate(), chi2.conjugate()
    s_bc = char_pair_sum(p, b, c, chi1, chi2)
    if _sign_condition(p, chi1, chi2) == -1:
        # reflection forces every piece to vanish; verify rather than assume
        s_swap = char_pair_sum(p, c, b, c2b, c1b)
        rhs = _rp1_rhs(p, b, c, q, k, chi1, c1b, chi2, c2b)
        report = _exact_report("rp1", params, (p + 1) * (b * Fraction(c) ** p * s_bc
                                                         + c * Fraction(b) ** p * s_swap),
                               rhs, vacuous=True)
        if report.verdict == VACUOUS and s_bc.is_zero() and s_swap.is_zero():
            report.notes = "sign condition is -1: both sums and the right side vanish"
        return report
    rhs = _rp1_rhs(p, b, c, q, k, chi1, c1b, chi2, c2b)
    lhs_display = (p + 1) * (b * Fraction(c) ** p * s_bc
                             + c * Fraction(b) ** p * char_pair_sum(p, b, c, c2b, c1b))
    lhs_swapped = (p + 1) * (b * Fraction(c) ** p * s_bc
                             + c * Fraction(b) ** p * char_pair_sum(p, c, b, c2b, c1b))
    ok_display = scalars_equal(*_canonical_pair(lhs_display, rhs))
    ok_swapped = scalars_equal(*_canonical_pair(lhs_swapped, rhs))
    notes = (f"second-sum reading (b,c) as displayed: "
             f"{'exact-equal' if ok_display else 'mismatch'}; "
             f"swapped reading (c,b) from the combination step: "
             f"{'exact-equal' if ok_swapped else 'mismatch'}")
    lhs = lhs_swapped if ok_swapped else lhs_display
    lhs, rhs = _canonical_pair(lhs, rhs)
    verdict = EXACT_EQUAL if (ok_display or ok_swapped) else MISMATCH
    return VerificationReport("rp1", params, lhs, rhs, verdict, None, notes)


def _rp1_rhs(p, b, c, q, k, chi1, c1b, chi2, c2b):
    rhs = _binom_charbernoulli_sum(p, Fraction(b), Fraction(c), c1b, chi2)
    dbl = _char_double_sum(p + 1, chi1, c2b, k - 1, k - 1,
                           lambda h, a: Fraction(c * a + b * h, q * k))
    return rhs + p * Fraction(q) ** (p + 1) * Fraction(k) ** (p - 1) * dbl


def _check_rp2(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or p <= 1:
        return VerificationReport("rp2", params, None, None, HYP_NOT_MET, None,
                                  "requires p > 1 and non-principal primitive characters")
    k1, k2 = chi1.modulus, chi2.modulus
    q = math.gcd(b, c)
    c1b, c2b = chi1.conjugate(), chi2.conjugate()
    t_bc = tilde_sum(p, b, c, chi1, chi2)
    t_cb = tilde_sum(p, c, b, c2b, c1b)
    vacuous = _sign_condition(p, chi1, chi2) == -1
    lhs = (p + 1) * (b * k2 * Fraction(c * k1) ** p * t_bc
                     + c * k1 * Fraction(b * k2) ** p * t_cb)
    rhs = _binom_charbernoulli_sum(p, Fraction(b * k2), Fraction(c * k1), c1b, chi2)
    dbl = _char_double_sum(p + 1, chi1, c2b, k1, k2,
                           lambda h, j: Fraction(c * j, q * k2) + Fraction(b * h, q * k1))
    rhs = rhs + p * Fraction(q) ** (p + 1) * Fraction(k1 * k2) ** p * dbl
    report = _exact_report("rp2", params, lhs, rhs, vacuous=vacuous)
    if vacuous and report.verdict == VACUOUS:
        report.notes = "sign condition is -1: both sums and the right side vanish"
    return report


def _check_rp3(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    k1, k2 = chi1.modulus, chi2.modulus
    if problems or p <= 1 or k1 == k2:
        return VerificationReport("rp3", params, None, None, HYP_NOT_MET, None,
                                  "requires p > 1, distinct moduli, non-principal "
                                  "primitive characters")
    c1b, c2b = chi1.conjugate(), chi2.conjugate()
    vacuous = _sign_condition(p, chi1, chi2) == -1
    lhs = (p + 1) * (b * Fraction(c) ** p * hat_sum(p, b, c, c1b, chi2)
                     + c * Fraction(b) ** p * hat_sum(p, c, b, c2b, chi1))
    rhs = CyclotomicNumber.zero(1)
    for j in range(p + 2):
        rhs = rhs + math.comb(p + 1, j) * Fraction(c) ** j * Fraction(b) ** (p + 1 - j) \
            * gen_bernoulli_number(chi1, p + 1 - j) * gen_bernoulli_number(chi2, j)
    report = _exact_report("rp3", params, lhs, rhs, vacuous=vacuous)
    if vacuous and report.verdict == VACUOUS:
        report.notes = "sign condition is -1: both sums and the right side vanish"
    if report.verdict == MISMATCH:
        # cross-modulus correction implied by the general reciprocity at (b*k1, c*k2)
        qq = math.gcd(b * k1, c * k2)
        corr_sum = _char_double_sum(p + 1, c1b, c2b, k1, k2,
                                    lambda h, j: Fraction(c * j + b * h, qq))
        corr = p * Fraction(qq) ** (p + 1) * corr_sum / (k1 * k2)
        explains = scalars_equal(*_canonical_pair(lhs, rhs + corr))
        report.notes = ("displayed form fails; the cross-modulus correction term "
                        f"{'explains the gap exactly' if explains else 'does NOT explain the gap'}"
                        " (statement implicitly needs the correction sum to vanish)")
    return report


def _check_lek2(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus:
        return VerificationReport("lek2", params, None, None, HYP_NOT_MET, None,
                                  "requires non-principal primitive characters of one modulus")
    k = chi1.modulus
    q = math.gcd(b, c)
    direct = char_weighted_power_sum(p, b, c, chi1, chi2)
    if q > 1:
        # scaling display: the (qb', qc') sum is q times the reduced sum
        reduced = char_weighted_power_sum(p, b // q, c // q, chi1, chi2)
        report = _exact_report("lek2", params, direct, q * reduced,
                               notes=f"scaling display: sum at ({b},{c}) against "
                                     f"{q} * sum at ({b // q},{c // q})")
        return report
    closed = Fraction(k, c) ** p * _char_double_sum(
        p + 1, chi1, chi2.conjugate(), k - 1, k - 1,
        lambda h, j: Fraction(c * j + b * h, k))
    vacuous = _sign_condition(p, chi1, chi2) == -1
    report = _exact_report("lek2", params, direct, closed, vacuous=vacuous)
    if vacuous and report.verdict == VACUOUS:
        report.notes = "sign condition is -1: the sum and its closed form both vanish"
    return report


def _check_lek3(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, b, c = int(params["p"]), int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems:
        return VerificationReport("lek3", params, None, None, HYP_NOT_MET, None,
                                  "requires non-principal primitive characters")
    if math.gcd(b, c) != 1:
        return VerificationReport("lek3", params, None, None, HYP_NOT_MET, None,
                                  "closed form requires gcd(b, c) = 1")
    k1, k2 = chi1.modulus, chi2.modulus
    direct = tilde_weighted_power_sum(p, b, c, chi1, chi2)
    closed = Fraction(k2, c) ** p * _char_double_sum(
        p + 1, chi1, chi2.conjugate(), k1, k2,
        lambda h, j: Fraction(c * j, k2) + Fraction(b * h, k1))
    vacuous = _sign_condition(p, chi1, chi2) == -1
    report = _exact_report("lek3", params, direct, closed, vacuous=vacuous)
    if vacuous and report.verdict == VACUOUS:
        report.notes = "sign condition is -1: the sum and its closed form both vanish"
    return report


def _check_raabe(params) -> VerificationReport:
    p, c = int(params["p"]), int(params["c"])
    x = Fraction(params["x"])
    lhs = sum((periodic_bernoulli(p + 1, Fraction(m + x, c)) for m in range(c)),
              Fraction(0))
    rhs = Fraction(1, c ** p) * periodic_bernoulli(p + 1, x)
    return _exact_report("raabe", params, lhs, rhs)


def _check_em_theorem(params) -> VerificationReport:
    chi: DirichletCharacter = params["char"]
    f: Polynomial = params["f"]
    alpha, beta = Fraction(params["alpha"]), Fraction(params["beta"])
    l = int(params["l"])
    return verify_euler_maclaurin(chi, f, alpha, beta, l)


def verify_euler_maclaurin(chi: DirichletCharacter, f: Polynomial,
                           alpha: Fraction, beta: Fraction, l: int) -> VerificationReport:
    """The character summation formula: the endpoint-halved sum of chi(n) f(n)
    over integers alpha <= n <= beta against boundary terms plus the exact
    piecewise integral of the twisted periodic function times f^(l+1)."""
    params = {"char": chi, "f": f, "alpha": alpha, "beta": beta, "l": l}
    alpha, beta = Fraction(alpha), Fraction(beta)
    if chi.is_principal():
        return VerificationReport("em-theorem", params, None, None, HYP_NOT_MET,
                                  None, "requires a non-principal character")
    if not alpha < beta:
        return VerificationReport("em-theorem", params, None, None, HYP_NOT_MET,
                                  None, "requires alpha < beta")
    k = chi.modulus
    lhs = CyclotomicNumber.zero(1)
    for n in range(math.ceil(alpha), math.floor(beta) + 1):
        w = chi(n)
        if w.is_zero():
            continue
        term = w * f.eval(Fraction(n))
        if n == alpha or n == beta:
            term = term * Fraction(1, 2)
        lhs = lhs + term
    chib = chi.conjugate()
    rhs = CyclotomicNumber.zero(1)
    deriv = f
    for j in range(l + 1):
        rhs = rhs + Fraction((-1) ** (j + 1), math.factorial(j + 1)) * (
            gen_bernoulli_function(chib, j + 1, beta) * deriv.eval(beta)
            - gen_bernoulli_function(chib, j + 1, alpha) * deriv.eval(alpha))
        deriv = deriv.derivative()
    integral = CyclotomicNumber.zero(1)
    for n in range(1, k):
        w = chi(n)
        if w.is_zero():
            continue
        integral = integral + w * piecewise_product_integral(
            deriv, [PeriodicFactor(l + 1, Fraction(1, k), Fraction(n, k))], alpha, beta)
    rhs = rhs + Fraction((-1) ** l, math.factorial(l + 1)) * Fraction(k) ** l * integral
    rhs = chi.parity * rhs
    return _exact_report("em-theorem", params, lhs, rhs)


def _further_l_ok(p: int, l: int) -> bool:
    return 0 <= l <= p - 2


def _check_further_c1k(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, l = int(params["p"]), int(params["l"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus or not _further_l_ok(p, l):
        return VerificationReport("further-c1k", params, None, None, HYP_NOT_MET, None,
                                  "requires one modulus and 0 <= l <= p-2")
    k = chi1.modulus
    val = _char_product_integral(1, l + 1, chi1.conjugate(), Fraction(1),
                                 p - l, chi2, Fraction(k), Fraction(0), Fraction(k))
    return _exact_report("further-c1k", params, val, CyclotomicNumber.zero(1),
                         notes="integral vanishes for either sign of the parity product")


def _check_further_bc1(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, l = int(params["p"]), int(params["l"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus or not _further_l_ok(p, l):
        return VerificationReport("further-bc1", params, None, None, HYP_NOT_MET, None,
                                  "requires one modulus and 0 <= l <= p-2")
    integral = _char_product_integral(1, l + 1, chi1.conjugate(), Fraction(1),
                                      p - l, chi2, Fraction(1), Fraction(0),
                                      Fraction(chi1.modulus))
    rhs = char_weighted_power_sum(p, 1, 1, chi1, chi2)
    coeff = chi1.parity * math.comb(p + 1, l + 1)
    lhs_displayed = coeff * Fraction(-1) ** (l + 1) * integral
    lhs_derived = coeff * Fraction(-1) ** l * integral
    ok_displayed = scalars_equal(*_canonical_pair(lhs_displayed, rhs))
    ok_derived = scalars_equal(*_canonical_pair(lhs_derived, rhs))
    notes = (f"sign reading (-1)^(l+1) as displayed: "
             f"{'exact-equal' if ok_displayed else 'mismatch'}; "
             f"derived sign (-1)^l: {'exact-equal' if ok_derived else 'mismatch'}")
    lhs = lhs_derived if ok_derived else lhs_displayed
    lhs, rhs = _canonical_pair(lhs, rhs)
    verdict = EXACT_EQUAL if (ok_displayed or ok_derived) else MISMATCH
    return VerificationReport("further-bc1", params, lhs, rhs, verdict, None, notes)


def _check_further_eq20(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, l = int(params["p"]), int(params["l"])
    b, c = int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus or not _further_l_ok(p, l):
        return VerificationReport("further-eq20", params, None, None, HYP_NOT_MET, None,
                                  "requires one modulus and 0 <= l <= p-2")
    if _sign_condition(p, chi1, chi2) != -1:
        return VerificationReport("further-eq20", params, None, None, HYP_NOT_MET, None,
                                  "vanishing holds under parity-product sign -1")
    k = chi1.modulus
    val = _char_product_integral(1, l + 1, chi1.conjugate(), Fraction(c),
                                 p - l, chi2, Fraction(b), Fraction(0), Fraction(k))
    return _exact_report("further-eq20", params, val, CyclotomicNumber.zero(1))


def _check_further_weighted(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    p, l = int(params["p"]), int(params["l"])
    b, c = int(params["b"]), int(params["c"])
    problems = _check_nonprincipal_primitive(chi1, chi2)
    if problems or chi1.modulus != chi2.modulus or not _further_l_ok(p, l):
        return VerificationReport("further-weighted", params, None, None, HYP_NOT_MET,
                                  None, "requires one modulus and 0 <= l <= p-2")
    if _sign_condition(p, chi1, chi2) != -1 or math.gcd(b, c) != 1:
        return VerificationReport("further-weighted", params, None, None, HYP_NOT_MET,
                                  None, "requires parity-product sign -1 and gcd(b,c)=1")
    k = chi1.modulus
    integral = _char_product_integral(Polynomial([0, 1]), l + 1, chi1.conjugate(),
                                      Fraction(c), p - l - 1, chi2, Fraction(b),
                                      Fraction(0), Fraction(k))
    lhs = math.comb(p, l + 1) * Fraction(-b, c) ** l * b * integral
    rhs = chi1.parity * Fraction(k, 2) * Fraction(k, c) ** (p - 1) * _char_double_sum(
        p, chi1, chi2.conjugate(), k - 1, k - 1, lambda h, j: Fraction(c * j + b * h, k))
    return _exact_report("further-weighted", params, lhs, rhs)


def _check_int_32_oracle(params) -> VerificationReport:
    spec = ProductIntegralSpec(tuple(params["degrees"]),
                               tuple(Fraction(v) for v in params["slopes"]),
                               tuple(Fraction(v) for v in params["offsets"]),
                               Fraction(params["x"]))
    lhs = product_integral_formula(spec)
    rhs = product_integral_direct(spec)
    return _exact_report("int-32-oracle", params, lhs, rhs,
                         notes="closed multinomial formula against brute-force expansion")


def _check_int_24(params) -> VerificationReport:
    n, m = int(params["n"]), int(params["m"])
    lhs, rhs = two_factor_reciprocity(n, m, params["b1"], params["b2"],
                                      params["y1"], params["y2"], params["x"])
    return _exact_report("int-24", params, lhs, rhs)


def _check_int_28(params) -> VerificationReport:
    n, m = int(params["n"]), int(params["m"])
    lhs, rhs = equal_slope_reciprocity(n, m, params["y1"], params["y2"], params["x"])
    return _exact_report("int-28", params, lhs, rhs)


def _check_int_17(params) -> VerificationReport:
    degrees = tuple(int(d) for d in params["degrees"])
    offsets = tuple(Fraction(v) for v in params["offsets"])
    q = Fraction(params["q"])
    closed = reflective_slope_integral(degrees, offsets, q)
    spec = ProductIntegralSpec(degrees, tuple((1 - 2 * y) / q for y in offsets),
                               offsets, q)
    direct = product_integral_direct(spec)
    even = (sum(degrees) + 1) % 2 == 0
    return _exact_report("int-17", params, closed, direct,
                         notes="even case: closed value is identically 0" if even else
                               "odd case: closed double sum against direct integral")


def _check_int_23(params) -> VerificationReport:
    p = int(params["p"])
    # polynomial identity in two variables: full polynomial in x at p+2 sample y
    for i in range(p + 2):
        y = Fraction(i, 3) - 1
        lhs, rhs = bernoulli_pair_identity_polys(p, y)
        if lhs != rhs:
            return VerificationReport("int-23", params, lhs.eval(Fraction(0)),
                                      rhs.eval(Fraction(0)), MISMATCH, None,
                                      f"polynomial-in-x mismatch at y = {y}")
    val = bernoulli_pair_identity_polys(p, Fraction(1, 7))[0].eval(Fraction(2, 5))
    return VerificationReport("int-23", params, val, val, EXACT_EQUAL, None,
                              f"two-variable identity checked as polynomials in x at "
                              f"{p + 2} distinct y values (degree-exhaustive)")


def _check_int_36(params) -> VerificationReport:
    chi1: DirichletCharacter = params["char1"]
    chi2: DirichletCharacter = params["char2"]
    n, m = int(params["n"]), int(params["m"])
    lhs, rhs = char_two_factor_reciprocity(n, m, params["b1"], params["b2"],
                                           params["y1"], params["y2"], params["x"],
                                           chi1, chi2)
    return _exact_report("int-36", params, lhs, rhs)


def _check_remark_apostol(params) -> VerificationReport:
    m, n = int(params["m"]), int(params["n"])
    b1, b2 = int(params["b1"]), int(params["b2"])
    x = Fraction(params["x"])
    p = m + n
    if p % 2 == 0 or p < 1:
        return VerificationReport("remark-apostol", params, None, None, HYP_NOT_MET,
                                  None, "requires odd p = m + n")
    q = math.gcd(b1, b2)
    lhs = (p + 1) * (b1 * Fraction(b2) ** p * apostol_sum(p, b1, b2)
                     + b2 * Fraction(b1) ** p * apostol_sum(p, b2, b1))
    mid = Fraction(0)
    for a in range(n + 1):
        mid += (-1) ** (n - a) * math.comb(p + 1, n - a) * Fraction(b1) ** (m + a + 1) \
            * Fraction(b2) ** (n - a) * bernoulli_poly_value(n - a, b1 * x) \
            * bernoulli_poly_value(m + a + 1, b2 * x)
    for a in range(m + 1):
        mid += (-1) ** (m - a) * math.comb(p + 1, m - a) * Fraction(b2) ** (n + a + 1) \
            * Fraction(b1) ** (m - a) * bernoulli_poly_value(m - a, b2 * x) \
            * bernoulli_poly_value(n + a + 1, b1 * x)
    tail = Fraction(q) ** (p + 1) * p * bernoulli_number(p + 1)
    mid += tail
    closed = sum(((-1) ** a * math.comb(p + 1, a) * Fraction(b1) ** a
                  * Fraction(b2) ** (p + 1 - a) * bernoulli_number(p + 1 - a)
                  * bernoulli_number(a) for a in range(p + 2)), Fraction(0)) + tail
    if lhs == mid == closed:
        return VerificationReport("remark-apostol", params, lhs, closed, EXACT_EQUAL,
                                  None, "sum side, x-dependent middle form, and closed "
                                        "form all agree")
    return VerificationReport("remark-apostol", params, lhs, closed, MISMATCH, None,
                              f"middle form value {mid}")


def _check_laplace_16(params) -> VerificationReport:
    n = int(params["n"])
    t, y = Fraction(params["t"]), Fraction(params["y"])
    s = float(params["s"])
    rel = float(params.get("tolerance", REL_TOL))
    lhs = laplace.periodic_laplace_numeric(n, t, y, s)
    rhs = laplace.periodic_laplace_closed(n, t, y, s)
    verdict, residual, mode = _float_verdict(lhs, rhs, rel)
    notes = f"{mode} comparison"
    terms = params.get("series_terms")
    if terms:
        est = laplace.periodic_laplace_series(n, t, y, s, int(terms))
        notes += f"; tail series at {terms} terms deviates {abs(est - rhs):.3e}"
    return VerificationReport("laplace-16", params, lhs, rhs, verdict, residual, notes)


def _check_laplace_product(params) -> VerificationReport:
    m, n = int(params["m"]), int(params["n"])
    s = float(params["s"])
    rel = float(params.get("tolerance", REL_TOL))
    lhs = laplace.product_laplace_numeric(m, n, s)
    rhs = laplace.product_laplace_closed(m, n, s)
    verdict, residual, mode = _float_verdict(lhs, rhs, rel)
    return VerificationReport("laplace-product", params, lhs, rhs, verdict, residual,
                              f"{mode} comparison")


def _check_laplace_char(params) -> VerificationReport:
    chi: DirichletCharacter = params["char"]
    n = int(params["n"])
    t = Fraction(params["t"])
    s = float(params["s"])
    rel = float(params.get("tolerance", REL_TOL))
    problems = _check_nonprincipal_primitive(chi)
    if problems:
        return VerificationReport("laplace-char", params, None, None, HYP_NOT_MET,
                                  None, "requires a non-principal primitive character")
    lhs = laplace.char_laplace_numeric(chi, n, t, s)
    rhs = laplace.char_laplace_closed(chi, n, t, s)
    diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    if scale < SMALL_MAGNITUDE:
        ok, residual, mode = diff <= ABS_FLOOR, diff, "absolute"
    else:
        ok, residual, mode = diff <= max(rel * scale, ABS_FLOOR), diff / scale, "relative"
    return VerificationReport("laplace-char", params, lhs, rhs,
                              WITHIN_TOL if ok else MISMATCH, residual,
                              f"{mode} comparison of complex magnitudes")


def laplace_check(n: int, t, y, s: float, series_terms: Optional[int] = None) -> VerificationReport:
    """Operation form of the basic Laplace identity check."""
    params = {"n": n, "t": Fraction(t), "y": Fraction(y), "s": float(s)}
    if series_terms is not None:
        params["series_terms"] = series_terms
    return _check_laplace_16(params)


CHECKERS: dict[str, Callable[[dict], VerificationReport]] = {
    "classical-dr": _check_classical_dr,
    "apostol-dr1": _check_apostol_dr1,
    "berndt-dkr": _check_berndt_dkr,
    "cck-rp": _check_cck_rp,
    "rp1": _check_rp1,
    "rp2": _check_rp2,
    "rp3": _check_rp3,
    "lek2": _check_lek2,
    "lek3": _check_lek3,
    "raabe": _check_raabe,
    "em-theorem": _check_em_theorem,
    "further-c1k": _check_further_c1k,
    "further-bc1": _check_further_bc1,
    "further-eq20": _check_further_eq20,
    "further-weighted": _check_further_weighted,
    "int-32-oracle": _check_int_32_oracle,
    "int-24": _check_int_24,
    "int-28": _check_int_28,
    "int-17": _check_int_17,
    "int-23": _check_int_23,
    "int-36": _check_int_36,
    "remark-apostol": _check_remark_apostol,
    "laplace-16": _check_laplace_16,
    "laplace-product": _check_laplace_product,
    "laplace-char": _check_laplace_char,
}

IDENTITY_IDS = tuple(CHECKERS)


def verify_identity(identity_id: str, params: dict) -> VerificationReport:
    """Run one registered checker; unknown ids are an error (closed registry)."""
    try:
        checker = CHECKERS[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}; known: {sorted(CHECKERS)}")
    return checker(params)


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def sweep(identity_id: str, grid, jobs: int = 1) -> list[VerificationReport]:
    """verify_identity over every parameter point; reports are sorted into the
    canonical (parameter JSON) order, so collection is order-independent."""
    grid = list(grid)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_sweep_worker,
                                    [(identity_id, params) for params in grid],
                                    chunksize=max(1, len(grid) // (4 * jobs) or 1)))
    else:
        reports = [verify_identity(identity_id, params) for params in grid]
    reports.sort(key=lambda r: json.dumps(_encode_params(r.params), sort_keys=True))
    return reports


def _sweep_worker(job):
    identity_id, params = job
    return verify_identity(identity_id, params)


def aggregate(identity_id: str, reports) -> dict:
    reports = list(reports)
    counts = {EXACT_EQUAL: 0, WITHIN_TOL: 0, VACUOUS: 0, HYP_NOT_MET: 0, MISMATCH: 0}
    for r in reports:
        counts[r.verdict] += 1
    return {
        "id": identity_id,
        "total": len(reports),
        "exact_equal": counts[EXACT_EQUAL],
        "within_tol": counts[WITHIN_TOL],
        "vacuous": counts[VACUOUS],
        "hypothesis_not_met": counts[HYP_NOT_MET],
        "mismatch": counts[MISMATCH],
    }


# ---------------------------------------------------------------------------
# Grid builders (the acceptance grids are the defaults)
# ---------------------------------------------------------------------------

def _coprime_pairs(limit: int):
    return [(b, c) for b in range(1, limit + 1) for c in range(1, limit + 1)
            if math.gcd(b, c) == 1]


def _char_pairs(k: int):
    prims = enumerate_characters(k, "nonprincipal_primitive")
    return [(c1, c2) for c1 in prims for c2 in prims]


def default_grid(identity_id: str, *, ks=None, k_pairs=None, p_values=None,
                 bc_max=None, coprime=None, l_values=None, count=None,
                 seed=0, x_values=None) -> list[dict]:
    """Deterministic parameter grids per identity; keyword overrides narrow or
    widen the defaults (documented per identity in the README)."""
    rng = random.Random(seed)

    if identity_id == "classical-dr":
        return [{"b": b, "c": c} for b, c in _coprime_pairs(bc_max or 30)]

    if identity_id == "apostol-dr1":
        ps = p_values or (1, 3, 5, 7)
        return [{"p": p, "b": b, "c": c}
                for p in ps for b, c in _coprime_pairs(bc_max or 12)]

    if identity_id == "berndt-dkr":
        out = []
        for k in ks or (3, 4, 5):
            for chi in enumerate_characters(k, "nonprincipal_primitive"):
                for c in range(k, (bc_max or 10) + 1, k):
                    for b in range(1, (bc_max or 10) + 1):
                        if math.gcd(b, c) == 1:
                            out.append({"char": chi, "b": b, "c": c})
        return out

    if identity_id == "cck-rp":
        out = []
        for k in ks or (3, 5, 7):
            for chi in enumerate_characters(k, "nonprincipal_primitive"):
                for p in p_values or (1, 3, 5):
                    for b, c in _coprime_pairs(bc_max or 8):
                        out.append({"char": chi, "p": p, "b": b, "c": c})
        return out

    if identity_id == "rp1":
        out = []
        lim = bc_max or 8
        for k in ks or (3, 4, 5, 7):
            for c1, c2 in _char_pairs(k):
                for p in p_values or range(2, 7):
                    for b in range(1, lim + 1):
                        for c in range(1, lim + 1):
                            out.append({"char1": c1, "char2": c2, "p": p, "b": b, "c": c})
        return out

    if identity_id in ("rp2", "rp3"):
        out = []
        lim = bc_max or 6
        for k1, k2 in k_pairs or ((3, 4), (3, 5), (4, 5)):
            prims1 = enumerate_characters(k1, "nonprincipal_primitive")
            prims2 = enumerate_characters(k2, "nonprincipal_primitive")
            for c1 in prims1:
                for c2 in prims2:
                    for p in p_values or range(2, 6):
                        for b in range(1, lim + 1):
                            for c in range(1, lim + 1):
                                out.append({"char1": c1, "char2": c2, "p": p,
                                            "b": b, "c": c})
        return out

    if identity_id == "lek2":
        out = []
        lim = bc_max or 8
        for k in ks or (3, 4, 5, 7):
            for c1, c2 in _char_pairs(k):
                for p in p_values or range(2, 7):
                    for b in range(1, lim + 1):
                        for c in range(1, lim + 1):
                            if math.gcd(b, c) == 1 or coprime is False:
                                out.append({"char1": c1, "char2": c2, "p": p,
                                            "b": b, "c": c})
        return out

    if identity_id == "lek3":
        out = []
        lim = bc_max or 6
        for k1, k2 in k_pairs or ((3, 4), (3, 5), (4, 5)):
            for c1 in enumerate_characters(k1, "nonprincipal_primitive"):
                for c2 in enumerate_characters(k2, "nonprincipal_primitive"):
                    for p in p_values or range(2, 6):
                        for b, c in _coprime_pairs(lim):
                            out.append({"char1": c1, "char2": c2, "p": p,
                                        "b": b, "c": c})
        return out

    if identity_id == "raabe":
        out = []
        for c in range(1, 11):
            for p in p_values or range(1, 7):
                for _ in range(3):
                    x = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                    out.append({"p": p, "c": c, "x": x})
        return out

    if identity_id == "em-theorem":
        out = []
        for k in ks or (3, 4, 5, 6, 7):
            for chi in enumerate_characters(k):
                if chi.is_principal():
                    continue
                # monomial basis is exhaustive for all f of degree <= 5 (linearity)
                fs = [Polynomial([0] * d + [1]) for d in range(6)]
                fs.append(Polynomial([Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                      for _ in range(6)]))
                for f in fs:
                    for l in l_values or range(5):
                        for (a, b) in ((0, k), (0, 2 * k), (1, 3 * k)):
                            out.append({"char": chi, "f": f, "alpha": Fraction(a),
                                        "beta": Fraction(b), "l": l})
        return out

    if identity_id in ("further-c1k", "further-bc1"):
        out = []
        for k in ks or (3, 4, 5):
            for c1, c2 in _char_pairs(k):
                for p in p_values or range(2, 6):
                    for l in range(0, p - 1):
                        out.append({"char1": c1, "char2": c2, "p": p, "l": l})
        return out

    if identity_id in ("further-eq20", "further-weighted"):
        out = []
        lim = bc_max or 4
        for k in ks or (3, 4, 5):
            for c1, c2 in _char_pairs(k):
                for p in p_values or range(2, 6):
                    if _sign_condition(p, c1, c2) != -1:
                        continue
                    for l in range(0, p - 1):
                        for b in range(1, lim + 1):
                            for c in range(1, lim + 1):
                                if identity_id == "further-weighted" and math.gcd(b, c) != 1:
                                    continue
                                out.append({"char1": c1, "char2": c2, "p": p, "l": l,
                                            "b": b, "c": c})
        return out

    if identity_id == "int-32-oracle":
        out = [
            {"degrees": (3, 4, 16), "slopes": ("-1", "3", "5"),
             "offsets": ("1", "-1", "-2"), "x": "1"},
            {"degrees": (3, 4, 15), "slopes": ("-1", "3", "-3"),
             "offsets": ("1", "-1", "2"), "x": "1"},
        ]
        for _ in range(count or 200):
            r = rng.randint(1, 4)
            while True:
                degrees = tuple(rng.randint(0, 6) for _ in range(r))
                if sum(degrees) <= 20:
                    break
            def rand_frac(nonzero=False):
                while True:
                    v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                    if not nonzero or v != 0:
                        return v
            out.append({"degrees": degrees,
                        "slopes": tuple(str(rand_frac(True)) for _ in range(r)),
                        "offsets": tuple(str(rand_frac()) for _ in range(r)),
                        "x": str(rand_frac())})
        return out

    if identity_id in ("int-24", "int-36"):
        tuples = [("1/2", "3", "1/3", "-2", "1/5"), ("2", "-1/2", "0", "1/4", "1"),
                  ("-2/3", "5", "1", "2/7", "-1/2")]
        out = []
        nmax = 5
        chars = []
        if identity_id == "int-36":
            for k1 in ks or (3, 4):
                for k2 in ks or (3, 4):
                    for c1 in enumerate_characters(k1, "nonprincipal_primitive"):
                        for c2 in enumerate_characters(k2, "nonprincipal_primitive"):
                            chars.append((c1, c2))
        for n in range(1 if identity_id == "int-36" else 0, nmax + 1):
            for m in range(1 if identity_id == "int-36" else 0, nmax + 1):
                for b1, b2, y1, y2, x in tuples:
                    base = {"n": n, "m": m, "b1": Fraction(b1), "b2": Fraction(b2),
                            "y1": Fraction(y1), "y2": Fraction(y2), "x": Fraction(x)}
                    if identity_id == "int-36":
                        for c1, c2 in chars:
                            out.append(dict(base, char1=c1, char2=c2))
                    else:
                        out.append(base)
        return out

    if identity_id == "int-28":
        tuples = [("1/2", "0", "1/3"), ("2/5", "-1/5", "0"), ("1", "1", "7/3")]
        return [{"n": n, "m": m, "y1": Fraction(y1), "y2": Fraction(y2), "x": Fraction(x)}
                for n in range(6) for m in range(6) for y1, y2, x in tuples]

    if identity_id == "int-17":
        out = []
        offset_pool = ["0", "1", "-1", "1/3", "-2", "2/5", "3"]
        for _ in range(count or 40):
            r = rng.randint(1, 4)
            degrees = tuple(rng.randint(0, 5) for _ in range(r))
            offsets = tuple(rng.choice(offset_pool) for _ in range(r))
            q = rng.choice(["1", "2", "1/2", "-1", "3"])
            out.append({"degrees": degrees, "offsets": offsets, "q": q})
        out.append({"degrees": (3, 4, 16), "offsets": ("1", "-1", "-2"), "q": "1"})
        out.append({"degrees": (3, 4, 15), "offsets": ("1", "-1", "2"), "q": "1"})
        return out

    if identity_id == "int-23":
        return [{"p": p} for p in range(1, 9)]

    if identity_id == "remark-apostol":
        out = []
        for m in range(6):
            for n in range(6):
                if (m + n) % 2 == 0 or m + n == 0:
                    continue
                for b1, b2 in ((1, 1), (2, 3), (3, 2), (2, 4), (6, 4), (5, 5), (7, 8)):
                    for x in (x_values or (Fraction(0), Fraction(1, 3), Fraction(-2, 5))):
                        out.append({"m": m, "n": n, "b1": b1, "b2": b2, "x": x})
        return out

    if identity_id == "laplace-16":
        return [{"n": n, "t": Fraction(t), "y": Fraction(y), "s": s}
                for n in (1, 2, 3, 4)
                for t in ("1", "2", "3")
                for y in ("0", "1/3", "5/2")
                for s in (0.5, 1.0, 2.0)]

    if identity_id == "laplace-product":
        return [{"m": m, "n": n, "s": s}
                for (m, n, s) in ((0, 1, 1.0), (1, 1, 0.8), (1, 2, 1.0), (2, 2, 1.5),
                                  (3, 1, 1.0), (2, 3, 0.6), (4, 2, 2.0), (3, 3, 1.0),
                                  (4, 4, 0.75), (5, 3, 1.25))]

    if identity_id == "laplace-char":
        chi3 = enumerate_characters(3, "nonprincipal_primitive")[0]
        chi4 = enumerate_characters(4, "nonprincipal_primitive")[0]
        chi5 = enumerate_characters(5, "nonprincipal_primitive")[0]
        pts = [(chi3, 1, "1", 1.0), (chi3, 2, "1", 0.6), (chi3, 1, "2", 2.0),
               (chi4, 1, "1", 1.0), (chi4, 2, "2", 0.8), (chi4, 3, "1", 1.5),
               (chi5, 1, "1", 1.0), (chi5, 2, "1", 1.2), (chi5, 1, "3", 0.9),
               (chi5, 3, "2", 1.0)]
        return [{"char": chi, "n": n, "t": Fraction(t), "s": s}
                for chi, n, t, s in pts]

    raise KeyError(f"no default grid for identity id {identity_id!r}")
