"""Floating-point checks of the Laplace-transform identities.

The float side lives here, quarantined from the exact modules.  Both sides of
each identity are evaluated with mpmath at 35 significant digits and returned
as machine floats: the closed forms subtract two nearly equal parts (the
difference is O((s/t)^(n+1)) while the parts are O(1)), and the block sums of
the numeric integrals cancel similarly, so double precision alone cannot
honour a 1e-9 relative comparison; 35 digits leaves ~20 after the worst
cancellation on sane grids.

The numeric integrals are semi-analytic: the integrand is an exact piecewise
polynomial times e^(-su), each breakpoint-free block integrates in closed
form (stable incomplete-gamma series for the moments), and blocks are summed
until the geometric tail bound drops below 1e-14 of the total.  No quadrature
rule is involved.

Closed forms checked (s > 0, t > 0 rational, n >= 1):

  integral_0^inf e^(-su) periodic_B_n(tu + y) du
      = n! t^n / s^(n+1) * ( sum_{a=0}^{n} B_a({y})/a! (s/t)^a
                             - (s/t) e^({y} s/t) / (e^(s/t) - 1) )

  integral_0^inf e^(-su) B_m(u) periodic_B_n(u) du
      = sum_{r=0}^{m} C(m,r) B_{m-r} ( sum_{a=0}^{n} C(n,a) (n+r-a)!/s^(n+1+r-a) B_a
                                       - n! (-1)^r d^r/ds^r [ s^(-n)/(e^s - 1) ] )

  (1/n!) integral_0^inf e^(-su) periodic_B_{n,chi}(tu) du
      = (1/s) sum_{a=0}^{n} B_{a,chi}/a! (t/s)^(n-a)
        - t^(n-1)/s^n * sum_{j=0}^{k-1} conj(chi)(j) e^(js/t) / (e^(ks/t) - 1)
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf, mpc, exp as mp_exp, expm1 as mp_expm1

from .bernoulli import bernoulli_number, bernoulli_poly, fractional_part, periodic_bernoulli
from .charbernoulli import gen_bernoulli_number
from .dirichlet import DirichletCharacter
from .exactnum import CyclotomicNumber

__all__ = [
    "periodic_laplace_numeric",
    "periodic_laplace_closed",
    "periodic_laplace_series",
    "product_laplace_numeric",
    "product_laplace_closed",
    "char_laplace_numeric",
    "char_laplace_closed",
]

_DPS = 35
_TAIL = 1e-14


def _mpq(x) -> mpf:
    x = Fraction(x)
    return mpf(x.numerator) / mpf(x.denominator)


def _moment(i: int, x: mpf, s: mpf) -> mpf:
    """integral_0^L u^i e^(-su) du for x = s L, via the all-positive series
    (i!/s^(i+1)) e^(-x) sum_{m>i} x^m/m!  (stable for every x > 0)."""
    if x > 40:
        head = term = mpf(1)
        for m in range(1, i + 1):
            term *= x / m
            head += term
        tail_factor = 1 - mp_exp(-x) * head
    else:
        term = x ** (i + 1) / math.factorial(i + 1)
        tail = term
        m = i + 1
        eps = mpf(10) ** (-_DPS - 5)
        while term > eps * tail:
            m += 1
            term *= x / m
            tail += term
        tail_factor = mp_exp(-x) * tail
    fact_over_s = mpf(math.factorial(i)) / s ** (i + 1)
    return fact_over_s * tail_factor


def _exp_poly_block(coeffs, L: mpf, s: mpf) -> mpf:
    """integral_0^L e^(-su) sum_i c_i u^i du with exact rational c_i."""
    x = s * L
    total = mpf(0)
    for i, c in enumerate(coeffs):
        if c:
            total += _mpq(c) * _moment(i, x, s)
    return total


def periodic_laplace_numeric(n: int, t: Fraction, y: Fraction, s) -> float:
    """integral_0^inf e^(-su) periodic_B_n(tu + y) du.

    The integrand has period 1/t in u: past the first breakpoint every period
    contributes one base block damped by e^(-s/t) per step, so the sum is a
    head block plus a geometric series, truncated at the 1e-14 tail bound.
    """
    t, y = Fraction(t), Fraction(y)
    if t <= 0:
        raise ValueError("t must be positive")
    s = mpf(str(float(s)))
    if s <= 0:
        raise ValueError("s must be positive")
    with mp.workdps(_DPS):
        period = Fraction(1) / t
        m0 = math.floor(y)
        u0 = Fraction(m0 + 1 - y, t)  # first breakpoint: t*u + y = m0 + 1
        head_piece = bernoulli_poly(n).compose_affine(t, y - m0)
        total = _exp_poly_block(head_piece.coeffs, _mpq(u0), s)
        base_piece = bernoulli_poly(n).compose_affine(t, Fraction(0))
        base = _exp_poly_block(base_piece.coeffs, _mpq(period), s)
        rho = mp_exp(-s * _mpq(period))
        damp = mp_exp(-s * _mpq(u0))
        bound = float(sum(abs(c) for c in bernoulli_poly(n).coeffs))  # |B_n| on [0,1]
        while True:
            total += damp * base
            damp *= rho
            if bound * damp / (s * (1 - rho)) < _TAIL * (1 + abs(total)):
                return float(total)


def periodic_laplace_closed(n: int, t: Fraction, y: Fraction, s) -> float:
    """The literal closed form (see module docstring)."""
    t, y = Fraction(t), Fraction(y)
    s = mpf(str(float(s)))
    if s <= 0:
        raise ValueError("s must be positive")
    with mp.workdps(_DPS):
        yf = fractional_part(y)
        ratio = s / _mpq(t)
        acc = mpf(0)
        for a in range(n + 1):
            acc += _mpq(bernoulli_poly(a).eval(yf)) / math.factorial(a) * ratio ** a
        acc -= ratio * mp_exp(_mpq(yf) * ratio) / mp_expm1(ratio)
        return float(math.factorial(n) * _mpq(t) ** n / s ** (n + 1) * acc)


def periodic_laplace_series(n: int, t: Fraction, y: Fraction, s, terms: int) -> float:
    """Truncated tail-series form - (t^n/s^(n+1)) n! sum_{a=n+1}^{terms}
    periodic_B_a(y)/a! (s/t)^a; converges for |s/t| < 2*pi."""
    t, y = Fraction(t), Fraction(y)
    s = mpf(str(float(s)))
    with mp.workdps(_DPS):
        ratio = s / _mpq(t)
        if abs(ratio) >= 2 * math.pi:
            raise ValueError("series form requires |s/t| < 2*pi")
        acc = mpf(0)
        for a in range(n + 1, terms + 1):
            acc += _mpq(periodic_bernoulli(a, y)) / math.factorial(a) * ratio ** a
        return float(-math.factorial(n) * _mpq(t) ** n / s ** (n + 1) * acc)


def product_laplace_numeric(m: int, n: int, s) -> float:
    """integral_0^inf e^(-su) B_m(u) periodic_B_n(u) du, block by block over
    [j, j+1] in local coordinates (the periodic factor restarts at 0)."""
    s = mpf(str(float(s)))
    if s <= 0:
        raise ValueError("s must be positive")
    with mp.workdps(_DPS):
        bn = bernoulli_poly(n)
        bm = bernoulli_poly(m)
        amp_n = float(sum(abs(c) for c in bn.coeffs))
        total = mpf(0)
        j = 0
        while True:
            piece = bm.compose_affine(Fraction(1), Fraction(j)) * bn
            total += mp_exp(-s * j) * _exp_poly_block(piece.coeffs, mpf(1), s)
            # safe tail bound: |B_m| <= sum |c_i| (j+2)^i on [j+1, j+2], ...
            mx = sum(abs(float(c)) * (j + 2.0) ** i for i, c in enumerate(bm.coeffs)) * amp_n
            if mx * mp_exp(-s * (j + 1)) / (s * (1 - mp_exp(-s))) < _TAIL * (1 + abs(total)) \
                    and j >= 2:
                return float(total)
            j += 1


def _inv_expm1_derivative(j: int, s: mpf) -> mpf:
    """d^j/ds^j of 1/(e^s - 1) via the geometric series sum_{l>=1} e^(-ls)."""
    total = mpf(0)
    eps = mpf(10) ** (-_DPS - 5)
    l = 1
    while True:
        term = (-l) ** j * mp_exp(-l * s)
        total += term
        if abs(term) < eps * (1 + abs(total)) and l > j / s + 2:
            return total
        l += 1
        if l > 200000:
            raise RuntimeError("series for the derivative did not converge")


def product_laplace_closed(m: int, n: int, s) -> float:
    """The literal closed form of the product transform."""
    s = mpf(str(float(s)))
    if s <= 0:
        raise ValueError("s must be positive")
    with mp.workdps(_DPS):
        total = mpf(0)
        for r in range(m + 1):
            w = math.comb(m, r) * _mpq(bernoulli_number(m - r))
            if w == 0:
                continue
            inner = mpf(0)
            for a in range(n + 1):
                inner += math.comb(n, a) * math.factorial(n + r - a) / s ** (n + 1 + r - a) \
                    * _mpq(bernoulli_number(a))
            # d^r/ds^r [s^(-n)/(e^s-1)] by the Leibniz rule
            der = mpf(0)
            for i in range(r + 1):
                ds_pow = (-1) ** i * math.prod(range(n, n + i)) * s ** (-n - i)
                der += math.comb(r, i) * ds_pow * _inv_expm1_derivative(r - i, s)
            inner -= math.factorial(n) * (-1) ** r * der
            total += w * inner
        return float(total)


def _mp_complex(value: CyclotomicNumber) -> mpc:
    zeta = mp_exp(2j * mp.pi / value.order)
    acc = mpc(0)
    power = mpc(1)
    for c in value.coeffs:
        acc += _mpq(c) * power
        power *= zeta
    return acc


def char_laplace_numeric(chi: DirichletCharacter, n: int, t: Fraction, s) -> complex:
    """integral_0^inf e^(-su) periodic_B_{n,chi}(tu) du via the expansion
    k^(n-1) sum_m conj(chi)(m) * (basic transform at slope t/k, offset m/k)."""
    t = Fraction(t)
    k = chi.modulus
    chib = chi.conjugate()
    with mp.workdps(_DPS):
        total = mpc(0)
        for m_res in range(1, k):
            w = chib(m_res)
            if w.is_zero():
                continue
            block = periodic_laplace_numeric(n, Fraction(t, k), Fraction(m_res, k), s)
            total += _mp_complex(w) * block
        return complex(mpf(k) ** (n - 1) * total)


def char_laplace_closed(chi: DirichletCharacter, n: int, t: Fraction, s) -> complex:
    """n! [ (1/s) sum_a B_{a,chi}/a! (t/s)^(n-a)
           - t^(n-1)/s^n sum_j conj(chi)(j) e^(js/t) / (e^(ks/t) - 1) ]."""
    t = Fraction(t)
    s = mpf(str(float(s)))
    if s <= 0:
        raise ValueError("s must be positive")
    k = chi.modulus
    chib = chi.conjugate()
    with mp.workdps(_DPS):
        tf = _mpq(t)
        acc = mpc(0)
        for a in range(n + 1):
            acc += _mp_complex(gen_bernoulli_number(chi, a)) / math.factorial(a) \
                * (tf / s) ** (n - a)
        acc /= s
        gsum = mpc(0)
        for j in range(k):
            w = chib(j)
            if w.is_zero():
                continue
            gsum += _mp_complex(w) * mp_exp(j * s / tf)
        acc -= tf ** (n - 1) / s ** n * gsum / mp_expm1(k * s / tf)
        return complex(math.factorial(n) * acc)
