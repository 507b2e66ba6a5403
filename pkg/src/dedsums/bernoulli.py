"""Bernoulli numbers/polynomials, exact polynomial algebra, and piecewise
integration of products with periodic Bernoulli factors.

Conventions:
  * B_1 = -1/2 (so B_n = B_n(0) for the polynomials below).
  * Fractional part floors toward -infinity: {x} = x - floor(x) in [0, 1).
  * The degree-1 periodic function is the sawtooth ((x)): 0 at integers and
    {x} - 1/2 elsewhere.  For n > 1 the periodic function is B_n({x}).

Polynomials are dense ascending coefficient vectors; coefficients may be int,
Fraction, or CyclotomicNumber (they only need +, *, / by integers).  Trailing
zeros are trimmed and the zero polynomial has an empty coefficient vector.

Everything here is exact; there is no floating point in this module.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_value",
    "periodic_bernoulli",
    "fractional_part",
    "Polynomial",
    "PeriodicFactor",
    "piecewise_product_integral",
]


# ---------------------------------------------------------------------------
# Bernoulli numbers: recurrence sum_{j<n} C(n+1, j) B_j = -(n+1) B_n ... i.e.
# B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j, from the generating function
# t e^{xt}/(e^t - 1).  Memoized in a shared table guarded by a lock so the
# table is safe under concurrent read/insert.
# ---------------------------------------------------------------------------

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_0 = 1, B_1 = -1/2, odd ones 0 for n >= 3)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_BERNOULLI):
        with _BERNOULLI_LOCK:
            while len(_BERNOULLI) <= n:
                m = len(_BERNOULLI)
                acc = Fraction(0)
                for j in range(m):
                    acc += math.comb(m + 1, j) * _BERNOULLI[j]
                _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> "Polynomial":
    """B_n(x) = sum_{r=0}^{n} C(n, r) B_{n-r} x^r, degree exactly n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [math.comb(n, r) * bernoulli_number(n - r) for r in range(n + 1)]
    return Polynomial(coeffs)


_POLY_VALUE_CACHE: dict[tuple[int, Fraction], Fraction] = {}


def bernoulli_poly_value(n: int, x: Fraction) -> Fraction:
    """B_n(x) at a rational point, memoized (the sweeps revisit few points)."""
    x = Fraction(x)
    key = (n, x)
    val = _POLY_VALUE_CACHE.get(key)
    if val is None:
        val = bernoulli_poly(n).eval(x)
        _POLY_VALUE_CACHE[key] = val
    return val


def fractional_part(x: Fraction) -> Fraction:
    """{x} = x - floor(x) in [0, 1); floor is toward -infinity."""
    x = Fraction(x)
    return x - math.floor(x)


def periodic_bernoulli(n: int, x: Fraction) -> Fraction:
    """Periodic Bernoulli function of degree n >= 1.

    For n > 1 this is B_n({x}); for n = 1 it is the sawtooth ((x)), which is
    0 at integers and {x} - 1/2 off them.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    frac = fractional_part(x)
    if n == 1:
        return frac - Fraction(1, 2) if frac else Fraction(0)
    return bernoulli_poly_value(n, frac)


# ---------------------------------------------------------------------------
# Dense polynomials, generic over the exact scalar types
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable dense polynomial; index = power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = out[i] + c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return Polynomial()
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial([c / scalar for c in self.coeffs])

    def eval(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def integrate_from_zero(self) -> "Polynomial":
        """Antiderivative with zero constant term: integral_0^x P(z) dz."""
        return Polynomial([0] + [c / Fraction(i + 1) for i, c in enumerate(self.coeffs)])

    def integral_over(self, a, b):
        """Exact integral of P over [a, b]."""
        anti = self.integrate_from_zero()
        return anti.eval(b) - anti.eval(a)

    def compose_affine(self, slope, offset) -> "Polynomial":
        """P(slope*x + offset), by Horner over the linear polynomial."""
        acc = Polynomial()
        lin = Polynomial([offset, slope])
        for c in reversed(self.coeffs):
            acc = acc * lin + Polynomial([c])
        return acc

    def to_json(self, scalar_to_json) -> dict:
        return {"coeffs": [scalar_to_json(c) for c in self.coeffs]}


@lru_cache(maxsize=None)
def _shifted_bernoulli_poly(n: int, slope: Fraction, offset: Fraction) -> Polynomial:
    """B_n(slope*x + offset), cached (the integrator revisits shifts heavily)."""
    return bernoulli_poly(n).compose_affine(slope, offset)


# ---------------------------------------------------------------------------
# Piecewise products of periodic Bernoulli factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PeriodicFactor:
    """One factor of the form (periodic Bernoulli of degree n)(slope*x + offset).

    Breakpoints on [a, b] are exactly the x with slope*x + offset an integer.
    """
    n: int
    slope: Fraction
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be >= 1")
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.slope == 0:
            raise ValueError("slope must be nonzero")

    def breakpoints(self, a: Fraction, b: Fraction) -> list[Fraction]:
        """Strictly interior breakpoints of the factor on (a, b)."""
        va, vb = self.slope * a + self.offset, self.slope * b + self.offset
        lo, hi = (va, vb) if va <= vb else (vb, va)
        out = []
        for m in range(math.ceil(lo), math.floor(hi) + 1):
            x = (m - self.offset) / self.slope
            if a < x < b:
                out.append(x)
        return out

    def local_poly(self, x: Fraction) -> Polynomial:
        """The polynomial piece valid on the breakpoint-free interval around x."""
        m = math.floor(self.slope * x + self.offset)
        return _shifted_bernoulli_poly(self.n, self.slope, self.offset - m)


def piecewise_product_integral(poly, factors: Sequence[PeriodicFactor],
                               alpha: Fraction, beta: Fraction):
    """Exact integral over [alpha, beta] of poly(x) * prod_i F_i(x), where
    each F_i is a periodic Bernoulli factor.

    The breakpoints of all factors split [alpha, beta] into intervals on which
    every factor agrees with a shifted Bernoulli polynomial; each subinterval
    is then integrated exactly.  Subinterval boundaries have measure zero, so
    the sawtooth's value convention at integers never affects the result; the
    polynomial attached to each open interval is the one valid in its
    interior (evaluated at the midpoint).
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not isinstance(poly, Polynomial):
        poly = Polynomial([poly])
    if alpha == beta:
        return Fraction(0)
    if beta < alpha:
        return -piecewise_product_integral(poly, factors, beta, alpha)

    cuts = {alpha, beta}
    for f in factors:
        cuts.update(f.breakpoints(alpha, beta))
    pts = sorted(cuts)

    total = Fraction(0)
    for x0, x1 in zip(pts, pts[1:]):
        mid = (x0 + x1) / 2
        piece = poly
        for f in factors:
            piece = piece * f.local_poly(mid)
        total = total + piece.integral_over(x0, x1)
    return total
