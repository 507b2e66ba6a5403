"""Exact integrals of products of Bernoulli polynomials with affine arguments,
the closed multinomial formula for them, and the reciprocity identities that
follow (including the character-twisted two-factor version).

The central object is

    integral_0^x  B_{n_1}(b_1 z + y_1) * ... * B_{n_r}(b_r z + y_r)  dz

for nonzero rational slopes b_l.  All public functions return the *unscaled*
integral; the closed formula is stated most naturally with 1/(n_1! ... n_r!)
prefactors, so the implementation applies exact factorial rationals at the
boundary rather than carrying them through (smaller intermediate heights).

The closed formula is an iterated integration by parts: with
f = product of the first r-1 factors and mu = n_1 + ... + n_{r-1},

    I = sum_{a=0}^{mu} (-1)^a sum_{j_1+...+j_{r-1}=a} multinomial(a; j)
        * b_1^{j_1} ... b_{r-1}^{j_{r-1}} * b_r^(-a-1)
        * [difference of products of Bernoulli values at x and at 0],

where factor l contributes B_{n_l - j_l}(b_l x + y_l) (terms with
n_l - j_l < 0 vanish: the corresponding derivative of f is zero, and the
iteration skips them).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bernoulli import Polynomial, bernoulli_poly, bernoulli_poly_value
from .charbernoulli import gen_bernoulli_poly
from .dirichlet import DirichletCharacter
from .exactnum import CyclotomicNumber

__all__ = [
    "ProductIntegralSpec",
    "product_integral_direct",
    "product_integral_direct_poly",
    "product_integral_formula",
    "permutation_invariance_check",
    "two_factor_reciprocity",
    "two_factor_constant_sum_poly",
    "equal_slope_reciprocity",
    "reflective_slope_integral",
    "char_two_factor_reciprocity",
    "bernoulli_pair_identity_polys",
]


@dataclass(frozen=True)
class ProductIntegralSpec:
    """Degrees, slopes, offsets, and the upper limit of one product integral."""
    degrees: tuple[int, ...]
    slopes: tuple[Fraction, ...]
    offsets: tuple[Fraction, ...]
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(n) for n in self.degrees))
        object.__setattr__(self, "slopes", tuple(Fraction(b) for b in self.slopes))
        object.__setattr__(self, "offsets", tuple(Fraction(y) for y in self.offsets))
        object.__setattr__(self, "x", Fraction(self.x))
        r = len(self.degrees)
        if r < 1:
            raise ValueError("need at least one factor")
        if len(self.slopes) != r or len(self.offsets) != r:
            raise ValueError("degrees, slopes, offsets must have equal length")
        if any(n < 0 for n in self.degrees):
            raise ValueError("degrees must be >= 0")
        if any(b == 0 for b in self.slopes):
            raise ValueError("slopes must be nonzero")

    @property
    def r(self) -> int:
        return len(self.degrees)

    def permuted(self, sigma: Sequence[int]) -> "ProductIntegralSpec":
        """Spec with factors reordered by the permutation sigma of 0..r-1."""
        if sorted(sigma) != list(range(self.r)):
            raise ValueError("not a permutation of the factors")
        return ProductIntegralSpec(
            tuple(self.degrees[i] for i in sigma),
            tuple(self.slopes[i] for i in sigma),
            tuple(self.offsets[i] for i in sigma),
            self.x)

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees),
                "slopes": [str(b) for b in self.slopes],
                "offsets": [str(y) for y in self.offsets],
                "x": str(self.x)}


def product_integral_direct_poly(degrees, slopes, offsets) -> Polynomial:
    """The integral with symbolic upper limit: expand the product of shifted
    Bernoulli polynomials exactly and antidifferentiate (vanishes at 0)."""
    prod = Polynomial([1])
    for n, b, y in zip(degrees, slopes, offsets):
        prod = prod * bernoulli_poly(n).compose_affine(Fraction(b), Fraction(y))
    return prod.integrate_from_zero()


def product_integral_direct(spec: ProductIntegralSpec) -> Fraction:
    """Brute-force oracle: term-wise exact integration of the expanded product."""
    return product_integral_direct_poly(spec.degrees, spec.slopes, spec.offsets).eval(spec.x)


def _compositions(total: int, parts: int, caps: Sequence[int]):
    """All tuples j of length `parts`, sum `total`, with j_i <= caps[i]."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _compositions(total - first, parts - 1, caps[1:]):
            yield (first,) + rest


def product_integral_formula(spec: ProductIntegralSpec) -> Fraction:
    """Closed form of the product integral via iterated integration by parts.

    Exactly equal to product_integral_direct; the two share no code path.
    """
    degrees, slopes, offsets, x = spec.degrees, spec.slopes, spec.offsets, spec.x
    r = spec.r
    nr, br, yr = degrees[-1], slopes[-1], offsets[-1]
    head = list(zip(degrees[:-1], slopes[:-1], offsets[:-1]))
    mu = sum(degrees[:-1])

    # memoized Bernoulli values at the two evaluation points of each factor
    at_x: dict[tuple[int, int], Fraction] = {}
    at_0: dict[tuple[int, int], Fraction] = {}

    def val_x(l: int, m: int) -> Fraction:
        key = (l, m)
        if key not in at_x:
            b, y = (slopes[l], offsets[l])
            at_x[key] = bernoulli_poly_value(m, b * x + y)
        return at_x[key]

    def val_0(l: int, m: int) -> Fraction:
        key = (l, m)
        if key not in at_0:
            at_0[key] = bernoulli_poly_value(m, offsets[l])
        return at_0[key]

    nfact = [math.factorial(n) for n in degrees]
    total = Fraction(0)
    for a in range(mu + 1):
        sign = -1 if a % 2 else 1
        for js in _compositions(a, r - 1, [h[0] for h in head]):
            multinom = math.factorial(a)
            coef = Fraction(1)
            px, p0 = Fraction(1), Fraction(1)
            for l, (j, (n, b, _y)) in enumerate(zip(js, head)):
                multinom //= math.factorial(j)
                coef *= b ** j * Fraction(nfact[l], math.factorial(n - j))
                px *= val_x(l, n - j)
                p0 *= val_0(l, n - j)
            m_last = nr + a + 1
            coef *= Fraction(nfact[-1], math.factorial(m_last)) * br ** (-a - 1)
            px *= val_x(r - 1, m_last)
            p0 *= val_0(r - 1, m_last)
            total += sign * multinom * coef * (px - p0)
    return total


def permutation_invariance_check(spec: ProductIntegralSpec, sigma: Sequence[int]) -> bool:
    """True iff the closed formula gives the same value on the permuted spec."""
    return product_integral_formula(spec) == product_integral_formula(spec.permuted(sigma))


# ---------------------------------------------------------------------------
# Two-factor reciprocity and its specializations
# ---------------------------------------------------------------------------

def two_factor_reciprocity(n: int, m: int, b1, b2, y1, y2, x):
    """Both sides of the two-factor reciprocity:

      lhs = sum_{a=0}^{n} (-1)^a C(m+n+1, n-a) b1^a b2^(-a-1)
                B_{n-a}(b1 x + y1) B_{m+a+1}(b2 x + y2)
          - sum_{a=0}^{m} (-1)^a C(m+n+1, m-a) b2^a b1^(-a-1)
                B_{m-a}(b2 x + y2) B_{n+a+1}(b1 x + y1)

      rhs = (-1)^(m+1) / (b1^(m+1) b2^(n+1)) * sum_{a=0}^{m+n+1}
                (-1)^a C(m+n+1, a) b1^a b2^(m+n+1-a) B_{m+n+1-a}(y1) B_a(y2)

    Returns (lhs, rhs) exactly.
    """
    b1, b2, y1, y2, x = (Fraction(v) for v in (b1, b2, y1, y2, x))
    u1, u2 = b1 * x + y1, b2 * x + y2
    N = m + n + 1
    lhs = Fraction(0)
    for a in range(n + 1):
        lhs += (-1) ** a * math.comb(N, n - a) * b1 ** a * b2 ** (-a - 1) \
            * bernoulli_poly_value(n - a, u1) * bernoulli_poly_value(m + a + 1, u2)
    for a in range(m + 1):
        lhs -= (-1) ** a * math.comb(N, m - a) * b2 ** a * b1 ** (-a - 1) \
            * bernoulli_poly_value(m - a, u2) * bernoulli_poly_value(n + a + 1, u1)
    rhs = Fraction(0)
    for a in range(N + 1):
        rhs += (-1) ** a * math.comb(N, a) * b1 ** a * b2 ** (N - a) \
            * bernoulli_poly_value(N - a, y1) * bernoulli_poly_value(a, y2)
    rhs *= Fraction((-1) ** (m + 1), 1) / (b1 ** (m + 1) * b2 ** (n + 1))
    return lhs, rhs


def two_factor_constant_sum_poly(n: int, m: int, b1, b2, y1, y2) -> Polynomial:
    """The combination sum_{a} (-1)^a C(m+n+1, a) b1^a b2^(m+n+1-a)
    B_{m+n+1-a}(b1 x + y1) B_a(b2 x + y2) as a polynomial in x.

    All non-constant coefficients vanish identically; returning the whole
    polynomial lets callers verify that rather than assume it.
    """
    b1, b2, y1, y2 = (Fraction(v) for v in (b1, b2, y1, y2))
    N = m + n + 1
    total = Polynomial()
    for a in range(N + 1):
        term = bernoulli_poly(N - a).compose_affine(b1, y1) \
            * bernoulli_poly(a).compose_affine(b2, y2)
        total = total + term * ((-1) ** a * math.comb(N, a) * b1 ** a * b2 ** (N - a))
    return total


def equal_slope_reciprocity(n: int, m: int, y1, y2, x):
    """Unit-slope specialization with shifted arguments:

      lhs = sum_{a=0}^{n} (-1)^a C(m+n+1, n-a) B_{n-a}(x+y1) B_{m+a+1}(x+y2)
          - sum_{a=0}^{m} (-1)^a C(m+n+1, m-a) B_{m-a}(x+y2) B_{n+a+1}(x+y1)
      rhs = (-1)^m (m+n+1)(y2-y1) B_{m+n}(y1-y2) + (-1)^m (m+n) B_{m+n+1}(y1-y2)

    Returns (lhs, rhs).
    """
    y1, y2, x = Fraction(y1), Fraction(y2), Fraction(x)
    N = m + n + 1
    lhs = Fraction(0)
    for a in range(n + 1):
        lhs += (-1) ** a * math.comb(N, n - a) \
            * bernoulli_poly_value(n - a, x + y1) * bernoulli_poly_value(m + a + 1, x + y2)
    for a in range(m + 1):
        lhs -= (-1) ** a * math.comb(N, m - a) \
            * bernoulli_poly_value(m - a, x + y2) * bernoulli_poly_value(n + a + 1, x + y1)
    d = y1 - y2
    rhs = (-1) ** m * ((m + n + 1) * (y2 - y1) * bernoulli_poly_value(m + n, d)
                       + (m + n) * bernoulli_poly_value(m + n + 1, d))
    return lhs, rhs


def reflective_slope_integral(degrees, offsets, q) -> Fraction:
    """The product integral with slopes (1 - 2 y_l)/q and upper limit q, where
    each factor satisfies B(b_l q - y_l) = B(1 - y_l) = (-1)^deg B(y_l).

    For even total degree + 1 the integral is exactly 0; otherwise it reduces
    to a closed double sum in the offset values alone.  Returns the unscaled
    integral value (no factorial prefactor), so it can be compared directly
    against product_integral_direct.
    """
    degrees = tuple(int(n) for n in degrees)
    offsets = tuple(Fraction(y) for y in offsets)
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if any(y == Fraction(1, 2) for y in offsets):
        raise ValueError("offset 1/2 gives a zero slope")
    if (sum(degrees) + 1) % 2 == 0:
        return Fraction(0)
    r = len(degrees)
    nr, yr = degrees[-1], offsets[-1]
    head = list(zip(degrees[:-1], offsets[:-1]))
    mu = sum(degrees[:-1])
    total = Fraction(0)
    for a in range(mu + 1):
        inner = Fraction(0)
        for js in _compositions(a, r - 1, [h[0] for h in head]):
            multinom = math.factorial(a)
            term = Fraction(1)
            for j, (n, y) in zip(js, head):
                multinom //= math.factorial(j)
                term *= (1 - 2 * y) ** j * bernoulli_poly_value(n - j, y) \
                    / math.factorial(n - j)
            inner += multinom * term
        total += (-1) ** a * (1 - 2 * yr) ** (-a - 1) \
            * bernoulli_poly_value(nr + a + 1, yr) / math.factorial(nr + a + 1) * inner
    scale = math.prod(math.factorial(n) for n in degrees)
    return -2 * q * total * scale


# ---------------------------------------------------------------------------
# Character-twisted two-factor reciprocity
# ---------------------------------------------------------------------------

def _gen_value(chi: DirichletCharacter, n: int, point: Fraction) -> CyclotomicNumber:
    poly = gen_bernoulli_poly(chi, n)
    val = poly.eval(point)
    return val if isinstance(val, CyclotomicNumber) else CyclotomicNumber._coerce(val)


def char_two_factor_reciprocity(n: int, m: int, b1, b2, y1, y2, x,
                                chi1: DirichletCharacter, chi2: DirichletCharacter):
    """The two-factor reciprocity with character-twisted Bernoulli polynomials
    in place of the plain ones; requires n, m >= 1 (the degree of the twisted
    polynomial of index n is at most n - 1) and non-principal primitive
    characters.  Returns (lhs, rhs) as exact cyclotomic numbers.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    for chi in (chi1, chi2):
        if chi.is_principal() or not chi.is_primitive():
            raise ValueError("characters must be non-principal and primitive")
    b1, b2, y1, y2, x = (Fraction(v) for v in (b1, b2, y1, y2, x))
    u1, u2 = b1 * x + y1, b2 * x + y2
    N = m + n + 1
    lhs = CyclotomicNumber.zero(1)
    for a in range(n + 1):
        lhs = lhs + (-1) ** a * math.comb(N, n - a) * b1 ** a * b2 ** (-a - 1) \
            * _gen_value(chi1, n - a, u1) * _gen_value(chi2, m + a + 1, u2)
    for a in range(m + 1):
        lhs = lhs - (-1) ** a * math.comb(N, m - a) * b2 ** a * b1 ** (-a - 1) \
            * _gen_value(chi2, m - a, u2) * _gen_value(chi1, n + a + 1, u1)
    rhs = CyclotomicNumber.zero(1)
    for a in range(N + 1):
        rhs = rhs + (-1) ** a * math.comb(N, a) * b1 ** a * b2 ** (N - a) \
            * _gen_value(chi1, N - a, y1) * _gen_value(chi2, a, y2)
    rhs = rhs * ((-1) ** (m + 1) / (b1 ** (m + 1) * b2 ** (n + 1)))
    return lhs, rhs


# ---------------------------------------------------------------------------
# The pair-convolution polynomial identity used by the unit-slope reduction
# ---------------------------------------------------------------------------

def bernoulli_pair_identity_polys(p: int, y: Fraction) -> tuple[Polynomial, Polynomial]:
    """For fixed rational y, both sides of

        sum_{a=0}^{p} C(p, a) B_{p-a}(x) B_a(y)
            = p (x + y - 1) B_{p-1}(x + y) - (p - 1) B_p(x + y)

    as exact polynomials in x (p >= 1).  Comparing them for deg+1 distinct y
    is equivalent to the two-variable polynomial identity.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    y = Fraction(y)
    lhs = Polynomial()
    for a in range(p + 1):
        lhs = lhs + bernoulli_poly(p - a) * (math.comb(p, a) * bernoulli_poly_value(a, y))
    rhs = Polynomial([y - 1, 1]) * bernoulli_poly(p - 1).compose_affine(Fraction(1), y) * p \
        - bernoulli_poly(p).compose_affine(Fraction(1), y) * (p - 1)
    return lhs, rhs
