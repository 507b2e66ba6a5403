"""Dirichlet characters mod k with exact cyclotomic values.

A character is stored intrinsically mod k as an exponent tuple over a fixed
generator set of the unit group (Z/k)^*, built per prime power by CRT:

  * odd p^a: the smallest primitive root of p^a (one cyclic component);
  * 2: trivial; 4: the generator -1 (i.e. 3); 2^a for a >= 3: the pair
    {-1, 5} (components of order 2 and 2^(a-2)).

The canonical label is the dot-joined exponent tuple in this fixed generator
order ("0" for the empty tuple), so enumeration order and labels are
deterministic and reproducible.  Values live in Q(zeta_e) where e is the
order of the character; conductor and primitivity are queried properties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exactnum import CyclotomicNumber, cyclo_root, euler_phi, factorize, divisors

__all__ = [
    "DirichletCharacter",
    "enumerate_characters",
    "character_from_label",
    "char_eval",
    "conductor",
    "is_primitive",
    "parity",
    "conjugate",
]


# ---------------------------------------------------------------------------
# Unit group structure (shared per modulus)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Component:
    generator: int       # lifted generator mod k (== 1 mod every other prime power)
    order: int           # multiplicative order of the generator


def _smallest_primitive_root(q: int, phi_q: int) -> int:
    prime_factors = [p for p, _ in factorize(phi_q)]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi_q // p, q) != 1 for p in prime_factors):
            return g
    raise ValueError(f"no primitive root mod {q}")


def _crt_lift(residue: int, q: int, k: int) -> int:
    """x mod k with x = residue (mod q) and x = 1 (mod k/q); gcd(q, k/q) = 1."""
    rest = k // q
    if rest == 1:
        return residue % k
    inv = pow(q, -1, rest)
    return (residue + q * ((1 - residue) * inv % rest)) % k


@lru_cache(maxsize=None)
def _unit_group(k: int) -> tuple[_Component, ...]:
    comps: list[_Component] = []
    for p, a in factorize(k):
        q = p ** a
        if p == 2:
            if a == 1:
                continue
            if a == 2:
                comps.append(_Component(_crt_lift(3, q, k), 2))
            else:
                comps.append(_Component(_crt_lift(q - 1, q, k), 2))
                comps.append(_Component(_crt_lift(5, q, k), 2 ** (a - 2)))
        else:
            g = _smallest_primitive_root(q, euler_phi(q))
            comps.append(_Component(_crt_lift(g, q, k), euler_phi(q)))
    return tuple(comps)


@lru_cache(maxsize=None)
def _unit_logs(k: int) -> dict[int, tuple[int, ...]]:
    """Discrete log table: unit n mod k -> exponent tuple over the generators."""
    comps = _unit_group(k)
    logs = {1 % k: (0,) * len(comps)}
    # breadth-first closure: multiply known units by each generator
    frontier = [1 % k]
    while frontier:
        nxt = []
        for n in frontier:
            t = logs[n]
            for i, comp in enumerate(comps):
                m = (n * comp.generator) % k
                if m not in logs:
                    t2 = list(t)
                    t2[i] = (t2[i] + 1) % comp.order
                    logs[m] = tuple(t2)
                    nxt.append(m)
        frontier = nxt
    assert len(logs) == euler_phi(k)
    return logs


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

class DirichletCharacter:
    """Character mod k given by its exponents on the fixed generator set.

    chi(generator_i) = zeta^(exponents_i) where zeta generates the order-s_i
    value group of generator i.  chi(n) = 0 iff gcd(n, k) > 1.
    """

    __slots__ = ("modulus", "exponents", "_values", "_conductor")

    def __init__(self, modulus: int, exponents) -> None:
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        comps = _unit_group(modulus)
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != len(comps):
            raise ValueError(f"modulus {modulus} needs {len(comps)} exponents")
        exponents = tuple(e % c.order for e, c in zip(exponents, comps))
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "_values", None)
        object.__setattr__(self, "_conductor", None)

    def __setattr__(self, *a):
        raise AttributeError("DirichletCharacter is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, DirichletCharacter)
                and self.modulus == other.modulus
                and self.exponents == other.exponents)

    def __hash__(self) -> int:
        return hash((self.modulus, self.exponents))

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.modulus}, label={self.label!r})"

    # -- structure ----------------------------------------------------------

    @property
    def label(self) -> str:
        return ".".join(str(e) for e in self.exponents) if self.exponents else "0"

    @property
    def order(self) -> int:
        """Order of the character in the dual group (lcm of component orders)."""
        e = 1
        for comp, exp in zip(_unit_group(self.modulus), self.exponents):
            e = math.lcm(e, comp.order // math.gcd(comp.order, exp))
        return e

    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    # -- evaluation ----------------------------------------------------------

    def _value_table(self) -> list:
        table = self._values
        if table is None:
            k, e = self.modulus, self.order
            zero = CyclotomicNumber.zero(e)
            table = [zero] * k
            if k == 1:
                table = [CyclotomicNumber.one(1)]
            else:
                comps = _unit_group(k)
                for n, logs in _unit_logs(k).items():
                    # phase of chi(n) as a power of zeta_e
                    j = 0
                    for comp, exp, t in zip(comps, self.exponents, logs):
                        g = math.gcd(comp.order, exp)
                        o_i = comp.order // g          # order of chi(generator_i)
                        j += t * (exp // g) * (e // o_i)
                    table[n] = cyclo_root(e, j % e)
            object.__setattr__(self, "_values", table)
        return table

    def __call__(self, n: int) -> CyclotomicNumber:
        """chi(n): exact root of unity in Q(zeta_order), 0 off the units."""
        return self._value_table()[n % self.modulus]

    # -- derived data ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        """Least f | k such that chi is trivial on units = 1 (mod f)."""
        f = self._conductor
        if f is None:
            k = self.modulus
            one = CyclotomicNumber.one(1)
            for cand in divisors(k):
                if all(self(n) == one
                       for n in range(1, k + 1)
                       if math.gcd(n, k) == 1 and n % cand == 1 % cand):
                    f = cand
                    break
            object.__setattr__(self, "_conductor", f)
        return f

    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def parity(self) -> int:
        """chi(-1) as +1 or -1 (+1 for k <= 2)."""
        if self.modulus <= 2:
            return 1
        v = self(self.modulus - 1)
        return 1 if v == 1 else -1

    def conjugate(self) -> "DirichletCharacter":
        comps = _unit_group(self.modulus)
        return DirichletCharacter(
            self.modulus,
            tuple((-e) % c.order for e, c in zip(self.exponents, comps)))

    def restrict_to_conductor(self) -> "DirichletCharacter":
        """The character mod conductor(chi) inducing chi (agrees on units of k)."""
        f, k = self.conductor, self.modulus
        for psi in enumerate_characters(f):
            if all(psi(n) == self(n)
                   for n in range(1, k + 1) if math.gcd(n, k) == 1):
                return psi
        raise AssertionError("conductor restriction must exist")

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "conductor": self.conductor,
            "parity": self.parity,
            "order": self.order,
            "exponents": list(self.exponents),
            "label": self.label,
        }


@lru_cache(maxsize=None)
def _all_characters(k: int) -> tuple[DirichletCharacter, ...]:
    comps = _unit_group(k)
    chars = []

    def rec(prefix):
        if len(prefix) == len(comps):
            chars.append(DirichletCharacter(k, tuple(prefix)))
            return
        for e in range(comps[len(prefix)].order):
            rec(prefix + [e])

    rec([])
    return tuple(chars)


def enumerate_characters(k: int, which: str = "all") -> list[DirichletCharacter]:
    """Characters mod k in canonical (lexicographic exponent) order.

    which: "all" (phi(k) characters), "primitive", or "nonprincipal_primitive".
    """
    chars = list(_all_characters(k))
    if which == "all":
        return chars
    if which == "primitive":
        return [c for c in chars if c.is_primitive()]
    if which == "nonprincipal_primitive":
        return [c for c in chars if c.is_primitive() and not c.is_principal()]
    raise ValueError(f"unknown filter {which!r}")


def character_from_label(k: int, label: str) -> DirichletCharacter:
    if not _unit_group(k):
        return DirichletCharacter(k, ())
    return DirichletCharacter(k, tuple(int(t) for t in label.strip().split(".")))


# -- operation-style wrappers (the class methods are the primary surface) ----

def char_eval(chi: DirichletCharacter, n: int) -> CyclotomicNumber:
    return chi(n)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def is_primitive(chi: DirichletCharacter) -> bool:
    return chi.is_primitive()


def parity(chi: DirichletCharacter) -> int:
    return chi.parity


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.conjugate()
