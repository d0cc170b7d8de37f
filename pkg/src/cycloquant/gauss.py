"""Quadratic Gauss sums and the framing constants built from them.

Everything here lives in a cyclotomic quotient ring: quantum integers,
the two quadratic sums S1 and S2 attached to an odd level r, the framing
correction constants eta_plus / eta_minus, and their ratio G_r whose
powers show up in the periodicity congruences.
"""

from __future__ import annotations

import dataclasses
import functools

from .rings import (
    CycloElem,
    CycloFraction,
    LaurentPoly,
    galois_conjugate,
    invert,
    prime_factors,
    reduce,
)

# ---------------------------------------------------------------------------
# quantum integers


def quantum_int_laurent(n: int) -> LaurentPoly:
    """[n] as a Laurent polynomial: sum of A^(3(n-1-2j)) for j = 0..n-1."""
    if n < 0:
        raise ValueError("quantum integer index must be nonnegative")
    return LaurentPoly([(3 * (n - 1 - 2 * j), 1) for j in range(n)])


def quantum_int(n: int, order: int) -> CycloElem:
    """[n] reduced into the cyclotomic quotient of the given order."""
    return reduce(quantum_int_laurent(n), order)


# ---------------------------------------------------------------------------
# quadratic sums


@dataclasses.dataclass(frozen=True)
class GaussSumSpec:
    """A quadratic exponential sum: sum of A^(multiplier * j^2), j = 0..length-1."""

    multiplier: int
    length: int
    order: int

    def compute(self) -> CycloElem:
        return gauss_sum(self.multiplier, self.length, self.order)


def gauss_sum(a: int, n: int, order: int) -> CycloElem:
    """Sum of A^(a * j^2) for j = 0..n-1, in the quotient of the given order."""
    if n < 0:
        raise ValueError("summation length must be nonnegative")
    terms: dict[int, int] = {}
    for j in range(n):
        e = (a * j * j) % order
        terms[e] = terms.get(e, 0) + 1
    return reduce(LaurentPoly(terms), order)


@functools.cache
def s1(r: int) -> CycloElem:
    """Sum of A^(6 k^2), k = 0..r-1, in the order-3r quotient."""
    _require_level(r)
    return gauss_sum(6, r, 3 * r)


@functools.cache
def s2(r: int) -> CycloElem:
    """Sum of A^(2 k^2), k = 0..3r-1, in the order-3r quotient."""
    _require_level(r)
    return gauss_sum(2, 3 * r, 3 * r)


def _require_level(r: int) -> None:
    if r < 5 or r % 2 == 0:
        raise ValueError("level must be an odd integer >= 5")


# ---------------------------------------------------------------------------
# framing constants


@functools.cache
def eta_plus(r: int) -> CycloFraction:
    """Normalization constant for positive-definite surgery presentations.

    eta_plus = -A^-18 * S1 * S2 / (A^3 - A^-3), computed exactly; the
    denominator is a unit once the primes dividing 3r are inverted.
    """
    _require_level(r)
    k = 3 * r
    quantum_two = reduce(LaurentPoly({3: 1, -3: -1}), k)
    u = invert(CycloFraction(quantum_two), allowed_primes=prime_factors(k))
    lead = CycloFraction(CycloElem.a_power(k, (-18) % k))
    return -lead * s1(r) * s2(r) * u


@functools.cache
def eta_minus(r: int) -> CycloFraction:
    """Mirror constant: the image of eta_plus under A -> A^-1."""
    return galois_conjugate(eta_plus(r), -1)


# ---------------------------------------------------------------------------
# the ratio G_r


@dataclasses.dataclass(frozen=True)
class GrResult:
    """G_r together with the sign relating its two defining expressions.

    value    -- A^-36 * S1^2 * S2^2 / (3 r^2)
    epsilon  -- the sign making value == epsilon * (eta_plus / eta_minus)
    """

    value: CycloFraction
    epsilon: int


@functools.cache
def g_r(r: int) -> GrResult:
    _require_level(r)
    k = 3 * r
    lead = CycloElem.a_power(k, (-36) % k)
    value = CycloFraction(lead * s1(r) ** 2 * s2(r) ** 2, 3 * r * r)
    ratio = eta_plus(r) / eta_minus(r)
    if value == ratio:
        epsilon = 1
    elif value == -ratio:
        epsilon = -1
    else:  # pragma: no cover - would indicate an arithmetic bug
        raise ArithmeticError("G_r does not match the eta ratio up to sign")
    return GrResult(value, epsilon)


if __name__ == "__main__":
    print("[3] =", quantum_int_laurent(3))
    print("S1(5) =", s1(5))
    print("S2(5) =", s2(5))
    res = g_r(5)
    print("G_5 =", res.value, " epsilon =", res.epsilon)
    print("|G_5|^2 =", res.value * galois_conjugate(res.value, -1))
