"""The abelian surgery invariant Z_N computed from linking matrices.

Z_N depends on a surgery presentation only through its linking matrix B:

    Z_N = N^(-b1/2) * bracket(B) * G_N^(-sigma_plus) * conj(G_N)^(-sigma_minus)

where bracket(B) is the exponential sum of the quadratic form l -> l^T B l
over (Z/N)^m, G_N is the quadratic Gauss sum of length N, and
(sigma_plus, sigma_minus, b1) is the exact inertia of B. For odd N the
inverse of G_N is conj(G_N)/N, so everything stays inside the
cyclotomic quotient with only powers of N in denominators. The half
power of N contributed by b1 is carried symbolically.

bracket_sum enumerates all N^m vectors and is the semantic definition;
moo_fast diagonalizes the form over each prime-power factor of N and
multiplies one-variable sums instead, falling back to enumeration for
any factor where no unit pivot can be made.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from .gauss import gauss_sum
from .links import LinkingMatrix, signature_counts
from .rings import CycloElem, CycloFraction, LaurentPoly, reduce

# ---------------------------------------------------------------------------
# the value type


@dataclasses.dataclass(frozen=True)
class MooValue:
    """An exact invariant value: `value * N^(-half_power/2)`.

    Even powers of sqrt(N) are folded into the fraction, so half_power
    is always 0 or 1 after construction; it equals b1 mod 2 for values
    coming from a linking matrix with nullity b1.
    """

    value: CycloFraction
    half_power: int = 0

    def __post_init__(self) -> None:
        if self.half_power < 0:
            raise ValueError("half_power must be nonnegative")
        value, s = self.value, self.half_power
        n = value.order
        while s >= 2:
            value = CycloFraction(value.num, value.den * n)
            s -= 2
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "half_power", s)

    @property
    def order(self) -> int:
        return self.value.order

    def _coerced(self, other):
        if isinstance(other, MooValue):
            return other
        if isinstance(other, (CycloFraction, CycloElem, int)):
            return MooValue(self.value._coerced(other), 0)
        return None

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return MooValue(self.value * other.value, self.half_power + other.half_power)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.value == other.value and self.half_power == other.half_power

    def __hash__(self):
        return hash((self.value, self.half_power))

    def galois(self, t: int) -> "MooValue":
        # the formal sqrt(N) is fixed; only the ring part moves
        return MooValue(self.value.galois(t), self.half_power)

    def to_complex(self, which_root: int = 1) -> complex:
        return self.value.to_complex(which_root) * self.order ** (-self.half_power / 2)

    def __str__(self) -> str:
        if self.half_power == 0:
            return str(self.value)
        return f"{self.value} * {self.order}^(-1/2)"


# ---------------------------------------------------------------------------
# the defining sum


def _as_matrix(matrix: LinkingMatrix | Iterable[Iterable[int]]) -> LinkingMatrix:
    if isinstance(matrix, LinkingMatrix):
        return matrix
    return LinkingMatrix.from_rows(matrix)


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError("the invariant is defined for odd N >= 3")


def bracket_sum(matrix: LinkingMatrix | Iterable[Iterable[int]], n: int) -> CycloElem:
    """Sum of A^(l^T B l) over all l in (Z/N)^m, exactly."""
    _require_odd(n)
    b = _as_matrix(matrix)
    m = b.size
    rows = [[x % n for x in row] for row in b.rows()]
    counts = [0] * n

    def descend(i: int, lin: list[int], val: int) -> None:
        if i == m:
            counts[val] += 1
            return
        for x in range(n):
            new_val = (val + rows[i][i] * x * x + 2 * x * lin[i]) % n
            new_lin = [(lin[j] + rows[i][j] * x) % n for j in range(m)]
            descend(i + 1, new_lin, new_val)

    descend(0, [0] * m, 0)
    return reduce(LaurentPoly({e: c for e, c in enumerate(counts) if c}), n)


def _assemble(bracket: CycloElem, matrix: LinkingMatrix, n: int) -> MooValue:
    sig = signature_counts(matrix)
    g = gauss_sum(1, n, n)
    g_conj = g.galois(-1)
    num = bracket * g_conj**sig.sigma_plus * g**sig.sigma_minus
    den = n ** (sig.sigma_plus + sig.sigma_minus)
    value = CycloFraction(num, den * n ** (sig.nullity // 2))
    return MooValue(value, sig.nullity % 2)


def moo_invariant(matrix: LinkingMatrix | Iterable[Iterable[int]], n: int) -> MooValue:
    """The invariant by direct enumeration of the defining sum."""
    _require_odd(n)
    b = _as_matrix(matrix)
    return _assemble(bracket_sum(b, n), b, n)


# ---------------------------------------------------------------------------
# fast path: CRT plus symmetric elimination


def _prime_power_factors(n: int) -> list[int]:
    factors = []
    d, rest = 2, n
    while d * d <= rest:
        if rest % d == 0:
            q = 1
            while rest % d == 0:
                rest //= d
                q *= d
            factors.append(q)
        d += 1
    if rest > 1:
        factors.append(rest)
    return factors


def _diagonalize_mod_q(rows: list[list[int]], q: int, p: int) -> tuple[list[int], list[list[int]]]:
    """Symmetric elimination of the form mod q = p^e.

    Returns diagonal coefficients (each with a unit pivot) and a
    residual block, all of whose entries are divisible by p, on which
    no unit pivot exists.
    """
    c = [[x % q for x in row] for row in rows]
    diag: list[int] = []
    while c:
        m = len(c)
        pivot = next((i for i in range(m) if c[i][i] % p != 0), None)
        if pivot is None:
            off = next(
                ((i, j) for i in range(m) for j in range(i + 1, m) if c[i][j] % p != 0),
                None,
            )
            if off is None:
                return diag, c
            i, j = off
            # substituting l_i -> l_i + l_j makes position (i,i) a unit:
            # it becomes c_ii + 2 c_ij + c_jj with only 2 c_ij a unit
            for k in range(m):
                c[i][k] = (c[i][k] + c[j][k]) % q
            for k in range(m):
                c[k][i] = (c[k][i] + c[k][j]) % q
            pivot = i
        a = c[pivot][pivot]
        inv_a = pow(a, -1, q)
        rest = [k for k in range(m) if k != pivot]
        new_c = [
            [(c[r][s] - c[pivot][r] * c[pivot][s] * inv_a) % q for s in rest]
            for r in rest
        ]
        diag.append(a)
        c = new_c
    return diag, []


def _block_bracket(rows: list[list[int]], q: int, scale: int, n: int) -> CycloElem:
    # brute-force sum over (Z/q)^k of A^(scale * l^T C l) in the order-n ring
    k = len(rows)
    counts = [0] * n

    def descend(i: int, lin: list[int], val: int) -> None:
        if i == k:
            counts[val] += 1
            return
        for x in range(q):
            new_val = (val + scale * (rows[i][i] * x * x + 2 * x * lin[i])) % n
            new_lin = [(lin[j] + rows[i][j] * x) % q for j in range(k)]
            descend(i + 1, new_lin, new_val)

    descend(0, [0] * k, 0)
    return reduce(LaurentPoly({e: c for e, c in enumerate(counts) if c}), n)


def _bracket_fast(matrix: LinkingMatrix, n: int) -> CycloElem:
    rows = matrix.rows()
    if matrix.size == 0:
        return CycloElem.one(n)
    total = CycloElem.one(n)
    for q in _prime_power_factors(n):
        p = _smallest_prime_divisor(q)
        cofactor = n // q
        # idempotent: 1 mod q, 0 mod n/q
        e_q = (cofactor * pow(cofactor, -1, q)) % n if cofactor > 1 else 1
        diag, residual = _diagonalize_mod_q(rows, q, p)
        part = CycloElem.one(n)
        for a in diag:
            terms: dict[int, int] = {}
            for x in range(q):
                e = (e_q * a * x * x) % n
                terms[e] = terms.get(e, 0) + 1
            part = part * reduce(LaurentPoly(terms), n)
        if residual:
            part = part * _block_bracket(residual, q, e_q, n)
        total = total * part
    return total


def _smallest_prime_divisor(q: int) -> int:
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def moo_fast(matrix: LinkingMatrix | Iterable[Iterable[int]], n: int) -> MooValue:
    """Same value as moo_invariant, via per-prime-power diagonalization."""
    _require_odd(n)
    b = _as_matrix(matrix)
    return _assemble(_bracket_fast(b, n), b, n)


if __name__ == "__main__":
    print("Z_3(S^3 as empty surgery) =", moo_invariant([], 3))
    print("Z_3([[1]]) =", moo_invariant([[1]], 3))
    print("Z_3([[2]]) =", moo_invariant([[2]], 3))
    print("Z_5([[0,1],[1,0]]) =", moo_invariant([[0, 1], [1, 0]], 5))
    print("Z_5 fast    same    =", moo_fast([[0, 1], [1, 0]], 5))
    print("Z_5([[0]]) =", moo_invariant([[0]], 5))
