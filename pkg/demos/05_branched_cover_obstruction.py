"""
Ruling out branched cyclic covers
=================================

The headline application: the lens space L(2,1) is not a p-fold
cyclic branched cover of the 3-sphere along any knot, for
p in {11, 19, 29, 31}. The argument runs entirely inside the
level-5 quotient ring. If a manifold were such a cover, its
invariant would have to equal +-A^s G_5^alpha modulo p for some
exponents; an exhaustive search over that finite candidate set comes
up empty for all four primes.
"""

from cycloquant import (
    LENS_SPACE_2_1_LEVEL_5,
    check_cor_1_2,
    check_thm_1_1,
    cyclotomic_poly,
    g_r,
    invert,
    powers_of_A_char0,
)

# The ambient ring: A is a primitive 15th root of unity.
print("working modulo Phi_15 =", cyclotomic_poly(15))

# In this quotient the powers of A repeat with period 15; the reduced
# forms of A^8 ... A^14 are the nontrivial table entries.
for s, elem in enumerate(powers_of_A_char0(5)):
    print(f"  A^{s} = {elem}")

# The recorded level-5 invariant of L(2,1) is a unit of the quotient
# ring, so congruence questions about it are meaningful prime by prime.
value = LENS_SPACE_2_1_LEVEL_5
print("I_5(L(2,1)) =", value)
print("it is a unit with inverse", invert(value.num))

# The candidate set is built from the sign unit G_5.
print("G_5 =", g_r(5).value, "with epsilon =", g_r(5).epsilon)

# For each prime, the cover test searches every candidate +-A^s G^alpha
# and reports whether the congruence can be satisfied.
for p in (11, 19, 29, 31):
    verdict = check_cor_1_2(value, 5, p)
    status = "CONSISTENT" if verdict.satisfied else "OBSTRUCTED"
    print(f"p = {p}: {status} -> L(2,1) is not the {p}-fold cyclic branched cover")

# The same machinery answers the periodic-manifold question. A pair
# built to satisfy the congruence exactly (the 11th power of the
# quotient value times a power of the sign unit) is reported
# consistent, with the witness exponents attached.
built = value**11 * (-g_r(5).value)
verdict = check_thm_1_1(built, value, 5, 11)
print("built periodic pair:", "CONSISTENT" if verdict.satisfied else "OBSTRUCTED",
      "with witness", verdict.witness)
