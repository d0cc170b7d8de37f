"""Exact quantum invariants of links and 3-manifolds in cyclotomic rings."""

from .criteria import (
    LENS_SPACE_2_1_LEVEL_5,
    ObstructionVerdict,
    Witness,
    check_cor_1_2,
    check_thm_1_1,
    check_thm_4_1,
    check_thm_5_1,
    powers_of_A_char0,
)
from .gauss import (
    GaussSumSpec,
    GrResult,
    eta_minus,
    eta_plus,
    g_r,
    gauss_sum,
    quantum_int,
    quantum_int_laurent,
    s1,
    s2,
)
from .links import (
    BraidWord,
    FramedBraidLink,
    LinkingMatrix,
    RecursionBudgetExceeded,
    SigTriple,
    StrongPeriodicityResult,
    closure_components,
    j_invariant,
    lift_component_rotation,
    linking_matrix,
    periodic_lift,
    signature_counts,
    strong_periodicity_check,
)
from .moo import MooValue, bracket_sum, moo_fast, moo_invariant
from .rings import (
    A,
    ONE,
    CycloElem,
    CycloFraction,
    DenominatorNotInvertibleError,
    LaurentPoly,
    ModCycloElem,
    NotAUnitError,
    OrderMismatchError,
    cyclotomic_poly,
    galois_conjugate,
    ideal_gcd_poly,
    ideal_membership_cyclo,
    invert,
    laurent_ideal_membership,
    parse_laurent,
    parse_ring_element,
    reduce,
    reduce_mod_p,
    to_complex,
)

__all__ = [
    "A",
    "ONE",
    "BraidWord",
    "CycloElem",
    "CycloFraction",
    "DenominatorNotInvertibleError",
    "FramedBraidLink",
    "GaussSumSpec",
    "GrResult",
    "LENS_SPACE_2_1_LEVEL_5",
    "LaurentPoly",
    "LinkingMatrix",
    "ModCycloElem",
    "MooValue",
    "NotAUnitError",
    "ObstructionVerdict",
    "OrderMismatchError",
    "RecursionBudgetExceeded",
    "SigTriple",
    "StrongPeriodicityResult",
    "Witness",
    "bracket_sum",
    "check_cor_1_2",
    "check_thm_1_1",
    "check_thm_4_1",
    "check_thm_5_1",
    "closure_components",
    "cyclotomic_poly",
    "eta_minus",
    "eta_plus",
    "g_r",
    "galois_conjugate",
    "gauss_sum",
    "ideal_gcd_poly",
    "ideal_membership_cyclo",
    "invert",
    "j_invariant",
    "laurent_ideal_membership",
    "lift_component_rotation",
    "linking_matrix",
    "moo_fast",
    "moo_invariant",
    "parse_laurent",
    "parse_ring_element",
    "periodic_lift",
    "powers_of_A_char0",
    "quantum_int",
    "quantum_int_laurent",
    "reduce",
    "reduce_mod_p",
    "s1",
    "s2",
    "signature_counts",
    "strong_periodicity_check",
    "to_complex",
]
