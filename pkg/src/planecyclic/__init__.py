"""Cyclic automorphisms of smooth plane curves.

Enumerates the cyclic group actions a smooth plane curve of degree d >= 4
can carry, builds the parameterized normal form of each admissible type,
deduplicates the types into classification tables, and verifies the
maximal-order loci and their full automorphism groups with independent
finite-field oracles.
"""

from .canonical import TypeOrbit, canonicalize, dedupe, orbit, permutation_images, unit_orbit
from .congruence import (
    CongruenceSystem,
    GammaFilter,
    Residue,
    divisor_candidates,
    divisors,
    solve_system,
)
from .groups import (
    EmptyLocus,
    GroupDescriptor,
    SpecialLocusRecord,
    closure,
    element_order,
    large_locus,
    preserves_curve,
    verify_presentation,
    very_large_records,
)
from .normal_form import (
    Monomial,
    NormalForm,
    SSetKind,
    build_form,
    character,
    expected_support,
    invariant_monomials,
    render,
    s_set,
    support,
    to_json_dict,
)
from .tables import ClassRow, DiffReport, GoldenRow, classify, golden, golden_check
from .types_enum import (
    CaseId,
    CyclicType,
    TypeCandidate,
    case_system,
    enumerate_candidates,
)
from .verification import (
    LocusStatus,
    LocusVerdict,
    SpecializedCurve,
    diagonal_automorphisms,
    is_smooth,
    locus_nonempty,
    sample_specialization,
)

__version__ = "0.1.0"

__all__ = [
    "CaseId",
    "ClassRow",
    "CongruenceSystem",
    "CyclicType",
    "DiffReport",
    "EmptyLocus",
    "GammaFilter",
    "GoldenRow",
    "GroupDescriptor",
    "LocusStatus",
    "LocusVerdict",
    "Monomial",
    "NormalForm",
    "Residue",
    "SSetKind",
    "SpecialLocusRecord",
    "SpecializedCurve",
    "TypeCandidate",
    "TypeOrbit",
    "build_form",
    "canonicalize",
    "case_system",
    "character",
    "classify",
    "closure",
    "dedupe",
    "diagonal_automorphisms",
    "divisor_candidates",
    "divisors",
    "element_order",
    "enumerate_candidates",
    "expected_support",
    "golden",
    "golden_check",
    "invariant_monomials",
    "is_smooth",
    "large_locus",
    "locus_nonempty",
    "orbit",
    "permutation_images",
    "preserves_curve",
    "render",
    "s_set",
    "sample_specialization",
    "solve_system",
    "support",
    "to_json_dict",
    "unit_orbit",
    "verify_presentation",
    "very_large_records",
]
