"""Exact Schur-ring computations over cyclic groups, Z and subgroups of Q."""

from .ringcore import (
    INFINITE_CYCLIC,
    RATIONAL,
    FiniteCyclic,
    GroupContext,
    RingElement,
    apply_function,
    coefficient_complex,
    freshman,
    hadamard,
    linear_combine,
    monomial,
    multiply,
    one,
    simple_quantity,
    star,
    support,
    zero,
)
from .schurmod import (
    Partition,
    Span,
    Verdict,
    class_of,
    decompose_span,
    is_primitive,
    is_sset,
    membership_test,
    validate_partition,
)
from .schurring import (
    SchurRing,
    StructureTable,
    Subgroup,
    generated_subgroup,
    group_ring,
    orbit_ring,
    restrict,
    stabilizer,
    structure_constants,
    subgroup_intersection,
    symmetric_ring,
    tensor_ring,
    trivial_ring,
    verify_schur_ring,
)
from .classify import (
    Classification,
    ClassShape,
    check_class_shape,
    classify_rational,
    classify_window,
    enumerate_schur_rings,
    exhaustive_window_search,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE_CYCLIC",
    "RATIONAL",
    "FiniteCyclic",
    "GroupContext",
    "RingElement",
    "apply_function",
    "coefficient_complex",
    "freshman",
    "hadamard",
    "linear_combine",
    "monomial",
    "multiply",
    "one",
    "simple_quantity",
    "star",
    "support",
    "zero",
    "Partition",
    "Span",
    "Verdict",
    "class_of",
    "decompose_span",
    "is_primitive",
    "is_sset",
    "membership_test",
    "validate_partition",
    "SchurRing",
    "StructureTable",
    "Subgroup",
    "generated_subgroup",
    "group_ring",
    "orbit_ring",
    "restrict",
    "stabilizer",
    "structure_constants",
    "subgroup_intersection",
    "symmetric_ring",
    "tensor_ring",
    "trivial_ring",
    "verify_schur_ring",
    "Classification",
    "ClassShape",
    "check_class_shape",
    "classify_rational",
    "classify_window",
    "enumerate_schur_rings",
    "exhaustive_window_search",
]
