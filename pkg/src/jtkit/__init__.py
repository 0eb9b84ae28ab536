"""Exact total-positivity certificates and pure resolution tables for graded
sequences of Schur classes."""

from .shapes import (
    Partition,
    Permutation,
    SkewShape,
    attach_dot,
    attach_odot,
    conjugate,
    dotted_action,
    partitions_of,
    ribbon_of,
    skew_from_boxes,
)
from .symfunc import (
    SchurClass,
    dim_gl,
    dim_gl_skew,
    dim_super,
    external_product,
    lr_coefficient,
    mult_one,
    multiply,
    skew_to_straight,
)
from .sequences import (
    GradedSequence,
    PFReport,
    e_class,
    hadamard,
    hs_series,
    jt_minor,
    jt_minor_dual,
    make_sequence,
    minor_from_indices,
    parse_sequence_spec,
    pf_check,
    schur_dimension_profile,
    segre,
    tensor_product,
    veronese,
)
from .quadric import (
    OrthogonalDecomposition,
    QuadricContext,
    chi_o_dim,
    multigraded_hs_check,
    orthogonal_stable_decomposition,
    quadric_schur_dim,
)
from .resolutions import (
    BettiRow,
    BettiTable,
    BettiTail,
    HKSolution,
    PurityReport,
    efw_betti,
    efw_partitions,
    hk_solve,
    quadric_pure_resolution,
    rnc_pure_resolution,
    rnc_sequence,
    validate_purity,
)
from .zelevinsky import ComplexLayout, euler_characteristic, euler_check, jt_complex_layout

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Permutation",
    "SkewShape",
    "attach_dot",
    "attach_odot",
    "conjugate",
    "dotted_action",
    "partitions_of",
    "ribbon_of",
    "skew_from_boxes",
    "SchurClass",
    "dim_gl",
    "dim_gl_skew",
    "dim_super",
    "external_product",
    "lr_coefficient",
    "mult_one",
    "multiply",
    "skew_to_straight",
    "GradedSequence",
    "PFReport",
    "e_class",
    "hadamard",
    "hs_series",
    "jt_minor",
    "jt_minor_dual",
    "make_sequence",
    "minor_from_indices",
    "parse_sequence_spec",
    "pf_check",
    "schur_dimension_profile",
    "segre",
    "tensor_product",
    "veronese",
    "OrthogonalDecomposition",
    "QuadricContext",
    "chi_o_dim",
    "multigraded_hs_check",
    "orthogonal_stable_decomposition",
    "quadric_schur_dim",
    "BettiRow",
    "BettiTable",
    "BettiTail",
    "HKSolution",
    "PurityReport",
    "efw_betti",
    "efw_partitions",
    "hk_solve",
    "quadric_pure_resolution",
    "rnc_pure_resolution",
    "rnc_sequence",
    "validate_purity",
    "ComplexLayout",
    "euler_characteristic",
    "euler_check",
    "jt_complex_layout",
    "__version__",
]
