"""Exact determinants of matrices that commute or anticommute with an
anti-involution, sum-of-two-squares certificates, and symmetric domino
tiling counts."""

from .altcentro import (
    alternating_exchange_matrix,
    build_alternating_exchange,
    det_via_complementary,
    enumerate_complementary,
    is_alternating_centrosymmetric,
    is_alternating_skew_centrosymmetric,
)
from .errors import (
    DimensionError,
    FieldError,
    GraphError,
    GuardError,
    NotSumOfTwoSquaresError,
    ParseError,
    PseudoCentroError,
    SingularMatrixError,
    StructureError,
)
from .fields import QQ, Fp, Gaussian, GaussianField, PrimeField, parse_field
from .lattice import (
    LatticeGraph,
    build_kasteleyn,
    check_two_even_symmetric,
    count_matchings,
    matching_certificate,
    symmetric_labeling,
)
from .matrix import Matrix, identity, parse_matrix, format_matrix, zeros
from .regions import Region, aztec_diamond, aztec_pillow, count_tilings, generalized_pillow, tiling_certificate
from .structure import (
    AntiInvolution,
    CommutationKind,
    SimpleFormK,
    build_basis,
    classify_commutation,
    det_via_half,
    extract_bc,
    integral_certificate,
    sos_certificate_general,
)
from .twosquares import TwoSquares, all_two_squares, decompose_two_squares

__version__ = "0.1.0"

__all__ = [
    "alternating_exchange_matrix",
    "build_alternating_exchange",
    "det_via_complementary",
    "enumerate_complementary",
    "is_alternating_centrosymmetric",
    "is_alternating_skew_centrosymmetric",
    "DimensionError",
    "FieldError",
    "GraphError",
    "GuardError",
    "NotSumOfTwoSquaresError",
    "ParseError",
    "PseudoCentroError",
    "SingularMatrixError",
    "StructureError",
    "QQ",
    "Fp",
    "Gaussian",
    "GaussianField",
    "PrimeField",
    "parse_field",
    "LatticeGraph",
    "build_kasteleyn",
    "check_two_even_symmetric",
    "count_matchings",
    "matching_certificate",
    "symmetric_labeling",
    "Matrix",
    "identity",
    "parse_matrix",
    "format_matrix",
    "zeros",
    "Region",
    "aztec_diamond",
    "aztec_pillow",
    "count_tilings",
    "generalized_pillow",
    "tiling_certificate",
    "AntiInvolution",
    "CommutationKind",
    "SimpleFormK",
    "build_basis",
    "classify_commutation",
    "det_via_half",
    "extract_bc",
    "integral_certificate",
    "sos_certificate_general",
    "TwoSquares",
    "all_two_squares",
    "decompose_two_squares",
]
