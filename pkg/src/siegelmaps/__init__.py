"""Explicit totally geodesic embeddings of complex balls into Siegel space.

The package constructs the classical holomorphic embeddings of the unit
ball into the bounded model of the Siegel upper half space (standard,
connecting, and exterior-power factors and their diagonal direct sums),
builds the matching holomorphic retractions, and verifies the structural
claims behind them (left-inverse identity, membership closure, Kobayashi
isometry, signature bookkeeping, linearity) by seeded property testing.
"""

from __future__ import annotations

from . import errors
from .domains import (
    BallPoint,
    DomainKind,
    DomainPoint,
    DomainShape,
    MembershipResult,
    MembershipStatus,
    Transvection,
    ball_distance,
    ball_infinitesimal_metric,
    ball_point,
    cayley,
    cayley_to_bounded,
    cayley_to_siegel,
    kobayashi_distance,
    membership,
    siegel_shape,
    transvection_to_origin,
    type_i_shape,
    type_iii_shape,
)
from .embeddings import (
    BuiltEmbedding,
    EmbeddingSpec,
    FactorKind,
    FactorSpec,
    connecting_embed,
    corner_embed_iii,
    direct_sum_embed,
    embed_in_type_i,
    enumerate_specs,
    exterior_power_embed,
    factor_catalog,
    linearize,
)
from .exterior import (
    WedgeBasis,
    balanced_symmetric,
    complement,
    conjugation_twice_unit,
    conjugation_unit,
    induced_form,
    induced_form_decomposable,
    multi_indices,
    perm_sign,
    signature,
    wedge_basis,
    wedge_coefficients,
)
from .harness import run_suite, run_verification
from .linalg import (
    DEFAULT_TOLERANCE,
    Tolerance,
    as_complex_matrix,
    hermitian_eigenvalues,
    orthonormal_column_basis,
    singular_values,
    solve_right,
)
from .report import HarnessConfig, Report, SuiteResult
from .retractions import (
    Retraction,
    SandwichRecord,
    corner_average,
    factor_retraction,
    isometry_sandwich,
    retract_axis_averaging,
    retract_corner,
    retract_direct_sum,
    retract_exterior_power,
    retract_first_row,
    retract_offdiagonal,
)

__version__ = "0.1.0"

__all__ = [
    "BallPoint",
    "BuiltEmbedding",
    "DEFAULT_TOLERANCE",
    "DomainKind",
    "DomainPoint",
    "DomainShape",
    "EmbeddingSpec",
    "FactorKind",
    "FactorSpec",
    "HarnessConfig",
    "MembershipResult",
    "MembershipStatus",
    "Report",
    "Retraction",
    "SandwichRecord",
    "SuiteResult",
    "Tolerance",
    "Transvection",
    "WedgeBasis",
    "as_complex_matrix",
    "balanced_symmetric",
    "ball_distance",
    "ball_infinitesimal_metric",
    "ball_point",
    "cayley",
    "cayley_to_bounded",
    "cayley_to_siegel",
    "complement",
    "conjugation_twice_unit",
    "conjugation_unit",
    "connecting_embed",
    "corner_average",
    "corner_embed_iii",
    "direct_sum_embed",
    "embed_in_type_i",
    "enumerate_specs",
    "errors",
    "exterior_power_embed",
    "factor_catalog",
    "factor_retraction",
    "hermitian_eigenvalues",
    "induced_form",
    "induced_form_decomposable",
    "isometry_sandwich",
    "kobayashi_distance",
    "linearize",
    "membership",
    "multi_indices",
    "orthonormal_column_basis",
    "perm_sign",
    "retract_axis_averaging",
    "retract_corner",
    "retract_direct_sum",
    "retract_exterior_power",
    "retract_first_row",
    "retract_offdiagonal",
    "run_suite",
    "run_verification",
    "siegel_shape",
    "signature",
    "singular_values",
    "solve_right",
    "transvection_to_origin",
    "type_i_shape",
    "type_iii_shape",
    "wedge_basis",
    "wedge_coefficients",
]
