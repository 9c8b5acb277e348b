"""Tropical linear algebra over the max-times semiring.

Scalars, vectors and matrices over ``(R>=0, max, *)`` and its min-plus
twin, finitely generated cones with their relative interiors, and the
simplex model of tropical projective space and Grassmannians.
"""

__version__ = "0.1.0"

from .cone import (
    ConicSubspace,
    FeasibilityResult,
    cone_contains,
    face_restrict,
    is_independent,
    orthant_decomposition,
    relint_contains,
    span_contains,
    subspace_decomposition,
)
from .errors import (
    DimensionMismatch,
    NotAConfiguration,
    NotConvexPosition,
    NotIndependent,
    NotInvertible,
    NotMonomial,
    NotOnSphere,
    NotOrthogonal,
    TooLarge,
    TropicalError,
    ZeroVector,
)
from .matrix import (
    MonomialDecomposition,
    Permutation,
    TropMatrix,
    block_act,
    enumerate_orthogonal,
    identity_matrix,
    idempotent_necessary_conditions,
    is_idempotent,
    is_invertible,
    is_trop_orthogonal,
    mat_odot,
    mat_oplus,
    monomial_decompose,
    perm_act,
    stabilize,
    trop_inverse,
    zero_matrix,
)
from .projective import (
    GrassmannElement,
    SimplexConfiguration,
    SimplexPoint,
    closure_map,
    config_to_grassmann,
    grassmann_canonical,
    in_convex_position,
    interior_map,
    is_configuration,
    projective_eq,
    projectivize,
    subspace_eq,
)
from .scalar import (
    INF,
    ProjectionCarrier,
    max_tau,
    min_by_norm,
    min_tau,
    mp_odot,
    mp_oplus,
    mt_odot,
    mt_oplus,
    to_maxtimes,
    to_minplus,
)
from .vector import (
    ComponentIndex,
    TropVector,
    basis_vector,
    component_index,
    flow_act,
    from_trop_coordinates,
    inner_trop,
    is_proportional,
    norm_trop,
    on_sphere,
    sphere_oplus,
    trop_coordinates,
    trop_scalar_act,
    vec_oplus,
    zero_vector,
)

__all__ = [
    "ComponentIndex",
    "ConicSubspace",
    "DimensionMismatch",
    "FeasibilityResult",
    "GrassmannElement",
    "INF",
    "MonomialDecomposition",
    "NotAConfiguration",
    "NotConvexPosition",
    "NotIndependent",
    "NotInvertible",
    "NotMonomial",
    "NotOnSphere",
    "NotOrthogonal",
    "Permutation",
    "ProjectionCarrier",
    "SimplexConfiguration",
    "SimplexPoint",
    "TooLarge",
    "TropMatrix",
    "TropVector",
    "TropicalError",
    "ZeroVector",
    "basis_vector",
    "block_act",
    "closure_map",
    "component_index",
    "cone_contains",
    "config_to_grassmann",
    "enumerate_orthogonal",
    "face_restrict",
    "flow_act",
    "from_trop_coordinates",
    "grassmann_canonical",
    "idempotent_necessary_conditions",
    "identity_matrix",
    "in_convex_position",
    "inner_trop",
    "interior_map",
    "is_configuration",
    "is_idempotent",
    "is_independent",
    "is_invertible",
    "is_proportional",
    "is_trop_orthogonal",
    "mat_odot",
    "mat_oplus",
    "max_tau",
    "min_by_norm",
    "min_tau",
    "monomial_decompose",
    "mp_odot",
    "mp_oplus",
    "mt_odot",
    "mt_oplus",
    "norm_trop",
    "on_sphere",
    "orthant_decomposition",
    "perm_act",
    "projective_eq",
    "projectivize",
    "relint_contains",
    "span_contains",
    "sphere_oplus",
    "stabilize",
    "subspace_decomposition",
    "subspace_eq",
    "to_maxtimes",
    "to_minplus",
    "trop_coordinates",
    "trop_inverse",
    "trop_scalar_act",
    "vec_oplus",
    "zero_matrix",
    "zero_vector",
]
