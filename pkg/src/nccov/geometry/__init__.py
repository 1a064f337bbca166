"""Geometric objects and the tensor coordinates of linear, polylinear and skew maps."""
from .objects import (
    GeometricObject,
    GroupRep,
    endo_transform,
    geo_transform,
    rep_action_law_check,
    rep_is_homomorphism,
    representative,
    same_orbit,
    tautological_rep,
    trivial_rep,
)
from .skew import (
    DetStar,
    detstar,
    skew_apply,
    skew_apply_detstar,
    skew_covariance_check,
    skew_transform_check,
)
from .tensors import (
    TensorPolyMap,
    apply_linear_tensor,
    apply_polylinear,
    central_linear_from_matrix,
    commutative_degeneration_check,
    covariance_check_linear,
    covariance_check_polylinear,
    format_tensor,
    identity_linear,
    linear_from_matrix,
    maps_equal,
    parse_tensor,
    transform_linear_tensor,
    transform_polylinear,
    zero_map,
)
