"""Exact linear algebra over the rational quaternions and covariance checks for
change of basis in left vector spaces over a non-commutative division algebra."""
from .errors import ArityMismatch, BasisMismatch, ConfigError, ParseError, ShapeMismatch, Singular
from .ncmatrix import (
    NcMatrix,
    cr_product,
    format_matrix,
    identity,
    is_rc_nonsingular,
    mat_add,
    mat_eq,
    parse_matrix,
    rc_inverse,
    rc_product,
    scalar_left_mul,
    zero,
)
from .scalar import (
    Quaternion,
    Rational,
    d_basis,
    format_quaternion,
    parse_quaternion,
    quat_add,
    quat_conj,
    quat_inv,
    quat_mul,
    quat_norm2,
)
from .transform import (
    ActiveTransform,
    PassiveTransform,
    active_apply,
    compose_passive,
    passive_apply_basis,
    passive_coords_backward,
    passive_coords_forward,
    transition_matrix,
)
from .vspace import (
    Basis,
    CoordRow,
    HomMatrix,
    apply_hom,
    compose_homs,
    coords_in_basis,
    expand_in_reference,
    hom_from_matrix,
    matrix_of_hom,
)

__version__ = "0.1.0"
