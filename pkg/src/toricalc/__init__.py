"""toricalc: exact projective torus quotients of affine space.

Polyhedra with integer inequality data, their graded semigroup rings,
and the semistability combinatorics of linearized subtorus actions,
all in exact arithmetic.
"""

from .actions import (
    LinearizedAction,
    QuotientData,
    betti,
    delta,
    evaluate_invariants,
    group_from_delta,
    invariant_monomial,
    is_semistable,
    linearized_action,
    minimal_unstable_supports,
    orbit_census,
    proj_equal,
    quotient_projection,
)
from .errors import (
    AllZero,
    EmptyPolyhedron,
    InputError,
    LinealityPresent,
    NonSpanning,
    NotInSemigroup,
    NotPointed,
    NotSimple,
    TorsionQuotient,
    ToricalcError,
    Unbounded,
)
from .lattice import IntMatrix, NormalForm, hnf, integer_kernel_basis, snf
from .polyhedra import (
    Face,
    Polyhedron,
    VRepresentation,
    dilate,
    f_vector,
    face,
    interval,
    is_bounded,
    is_empty,
    lattice_points,
    polyhedron,
    positive_orthant,
    product,
    recession_cone,
    standard_simplex,
    unit_cube,
    vrep,
)
from .semigroups import (
    Cone,
    GradedPoint,
    RingPresentation,
    graded_generators,
    hilbert_basis,
    hilbert_function,
    homogenize,
    relation_space,
)

__version__ = "0.1.0"
__all__ = [
    "AllZero",
    "Cone",
    "EmptyPolyhedron",
    "Face",
    "GradedPoint",
    "InputError",
    "IntMatrix",
    "LinealityPresent",
    "LinearizedAction",
    "NonSpanning",
    "NormalForm",
    "NotInSemigroup",
    "NotPointed",
    "NotSimple",
    "Polyhedron",
    "QuotientData",
    "RingPresentation",
    "TorsionQuotient",
    "ToricalcError",
    "Unbounded",
    "VRepresentation",
    "betti",
    "delta",
    "dilate",
    "evaluate_invariants",
    "f_vector",
    "face",
    "graded_generators",
    "group_from_delta",
    "hilbert_basis",
    "hilbert_function",
    "hnf",
    "homogenize",
    "integer_kernel_basis",
    "interval",
    "invariant_monomial",
    "is_bounded",
    "is_empty",
    "is_semistable",
    "lattice_points",
    "linearized_action",
    "minimal_unstable_supports",
    "orbit_census",
    "polyhedron",
    "positive_orthant",
    "product",
    "proj_equal",
    "quotient_projection",
    "recession_cone",
    "snf",
    "standard_simplex",
    "unit_cube",
    "vrep",
]
