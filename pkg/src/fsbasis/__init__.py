"""Monomial bases cut out by difference and initial conditions for subspaces of
standard affine ``sl(ell+1)``-modules graded by a cominuscule weight."""

__version__ = "0.1.0"

from .chains import (
    Chain,
    Factorization,
    chain_partition,
    compose,
    factorize,
    max_antichain,
    max_antichain_exhaustive,
    sq_less,
)
from .conditions import (
    ConstraintWitness,
    DiagonalPath,
    diagonal_paths,
    find_dc_violation,
    find_ic_violation,
    leading_term,
    max_dc_sum,
    satisfies_dc,
    satisfies_dc_ic,
    satisfies_ic,
)
from .core import (
    AlgebraParams,
    Color,
    GuardExceeded,
    HighestWeight,
    InvalidInput,
    InvariantViolation,
    Monomial,
    Shape,
    Variable,
    augment,
    color_less,
    monomial_less,
    product,
    shape_less,
    shape_of,
    shift_down,
    shift_up,
    variable_less,
)
from .enumeration import (
    brute_force_dimensions,
    enumerate_basis,
    f_parameter,
    graded_dimensions,
    mu_monomial,
    periodicity_check,
)
from .relations import PolyVector, lower_op, orbit_basis, raise_op, verify_relation_support
from .series import QSeries, ag_series
