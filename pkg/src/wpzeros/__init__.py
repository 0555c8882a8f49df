"""Closed-form zeros of the Weierstrass p function, with the Jacobi, Carlson
and relativistic-orbit machinery they rest on."""

from .errors import (
    DegenerateLattice,
    DomainError,
    EllipticError,
    NonConvergence,
    PoleProximity,
    UnboundOrbit,
    UnsupportedInvariant,
)
from .jacobi import Modulus, QuarterPeriods, complete_k, inverse_sn, sn_cn_dn
from .numerics import CubicRoots, agm, carlson_rf, solve_depressed_cubic
from .orbits import (
    OrbitConstants,
    OrbitParams,
    TrajectorySample,
    angle_from_radius,
    ode_residual,
    orbit_constants,
    radius,
    sample_trajectory,
)
from .weierstrass import (
    EDecomposition,
    Invariants,
    Lattice,
    ModulusRecovery,
    ZeroPair,
    absolute_invariant_from_k2,
    decompose,
    invariants_from_modulus,
    invariants_from_orbit,
    lattice,
    recover_modulus,
    reduce_to_fundamental,
    rescale,
    wp,
    wp_oracle,
    wp_prime,
    wp_zeros,
)

__version__ = "0.1.0"
