"""Exception hierarchy shared by every layer of the library."""


class EllipticError(Exception):
    """Base class for all library errors."""


class DomainError(EllipticError, ValueError):
    """An input lies outside the domain of the requested operation."""


class NonConvergence(EllipticError, ArithmeticError):
    """An iteration or series failed to reach its accuracy target."""


class PoleProximity(EllipticError, ArithmeticError):
    """The evaluation point is too close to a pole; treat the value as infinite."""


class DegenerateLattice(EllipticError, ValueError):
    """The period lattice collapses (zero discriminant, k^2 in {0, 1})."""


class UnsupportedInvariant(EllipticError, ValueError):
    """The closed-form zero formula does not cover these invariants (g2 = 0)."""


class UnboundOrbit(EllipticError, ArithmeticError):
    """The orbit denominator A + B sn^2 is non-positive at this angle."""
