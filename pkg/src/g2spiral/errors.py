"""Domain errors with stable exit codes.

Every failure mode of the solve pipeline maps to its own exception class.
The CLI translates them 1:1 into process exit codes; the HTTP service
reports the class name in the error payload.  Codes 0-2 are reserved for
success, generic failure and argparse usage errors.
"""


class SpiralError(Exception):
    """Base class for all domain errors raised by this package."""

    exit_code = 1


class NonMonotone(SpiralError):
    """Boundary curvatures are equal, so no curve with strictly monotone
    curvature can join the two end conditions."""

    exit_code = 3


class WrongWinding(SpiralError):
    """The mean cumulative tangent angle has the wrong sign (or is zero)
    for the requested monotonicity type."""

    exit_code = 4


class BiarcDegenerate(SpiralError):
    """The chord invariant Q vanishes: the boundary circles of curvature
    are tangent and the interpolant degenerates to a biarc."""

    exit_code = 5


class PositiveQ(SpiralError):
    """The chord invariant Q is positive; a spiral interpolant cannot
    exist for these boundary circles."""

    exit_code = 6


class NoConvergence(SpiralError):
    """The bracketed bisection failed to shrink the bracket below
    tolerance within the iteration budget."""

    exit_code = 7


class ConsistencyFailure(SpiralError):
    """Redundant quantities that must agree for a valid solve disagree
    beyond tolerance; indicates an upstream error."""

    exit_code = 8


class PoleOnCurve(SpiralError):
    """The solved arc passes through (or too close to) the pole of the
    linear-fractional map."""

    exit_code = 9


class CoincidentEndpoints(SpiralError):
    """The two interpolation endpoints coincide; no chord exists."""

    exit_code = 10


class GrazingUnresolved(SpiralError):
    """A polyline vertex sits on a counting ray even after the
    perturbation retry; winding counts are ambiguous."""

    exit_code = 11


class DomainError(SpiralError):
    """An argument lies outside the mathematical domain of an operation
    (for example a non-negative Q where Q < 0 is required)."""

    exit_code = 12


class DegenerateMap(SpiralError):
    """The fitted map parameters are singular (rho * e^{i lambda} = -1)."""

    exit_code = 13


ALL_ERRORS = (
    NonMonotone,
    WrongWinding,
    BiarcDegenerate,
    PositiveQ,
    NoConvergence,
    ConsistencyFailure,
    PoleOnCurve,
    CoincidentEndpoints,
    GrazingUnresolved,
    DomainError,
    DegenerateMap,
)

ERRORS_BY_NAME = {cls.__name__: cls for cls in ALL_ERRORS}

EXIT_CODES = {cls.__name__: cls.exit_code for cls in ALL_ERRORS}
