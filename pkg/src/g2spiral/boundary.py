"""Boundary conditions in the chord frame and their chord invariants.

A two-point G2 problem is posed on the chord joining the endpoints: the
chord has length ``2c``, the start point sits at ``(-c, 0)`` and the end
point at ``(c, 0)``.  ``alpha`` and ``beta`` are the tangent slopes at the
ends, ``k1`` and ``k2`` the signed boundary curvatures, and ``n1``/``n2``
count how many times the curve crosses the two rays extending the chord
beyond each endpoint (its "curling").

The monotonicity type is ``M = sgn(k2 - k1)``.  Tangent angles live in
``(-pi, pi]`` for M = +1 and ``[-pi, pi)`` for M = -1; the cumulative
versions ``alpha + 2*M*n1*pi`` and ``beta + 2*M*n2*pi`` feed the two
invariants

    omega = (alpha~ + beta~) / 2
    Q     = (k1*c + sin alpha)(k2*c - sin beta) + sin^2((alpha + beta)/2)

which are preserved by linear-fractional maps (omega and M flip sign under
inversions).  A spiral interpolant can exist only when ``sgn omega = M``
and ``Q < 0``; ``Q = 0`` is the degenerate biarc case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import BiarcDegenerate, CoincidentEndpoints, NonMonotone, PositiveQ, WrongWinding
from .geometry import Similarity, Vec2, reduce_angle, similarity_to_segment

#: |Q| below this is treated as the degenerate biarc case.  The involute
#: parameter t0 grows like 1/sqrt(-Q), so a guard band is required.
Q_DEGENERATE_BAND = 1e-12


@dataclass(frozen=True)
class BoundaryConditions:
    """Chord-frame statement of a two-point G2 Hermite problem."""

    c: float
    alpha: float
    beta: float
    k1: float
    k2: float
    n1: int = 0
    n2: int = 0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise CoincidentEndpoints(f"chord half-length must be positive, got {self.c!r}")
        for name in ("alpha", "beta", "k1", "k2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.k1 == self.k2:
            raise NonMonotone(f"k1 == k2 == {self.k1!r}: curvature cannot be monotone")
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("winding counts must be non-negative")
        # Raw atan2-style input angles are reduced here once; nothing else
        # in the package re-reduces stored boundary angles.
        m = self.monotonicity
        object.__setattr__(self, "alpha", reduce_angle(self.alpha, m))
        object.__setattr__(self, "beta", reduce_angle(self.beta, m))

    @property
    def monotonicity(self) -> int:
        """+1 for increasing curvature, -1 for decreasing."""
        return 1 if self.k2 > self.k1 else -1

    @property
    def start(self) -> Vec2:
        return Vec2(-self.c, 0.0)

    @property
    def end(self) -> Vec2:
        return Vec2(self.c, 0.0)


@dataclass(frozen=True)
class MoebiusInvariants:
    """The pair (Q, omega) plus the monotonicity sign they belong to.

    ``omega`` is cumulative (not reduced mod 2*pi): winding enters through
    the n1/n2 counts of the boundary conditions.
    """

    q: float
    omega: float
    m: int


def compute_invariants(bc: BoundaryConditions) -> MoebiusInvariants:
    """Evaluate (Q, omega, M) for a chord-frame problem."""
    if bc.k1 == bc.k2:
        raise NonMonotone("k1 == k2")
    m = bc.monotonicity
    alpha_cum = bc.alpha + 2.0 * m * bc.n1 * math.pi
    beta_cum = bc.beta + 2.0 * m * bc.n2 * math.pi
    omega = 0.5 * (alpha_cum + beta_cum)
    q = (bc.k1 * bc.c + math.sin(bc.alpha)) * (bc.k2 * bc.c - math.sin(bc.beta)) + math.sin(
        0.5 * (bc.alpha + bc.beta)
    ) ** 2
    return MoebiusInvariants(q=q, omega=omega, m=m)


def check_feasibility(inv: MoebiusInvariants) -> None:
    """Raise unless the necessary conditions for a spiral hold.

    The degenerate band around Q = 0 is classified first so that a biarc
    problem with omega = 0 reports as BiarcDegenerate, not WrongWinding.
    """
    if abs(inv.q) <= Q_DEGENERATE_BAND:
        raise BiarcDegenerate(
            f"Q = {inv.q!r} is inside the degenerate band: boundary circles of curvature are tangent"
        )
    if inv.omega == 0.0 or (inv.omega > 0.0) != (inv.m > 0):
        raise WrongWinding(f"sgn(omega) != M: omega = {inv.omega!r}, M = {inv.m:+d}")
    if inv.q > 0.0:
        raise PositiveQ(f"Q = {inv.q!r} > 0: boundary circles violate the spiral condition")


def canonicalize(bc: BoundaryConditions) -> tuple[BoundaryConditions, bool]:
    """Return an equivalent problem with M = +1 plus a reflection flag.

    Problems with decreasing curvature are mirrored across the chord axis
    (alpha, beta, k1, k2 all change sign; winding counts are unchanged).
    The mirror leaves Q untouched and flips the signs of omega and M, so a
    feasible problem always canonicalizes to omega > 0.
    """
    if bc.monotonicity > 0:
        return bc, False
    mirrored = replace(bc, alpha=-bc.alpha, beta=-bc.beta, k1=-bc.k1, k2=-bc.k2)
    return mirrored, True


def from_world(
    a: Vec2,
    b: Vec2,
    tangent1: float,
    tangent2: float,
    k1: float,
    k2: float,
    n1: int = 0,
    n2: int = 0,
) -> tuple[BoundaryConditions, Similarity]:
    """Pose a world-frame problem on its chord.

    Returns the chord-frame boundary conditions together with the
    similarity mapping world coordinates onto the chord frame
    (``a -> (-c, 0)``, ``b -> (c, 0)``).  The similarity has unit scale:
    the chord half-length carries the physical size, and curvatures pass
    through unchanged.
    """
    chord = b - a
    length = chord.norm()
    if length == 0.0:
        raise CoincidentEndpoints("endpoints coincide")
    world_to_chord = similarity_to_segment(a, b)
    rot = world_to_chord.rotation
    # BoundaryConditions reduces the angles into the M-interval itself.
    return (
        BoundaryConditions(
            c=0.5 * length,
            alpha=tangent1 + rot,
            beta=tangent2 + rot,
            k1=k1,
            k2=k2,
            n1=n1,
            n2=n2,
        ),
        world_to_chord,
    )
