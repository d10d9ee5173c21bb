"""Circle involute evaluation and the chord geometry of its arcs.

The involute of a circle of radius R, traced by the end of a taut thread
unwinding from the circle, with t the polar angle of the unwinding point:

    x(t) = R (cos t + t sin t)        s(t)   = R t^2 / 2
    y(t) = R (sin t - t cos t)        tau(t) = t
    k(t) = 1 / (R t)                  rho(t) = R sqrt(t^2 + 1)
                                      phi(t) = t - arctan t

Its curvature decreases from +inf to 0.  The solving pipeline works with
the mirror image across the x axis at R = 1 (y, tau, k negated), whose
curvature increases from -inf to 0 and which therefore serves as the base
spiral for increasing-curvature problems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import Vec2, reduce_angle


@dataclass(frozen=True)
class InvolutePoint:
    """Full jet of one involute point: position, arc length, tangent
    angle, curvature and polar coordinates."""

    t: float
    point: Vec2
    s: float
    tau: float
    k: float
    polar_rho: float
    polar_phi: float


def involute_eval(radius: float, t: float) -> InvolutePoint:
    """Evaluate the involute of a circle of the given radius at parameter t.

    Requires ``t >= 0``.  At t = 0 the curvature is unbounded and reported
    as ``math.inf``.
    """
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValueError(f"radius must be positive, got {radius!r}")
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"parameter must be >= 0, got {t!r}")
    ct = math.cos(t)
    st = math.sin(t)
    point = Vec2(radius * (ct + t * st), radius * (st - t * ct))
    k = 1.0 / (radius * t) if t > 0.0 else math.inf
    return InvolutePoint(
        t=t,
        point=point,
        s=0.5 * radius * t * t,
        tau=t,
        k=k,
        polar_rho=radius * math.sqrt(t * t + 1.0),
        polar_phi=t - math.atan(t),
    )


def reflected_eval(t: float) -> InvolutePoint:
    """Evaluate the x-axis mirror of the unit-radius involute at t > 0.

    y, tau and k are negated relative to :func:`involute_eval`; the
    curvature -1/t increases strictly with t.
    """
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError(f"parameter must be > 0, got {t!r}")
    base = involute_eval(1.0, t)
    return InvolutePoint(
        t=t,
        point=Vec2(base.point.x, -base.point.y),
        s=base.s,
        tau=-base.tau,
        k=-base.k,
        polar_rho=base.polar_rho,
        polar_phi=-base.polar_phi,
    )


def arc_chord(t0: float, theta: float) -> tuple[float, float]:
    """Chord half-length c and chord direction mu of the reflected-involute
    arc ``t in [t0 - theta, t0 + theta]``.

    mu is the direction of the vector from the start point (t0 - theta) to
    the end point (t0 + theta); it is recovered from the (c cos mu,
    c sin mu) pair with the two-argument arctangent to avoid quadrant
    errors.
    """
    if not (theta > 0.0 and t0 > theta):
        raise ValueError(f"need t0 > theta > 0, got t0={t0!r}, theta={theta!r}")
    sth = math.sin(theta)
    cth = math.cos(theta)
    st0 = math.sin(t0)
    ct0 = math.cos(t0)
    c = math.hypot(theta * cth - sth, t0 * sth)
    assert c > 0.0
    c_cos_mu = theta * st0 * cth + (t0 * ct0 - st0) * sth
    c_sin_mu = theta * ct0 * cth - (t0 * st0 + ct0) * sth
    mu = math.atan2(c_sin_mu, c_cos_mu)
    return c, mu


@dataclass(frozen=True)
class InvoluteArc:
    """A reflected-involute arc ``[t0 - theta, t0 + theta]`` and its chord."""

    t0: float
    theta: float
    chord_half: float = field(init=False)
    chord_dir: float = field(init=False)

    def __post_init__(self) -> None:
        c, mu = arc_chord(self.t0, self.theta)
        object.__setattr__(self, "chord_half", c)
        object.__setattr__(self, "chord_dir", mu)

    @property
    def t1(self) -> float:
        return self.t0 - self.theta

    @property
    def t2(self) -> float:
        return self.t0 + self.theta


def arc_boundary_angles(arc: InvoluteArc) -> tuple[float, float]:
    """Chord-frame tangent slopes at the two ends of the arc.

    On the reflected involute tau(t) = -t, so the slopes relative to the
    chord are ``-t1 - mu`` and ``-t2 - mu``, reduced into ``(-pi, pi]``.
    """
    alpha = reduce_angle(-arc.t1 - arc.chord_dir)
    beta = reduce_angle(-arc.t2 - arc.chord_dir)
    return alpha, beta
