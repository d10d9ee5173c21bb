"""Independent ground-truth generators used for fixtures and acceptance tests.

The polar (spiral) tractrix — the tractrix whose leash length equals the
circle radius — has the closed-form natural parameterization

    psi(s) = sqrt(e^{s/T} - 1)
    k(s)   = (1 - 2 e^{-s/T}) / (T sqrt(1 - (1 - 2 e^{-s/T})^2))
    tau(s) = psi(s) - arccos(2 e^{-s/T} - 1) + pi
    x(s)   = 2 T e^{-s/T} (psi sin psi + cos psi)
    y(s)   = 2 T e^{-s/T} (sin psi - psi cos psi)

with a curvature singularity at s = 0 and a single inflection at
s = T ln 2.  Being the inverse of the circle involute, boundary data read
off one of its arcs must be reproduced exactly by the solve pipeline,
which makes it the strongest end-to-end oracle available.

The Cornu spiral (clothoid) supplies linearly-varying-curvature test
data: k(s) = s/a^2, tau(s) = s^2/(2 a^2), position by adaptive quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boundary import BoundaryConditions, from_world
from .errors import GrazingUnresolved
from .geometry import Similarity, Vec2
from .involute import InvoluteArc, reflected_eval


@dataclass(frozen=True)
class TractrixPoint:
    s: float
    point: Vec2
    tau: float
    k: float
    psi: float


def tractrix_eval(leash: float, s: float) -> TractrixPoint:
    """Evaluate the polar tractrix of leash length ``leash`` at arc length s.

    The curvature at s = 0 is unbounded (reported as -inf); position and
    tangent are still defined there.
    """
    if not (math.isfinite(leash) and leash > 0.0):
        raise ValueError(f"leash length must be positive, got {leash!r}")
    if not (math.isfinite(s) and s >= 0.0):
        raise ValueError(f"arc length must be >= 0, got {s!r}")
    w = math.exp(-s / leash)
    psi = math.sqrt(math.expm1(s / leash))
    u = 1.0 - 2.0 * w
    disc = 1.0 - u * u
    k = u / (leash * math.sqrt(disc)) if disc > 0.0 else -math.inf
    tau = psi - math.acos(max(-1.0, min(1.0, 2.0 * w - 1.0))) + math.pi
    point = Vec2(
        2.0 * leash * w * (psi * math.sin(psi) + math.cos(psi)),
        2.0 * leash * w * (math.sin(psi) - psi * math.cos(psi)),
    )
    return TractrixPoint(s=s, point=point, tau=tau, k=k, psi=psi)


def tractrix_bc(
    leash: float, s1: float, s2: float, samples: int = 8192
) -> tuple[BoundaryConditions, Similarity]:
    """Chord-frame boundary conditions of the tractrix arc [s1, s2].

    Winding counts are measured on a dense polyline of the arc.  Returns
    the boundary conditions and the similarity from the tractrix frame to
    the chord frame.
    """
    if not 0.0 < s1 < s2:
        raise ValueError(f"need 0 < s1 < s2, got {s1!r}, {s2!r}")
    p1 = tractrix_eval(leash, s1)
    p2 = tractrix_eval(leash, s2)
    if not (math.isfinite(p1.k) and math.isfinite(p2.k)):
        raise ValueError("curvature is unbounded at an arc end; move away from s = 0")
    pts = [tractrix_eval(leash, s).point for s in np.linspace(s1, s2, samples)]
    n1, n2 = winding_counts(pts, p1.point, p2.point)
    return from_world(p1.point, p2.point, p1.tau, p2.tau, p1.k, p2.k, n1, n2)


def _adaptive_simpson(f, a: float, b: float, tol: float, depth: int = 48) -> complex:
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + recurse(
            m, b, fm, frm, fb, right, 0.5 * tol, depth - 1
        )

    return recurse(a, b, fa, fm, fb, whole, tol, depth)


def cornu_eval(a: float, s: float, tol: float = 1e-12) -> tuple[Vec2, float, float]:
    """Point, tangent angle and curvature of the clothoid with parameter a.

    k(s) = s/a^2 and tau(s) = s^2/(2 a^2); the position integrates
    (cos tau, sin tau) from 0 to s by adaptive Simpson quadrature with
    absolute tolerance ``tol``.
    """
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError(f"clothoid parameter must be positive, got {a!r}")
    half_inv_a2 = 0.5 / (a * a)

    def integrand(t: float) -> complex:
        return complex(math.cos(half_inv_a2 * t * t), math.sin(half_inv_a2 * t * t))

    if s == 0.0:
        z = 0j
    elif s > 0.0:
        z = _adaptive_simpson(integrand, 0.0, s, tol)
    else:
        z = -_adaptive_simpson(integrand, s, 0.0, tol)
    return Vec2(z.real, z.imag), half_inv_a2 * s * s, s / (a * a)


def involute_arc_bc(
    t0: float, theta: float, samples: int = 8192
) -> tuple[BoundaryConditions, Similarity]:
    """Boundary conditions read off a reflected-involute arc (self-
    interpolation data: the pipeline must reproduce the arc with an
    identity map).  Returns the bc and the involute-frame -> chord-frame
    similarity."""
    arc = InvoluteArc(t0=t0, theta=theta)
    p1 = reflected_eval(arc.t1)
    p2 = reflected_eval(arc.t2)
    pts = [reflected_eval(t).point for t in np.linspace(arc.t1, arc.t2, samples)]
    n1, n2 = winding_counts(pts, p1.point, p2.point)
    return from_world(p1.point, p2.point, p1.tau, p2.tau, p1.k, p2.k, n1, n2)


def _as_array(polyline: Sequence[Vec2] | np.ndarray) -> np.ndarray:
    if isinstance(polyline, np.ndarray):
        return np.asarray(polyline, dtype=float)
    return np.array([[p.x, p.y] for p in polyline], dtype=float)


def _ray_crossings(pts: np.ndarray, origin: Vec2, direction: float, tol: float) -> tuple[int, bool]:
    """Transversal crossings of the polyline with the open ray from
    ``origin`` along ``direction``; also reports whether any vertex grazes
    the ray within ``tol``."""
    d = np.array([math.cos(direction), math.sin(direction)])
    rel = pts - np.array([origin.x, origin.y])
    xi = rel @ d
    eta = rel[:, 1] * d[0] - rel[:, 0] * d[1]
    pos = eta > 0.0
    flip = pos[1:] != pos[:-1]
    if not np.any(flip):
        crossings = 0
    else:
        e0 = eta[:-1][flip]
        e1 = eta[1:][flip]
        frac = e0 / (e0 - e1)
        xcr = xi[:-1][flip] + (xi[1:][flip] - xi[:-1][flip]) * frac
        crossings = int(np.count_nonzero(xcr > tol))
    grazing = bool(np.any((np.abs(eta[1:-1]) <= tol) & (xi[1:-1] > tol)))
    return crossings, grazing


def winding_counts(
    polyline: Sequence[Vec2] | np.ndarray, a: Vec2, b: Vec2
) -> tuple[int, int]:
    """Count curling of a curve around its endpoints.

    ``n1`` counts transversal crossings of the polyline's interior with the
    ray extending the chord beyond ``a`` (away from ``b``); ``n2`` the same
    beyond ``b``.  The polyline must start at ``a``, end at ``b`` and be
    dense enough that no segment straddles a ray twice.  Vertices falling
    exactly on a ray are resolved by retrying with the ray rotated by
    1e-9 rad; if a vertex still grazes, GrazingUnresolved is raised.
    """
    pts = _as_array(polyline)
    if pts.shape[0] < 2:
        raise ValueError("polyline needs at least two points")
    chord = b - a
    length = chord.norm()
    if length == 0.0:
        raise ValueError("chord endpoints coincide")
    tol = 1e-12 * length
    ang = chord.angle()

    counts = []
    for origin, direction in ((a, ang + math.pi), (b, ang)):
        n, grazing = _ray_crossings(pts, origin, direction, tol)
        if grazing:
            n, grazing = _ray_crossings(pts, origin, direction + 1e-9, tol)
            if grazing:
                raise GrazingUnresolved(
                    "polyline vertex lies on a counting ray even after perturbation"
                )
        counts.append(n)
    return counts[0], counts[1]
