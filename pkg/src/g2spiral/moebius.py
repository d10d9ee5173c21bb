"""Linear-fractional maps fixing the unit-chord endpoints -1 and +1.

The maps have the form

    w(z) = (z + z0) / (1 + z0 z),

which fixes z = +1 and z = -1 for every complex z0 (the map with
parameter -z0 is the inverse).  The derivative at the start fixed point is

    f'(-1) = (1 + z0) / (1 - z0) = rho * e^{i lambda},

so fitting a map that carries unit-chord boundary data (alpha*, beta*,
k1*, k2*) of a base arc onto target data (alpha, beta, k1, k2) amounts to
choosing

    lambda = alpha - alpha*                     (tangent rotation at -1)
    rho    = (k1* + sin alpha*) / (k1 + sin alpha)   (jet scaling at -1)
    z0     = (rho e^{i lambda} - 1) / (rho e^{i lambda} + 1).

The end-point pair yields the same map through lambda = beta* - beta and
rho = (k2 - sin beta) / (k2* - sin beta*); the redundant pair is kept as a
consistency residual instead of being averaged, so a failed solve is
diagnosed sharply rather than smeared.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConsistencyFailure, DegenerateMap, PoleOnCurve
from .geometry import reduce_angle

#: residual ceiling for an accepted map
CONSISTENCY_TOL = 1e-8

#: |1 + z0 z| below this counts as passing through the pole
POLE_TOL = 1e-14


class UnitChordData(NamedTuple):
    """G2 boundary data normalized to the unit chord (endpoints at -1, +1;
    curvatures are chord-scaled, i.e. multiplied by the half-length)."""

    alpha: float
    beta: float
    k1: float
    k2: float


@dataclass(frozen=True)
class MoebiusMap:
    """An accepted map w(z) = (z + z0)/(1 + z0 z) with its fit residuals.

    ``lam`` and ``rho_scale`` are the argument and modulus of the
    derivative at the start fixed point -1.
    """

    z0: complex
    lam: float
    rho_scale: float
    residual_lambda: float
    residual_rho: float


def fit_map(
    target: UnitChordData, base: UnitChordData, tol: float = CONSISTENCY_TOL
) -> MoebiusMap:
    """Fit the map carrying ``base`` unit-chord data onto ``target``.

    Both data sets must describe the same invariant pair (Q, omega); the
    residuals measure how far the redundant end-point equations are from
    agreeing and an accepted map requires them below ``tol``.
    """
    start_t = target.k1 + math.sin(target.alpha)
    start_b = base.k1 + math.sin(base.alpha)
    end_t = target.k2 - math.sin(target.beta)
    end_b = base.k2 - math.sin(base.beta)
    if start_t == 0.0 or end_b == 0.0:
        raise DegenerateMap("boundary circle combination vanishes; cannot scale jets")

    lam = reduce_angle(target.alpha - base.alpha)
    rho = start_b / start_t
    residual_lambda = abs(reduce_angle((base.alpha - target.alpha) - (target.beta - base.beta)))
    rho_start_pair = start_t / start_b
    rho_end_pair = end_b / end_t
    residual_rho = abs(rho_start_pair / rho_end_pair - 1.0) if rho_end_pair != 0.0 else math.inf

    if residual_lambda > tol or not residual_rho <= tol:
        raise ConsistencyFailure(
            f"redundant map equations disagree: dlambda={residual_lambda:.3e}, "
            f"drho={residual_rho:.3e}"
        )
    if rho <= 0.0:
        raise ConsistencyFailure(f"jet scaling must be positive, got {rho!r}")

    p = cmath.rect(rho, lam)
    if abs(p + 1.0) < 1e-12:
        raise DegenerateMap("rho * e^{i lambda} = -1")
    z0 = (p - 1.0) / (p + 1.0)
    return MoebiusMap(
        z0=z0,
        lam=lam,
        rho_scale=rho,
        residual_lambda=residual_lambda,
        residual_rho=residual_rho,
    )


def identity_map() -> MoebiusMap:
    return MoebiusMap(z0=0j, lam=0.0, rho_scale=1.0, residual_lambda=0.0, residual_rho=0.0)


def map_point(m: MoebiusMap, z: complex) -> complex:
    den = 1.0 + m.z0 * z
    if abs(den) < POLE_TOL:
        raise PoleOnCurve(f"point {z!r} lies on the pole of the map")
    return (z + m.z0) / den


def map_jet(m: MoebiusMap, z: complex, tau: float, k: float) -> tuple[complex, float, float]:
    """Transport a curve jet (point, tangent angle, curvature) through the map.

    Uses f'(z) = (1 - z0^2)/(1 + z0 z)^2 and f''/f' = -2 z0/(1 + z0 z):
    the tangent rotates by arg f', and the curvature maps to
    (k + Im((f''/f') e^{i tau})) / |f'|.
    """
    den = 1.0 + m.z0 * z
    if abs(den) < POLE_TOL:
        raise PoleOnCurve(f"point {z!r} lies on the pole of the map")
    w = (z + m.z0) / den
    fprime = (1.0 - m.z0 * m.z0) / (den * den)
    log_ratio = -2.0 * m.z0 / den  # f''/f'
    tau_out = tau + cmath.phase(fprime)
    k_out = (k + (log_ratio * cmath.exp(1j * tau)).imag) / abs(fprime)
    return w, tau_out, k_out
