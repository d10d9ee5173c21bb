"""End-to-end construction of the interpolating spiral.

Stages, for a canonical (M = +1) problem:

1. chord-frame boundary conditions -> invariants (Q, omega), feasibility;
2. bisection for theta, closed form for t0: the reflected-involute arc
   [t0 - theta, t0 + theta] realizes (Q, omega);
3. similarity onto the unit chord (start end -> (-1, 0), end -> (1, 0));
4. linear-fractional map carrying the normalized arc onto the normalized
   target data;
5. similarity from the unit chord back to the caller's frame.

Decreasing-curvature problems are mirrored across the chord before
solving and the mirror is undone after the map stage, so the solver only
ever sees M = +1, omega > 0.  The curve parameter u in [0, 1] is affine
in the involute parameter t, not in arc length; per-sample arc length is
accumulated numerically by :meth:`SpiralCurve.sample`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .boundary import (
    BoundaryConditions,
    MoebiusInvariants,
    canonicalize,
    check_feasibility,
    compute_invariants,
    from_world,
)
from .errors import PoleOnCurve
from .geometry import Similarity, Vec2, reduce_angle
from .involute import InvoluteArc, arc_boundary_angles, reflected_eval
from .moebius import POLE_TOL, MoebiusMap, UnitChordData, fit_map, map_jet
from .oracles import winding_counts
from .solver import DEFAULT_CONFIG, SolverConfig, solve_theta, t0_of_theta

#: verification tolerances (endpoint position is relative to chord length)
POSITION_TOL = 1e-9
TANGENT_TOL = 1e-8
CURVATURE_REL_TOL = 1e-8
CURVATURE_ABS_TOL = 1e-10
CURVATURE_SMALL = 1e-2
MONOTONE_SLACK = 1e-10
INVARIANT_TOL = 1e-8


@dataclass(frozen=True)
class CurveSample:
    """One evaluated point of the final curve in the caller's frame."""

    u: float
    point: Vec2
    tau: float
    k: float
    s: Optional[float] = None


@dataclass(frozen=True)
class SpiralCurve:
    """Composed evaluator: involute arc -> unit chord -> map -> caller frame."""

    arc: InvoluteArc
    to_unit_base: Similarity
    moebius: MoebiusMap
    from_unit_target: Similarity
    reflected: bool
    bc: BoundaryConditions

    def eval(self, u: float) -> CurveSample:
        """Point, tangent angle and curvature at parameter u in [0, 1]."""
        if not 0.0 <= u <= 1.0:
            raise ValueError(f"u must lie in [0, 1], got {u!r}")
        t = self.arc.t1 + u * (self.arc.t2 - self.arc.t1)
        ip = reflected_eval(t)
        p, tau, k = self.to_unit_base.apply_jet(ip.point, ip.tau, ip.k)
        w, tau, k = map_jet(self.moebius, p.as_complex(), tau, k)
        x, y = w.real, w.imag
        if self.reflected:
            y, tau, k = -y, -tau, -k
        point, tau, k = self.from_unit_target.apply_jet(Vec2(x, y), tau, k)
        return CurveSample(u=u, point=point, tau=tau, k=k)

    def eval_batch(self, u: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized :meth:`eval`: returns (x, y, tau, k) arrays."""
        u = np.asarray(u, dtype=float)
        t = self.arc.t1 + u * (self.arc.t2 - self.arc.t1)
        st, ct = np.sin(t), np.cos(t)
        z = (ct + t * st) - 1j * (st - t * ct)
        tau = -t
        k = -1.0 / t
        # similarity onto the unit chord
        sim = self.to_unit_base
        z = sim.scale * np.exp(1j * sim.rotation) * z + complex(
            sim.translation.x, sim.translation.y
        )
        tau = tau + sim.rotation
        k = k / sim.scale
        # linear-fractional map with jet transport
        z0 = self.moebius.z0
        den = 1.0 + z0 * z
        if np.min(np.abs(den)) < POLE_TOL:
            raise PoleOnCurve("sampled arc touches the pole of the map")
        fprime = (1.0 - z0 * z0) / (den * den)
        k = (k + np.imag(-2.0 * z0 / den * np.exp(1j * tau))) / np.abs(fprime)
        tau = tau + np.angle(fprime)
        z = (z + z0) / den
        x, y = z.real, z.imag
        if self.reflected:
            y, tau, k = -y, -tau, -k
        # similarity into the caller's frame
        sim = self.from_unit_target
        w = sim.scale * np.exp(1j * sim.rotation) * (x + 1j * y) + complex(
            sim.translation.x, sim.translation.y
        )
        return w.real, w.imag, tau + sim.rotation, k / sim.scale

    def sample(self, n: int) -> list[CurveSample]:
        """n samples at uniform u including both endpoints, with cumulative
        arc length accumulated from chord lengths."""
        if n < 2:
            raise ValueError(f"need at least 2 samples, got {n!r}")
        u = np.linspace(0.0, 1.0, n)
        x, y, tau, k = self.eval_batch(u)
        s = np.concatenate(([0.0], np.cumsum(np.hypot(np.diff(x), np.diff(y)))))
        return [
            CurveSample(u=float(ui), point=Vec2(float(xi), float(yi)), tau=float(ti), k=float(ki), s=float(si))
            for ui, xi, yi, ti, ki, si in zip(u, x, y, tau, k, s)
        ]

    def verify(self, sweep: int = 10_000) -> "VerifyReport":
        return verify(self, sweep=sweep)


def _unit_chord_similarity(p1: Vec2, p2: Vec2, chord_half: float, chord_dir: float) -> Similarity:
    """Similarity sending p1 -> (-1, 0) and p2 -> (1, 0)."""
    scale = 1.0 / chord_half
    base = Similarity(rotation=-chord_dir, scale=scale)
    mid = Vec2(0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y))
    return Similarity(rotation=-chord_dir, scale=scale, translation=-base.apply(mid))


def build(
    bc: BoundaryConditions,
    config: SolverConfig = DEFAULT_CONFIG,
    world: Optional[Similarity] = None,
) -> SpiralCurve:
    """Construct the spiral interpolating the given boundary conditions.

    ``world``, when given, is the world -> chord-frame similarity (as
    returned by :func:`g2spiral.boundary.from_world`); the built curve then
    evaluates in world coordinates.  Otherwise it evaluates in the chord
    frame of ``bc``.
    """
    canon, reflected = canonicalize(bc)
    inv = compute_invariants(canon)
    check_feasibility(inv)

    theta = solve_theta(inv.q, inv.omega, config)
    t0 = t0_of_theta(theta, inv.q)
    arc = InvoluteArc(t0=t0, theta=theta)

    p1 = reflected_eval(arc.t1)
    p2 = reflected_eval(arc.t2)
    to_unit = _unit_chord_similarity(p1.point, p2.point, arc.chord_half, arc.chord_dir)

    alpha_b, beta_b = arc_boundary_angles(arc)
    base = UnitChordData(alpha_b, beta_b, p1.k * arc.chord_half, p2.k * arc.chord_half)
    target = UnitChordData(canon.alpha, canon.beta, canon.k1 * canon.c, canon.k2 * canon.c)
    moebius = fit_map(target, base)

    from_unit = Similarity(scale=canon.c)
    if world is not None:
        from_unit = world.inverse().compose(from_unit)
    return SpiralCurve(
        arc=arc,
        to_unit_base=to_unit,
        moebius=moebius,
        from_unit_target=from_unit,
        reflected=reflected,
        bc=bc,
    )


def build_world(
    a: Vec2,
    b: Vec2,
    tangent1: float,
    tangent2: float,
    k1: float,
    k2: float,
    n1: int = 0,
    n2: int = 0,
    config: SolverConfig = DEFAULT_CONFIG,
) -> SpiralCurve:
    """Pose a world-frame problem on its chord and build the curve in
    world coordinates."""
    bc, world = from_world(a, b, tangent1, tangent2, k1, k2, n1, n2)
    return build(bc, config=config, world=world)


def _curvature_error(measured: float, expected: float) -> tuple[float, float]:
    """(error, tolerance) with the relative/absolute switch near zero."""
    err = abs(measured - expected)
    if abs(expected) < CURVATURE_SMALL:
        return err, CURVATURE_ABS_TOL
    return err, CURVATURE_REL_TOL * abs(expected)


@dataclass(frozen=True)
class VerifyReport:
    """Residuals of a built curve against its own boundary conditions.

    Endpoint residuals compare the evaluated jets with the problem data;
    the recomputed invariants are measured from the sampled polyline
    (winding counts included) and compared with the input invariants.
    """

    chord_length: float
    pos_err_start: float
    pos_err_end: float
    tan_err_start: float
    tan_err_end: float
    curv_err_start: float
    curv_tol_start: float
    curv_err_end: float
    curv_tol_end: float
    monotone: bool
    monotone_worst: float
    q_in: float
    omega_in: float
    q_measured: float
    omega_measured: float
    n1_measured: int
    n2_measured: int
    residual_lambda: float
    residual_rho: float
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify(curve: SpiralCurve, sweep: int = 10_000) -> VerifyReport:
    """Re-derive every promised property of a built curve.

    Runs a dense parameter sweep and checks: endpoint positions, tangents
    and curvatures; curvature monotonicity with sign M; and the invariants
    (Q, omega) recomputed from the swept polyline, with winding counts
    measured by ray crossings.
    """
    bc = curve.bc
    m = bc.monotonicity
    a_exp = curve.from_unit_target.apply(Vec2(-1.0, 0.0))
    b_exp = curve.from_unit_target.apply(Vec2(1.0, 0.0))
    chord_len = (b_exp - a_exp).norm()
    chord_ang = (b_exp - a_exp).angle()

    x, y, tau, k = curve.eval_batch(np.linspace(0.0, 1.0, sweep))
    start = Vec2(float(x[0]), float(y[0]))
    end = Vec2(float(x[-1]), float(y[-1]))

    pos_err_start = (start - a_exp).norm()
    pos_err_end = (end - b_exp).norm()
    tan_err_start = abs(reduce_angle(float(tau[0]) - chord_ang - bc.alpha))
    tan_err_end = abs(reduce_angle(float(tau[-1]) - chord_ang - bc.beta))
    curv_err_start, curv_tol_start = _curvature_error(float(k[0]), bc.k1)
    curv_err_end, curv_tol_end = _curvature_error(float(k[-1]), bc.k2)

    steps = m * np.diff(k)
    monotone_worst = float(np.min(steps))
    monotone = monotone_worst >= -MONOTONE_SLACK

    inv_in = compute_invariants(bc)
    pts = np.column_stack((x, y))
    n1_meas, n2_meas = winding_counts(pts, start, end)
    bc_meas = BoundaryConditions(
        c=0.5 * (end - start).norm(),
        alpha=float(tau[0]) - chord_ang,
        beta=float(tau[-1]) - chord_ang,
        k1=float(k[0]),
        k2=float(k[-1]),
        n1=n1_meas,
        n2=n2_meas,
    )
    inv_meas = compute_invariants(bc_meas)

    checks = {
        "position_start": pos_err_start <= POSITION_TOL * chord_len,
        "position_end": pos_err_end <= POSITION_TOL * chord_len,
        "tangent_start": tan_err_start <= TANGENT_TOL,
        "tangent_end": tan_err_end <= TANGENT_TOL,
        "curvature_start": curv_err_start <= curv_tol_start,
        "curvature_end": curv_err_end <= curv_tol_end,
        "monotone": monotone,
        "q_invariant": abs(inv_meas.q - inv_in.q) <= INVARIANT_TOL,
        "omega_invariant": abs(inv_meas.omega - inv_in.omega) <= INVARIANT_TOL,
        "moebius_lambda": curve.moebius.residual_lambda <= 1e-8,
        "moebius_rho": curve.moebius.residual_rho <= 1e-8,
    }
    return VerifyReport(
        chord_length=chord_len,
        pos_err_start=pos_err_start,
        pos_err_end=pos_err_end,
        tan_err_start=tan_err_start,
        tan_err_end=tan_err_end,
        curv_err_start=curv_err_start,
        curv_tol_start=curv_tol_start,
        curv_err_end=curv_err_end,
        curv_tol_end=curv_tol_end,
        monotone=monotone,
        monotone_worst=monotone_worst,
        q_in=inv_in.q,
        omega_in=inv_in.omega,
        q_measured=inv_meas.q,
        omega_measured=inv_meas.omega,
        n1_measured=n1_meas,
        n2_measured=n2_meas,
        residual_lambda=curve.moebius.residual_lambda,
        residual_rho=curve.moebius.residual_rho,
        checks=checks,
    )
