"""Pydantic models shared by the HTTP service, the CLI and the file formats.

``Problem`` is the external statement of a solve (chord-frame or
world-frame, angles in radians or degrees); ``CurveDump`` is the
self-contained result record: problem echo, invariants, solved arc
parameters, map parameters, samples and the verification report.  A dump
can be re-checked from its samples alone.
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .boundary import BoundaryConditions
from .geometry import Similarity, Vec2
from .pipeline import SpiralCurve, VerifyReport
from .solver import SolverConfig

DUMP_FORMAT = "g2spiral.curvedump/1"


class SolverSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    theta_tol: float = 1e-13
    max_iter: int = 200
    small_theta_threshold: float = 1e-4

    def to_config(self) -> SolverConfig:
        return SolverConfig(
            theta_tol=self.theta_tol,
            max_iter=self.max_iter,
            small_theta_threshold=self.small_theta_threshold,
        )


class Problem(BaseModel):
    """A two-point G2 problem, posed either on the chord or in world
    coordinates (exactly one group of fields must be present)."""

    model_config = ConfigDict(extra="forbid")

    # chord frame
    c: Optional[float] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    # world frame
    a: Optional[tuple[float, float]] = None
    b: Optional[tuple[float, float]] = None
    tangent1: Optional[float] = None
    tangent2: Optional[float] = None
    # common
    k1: float
    k2: float
    n1: int = Field(default=0, ge=0)
    n2: int = Field(default=0, ge=0)
    angle_unit: Literal["rad", "deg"] = "rad"

    @model_validator(mode="after")
    def _one_frame(self) -> "Problem":
        chord = (self.c, self.alpha, self.beta)
        world = (self.a, self.b, self.tangent1, self.tangent2)
        chord_given = all(v is not None for v in chord)
        world_given = all(v is not None for v in world)
        if chord_given == world_given:
            raise ValueError(
                "give either the chord-frame fields (c, alpha, beta) or the "
                "world-frame fields (a, b, tangent1, tangent2), not both"
            )
        if chord_given and any(v is not None for v in world):
            raise ValueError("chord-frame problem must not set world-frame fields")
        if world_given and any(v is not None for v in chord):
            raise ValueError("world-frame problem must not set chord-frame fields")
        return self

    def _angle(self, value: float) -> float:
        return math.radians(value) if self.angle_unit == "deg" else value

    def to_boundary(self) -> tuple[BoundaryConditions, Optional[Similarity]]:
        """Chord-frame boundary conditions plus the world -> chord
        similarity (None for a chord-frame problem)."""
        from .boundary import from_world

        if self.c is not None:
            bc = BoundaryConditions(
                c=self.c,
                alpha=self._angle(self.alpha),
                beta=self._angle(self.beta),
                k1=self.k1,
                k2=self.k2,
                n1=self.n1,
                n2=self.n2,
            )
            return bc, None
        return from_world(
            Vec2(*self.a),
            Vec2(*self.b),
            self._angle(self.tangent1),
            self._angle(self.tangent2),
            self.k1,
            self.k2,
            self.n1,
            self.n2,
        )


class InvariantsOut(BaseModel):
    q: float
    omega: float
    m: int


class SolvedOut(BaseModel):
    theta: float
    t0: float
    t1: float
    t2: float
    chord_half: float
    chord_dir: float


class MoebiusOut(BaseModel):
    z0: tuple[float, float]
    lam: float
    rho_scale: float
    residual_lambda: float
    residual_rho: float


class SampleOut(BaseModel):
    u: float
    x: float
    y: float
    tau: float
    k: float
    s: Optional[float] = None


class ReportOut(BaseModel):
    passed: bool
    checks: dict[str, bool]
    residuals: dict[str, float]
    n1_measured: int
    n2_measured: int

    @classmethod
    def from_report(cls, rep: VerifyReport) -> "ReportOut":
        return cls(
            passed=rep.passed,
            checks=dict(rep.checks),
            residuals={
                "pos_start": rep.pos_err_start,
                "pos_end": rep.pos_err_end,
                "tan_start": rep.tan_err_start,
                "tan_end": rep.tan_err_end,
                "curv_start": rep.curv_err_start,
                "curv_end": rep.curv_err_end,
                "monotone_worst": rep.monotone_worst,
                "q_drift": abs(rep.q_measured - rep.q_in),
                "omega_drift": abs(rep.omega_measured - rep.omega_in),
                "moebius_lambda": rep.residual_lambda,
                "moebius_rho": rep.residual_rho,
            },
            n1_measured=rep.n1_measured,
            n2_measured=rep.n2_measured,
        )


class CurveDump(BaseModel):
    """Self-contained solve record; verification can be re-run from the
    embedded samples."""

    model_config = ConfigDict(extra="forbid")

    format: Literal["g2spiral.curvedump/1"] = DUMP_FORMAT
    problem: Problem
    invariants: InvariantsOut
    solved: SolvedOut
    moebius: MoebiusOut
    reflected: bool
    samples: list[SampleOut]
    verification: ReportOut
    overlay: Optional[list[tuple[float, float]]] = None


class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    problem: Problem
    samples: int = Field(default=512, ge=2, le=1_000_000)
    solver: Optional[SolverSettings] = None


class InvariantsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    problem: Problem


class InvariantsResponse(BaseModel):
    q: float
    omega: float
    m: int
    feasible: bool
    error: Optional[str] = None


class VerifyResponse(BaseModel):
    passed: bool
    checks: dict[str, bool]
    residuals: dict[str, float]


class ErrorBody(BaseModel):
    error: str
    detail: str


def dump_from_curve(
    curve: SpiralCurve,
    problem: Problem,
    n_samples: int = 512,
    overlay: Optional[list[tuple[float, float]]] = None,
    sweep: int = 10_000,
) -> CurveDump:
    """Assemble the full result record for a built curve."""
    from .boundary import compute_invariants

    report = curve.verify(sweep=sweep)
    inv = compute_invariants(curve.bc)
    samples = curve.sample(n_samples)
    return CurveDump(
        problem=problem,
        invariants=InvariantsOut(q=inv.q, omega=inv.omega, m=inv.m),
        solved=SolvedOut(
            theta=curve.arc.theta,
            t0=curve.arc.t0,
            t1=curve.arc.t1,
            t2=curve.arc.t2,
            chord_half=curve.arc.chord_half,
            chord_dir=curve.arc.chord_dir,
        ),
        moebius=MoebiusOut(
            z0=(curve.moebius.z0.real, curve.moebius.z0.imag),
            lam=curve.moebius.lam,
            rho_scale=curve.moebius.rho_scale,
            residual_lambda=curve.moebius.residual_lambda,
            residual_rho=curve.moebius.residual_rho,
        ),
        reflected=curve.reflected,
        samples=[
            SampleOut(u=s.u, x=s.point.x, y=s.point.y, tau=s.tau, k=s.k, s=s.s) for s in samples
        ],
        verification=ReportOut.from_report(report),
        overlay=overlay,
    )
