"""Realize prescribed invariants (Q, omega) on the reflected involute.

For a fixed Q < 0 the chords carrying that Q form a one-parameter family

    t0(theta) = sqrt((theta^2 (1 - Q) - sin^2 theta) / (-Q)),

with t0 > theta strictly.  Along the family the mean cumulative slope is

    omega(theta) = theta - pi/2
                 + arctan( sin(theta) [ (t0 - theta) cos(theta) + sin(theta) ]
                           / ( t0 sin^2(theta) + cos(theta)(theta cos(theta) - sin(theta)) ) ),

a continuous, strictly increasing function with omega(0) = 0 that grows
without bound, so any omega > 0 is realized by exactly one theta.  The
positive roots theta_n of tan(theta) = theta satisfy omega(theta_n) =
n*pi for every Q, which pins the bisection bracket to
[theta_i, theta_{i+1}] with i = floor(omega / pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoConvergence


@dataclass(frozen=True)
class SolverConfig:
    """Bisection tolerances for inverting omega(theta).

    A bracket narrower than 2*pi shrinks below 1e-13 in about 60
    bisections; the default iteration budget leaves generous headroom.
    Below ``small_theta_threshold`` the arctangent argument ~ 3/(2 theta)
    is evaluated through its series to avoid cancellation.
    """

    theta_tol: float = 1e-13
    max_iter: int = 200
    small_theta_threshold: float = 1e-4

    def __post_init__(self) -> None:
        if not (self.theta_tol > 0.0):
            raise ValueError("theta_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


DEFAULT_CONFIG = SolverConfig()


def t0_of_theta(theta: float, q: float) -> float:
    """Arc midpoint parameter realizing the invariant Q on half-width theta."""
    if not q < 0.0:
        raise DomainError(f"Q must be negative, got {q!r}")
    if not theta > 0.0:
        raise DomainError(f"theta must be positive, got {theta!r}")
    s = math.sin(theta)
    return math.sqrt((theta * theta * (1.0 - q) - s * s) / -q)


def omega_of_theta(theta: float, q: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Mean cumulative slope realized by the arc of half-width theta."""
    if not q < 0.0:
        raise DomainError(f"Q must be negative, got {q!r}")
    if theta < 0.0:
        raise DomainError(f"theta must be >= 0, got {theta!r}")
    if theta == 0.0:
        return 0.0
    if theta < config.small_theta_threshold:
        arg = 1.5 / theta + (8.0 * q - 5.0) / (40.0 * q) * theta
        return theta - 0.5 * math.pi + math.atan(arg)
    t0 = t0_of_theta(theta, q)
    s = math.sin(theta)
    c = math.cos(theta)
    num = s * ((t0 - theta) * c + s)
    den = t0 * s * s + c * (theta * c - s)
    # den = (t0 - theta) sin^2 + theta - sin*cos > 0 since t0 > theta,
    # which keeps the principal arctangent branch continuous.
    assert den > 0.0, f"non-positive denominator at theta={theta!r}, q={q!r}"
    return theta - 0.5 * math.pi + math.atan2(num, den)


def omega_derivative_certificate(theta: float, q: float) -> float:
    """Nonnegative expression proportional to d(omega)/d(theta).

    Evaluates sinc^2(t) (sin^2 t + 2 sinc(t) cos t - 3 - |Q|) + 1 + |Q|
    with sinc(t) = sin(t)/t; positivity certifies the monotonicity of
    omega(theta).
    """
    if not theta > 0.0:
        raise DomainError(f"theta must be positive, got {theta!r}")
    aq = abs(q)
    s = math.sin(theta)
    c = math.cos(theta)
    sinc = s / theta
    return sinc * sinc * (s * s + 2.0 * sinc * c - 3.0 - aq) + 1.0 + aq


def theta_roots(n: int) -> float:
    """The n-th positive root of tan(theta) = theta (n >= 1).

    Solved as sin(theta) - theta cos(theta) = 0 by Newton iteration from
    the asymptotic start (2n+1) pi/2 - 2/((2n+1) pi), safeguarded by
    bisection inside (n pi, (2n+1) pi/2).
    """
    if n < 1:
        raise DomainError(f"root index must be >= 1, got {n!r}")
    lo = n * math.pi
    hi = (2 * n + 1) * 0.5 * math.pi

    def f(x: float) -> float:
        return math.sin(x) - x * math.cos(x)

    flo = f(lo)
    x = hi - 2.0 / ((2 * n + 1) * math.pi)
    for _ in range(100):
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (flo > 0.0):
            lo = x
            flo = fx
        else:
            hi = x
        step = fx / (x * math.sin(x))  # f'(x) = x sin(x)
        nxt = x - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 1e-15 * x:
            return nxt
        x = nxt
    return x


def _bracket_edge(i: int) -> float:
    return 0.0 if i == 0 else theta_roots(i)


def solve_theta(q: float, omega: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Invert omega(theta) = omega for theta by bracketed bisection.

    Requires a canonicalized problem: Q < 0 and omega > 0.  The initial
    bracket is [theta_i, theta_{i+1}] with i = floor(omega/pi); because
    the identity omega(theta_n) = n*pi is verified numerically rather than
    assumed, the bracket is widened to adjacent intervals if the endpoint
    values do not straddle the target.
    """
    if not q < 0.0:
        raise DomainError(f"Q must be negative, got {q!r}")
    if not omega > 0.0:
        raise DomainError(f"omega must be positive, got {omega!r}")

    i = int(omega // math.pi)
    lo = _bracket_edge(i)
    hi = _bracket_edge(i + 1)
    flo = omega_of_theta(lo, q, config) - omega
    fhi = omega_of_theta(hi, q, config) - omega
    widened = 0
    while flo > 0.0 and i > 0:
        i -= 1
        hi, fhi = lo, flo
        lo = _bracket_edge(i)
        flo = omega_of_theta(lo, q, config) - omega
        widened += 1
        if widened > 4:
            raise NoConvergence("could not bracket omega below the initial interval")
    while fhi < 0.0:
        i += 1
        lo, flo = hi, fhi
        hi = _bracket_edge(i + 1)
        fhi = omega_of_theta(hi, q, config) - omega
        widened += 1
        if widened > 4:
            raise NoConvergence("could not bracket omega above the initial interval")

    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    for _ in range(config.max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= config.theta_tol:
            return mid
        fmid = omega_of_theta(mid, q, config) - omega
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (fhi > 0.0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    raise NoConvergence(
        f"bisection did not reach tol={config.theta_tol!r} within {config.max_iter} iterations"
    )
