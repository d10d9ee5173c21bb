"""Planar primitives: angle reduction, 2D vectors and similarity transforms.

Angles are stored as plain radians everywhere.  Interval membership is
enforced only through :func:`reduce_angle`; all other angle comparisons are
done modulo 2*pi with a tolerance (see :func:`angle_delta`) to avoid
branch-cut false negatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TAU = math.tau


def reduce_angle(x: float, sign: int = 1) -> float:
    """Reduce ``x`` modulo 2*pi into the half-open interval used for
    boundary angles: ``(-pi, pi]`` when ``sign`` is +1, ``[-pi, pi)`` when
    ``sign`` is -1.
    """
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    r = math.remainder(x, TAU)
    # math.remainder returns values in [-pi, pi]; move the off-side endpoint.
    if sign >= 0:
        if r <= -math.pi:
            r += TAU
    elif r >= math.pi:
        r -= TAU
    return r


def angle_delta(a: float, b: float) -> float:
    """Signed difference ``a - b`` reduced to ``(-pi, pi]``."""
    return reduce_angle(a - b)


@dataclass(frozen=True)
class Vec2:
    """Immutable 2D point / vector."""

    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Direction of the vector in radians."""
        return math.atan2(self.y, self.x)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "Vec2":
        return Vec2(z.real, z.imag)


ORIGIN = Vec2(0.0, 0.0)


@dataclass(frozen=True)
class Similarity:
    """Orientation-preserving similarity ``p -> scale * R(rotation) p + translation``.

    Tangent angles shift by ``rotation``; curvatures divide by ``scale``
    (shrinking coordinates by a factor multiplies curvatures by the same
    factor).
    """

    rotation: float = 0.0
    scale: float = 1.0
    translation: Vec2 = ORIGIN

    def __post_init__(self) -> None:
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise ValueError(f"scale must be positive and finite, got {self.scale!r}")
        if not math.isfinite(self.rotation):
            raise ValueError("rotation must be finite")

    def apply(self, p: Vec2) -> Vec2:
        c = math.cos(self.rotation)
        s = math.sin(self.rotation)
        return Vec2(
            self.scale * (c * p.x - s * p.y) + self.translation.x,
            self.scale * (s * p.x + c * p.y) + self.translation.y,
        )

    def apply_jet(self, p: Vec2, tau: float, k: float) -> tuple[Vec2, float, float]:
        """Transform a first/second-order jet: point, tangent angle, curvature."""
        return self.apply(p), tau + self.rotation, k / self.scale

    def compose(self, inner: "Similarity") -> "Similarity":
        """Return ``self o inner`` (apply ``inner`` first)."""
        return Similarity(
            rotation=self.rotation + inner.rotation,
            scale=self.scale * inner.scale,
            translation=self.apply(inner.translation),
        )

    def inverse(self) -> "Similarity":
        inv_scale = 1.0 / self.scale
        c = math.cos(-self.rotation)
        s = math.sin(-self.rotation)
        tx = -inv_scale * (c * self.translation.x - s * self.translation.y)
        ty = -inv_scale * (s * self.translation.x + c * self.translation.y)
        return Similarity(-self.rotation, inv_scale, Vec2(tx, ty))


def similarity_to_segment(a: Vec2, b: Vec2) -> Similarity:
    """Similarity carrying the segment ``a -> b`` onto ``(-L/2, 0) -> (L/2, 0)``
    where ``L = |ab|``, i.e. into the chord-aligned frame (unit scale)."""
    mid = Vec2(0.5 * (a.x + b.x), 0.5 * (a.y + b.y))
    rot = -(b - a).angle()
    base = Similarity(rotation=rot, scale=1.0)
    shifted = base.apply(mid)
    return Similarity(rotation=rot, scale=1.0, translation=-shifted)
