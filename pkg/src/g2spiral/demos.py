"""Canned demo problems with their oracle overlays.

* ``tractrix``   - boundary data read off an arc of the polar tractrix;
                   the solved curve must land exactly on the tractrix.
                   The arc is traversed from the tightly-curled end so the
                   curve curls around its start point.
* ``cornu``      - boundary data borrowed from a clothoid arc spanning the
                   inflection; the solved curve shares the end jets but is
                   a different spiral, so the overlay separates visibly.
* ``concentric`` - boundary circles of curvature are concentric, realized
                   by a reflected-involute arc whose ends are one full
                   turn apart; self-interpolating data, the solve
                   reproduces the arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundary import BoundaryConditions, from_world
from .geometry import Similarity, Vec2
from .involute import InvoluteArc, reflected_eval
from .oracles import cornu_eval, tractrix_eval, winding_counts

DEMO_NAMES = ("tractrix", "cornu", "concentric")


@dataclass(frozen=True)
class DemoSetup:
    name: str
    bc: BoundaryConditions
    world: Similarity
    overlay: list[tuple[float, float]]


def _tractrix_setup(leash: float = 1.0, s1: float = 0.2, s2: float = 4.5, n_overlay: int = 2048) -> DemoSetup:
    grid = np.linspace(s2, s1, n_overlay)
    pts = [tractrix_eval(leash, s).point for s in grid]
    p_start = tractrix_eval(leash, s2)
    p_end = tractrix_eval(leash, s1)
    # reversed traversal: tangents turn by pi, signed curvatures flip
    n1, n2 = winding_counts(pts, p_start.point, p_end.point)
    bc, world = from_world(
        p_start.point,
        p_end.point,
        p_start.tau + math.pi,
        p_end.tau + math.pi,
        -p_start.k,
        -p_end.k,
        n1,
        n2,
    )
    return DemoSetup("tractrix", bc, world, [(p.x, p.y) for p in pts])


def _cornu_setup(a: float = 1.0, s1: float = -1.2, s2: float = 1.9, n_overlay: int = 1024) -> DemoSetup:
    grid = np.linspace(s1, s2, n_overlay)
    pts = [cornu_eval(a, s)[0] for s in grid]
    pa, tau_a, ka = cornu_eval(a, s1)
    pb, tau_b, kb = cornu_eval(a, s2)
    n1, n2 = winding_counts(pts, pa, pb)
    bc, world = from_world(pa, pb, tau_a, tau_b, ka, kb, n1, n2)
    return DemoSetup("cornu", bc, world, [(p.x, p.y) for p in pts])


def _concentric_setup(t0: float = 1.5 * math.pi, n_overlay: int = 2048) -> DemoSetup:
    # ends one full turn apart share their center of curvature
    arc = InvoluteArc(t0=t0, theta=math.pi)
    grid = np.linspace(arc.t1, arc.t2, n_overlay)
    pts = [reflected_eval(t).point for t in grid]
    p1 = reflected_eval(arc.t1)
    p2 = reflected_eval(arc.t2)
    n1, n2 = winding_counts(pts, p1.point, p2.point)
    bc, world = from_world(p1.point, p2.point, p1.tau, p2.tau, p1.k, p2.k, n1, n2)
    return DemoSetup("concentric", bc, world, [(p.x, p.y) for p in pts])


def demo_setup(name: str) -> DemoSetup:
    if name == "tractrix":
        return _tractrix_setup()
    if name == "cornu":
        return _cornu_setup()
    if name == "concentric":
        return _concentric_setup()
    raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMO_NAMES)}")
