"""Elliptic conjugacy classes in PSL2(R): the exact solvability criterion
for class-triple products, and an independent floating-point verifier that
searches for an explicit conjugator.

The exact test and the numeric search are deliberately kept apart: verdicts
come from exact rational arithmetic only, the numeric side exists to
cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernels import backend


class InvalidAngleError(ValueError):
    pass


class NotEllipticError(ValueError):
    pass


class InconclusiveError(ValueError):
    """Sum of representatives too close to a boundary for the numeric
    search to be trustworthy."""


@dataclass(frozen=True, order=True)
class Angle:
    """Rational rotation parameter in [0, 1), exact."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @classmethod
    def parse(cls, text: str) -> "Angle":
        try:
            return cls(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidAngleError(f"bad angle {text!r}: {exc}") from exc

    @property
    def rep(self) -> Fraction:
        """Representative in [0, 1)."""
        return self.value

    def __str__(self):
        return str(self.value)


def _reps_nonzero(a: Angle, b: Angle, c: Angle):
    reps = (a.rep, b.rep, c.rep)
    if any(x == 0 for x in reps):
        raise InvalidAngleError("angles must be nonzero")
    return reps


def orevkov_solvable(a: Angle, b: Angle, c: Angle) -> bool:
    """Whether the three elliptic classes multiply to the identity:
    true iff the sum of the (0,1) representatives avoids the open
    interval (1, 2).  Exact rational arithmetic."""
    ra, rb, rc = _reps_nonzero(a, b, c)
    s = ra + rb + rc
    return not (1 < s < 2)


def sigma_matrix(a: Angle) -> np.ndarray:
    """Rotation matrix with angle rep(a) * pi."""
    t = math.pi * float(a.rep)
    return np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])


def class_of(w: np.ndarray) -> float:
    """Class parameter theta in (0, 1) of an elliptic matrix: normalize the
    sign so the lower-left entry is positive, then arccos(trace/2) / pi."""
    tr = float(w[0, 0] + w[1, 1])
    if abs(tr) >= 2:
        raise NotEllipticError(f"trace {tr} not in (-2, 2)")
    ll = float(w[1, 0])
    if ll == 0:
        raise NotEllipticError("zero lower-left entry")
    if ll < 0:
        tr = -tr
    return math.acos(max(-1.0, min(1.0, tr / 2.0))) / math.pi


@dataclass(frozen=True)
class GridConfig:
    phi_step: float = 0.005
    s_max: float = 5.0
    s_step: float = 0.01
    tolerance: float = 1e-3
    boundary_margin: float = 0.02
    refine_rounds: int = 4


def numeric_triple_solvable(
    a: Angle, b: Angle, c: Angle, config: GridConfig = GridConfig()
) -> bool:
    """Search conjugators g = R(phi*pi) diag(e^s, e^-s) on a grid, with
    local refinement, for one making sigma_a * g sigma_b g^-1 land in the
    class inverse to c.  Independent of the exact criterion."""
    ra, rb, rc = _reps_nonzero(a, b, c)
    s = ra + rb + rc
    margin = config.boundary_margin
    if abs(float(s) - 1.0) < margin or abs(float(s) - 2.0) < margin:
        raise InconclusiveError(
            f"representative sum {s} within {margin} of a boundary"
        )
    fa, fb, fc = float(ra), float(rb), float(rc)
    nphi = int(round(1.0 / config.phi_step))
    ns = int(round(config.s_max / config.s_step)) + 1
    dist, phi, sbest = backend.grid_class_distance(
        fa, fb, fc, 0.0, config.phi_step, nphi, 0.0, config.s_step, ns
    )
    dphi, ds = config.phi_step, config.s_step
    for _ in range(config.refine_rounds):
        if not math.isfinite(dist):
            break
        dphi /= 10.0
        ds /= 10.0
        dist, phi, sbest = backend.grid_class_distance(
            fa, fb, fc, phi - 15 * dphi, dphi, 31, max(0.0, sbest - 15 * ds), ds, 31
        )
    return dist < config.tolerance
