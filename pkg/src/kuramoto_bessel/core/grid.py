"""Evaluation grids for inequality sweeps and curve data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from kuramoto_bessel.core.exceptions import ValidationError
from kuramoto_bessel.core.types import FloatArray


class Spacing(str, Enum):
    """How grid points are distributed between the endpoints."""

    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class EvaluationGrid:
    """Sample points in x or K.

    Attributes:
        lo: First point (must be > 0 for logarithmic grids)
        hi: Last point
        points: Number of samples, at least 2
        spacing: Linear or logarithmic distribution
    """

    lo: float
    hi: float
    points: int
    spacing: Spacing = Spacing.LOGARITHMIC

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValidationError(f"Grid endpoints must be finite: [{self.lo}, {self.hi}]")
        if not lo < hi:
            raise ValidationError(f"Grid needs lo < hi, got [{lo}, {hi}]")
        if isinstance(self.points, bool) or int(self.points) != self.points:
            raise ValidationError(f"Grid point count must be an integer, got {self.points!r}")
        if self.points < 2:
            raise ValidationError(f"Grid needs at least 2 points, got {self.points}")
        spacing = Spacing(self.spacing)
        if spacing is Spacing.LOGARITHMIC and lo <= 0.0:
            raise ValidationError(f"Logarithmic grid needs lo > 0, got {lo}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "points", int(self.points))
        object.__setattr__(self, "spacing", spacing)

    @classmethod
    def linear(cls, lo: float, hi: float, points: int) -> EvaluationGrid:
        return cls(lo, hi, points, Spacing.LINEAR)

    @classmethod
    def logarithmic(cls, lo: float, hi: float, points: int) -> EvaluationGrid:
        return cls(lo, hi, points, Spacing.LOGARITHMIC)

    def values(self) -> FloatArray:
        """Grid points in ascending order, endpoints included exactly."""
        if self.spacing is Spacing.LINEAR:
            pts = np.linspace(self.lo, self.hi, self.points)
        else:
            pts = np.geomspace(self.lo, self.hi, self.points)
        pts[0], pts[-1] = self.lo, self.hi
        return pts

    def __len__(self) -> int:
        return self.points
