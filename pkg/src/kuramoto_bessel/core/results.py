"""Result records returned by the kernel, the solver and the sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from kuramoto_bessel.core.grid import EvaluationGrid
from kuramoto_bessel.core.order import Order
from kuramoto_bessel.core.types import Record


@dataclass(frozen=True)
class BesselValue:
    """I_ν(x), or e^{-x}·I_ν(x) when ``scaled`` is set."""

    value: float
    scaled: bool
    order: Order
    argument: float

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class RatioValue:
    """Ψ_ν(x) = I_{ν+1}(x) / I_ν(x)."""

    value: float
    order: Order
    argument: float

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class OrderParameterSolution:
    """Nontrivial solution of r = Ψ_ν(2Kr).

    Attributes:
        K: Coupling strength
        order: Bessel order ν
        r: Order parameter
        residual: |r - Ψ_ν(2Kr)| at the returned r
        bracket_lo: Lower end of the initial bracket
        bracket_hi: Upper end of the initial bracket
        iterations: Newton/bisection steps taken
        sign_changes: Sign changes seen on the multiplicity pre-scan
            (1 when the bracket is known to hold a unique root)
    """

    K: float
    order: Order
    r: float
    residual: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    sign_changes: int = 1

    def as_record(self) -> Record:
        return {
            "K": self.K,
            "nu": self.order.nu,
            "r": self.r,
            "residual": self.residual,
            "bracket_lo": self.bracket_lo,
            "bracket_hi": self.bracket_hi,
            "iterations": self.iterations,
            "sign_changes": self.sign_changes,
        }


@dataclass(frozen=True)
class InequalityReport:
    """Margin statistics of one inequality over a grid.

    The report is numerical evidence on finitely many points, never a proof.
    """

    inequality_id: str
    order: Order
    grid: EvaluationGrid
    min_margin: float
    argmin_x: float
    violations: int

    @property
    def holds(self) -> bool:
        """True when every grid point has a strictly positive margin."""
        return self.violations == 0

    @property
    def note(self) -> str:
        return f"checked on {self.grid.points} points; grid evidence only"

    def as_record(self) -> Record:
        return {
            "inequality": self.inequality_id,
            "nu": self.order.nu,
            "x_min": self.grid.lo,
            "x_max": self.grid.hi,
            "points": self.grid.points,
            "spacing": self.grid.spacing.value,
            "min_margin": self.min_margin,
            "argmin_x": self.argmin_x,
            "violations": self.violations,
        }


@dataclass(frozen=True)
class ApproximationRow:
    """One K of the error table: r(K), its bounds and both approximations."""

    K: float
    r: float
    lower_sqrt: float
    upper_half: float
    A: float
    L: float
    Lpol: float

    @property
    def delta_A(self) -> float:
        return self.A - self.r

    @property
    def delta_Lpol(self) -> float:
        return self.Lpol - self.r

    @property
    def delta_L(self) -> float:
        return self.L - self.r

    def as_record(self) -> Record:
        return {
            "K": self.K,
            "A_minus_r": self.delta_A,
            "Lpol_minus_r": self.delta_Lpol,
            "r": self.r,
            "L_minus_r": self.delta_L,
        }


class BoundKind(str, Enum):
    """Closed-form upper bounds on r(K) for general ν."""

    HALF = "half"
    SQRT = "sqrt"
    QUARTER_POWER = "quarter_power"
    SHARP = "sharp"


@dataclass(frozen=True)
class GeneralBound:
    """Upper bound on r(K) with the range of ν where it is known to hold.

    ``proven`` is False where the bound is only conjectured for this order.
    """

    value: float
    kind: BoundKind
    order: Order
    K: float
    proven: bool
