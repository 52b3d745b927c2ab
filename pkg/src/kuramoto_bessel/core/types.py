"""Type aliases for kuramoto-bessel."""

from pathlib import Path
from typing import TYPE_CHECKING, TypeAlias

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from kuramoto_bessel.core.order import Order

# Path types
PathLike: TypeAlias = str | Path

# Anything accepted where a Bessel order is expected
OrderLike: TypeAlias = "Order | float | int"

# Real arrays handed to and returned from vectorised helpers
FloatArray: TypeAlias = npt.NDArray[np.float64]

# One output record: column name to value
Record: TypeAlias = dict[str, "float | int | str | None"]
