"""Jones-vector polarization states and the circular-analyzer detection model.

Basis {|x>, |y>}: |y> is the cavity-mode polarization, |x> the orthogonal
linear polarization. Only the |y> component interacts with the cavity; |x>
reflects off the planar surface with a configurable amplitude r_x
(default 1, a perfect mirror).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError

_SQRT2 = math.sqrt(2.0)


class Analyzer(enum.Enum):
    """Detection channel behind the quarter-wave plate + polarizer."""

    CO_CIRCULAR = "co"        # same circular handedness as the incident light
    CROSS_CIRCULAR = "cross"  # opposite handedness
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class PolarizationState:
    """Jones vector (c_x, c_y); not necessarily normalized."""

    c_x: complex
    c_y: complex

    def norm_sq(self) -> float:
        return abs(self.c_x) ** 2 + abs(self.c_y) ** 2

    def normalize(self) -> "PolarizationState":
        n = math.sqrt(self.norm_sq())
        if n == 0.0:
            raise DegenerateStateError("cannot normalize a zero Jones vector")
        return PolarizationState(self.c_x / n, self.c_y / n)

    def overlap(self, other: "PolarizationState") -> complex:
        """<self|other>."""
        return (np.conj(self.c_x) * other.c_x + np.conj(self.c_y) * other.c_y)


def right_circular() -> PolarizationState:
    """(|x> + i|y>)/sqrt(2), the incident probe polarization."""
    return PolarizationState(1.0 / _SQRT2, 1j / _SQRT2)


def left_circular() -> PolarizationState:
    return PolarizationState(1.0 / _SQRT2, -1j / _SQRT2)


_ANALYZER_STATES = {
    Analyzer.CO_CIRCULAR: right_circular(),
    Analyzer.CROSS_CIRCULAR: left_circular(),
    Analyzer.X: PolarizationState(1.0, 0.0),
    Analyzer.Y: PolarizationState(0.0, 1.0),
}


def reflected_amplitudes(r: complex, psi_in: PolarizationState,
                         r_x: complex = 1.0) -> PolarizationState:
    """Unnormalized Jones vector after reflection: (r_x c_x, r c_y)."""
    return PolarizationState(r_x * psi_in.c_x, r * psi_in.c_y)


def reflect_polarization(r: complex, psi_in: PolarizationState,
                         r_x: complex = 1.0) -> tuple[PolarizationState, float]:
    """Reflect psi_in off the cavity with spin-conditioned amplitude r.

    Returns the normalized reflected state and the pre-normalization
    norm^2, which is the probability weight of collecting the photon.
    Raises DegenerateStateError when the reflected vector vanishes.
    """
    raw = reflected_amplitudes(r, psi_in, r_x)
    weight = raw.norm_sq()
    return raw.normalize(), weight


def channel_intensity(psi_out: PolarizationState, analyzer: Analyzer) -> float:
    """|<analyzer|psi_out>|^2 using the (unnormalized) reflected amplitudes."""
    a = _ANALYZER_STATES[analyzer]
    return float(abs(a.overlap(psi_out)) ** 2)
