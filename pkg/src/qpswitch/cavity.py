"""Spin-dependent reflection of a one-sided cavity coupled to a quantum dot.

All rates and detunings are linear frequencies in GHz (values quoted as
"rate/2pi"). The input-output reflection formula is a ratio of such
quantities, so uniform linear units are exact; no 2*pi factors appear
anywhere in this module.

Sign convention: a probe detuning delta = nu_probe - nu_cavity, and each
transition carries detuning_from_cavity = nu_transition - nu_cavity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


class SpinBranch(enum.Enum):
    """Electron-spin ground state selecting which transitions the probe sees."""

    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class TransitionParams:
    """One optical transition of the charged dot, as seen from the cavity.

    detuning_from_cavity : transition frequency minus cavity frequency (GHz)
    g                    : transition-cavity coupling strength (GHz)
    gamma                : dipole (polarization) decay rate (GHz)
    branch               : spin ground state this transition belongs to
    label                : optional name, e.g. "sigma1"
    """

    detuning_from_cavity: float
    g: float
    gamma: float
    branch: SpinBranch
    label: str = ""

    def __post_init__(self):
        if self.g < 0:
            raise DomainError(f"transition g must be >= 0, got {self.g}")
        if self.gamma <= 0:
            raise DomainError(f"transition gamma must be > 0, got {self.gamma}")


@dataclass(frozen=True)
class CavitySpinParams:
    """Cavity decay rates plus the list of dot transitions.

    kappa    : total cavity energy decay rate (GHz)
    kappa_ex : decay rate into the collected reflection mode (GHz),
               0 <= kappa_ex <= kappa
    """

    kappa: float
    kappa_ex: float
    transitions: tuple[TransitionParams, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kappa <= 0:
            raise DomainError(f"kappa must be > 0, got {self.kappa}")
        if not 0 <= self.kappa_ex <= self.kappa:
            raise DomainError(
                f"kappa_ex must lie in [0, kappa], got {self.kappa_ex}")
        object.__setattr__(self, "transitions", tuple(self.transitions))

    @property
    def alpha(self) -> float:
        """Interference contrast alpha = kappa_ex / kappa."""
        return self.kappa_ex / self.kappa

    def branch_transitions(self, branch: SpinBranch) -> tuple[TransitionParams, ...]:
        return tuple(t for t in self.transitions if t.branch is branch)

    def cooperativity(self, branch: SpinBranch = SpinBranch.UP) -> float:
        """Cooperativity of the strongest transition on the given branch (0 if bare)."""
        trans = self.branch_transitions(branch)
        if not trans:
            return 0.0
        t = max(trans, key=lambda t: t.g)
        return cooperativity(t.g, self.kappa, t.gamma)


def cooperativity(g: float, kappa: float, gamma: float) -> float:
    """Cooperativity C = 2 g^2 / (kappa gamma)."""
    if kappa <= 0:
        raise DomainError(f"kappa must be > 0, got {kappa}")
    if gamma <= 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    return 2.0 * g * g / (kappa * gamma)


def on_resonance_coefficients(alpha: float, C: float) -> tuple[float, float]:
    """Reflection coefficients of the resonant probe for the two spin states.

    r_up = 1 - 2 alpha / (1 + C)   (dot coupled, cooperativity C)
    r_down = -(2 alpha - 1)        (dot decoupled)

    For C > 1 and alpha > 0.5 the two have opposite signs, i.e. the spin
    state flips the sign of the reflected field.
    """
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    if C < 0:
        raise DomainError(f"cooperativity must be >= 0, got {C}")
    r_up = 1.0 - 2.0 * alpha / (1.0 + C)
    r_down = -(2.0 * alpha - 1.0)
    return r_up, r_down


def reflection_amplitude(params: CavitySpinParams, branch: SpinBranch,
                         probe_detuning) -> complex:
    """Complex reflection amplitude r(delta) of the one-sided cavity.

    r(delta) = 1 - kappa_ex / [ i delta + kappa/2
                                + sum_j g_j^2 / (i (delta - delta_j) + gamma_j) ]

    where the sum runs over the transitions assigned to the given spin
    branch. |r| <= 1 for all valid parameters (passive one-port). At
    delta = 0 with a single resonant transition this reduces exactly to
    on_resonance_coefficients.

    probe_detuning may be a scalar or an ndarray (GHz); the return matches.
    """
    delta = np.asarray(probe_detuning, dtype=float)
    denom = 1j * delta + params.kappa / 2.0
    for t in params.branch_transitions(branch):
        denom = denom + t.g ** 2 / (1j * (delta - t.detuning_from_cavity) + t.gamma)
    r = 1.0 - params.kappa_ex / denom
    if np.ndim(probe_detuning) == 0:
        return complex(r)
    return r
