"""Electron-spin qubit dynamics: rotations, Larmor precession, dephasing,
and optical-pumping initialization.

States are 2x2 density matrices in the {|up>, |down>} basis. All channel
operations are pure functions returning new states; SpinState arrays are
frozen after construction.

Times are ns, frequencies linear GHz, so one Larmor period is
1/larmor_freq ns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cavity import SpinBranch
from .errors import DomainError

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_ID = np.eye(2, dtype=complex)


class SpinState:
    """Immutable 2x2 density matrix with Bloch-vector accessors.

    Basis ordering is (|up>, |down>); the Bloch z component is
    p_up - p_down.
    """

    __slots__ = ("rho",)

    def __init__(self, rho):
        rho = np.array(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise DomainError(f"density matrix must be 2x2, got {rho.shape}")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    def __setattr__(self, name, value):
        raise AttributeError("SpinState is immutable")

    @classmethod
    def up(cls) -> "SpinState":
        return cls([[1, 0], [0, 0]])

    @classmethod
    def down(cls) -> "SpinState":
        return cls([[0, 0], [0, 1]])

    @classmethod
    def from_bloch(cls, sx: float, sy: float, sz: float) -> "SpinState":
        if math.sqrt(sx * sx + sy * sy + sz * sz) > 1.0 + 1e-9:
            raise DomainError("Bloch vector length exceeds 1")
        return cls(0.5 * (_ID + sx * _SX + sy * _SY + sz * _SZ))

    @classmethod
    def mixed(cls, p_up: float) -> "SpinState":
        """Diagonal mixture with the given spin-up population."""
        if not 0 <= p_up <= 1:
            raise DomainError(f"p_up must lie in [0, 1], got {p_up}")
        return cls([[p_up, 0], [0, 1 - p_up]])

    @property
    def p_up(self) -> float:
        return float(self.rho[0, 0].real)

    @property
    def p_down(self) -> float:
        return float(self.rho[1, 1].real)

    @property
    def bloch(self) -> tuple[float, float, float]:
        sx = float(np.trace(self.rho @ _SX).real)
        sy = float(np.trace(self.rho @ _SY).real)
        sz = float(np.trace(self.rho @ _SZ).real)
        return sx, sy, sz

    @property
    def coherence(self) -> complex:
        """Off-diagonal element rho[0, 1] = (sx - i sy)/2."""
        return complex(self.rho[0, 1])

    def purity(self) -> float:
        return float(np.trace(self.rho @ self.rho).real)

    def is_valid(self, tol: float = 1e-12) -> bool:
        """Hermitian, unit trace, positive semidefinite (within tol)."""
        h = np.max(np.abs(self.rho - self.rho.conj().T))
        t = abs(np.trace(self.rho) - 1.0)
        eigs = np.linalg.eigvalsh(0.5 * (self.rho + self.rho.conj().T))
        return bool(h <= tol and t <= tol and eigs.min() >= -tol)

    def __repr__(self):
        sx, sy, sz = self.bloch
        return f"SpinState(bloch=({sx:+.4f}, {sy:+.4f}, {sz:+.4f}))"


@dataclass(frozen=True)
class SpinEnvironment:
    """Magnetic-field and pumping context for the spin qubit.

    larmor_freq        : Larmor precession frequency (GHz); may be None for
                         purely spectroscopic work
    t2_star            : inhomogeneous dephasing time (ns)
    pump_time_constant : optical-pumping initialization time constant (ns)
    init_fidelity      : population prepared in the intended state
    envelope           : dephasing envelope shape, "gaussian" (default,
                         quasi-static nuclear background) or "exponential"
    """

    larmor_freq: float | None = None
    t2_star: float = math.inf
    pump_time_constant: float = 1.27
    init_fidelity: float = 1.0
    envelope: str = "gaussian"

    def __post_init__(self):
        if self.larmor_freq is not None and self.larmor_freq < 0:
            raise DomainError("larmor_freq must be >= 0")
        if not self.t2_star > 0:
            raise DomainError("t2_star must be > 0")
        if not self.pump_time_constant > 0:
            raise DomainError("pump_time_constant must be > 0")
        if not 0 <= self.init_fidelity <= 1:
            raise DomainError("init_fidelity must lie in [0, 1]")
        if self.envelope not in ("gaussian", "exponential"):
            raise DomainError(f"unknown envelope {self.envelope!r}")

    def dephasing_factor(self, tau: float) -> float:
        """Coherence attenuation over an uninterrupted interval tau."""
        if not math.isfinite(self.t2_star):
            return 1.0
        x = tau / self.t2_star
        if self.envelope == "gaussian":
            return math.exp(-x * x)
        return math.exp(-x)


def rotate(spin: SpinState, angle: float, axis=(1.0, 0.0, 0.0)) -> SpinState:
    """Unitary rotation rho -> U rho U+ with U = exp(-i angle (axis.sigma)/2)."""
    ax = np.asarray(axis, dtype=float)
    n = np.linalg.norm(ax)
    if abs(n - 1.0) > 1e-9:
        raise DomainError(f"rotation axis must be a unit vector, |axis| = {n}")
    half = 0.5 * angle
    u = (math.cos(half) * _ID
         - 1j * math.sin(half) * (ax[0] * _SX + ax[1] * _SY + ax[2] * _SZ))
    return SpinState(u @ spin.rho @ u.conj().T)


def rotation_angle_from_power(power_uw: float, p_pi_half_uw: float = 40.0) -> float:
    """Rotation angle of a picosecond pulse of peak power P (microwatt).

    theta = (pi/2) sqrt(P / P_pi/2): the Rabi angle scales with the field
    amplitude, and P_pi/2 is the calibrated pi/2 power (40 uW).
    """
    if power_uw < 0:
        raise DomainError(f"pulse power must be >= 0, got {power_uw}")
    if p_pi_half_uw <= 0:
        raise DomainError("pi/2 calibration power must be > 0")
    return 0.5 * math.pi * math.sqrt(power_uw / p_pi_half_uw)


def larmor_precess(spin: SpinState, tau: float, env: SpinEnvironment) -> SpinState:
    """Free evolution for tau ns: z-rotation by 2 pi larmor_freq tau plus
    inhomogeneous dephasing of the coherences.

    The Gaussian envelope exp(-(tau/T2*)^2) does not compose over split
    intervals (exp(-(t1^2+t2^2)/T2*^2) != exp(-(t1+t2)^2/T2*^2)); segmented
    evolution is an approximation for pulsed sequences where each segment
    sees an independently sampled nuclear field.
    """
    if tau < 0:
        raise DomainError(f"tau must be >= 0, got {tau}")
    if env.larmor_freq is None:
        raise DomainError("larmor_freq is required for precession")
    phi = 2.0 * math.pi * env.larmor_freq * tau
    decay = env.dephasing_factor(tau)
    phase = decay * np.exp(-1j * phi)
    rho = spin.rho
    out = np.array([[rho[0, 0], rho[0, 1] * phase],
                    [rho[1, 0] * np.conj(phase), rho[1, 1]]])
    return SpinState(out)


def optical_pump(spin: SpinState, duration: float, env: SpinEnvironment,
                 target: SpinBranch = SpinBranch.UP) -> SpinState:
    """Pump the spin toward the target state for `duration` ns.

    Populations relax exponentially toward the target with time constant
    pump_time_constant; coherences decay at half that rate times the
    ambient T2* envelope (amplitude damping toward the target).
    """
    if duration < 0:
        raise DomainError(f"duration must be >= 0, got {duration}")
    decay = math.exp(-duration / env.pump_time_constant)
    coh = math.exp(-0.5 * duration / env.pump_time_constant)
    coh *= env.dephasing_factor(duration)
    rho = spin.rho
    if target is SpinBranch.UP:
        p_wrong = rho[1, 1].real * decay
        out = np.array([[1.0 - p_wrong, rho[0, 1] * coh],
                        [rho[1, 0] * coh, p_wrong]], dtype=complex)
    else:
        p_wrong = rho[0, 0].real * decay
        out = np.array([[p_wrong, rho[0, 1] * coh],
                        [rho[1, 0] * coh, 1.0 - p_wrong]], dtype=complex)
    return SpinState(out)


def initialize(env: SpinEnvironment, target: SpinBranch = SpinBranch.UP) -> SpinState:
    """Optically pumped initial state: init_fidelity in the target state."""
    f = env.init_fidelity
    return SpinState.mixed(f if target is SpinBranch.UP else 1.0 - f)
