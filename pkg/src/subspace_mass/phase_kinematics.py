"""Phase of spin-1/2 plane waves, energy-momentum, and Compton frequencies.

Natural units measure ``x``, ``t`` and proper time in units of ``1/m`` so that
the phase is ``cosh(u) t - sinh(u) n.x``.  SI helpers take masses in MeV and
times in seconds and use the exact SI values for ``h``, ``c`` and the MeV.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import NonPositiveMass, NotUnit

__all__ = [
    "PhysicalConstants",
    "CONSTANTS",
    "KinematicState",
    "SpinorPair",
    "plane_wave_phase",
    "plane_wave_phase_si",
    "rest_phase",
    "energy_momentum",
    "rotation_eigenvalue",
    "axis_rotation",
    "compton_frequency",
    "boost_chiral",
]

UNIT_TOL = 1e-12
ZHZ = 1e21

Units = Literal["natural", "si"]


@dataclass(frozen=True)
class PhysicalConstants:
    h: float = 6.62607015e-34  # J s
    c: float = 299792458.0  # m / s
    mev_to_joule: float = 1.602176634e-13

    @property
    def hbar(self) -> float:
        return self.h / (2.0 * math.pi)


CONSTANTS = PhysicalConstants()


def _unit_vector(n: Sequence[float]) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise NotUnit(f"direction must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > UNIT_TOL:
        raise NotUnit(f"|n| = {np.linalg.norm(n)!r} is not 1")
    return n


@dataclass(frozen=True)
class KinematicState:
    """Mass ``m`` (MeV), rapidity ``u`` and unit direction ``n``."""

    m: float
    u: float
    n: tuple[float, float, float]

    def __post_init__(self):
        if not self.m > 0:
            raise NonPositiveMass(f"mass must be positive, got {self.m}")
        object.__setattr__(self, "n", tuple(float(c) for c in _unit_vector(self.n)))

    @property
    def speed(self) -> float:
        return math.tanh(self.u)

    @property
    def E(self) -> float:
        return self.m * math.cosh(self.u)

    @property
    def p(self) -> np.ndarray:
        return self.m * math.sinh(self.u) * np.asarray(self.n)


def plane_wave_phase(u: float, n: Sequence[float], x: Sequence[float], t: float) -> float:
    """Phase ``cosh(u) t - sinh(u) n.x`` in natural (mass-scaled) units; equals half the rotation angle."""
    n = _unit_vector(n)
    return math.cosh(u) * t - math.sinh(u) * float(n @ np.asarray(x, dtype=float))


def plane_wave_phase_si(
    m_mev: float, u: float, n: Sequence[float], x_m: Sequence[float], t_s: float,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Extension of :func:`plane_wave_phase` to SI inputs: ``(E t - p.x c) / hbar``.

    ``E`` and ``p c`` are in joules, ``x`` in metres, ``t`` in seconds.
    """
    if not m_mev > 0:
        raise NonPositiveMass(f"mass must be positive, got {m_mev}")
    n = _unit_vector(n)
    mc2 = m_mev * constants.mev_to_joule
    px = math.sinh(u) * float(n @ np.asarray(x_m, dtype=float)) / constants.c
    return mc2 * (math.cosh(u) * t_s - px) / constants.hbar


def rest_phase(m: float, s: float, units: Units = "natural", constants: PhysicalConstants = CONSTANTS) -> float:
    """Phase accumulated over proper time ``s``.

    ``natural``: ``m s``.  ``si``: ``m`` in MeV, ``s`` in seconds, ``m c^2 s / hbar``.
    """
    if not m > 0:
        raise NonPositiveMass(f"mass must be positive, got {m}")
    if units == "natural":
        return m * s
    if units == "si":
        return m * constants.mev_to_joule * s / constants.hbar
    raise ValueError(f"unknown units {units!r}")


def energy_momentum(state: KinematicState) -> tuple[float, np.ndarray]:
    return state.E, state.p


def rotation_eigenvalue(theta: float) -> complex:
    """Half-angle eigenvalue ``exp(i theta / 2)``."""
    return complex(np.exp(0.5j * theta))


def axis_rotation(theta: float, n: Sequence[float]) -> np.ndarray:
    """2x2 spinor rotation by ``theta`` about unit axis ``n``: ``exp(-i theta n.sigma / 2)``."""
    n = _unit_vector(n)
    n_sigma = np.array([[n[2], n[0] - 1j * n[1]], [n[0] + 1j * n[1], -n[2]]])
    return math.cos(theta / 2) * np.eye(2) - 1j * math.sin(theta / 2) * n_sigma


def compton_frequency(m: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """``m c^2 / h`` for ``m`` in MeV, returned in ZHz (1e21 Hz)."""
    if not m > 0:
        raise NonPositiveMass(f"mass must be positive, got {m}")
    return m * constants.mev_to_joule / constants.h / ZHZ


@dataclass(frozen=True)
class SpinorPair:
    right: np.ndarray
    left: np.ndarray

    def __post_init__(self):
        for name in ("right", "left"):
            v = np.asarray(getattr(self, name), dtype=complex)
            if v.shape != (2,) or not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be a finite 2-component vector")
            object.__setattr__(self, name, v)

    def norm_ratio(self) -> float:
        return float(np.linalg.norm(self.right) / np.linalg.norm(self.left))


def boost_chiral(pair: SpinorPair, u: float) -> SpinorPair:
    """Chiral boost with rapidity ``u``: right spinor times ``e^{u/2}``, left times ``e^{-u/2}``."""
    return SpinorPair(pair.right * math.exp(u / 2), pair.left * math.exp(-u / 2))
