"""Exact mass ratios for the electron, pion and proton from subspace counting.

Each ratio is (likelihood that a random 4-subspace aligns with a represented
space) x (number of coordinate 4-subspaces inside the particle's space):

    electron  4 in 16:   1/C(16,4)            = 1/1820
    pion      8 in 12:   C(8,4)/C(12,4)       = 70/495 = 14/99
    proton   12 in 12:   C(12,4)/C(12,4)      = 1

All counts use exact integers and :class:`fractions.Fraction`.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import DomainError
from .subspace_core import count_subspaces

__all__ = [
    "PAPER_MASSES",
    "PDG_MASSES",
    "ModelConfig",
    "MassRatioResult",
    "masses_for",
    "ratio_electron",
    "ratio_pion",
    "ratio_proton",
    "all_ratios",
    "inferred_scale_report",
    "problem2_table",
    "grassmann_dof",
    "report_json",
    "report_csv",
]

Particle = Literal["electron", "pion", "proton"]
MassSet = Literal["paper", "pdg"]

PARTICLES: tuple[Particle, ...] = ("electron", "pion", "proton")

# MeV; the pion is the neutral pion
PAPER_MASSES = {"electron": 0.511, "pion": 135.0, "proton": 938.0}
PDG_MASSES = {"electron": 0.51099895000, "pion": 134.9768, "proton": 938.27208816}


def masses_for(masses: MassSet) -> dict[str, float]:
    if masses == "paper":
        return dict(PAPER_MASSES)
    if masses == "pdg":
        return dict(PDG_MASSES)
    raise DomainError(f"unknown mass set {masses!r}")


@dataclass(frozen=True)
class ModelConfig:
    """Ambient space and the two represented coordinate 4-subspaces."""

    ambient_dim: int = 16
    represented: tuple[int, ...] = (1, 2, 3, 4)
    represented_tilde: tuple[int, ...] = (5, 6, 7, 8)
    hadron_dim: int = 12
    pion_dim: int = 8

    def __post_init__(self):
        s, st = set(self.represented), set(self.represented_tilde)
        if len(s) != 4 or len(st) != 4:
            raise DomainError("represented spaces must be 4-dimensional")
        if s & st:
            raise DomainError("represented spaces must be disjoint")
        full = set(range(1, self.ambient_dim + 1))
        if not (s | st) <= full:
            raise DomainError("represented spaces must lie in the ambient space")
        if self.ambient_dim != len(s) + self.hadron_dim:
            raise DomainError("hadron space must be the complement of the electron's represented space")
        if self.pion_dim + 4 != self.hadron_dim:
            raise DomainError("pion space must leave room for one 4-subspace in the hadron space")

    @property
    def hadron_space(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(1, self.ambient_dim + 1)) - set(self.represented)))


@dataclass(frozen=True)
class MassRatioResult:
    """Model ratio ``M_x / M`` against the measured ``m_x / m_p``.

    ``relative_deviation`` is ``|ratio - measured| / ratio``, which is also
    ``|M - m_p| / m_p`` for the inferred scale ``M = m_x / ratio``.
    """

    particle: Particle
    ratio_exact: Fraction
    measured_mass: float
    proton_mass: float
    ratio_float: float = field(init=False)
    measured_ratio: float = field(init=False)
    relative_deviation: float = field(init=False)
    inferred_M: float = field(init=False)

    def __post_init__(self):
        r = self.ratio_exact.numerator / self.ratio_exact.denominator
        q = self.measured_mass / self.proton_mass
        object.__setattr__(self, "ratio_float", r)
        object.__setattr__(self, "measured_ratio", q)
        object.__setattr__(self, "relative_deviation", abs(r - q) / r)
        object.__setattr__(self, "inferred_M", self.measured_mass / r)

    def to_json(self) -> dict:
        return {
            "particle": self.particle,
            "ratio": {"num": self.ratio_exact.numerator, "den": self.ratio_exact.denominator},
            "ratio_float": self.ratio_float,
            "measured": self.measured_ratio,
            "deviation_pct": 100.0 * self.relative_deviation,
            "inferred_M_mev": self.inferred_M,
        }


MASS_REPORT_SCHEMA = {
    "type": "object",
    "required": ["particle", "ratio", "ratio_float", "measured", "deviation_pct", "inferred_M_mev"],
    "properties": {
        "particle": {"enum": list(PARTICLES)},
        "ratio": {
            "type": "object",
            "required": ["num", "den"],
            "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "minimum": 1}},
        },
        "ratio_float": {"type": "number"},
        "measured": {"type": "number"},
        "deviation_pct": {"type": "number", "minimum": 0},
        "inferred_M_mev": {"type": "number"},
    },
}


def _f(k: int) -> int:
    return math.factorial(k)


def _result(particle: Particle, ratio: Fraction, masses: MassSet) -> MassRatioResult:
    m = masses_for(masses)
    return MassRatioResult(particle, ratio, m[particle], m["proton"])


def ratio_electron(masses: MassSet = "paper") -> MassRatioResult:
    """``4! 12! / 16!``: one coordinate 4-subspace out of those of R^16."""
    return _result("electron", Fraction(_f(4) * _f(12), _f(16)), masses)


def ratio_pion(masses: MassSet = "paper") -> MassRatioResult:
    """``(4! 8! / 12!) x (8! / (4! 4!))``: alignment in R^12 times the 4-subspaces of the 8-space."""
    return _result("pion", Fraction(_f(4) * _f(8), _f(12)) * Fraction(_f(8), _f(4) * _f(4)), masses)


def ratio_proton(masses: MassSet = "paper") -> MassRatioResult:
    return _result("proton", Fraction(_f(4) * _f(8), _f(12)) * Fraction(_f(12), _f(4) * _f(8)), masses)


def all_ratios(masses: MassSet = "paper") -> list[MassRatioResult]:
    return [ratio_electron(masses), ratio_pion(masses), ratio_proton(masses)]


def inferred_scale_report(masses: MassSet = "paper") -> tuple[tuple[float, float, float], float]:
    """Inferred represented-space mass from each particle, and their mean (MeV)."""
    values = tuple(r.inferred_M for r in all_ratios(masses))
    return values, sum(values) / len(values)


def problem2_table(a_max: int) -> list[tuple[int, int]]:
    """Number of coordinate 3-subspaces of R^(3a), ``(3a)! / (3! (3a-3)!)``, for a = 1..a_max."""
    if a_max < 1:
        raise DomainError(f"a_max must be >= 1, got {a_max}")
    return [(a, _f(3 * a) // (_f(3) * _f(3 * a - 3))) for a in range(1, a_max + 1)]


def grassmann_dof(n: int, N: int) -> tuple[int, int, bool]:
    """Compare the free parameters of an n-subspace of R^N with its coefficient count.

    Returns ``(n (N - n), C(N, n) - 1, n (N - n) >= C(N, n) - 1)``.  The last
    flag says the unit-norm coefficient vectors are no more numerous than
    the subspaces themselves, so every one of them is a subspace.
    """
    if not 1 <= n <= N:
        raise DomainError(f"need 1 <= n <= N, got n={n}, N={N}")
    dof = n * (N - n)
    free = count_subspaces(N, n) - 1
    return dof, free, dof >= free


def report_json(masses: MassSet = "paper") -> dict:
    results = all_ratios(masses)
    _, mean = inferred_scale_report(masses)
    return {
        "masses": masses,
        "results": [r.to_json() for r in results],
        "mean_inferred_M_mev": mean,
    }


def report_csv(masses: MassSet = "paper", float_format: str = ".6g") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["particle", "ratio_num", "ratio_den", "ratio_float", "measured", "deviation_pct", "inferred_M_mev"])
    for r in all_ratios(masses):
        w.writerow([
            r.particle,
            r.ratio_exact.numerator,
            r.ratio_exact.denominator,
            format(r.ratio_float, float_format),
            format(r.measured_ratio, float_format),
            format(100.0 * r.relative_deviation, float_format),
            format(r.inferred_M, float_format),
        ])
    _, mean = inferred_scale_report(masses)
    w.writerow(["mean", "", "", "", "", "", format(mean, float_format)])
    return buf.getvalue()
