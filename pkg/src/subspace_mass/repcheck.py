"""2x2 generators for plane rotations in four and five dimensions.

Generators live in the real span of ``{I, J1, J2, J3}`` with
``J_k = -(i/2) sigma_k`` (Pauli matrices), so that ``[J1, J2] = J3`` and
cyclically.  :func:`solve_fourth_plane` eliminates the coefficients of a
34-plane generator that must commute with a given 12-plane generator;
:func:`check_fifth_plane` shows that no 35-plane generator can commute with
the 12 generator while failing to commute with the 34 generator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import minimize

from .errors import InvalidGenerator

__all__ = [
    "PAULI",
    "BASIS",
    "SpinGenerator",
    "RepSolutionSet",
    "GridReport",
    "commutator",
    "hs_norm",
    "solve_fourth_plane",
    "check_fifth_plane",
    "fifth_plane_grid_search",
    "fibonacci_sphere",
    "random_unit_generator",
]

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
BASIS = (np.eye(2, dtype=complex),) + tuple(-0.5j * s for s in PAULI)
_BASIS_NORM2 = np.array([np.trace(b.conj().T @ b).real for b in BASIS])

COEFF_TOL = 1e-12
UNIT_TOL = 1e-10


@dataclass(frozen=True)
class SpinGenerator:
    """``a0 I + a1 J1 + a2 J2 + a3 J3`` with real coefficients."""

    a0: float
    a1: float
    a2: float
    a3: float

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float]) -> "SpinGenerator":
        a0, a1, a2, a3 = (float(c) + 0.0 for c in coeffs)  # no negative zeros
        return cls(a0, a1, a2, a3)

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "SpinGenerator":
        """Traceless generator ``v . J``."""
        return cls.from_coeffs((0.0, v[0], v[1], v[2]))

    @classmethod
    def from_matrix(cls, m: np.ndarray, tol: float = COEFF_TOL) -> "SpinGenerator":
        """Project a 2x2 matrix onto the basis; the coefficients must come out real."""
        m = np.asarray(m, dtype=complex)
        coeffs = np.array([np.trace(b.conj().T @ m) for b in BASIS]) / _BASIS_NORM2
        scale = max(1.0, float(np.max(np.abs(m))))
        if np.max(np.abs(coeffs.imag)) > tol * scale:
            raise InvalidGenerator("matrix has complex coefficients over {I, J1, J2, J3}")
        return cls.from_coeffs(coeffs.real)

    @property
    def coeffs(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a1, self.a2, self.a3])

    @property
    def matrix(self) -> np.ndarray:
        return sum(c * b for c, b in zip(self.coeffs, BASIS))

    def __neg__(self) -> "SpinGenerator":
        return SpinGenerator.from_coeffs(-self.coeffs)

    def isclose(self, other: "SpinGenerator", tol: float = 1e-9) -> bool:
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)


J1 = SpinGenerator(0.0, 1.0, 0.0, 0.0)
J2 = SpinGenerator(0.0, 0.0, 1.0, 0.0)
J3 = SpinGenerator(0.0, 0.0, 0.0, 1.0)
IDENTITY = SpinGenerator(1.0, 0.0, 0.0, 0.0)
ZERO = SpinGenerator(0.0, 0.0, 0.0, 0.0)


def hs_norm(m) -> float:
    """Frobenius (Hilbert-Schmidt) norm of a matrix or generator."""
    if isinstance(m, SpinGenerator):
        m = m.matrix
    return float(np.linalg.norm(m))


def commutator(x: SpinGenerator, y: SpinGenerator) -> SpinGenerator:
    """``XY - YX``, projected back onto ``{I, J1, J2, J3}``."""
    mx, my = x.matrix, y.matrix
    return SpinGenerator.from_matrix(mx @ my - my @ mx)


@dataclass(frozen=True)
class RepSolutionSet:
    """Outcome of a generator search.

    ``residual`` is 0 for feasible sets and the smallest constraint violation
    found otherwise.  ``witness`` is the bracket norm that produced the
    contradiction, where one applies.
    """

    solutions: tuple[SpinGenerator, ...]
    feasible: bool
    residual: float
    witness: float | None = None

    def __post_init__(self):
        if self.feasible != bool(self.solutions):
            raise ValueError("feasible must be True exactly when solutions are present")
        if not self.feasible and not self.residual > 0:
            raise ValueError("an infeasible set must report a positive residual")

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "residual": self.residual,
            "witness": self.witness,
            "solutions": [[float(c) for c in s.coeffs] for s in self.solutions],
        }


REP_SOLUTION_SCHEMA = {
    "type": "object",
    "required": ["feasible", "residual", "witness", "solutions"],
    "properties": {
        "feasible": {"type": "boolean"},
        "residual": {"type": "number", "minimum": 0},
        "witness": {"type": ["number", "null"]},
        "solutions": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}, "minItems": 4, "maxItems": 4},
        },
    },
}


def _require_unit_traceless(g: SpinGenerator, name: str) -> None:
    if abs(g.a0) > COEFF_TOL:
        raise InvalidGenerator(f"{name} must have no identity component (a0={g.a0})")
    norm = np.linalg.norm(g.vector)
    if abs(norm - 1.0) > UNIT_TOL:
        raise InvalidGenerator(f"{name} must have unit coefficient norm, got {norm}")


def _completing_pair(g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors h, k with (g, h, k) right-handed orthonormal."""
    trial = np.eye(3)[int(np.argmin(np.abs(g)))]
    h = trial - (trial @ g) * g
    h /= np.linalg.norm(h)
    return h, np.cross(g, h)


def solve_fourth_plane(
    sigma12: SpinGenerator, exclude: Sequence[SpinGenerator] = ()
) -> RepSolutionSet:
    """All normalized 34-plane generators commuting with the 12-plane generator.

    The ansatz ``X = alpha s12 + beta s23 + gamma s31`` (with ``s23, s31``
    completing ``s12`` to a cyclic triple) turns ``[X, s12] = 0`` into a
    linear system in ``(beta, gamma)`` whose matrix is nonsingular, so
    ``beta = gamma = 0``.  Matching ``X^dagger X`` to ``s12^dagger s12`` then
    forces ``alpha**2 = 1``.  Candidates listed in ``exclude`` are rejected;
    each rejection counts as a unit violation in ``residual``.
    """
    _require_unit_traceless(sigma12, "sigma12")
    g = sigma12.vector
    h, k = _completing_pair(g)
    sigma23, sigma31 = SpinGenerator.from_vector(h), SpinGenerator.from_vector(k)

    # columns: bracket of each ansatz term with sigma12
    bracket = np.column_stack(
        [commutator(s, sigma12).coeffs for s in (sigma12, sigma23, sigma31)]
    )
    if np.max(np.abs(bracket[:, 0])) > COEFF_TOL:
        raise InvalidGenerator("sigma12 does not commute with itself; basis is inconsistent")
    off = bracket[:, 1:]
    if np.linalg.matrix_rank(off, tol=1e-9) < 2:
        raise InvalidGenerator("bracket map is singular; elimination failed")
    # beta = gamma = 0; normalization alpha^2 s12^dag s12 = s12^dag s12
    alphas = (1.0, -1.0)
    candidates = [SpinGenerator.from_vector(a * g) for a in alphas]

    kept = tuple(c for c in candidates if not any(c.isclose(e) for e in exclude))
    if kept:
        return RepSolutionSet(kept, True, 0.0)
    return RepSolutionSet((), False, 1.0)


def fibonacci_sphere(points: int) -> np.ndarray:
    """Near-uniform points on the unit 2-sphere, shape ``(points, 3)``."""
    i = np.arange(points) + 0.5
    z = 1.0 - 2.0 * i / points
    r = np.sqrt(1.0 - z * z)
    phi = np.pi * (3.0 - np.sqrt(5.0)) * i
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _bracket_norms(vectors: np.ndarray, g: np.ndarray) -> np.ndarray:
    # [a.J, g.J] = (a x g).J and |b.J|_F = |b| / sqrt(2)
    return np.linalg.norm(np.cross(vectors, g), axis=-1) / np.sqrt(2.0)


@dataclass(frozen=True)
class GridReport:
    min_objective: float
    feasible_points: int
    best: np.ndarray


def fifth_plane_grid_search(
    sigma12: SpinGenerator,
    sigma34: SpinGenerator,
    points: int = 10_000,
    tol: float = 1e-6,
    refine: int = 4,
) -> GridReport:
    """Brute-force search of the unit coefficient sphere for a 35-plane generator.

    The violation of a point ``X`` is
    ``|[X, s12]| + max(0, tol - |[X, s34]|)``: it is below ``tol`` only if
    X nearly commutes with ``s12`` and clearly fails to commute with ``s34``.
    The grid minimum is polished by Nelder-Mead from the ``refine`` best
    points.  ``feasible_points`` counts grid points meeting both conditions.
    """
    g12, g34 = sigma12.vector, sigma34.vector
    grid = fibonacci_sphere(points)
    f = _bracket_norms(grid, g12)
    h = _bracket_norms(grid, g34)
    objective = f + np.maximum(0.0, tol - h)
    feasible_points = int(np.count_nonzero((f <= tol) & (h >= tol)))

    a, b = (tuple(float(c) for c in v) for v in (g12, g34))

    def bracket(v, g):
        cx = v[1] * g[2] - v[2] * g[1]
        cy = v[2] * g[0] - v[0] * g[2]
        cz = v[0] * g[1] - v[1] * g[0]
        return math.sqrt((cx * cx + cy * cy + cz * cz) / 2.0)

    def on_sphere(angles):
        th, ph = angles
        st = math.sin(th)
        return (st * math.cos(ph), st * math.sin(ph), math.cos(th))

    def obj(angles):
        v = on_sphere(angles)
        return bracket(v, a) + max(0.0, tol - bracket(v, b))

    best_val = float(np.min(objective))
    best = grid[int(np.argmin(objective))]
    for idx in np.argsort(objective)[:refine]:
        x, y, z = grid[idx]
        start = np.array([math.acos(min(1.0, max(-1.0, z))), math.atan2(y, x)])
        res = minimize(obj, start, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-16, "maxiter": 400})
        if res.fun < best_val:
            best_val, best = float(res.fun), np.array(on_sphere(res.x))
    return GridReport(best_val, feasible_points, best)


def check_fifth_plane(
    sigma12: SpinGenerator,
    sigma34: SpinGenerator,
    tol: float = 1e-6,
    points: int = 10_000,
) -> RepSolutionSet:
    """Look for a 35-plane generator: commutes with ``sigma12``, not with ``sigma34``.

    Symbolically, the only normalized generators commuting with ``sigma12``
    are ``+-sigma12 = +-sigma34``, which commute with ``sigma34``; the largest
    such bracket norm is returned as ``witness`` (zero).  ``residual`` is the
    minimum violation found by :func:`fifth_plane_grid_search`.
    """
    _require_unit_traceless(sigma34, "sigma34")
    fourth = solve_fourth_plane(sigma12)
    if not any(sigma34.isclose(s) for s in fourth.solutions):
        raise InvalidGenerator("sigma34 is not a solution for the 34 plane given sigma12")

    witness = max(hs_norm(commutator(x, sigma34)) for x in fourth.solutions)
    found = tuple(x for x in fourth.solutions if hs_norm(commutator(x, sigma34)) > tol)
    grid = fifth_plane_grid_search(sigma12, sigma34, points=points, tol=tol)
    if found:
        return RepSolutionSet(found, True, 0.0, witness)
    return RepSolutionSet((), False, grid.min_objective, witness)


def random_unit_generator(rng: np.random.Generator) -> SpinGenerator:
    v = rng.standard_normal(3)
    return SpinGenerator.from_vector(v / np.linalg.norm(v))
