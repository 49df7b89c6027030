"""Algebra of n-dimensional subspaces of N-dimensional Euclidean space.

A subspace is carried around as an :class:`OrthonormalFrame` (an ``n x N``
row matrix with orthonormal rows).  The scalar product of two equal-dimension
subspaces is the determinant of the ``n x n`` matrix of scalar products of
their frame vectors; expanding a frame over the coordinate subspaces gives its
Pluecker-style coefficients (the ``n x n`` minors of the row matrix).

Signs depend on frame orientation; only squared values carry meaning for the
alignment model.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, DomainError, RankDeficient, TooLarge

__all__ = [
    "OrthonormalFrame",
    "PlueckerCoefficients",
    "MAX_ENUMERATION",
    "build_frame",
    "coordinate_frame",
    "subspace_dot",
    "count_subspaces",
    "enumerate_basis",
    "expand",
    "coefficient_norm",
    "det",
]

MAX_ENUMERATION = 10**7
FRAME_TOL = 1e-12

IndexSet = tuple[int, ...]


def _det_cofactor(m: np.ndarray) -> np.ndarray:
    n = m.shape[-1]
    if n == 1:
        return m[..., 0, 0]
    if n == 2:
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    total = np.zeros(m.shape[:-2], dtype=m.dtype)
    rest = m[..., 1:, :]
    for j in range(n):
        minor = np.delete(rest, j, axis=-1)
        term = m[..., 0, j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det(m) -> np.ndarray | float:
    """Determinant of one square matrix or of a stack of them.

    Cofactor expansion for n <= 4, LU with partial pivoting (LAPACK) above.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise DimensionMismatch(f"expected square matrices, got shape {m.shape}")
    n = m.shape[-1]
    if n == 0:
        out = np.ones(m.shape[:-2])
    elif n <= 4:
        out = _det_cofactor(m)
    else:
        out = np.linalg.det(m)
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class OrthonormalFrame:
    """``n`` ordered orthonormal vectors in ``R^N``, stored as an ``n x N`` array."""

    rows: np.ndarray

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float, copy=True)
        if rows.ndim != 2:
            raise DimensionMismatch(f"frame rows must be 2-d, got shape {rows.shape}")
        n, N = rows.shape
        if n < 1 or n > N:
            raise DomainError(f"need 1 <= n <= N, got n={n}, N={N}")
        if not np.all(np.isfinite(rows)):
            raise DomainError("frame entries must be finite")
        gram = rows @ rows.T
        err = np.max(np.abs(gram - np.eye(n)))
        if err > FRAME_TOL:
            raise RankDeficient(f"rows are not orthonormal (max Gram error {err:.3g})")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def dim_sub(self) -> int:
        return self.rows.shape[0]

    @property
    def dim_ambient(self) -> int:
        return self.rows.shape[1]

    def transformed(self, orth: np.ndarray) -> "OrthonormalFrame":
        """Apply an ambient orthogonal map ``x -> orth @ x`` to every row."""
        return OrthonormalFrame(self.rows @ np.asarray(orth).T)

    def recombined(self, orth: np.ndarray) -> "OrthonormalFrame":
        """New frame of the same subspace: rows mixed by an ``n x n`` orthogonal matrix."""
        return OrthonormalFrame(np.asarray(orth) @ self.rows)


def build_frame(vectors: Sequence[Sequence[float]], tol: float = 1e-10) -> OrthonormalFrame:
    """Orthonormalize ``vectors`` by modified Gram-Schmidt with one re-orthogonalization pass.

    Raises :class:`RankDeficient` when a vector's residual norm, relative to
    its own norm, drops below ``tol``.
    """
    try:
        vecs = np.array(vectors, dtype=float)
    except ValueError as exc:
        raise DimensionMismatch("vectors have differing lengths") from exc
    if vecs.ndim != 2:
        raise DimensionMismatch(f"expected a list of equal-length vectors, got shape {vecs.shape}")
    n, N = vecs.shape
    if n > N:
        raise DomainError(f"cannot fit {n} independent vectors in {N} dimensions")
    basis: list[np.ndarray] = []
    for k, v in enumerate(vecs):
        scale = np.linalg.norm(v)
        w = v.copy()
        for _ in range(2):
            for q in basis:
                w -= (q @ w) * q
        resid = np.linalg.norm(w)
        if scale == 0.0 or resid <= tol * scale:
            raise RankDeficient(f"vector {k} is dependent on the preceding ones (residual {resid:.3g})")
        basis.append(w / resid)
    return OrthonormalFrame(np.array(basis))


def coordinate_frame(N: int, alpha: Iterable[int]) -> OrthonormalFrame:
    """Frame of the coordinate subspace spanned by ``E_a`` for ``a`` in ``alpha`` (1-based)."""
    alpha = tuple(alpha)
    if any(a < 1 or a > N for a in alpha) or len(set(alpha)) != len(alpha):
        raise DomainError(f"invalid index set {alpha} for N={N}")
    rows = np.zeros((len(alpha), N))
    rows[np.arange(len(alpha)), np.array(alpha) - 1] = 1.0
    return OrthonormalFrame(rows)


def subspace_dot(a: OrthonormalFrame, b: OrthonormalFrame) -> float:
    """Scalar product of two equal-dimension subspaces: ``det(<a_i, b_k>)``."""
    if a.dim_ambient != b.dim_ambient or a.dim_sub != b.dim_sub:
        raise DimensionMismatch(
            f"frames differ in shape: {a.rows.shape} vs {b.rows.shape}"
        )
    return float(det(a.rows @ b.rows.T))


def count_subspaces(N: int, n: int) -> int:
    """Number of coordinate n-subspaces of R^N, N!/(n!(N-n)!), in exact integers."""
    if not (1 <= n <= N):
        raise DomainError(f"need 1 <= n <= N, got n={n}, N={N}")
    return math.comb(N, n)


def enumerate_basis(N: int, n: int) -> list[IndexSet]:
    """All 1-based index sets of size n from 1..N, in lexicographic order."""
    total = count_subspaces(N, n)
    if total > MAX_ENUMERATION:
        raise TooLarge(f"C({N},{n}) = {total} exceeds the enumeration guard {MAX_ENUMERATION}")
    return list(itertools.combinations(range(1, N + 1), n))


@dataclass(frozen=True)
class PlueckerCoefficients:
    """Expansion coefficients ``w_alpha`` of a subspace over the coordinate-subspace basis."""

    N: int
    n: int
    alphas: tuple[IndexSet, ...]
    w: np.ndarray
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        w = np.array(self.w, dtype=float, copy=True)
        alphas = tuple(tuple(int(i) for i in a) for a in self.alphas)
        if w.shape != (len(alphas),):
            raise DimensionMismatch(f"{len(alphas)} index sets but {w.shape} coefficients")
        w.setflags(write=False)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(alphas)})

    def __getitem__(self, alpha: Iterable[int]) -> float:
        return float(self.w[self._index[tuple(sorted(alpha))]])

    def __len__(self) -> int:
        return len(self.alphas)

    def as_dict(self) -> dict[IndexSet, float]:
        return {a: float(x) for a, x in zip(self.alphas, self.w)}

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "coeffs": [{"alpha": list(a), "w": float(x)} for a, x in zip(self.alphas, self.w)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlueckerCoefficients":
        coeffs = data["coeffs"]
        return cls(
            N=int(data["N"]),
            n=int(data["n"]),
            alphas=tuple(tuple(c["alpha"]) for c in coeffs),
            w=np.array([c["w"] for c in coeffs], dtype=float),
        )

    def to_csv(self, float_format: str = ".6g") -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["alpha", "w"])
        for a, x in zip(self.alphas, self.w):
            writer.writerow(["-".join(map(str, a)), format(float(x), float_format)])
        return buf.getvalue()


PLUECKER_SCHEMA = {
    "type": "object",
    "required": ["N", "n", "coeffs"],
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "coeffs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["alpha", "w"],
                "properties": {
                    "alpha": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "w": {"type": "number"},
                },
            },
        },
    },
}


def minors(rows: np.ndarray, alphas: Sequence[IndexSet]) -> np.ndarray:
    """All ``n x n`` minors of ``rows`` (``n x N``, or a stack ``... x n x N``) on column sets ``alphas``."""
    cols = np.asarray(alphas, dtype=np.intp) - 1
    sub = np.take(rows, cols, axis=-1)
    # (..., n, C, n) -> (..., C, n, n)
    sub = np.moveaxis(sub, -2, -3)
    return det(sub)


def expand(frame: OrthonormalFrame) -> PlueckerCoefficients:
    """Expand a subspace over the coordinate subspaces; ``w_alpha = det(rows[:, alpha])``."""
    alphas = enumerate_basis(frame.dim_ambient, frame.dim_sub)
    w = np.atleast_1d(minors(frame.rows, alphas))
    return PlueckerCoefficients(frame.dim_ambient, frame.dim_sub, tuple(alphas), w)


def coefficient_norm(coeffs: PlueckerCoefficients) -> float:
    """Sum of squared coefficients."""
    return float(np.sum(np.square(coeffs.w)))
