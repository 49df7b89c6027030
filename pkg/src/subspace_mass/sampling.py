"""Haar-random subspaces and Monte Carlo estimates of alignment likelihoods.

Every sample ``i`` draws its Gaussian entries from its own Philox stream keyed
by ``seed`` with the sample index placed in a high counter word, so any split
of the index range over workers reproduces the serial result bit for bit.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import DomainError, RankDeficient
from .subspace_core import (
    OrthonormalFrame,
    build_frame,
    count_subspaces,
    det,
    enumerate_basis,
)

__all__ = [
    "McEstimate",
    "Particle",
    "sample_stream",
    "haar_subspace",
    "estimate_alignment",
    "estimate_accrual",
    "alignment_samples",
    "accrual_samples",
]

Particle = Literal["electron", "pion", "proton"]

_SEED_MAX = 2**64
_CHUNK = 4096

MC_ESTIMATE_SCHEMA = {
    "type": "object",
    "required": ["mean", "stderr", "samples", "seed", "expected_num", "expected_den"],
    "properties": {
        "mean": {"type": "number"},
        "stderr": {"type": "number", "minimum": 0},
        "samples": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0},
        "expected_num": {"type": ["integer", "null"]},
        "expected_den": {"type": ["integer", "null"], "minimum": 1},
    },
}


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int
    expected: Fraction | None = None

    def deviation_in_stderr(self) -> float:
        """``|mean - expected| / stderr``; 0 when both vanish."""
        if self.expected is None:
            raise ValueError("no expected value attached")
        diff = abs(self.mean - float(self.expected))
        if self.stderr == 0.0:
            return 0.0 if diff == 0.0 else math.inf
        return diff / self.stderr

    def to_json(self) -> dict:
        return {
            "mean": self.mean,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "expected_num": None if self.expected is None else self.expected.numerator,
            "expected_den": None if self.expected is None else self.expected.denominator,
        }


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < _SEED_MAX:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample ``index`` under ``seed``."""
    return np.random.Generator(np.random.Philox(key=_check_seed(seed), counter=[0, 0, index, 0]))


def haar_subspace(N: int, n: int, stream: np.random.Generator) -> OrthonormalFrame:
    """Rotation-invariant random ``n``-subspace of ``R^N`` (orthonormalized Gaussian vectors)."""
    if not 1 <= n <= N:
        raise DomainError(f"need 1 <= n <= N, got n={n}, N={N}")
    for attempt in range(2):
        try:
            return build_frame(stream.standard_normal((n, N)))
        except RankDeficient:
            if attempt:
                raise
    raise AssertionError("unreachable")


def _gaussian_block(seed: int, start: int, stop: int, N: int, n: int) -> np.ndarray:
    out = np.empty((stop - start, N, n))
    for k, i in enumerate(range(start, stop)):
        out[k] = sample_stream(seed, i).standard_normal((n, N)).T
    return out


def _orthonormal_columns(g: np.ndarray) -> np.ndarray:
    q, _ = np.linalg.qr(g)
    return q


def _alignment_block(seed, start, stop, N):
    # det of the first four coordinates of an orthonormal 4-frame = dot with {1,2,3,4}
    q = _orthonormal_columns(_gaussian_block(seed, start, stop, N, 4))
    d = det(q[:, :4, :])
    return d * d


def _internal_block(seed, start, stop, N, n, target_cols):
    """Sum over the C(n,4) internal coordinate 4-subspaces of squared dots with a fixed target."""
    q = _orthonormal_columns(_gaussian_block(seed, start, stop, N, n))
    # frame rows restricted to the target's coordinates: (batch, n, 4)
    m = np.swapaxes(q, -1, -2)[:, :, target_cols]
    row_sets = enumerate_basis(n, 4)
    rows = np.asarray(row_sets, dtype=np.intp) - 1
    sub = m[:, rows, :]  # (batch, C, 4, 4)
    d = det(sub)
    return np.sum(d * d, axis=-1)


def _run(block_fn, samples: int, workers: int, *args) -> np.ndarray:
    bounds = [(s, min(s + _CHUNK, samples)) for s in range(0, samples, _CHUNK)]
    if workers <= 1 or len(bounds) == 1:
        parts = [block_fn(args[0], a, b, *args[1:]) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: block_fn(args[0], ab[0], ab[1], *args[1:]), bounds))
    return np.concatenate(parts)


def _summarize(values: np.ndarray, seed: int, expected: Fraction | None) -> McEstimate:
    samples = values.size
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return McEstimate(mean=mean, stderr=stderr, samples=samples, seed=seed, expected=expected)


def alignment_samples(N: int, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    """Per-sample squared dot of a Haar-random 4-subspace of ``R^N`` with ``{1,2,3,4}``."""
    if N < 4:
        raise DomainError(f"need N >= 4, got {N}")
    seed = _check_seed(seed)
    if N == 4:
        # the only 4-subspace of R^4 is R^4 itself
        return np.ones(samples)
    return _run(_alignment_block, samples, workers, seed, N)


def estimate_alignment(N: int, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Monte Carlo likelihood that a random 4-subspace of ``R^N`` aligns with a fixed coordinate one."""
    if samples < 100:
        raise DomainError(f"need at least 100 samples, got {samples}")
    values = alignment_samples(N, samples, seed, workers)
    return _summarize(values, _check_seed(seed), Fraction(1, count_subspaces(N, 4)))


# Represented spaces: S = {1,2,3,4} in R^16; S~ = {5,6,7,8}, which is {1,2,3,4}
# in the coordinates of the 12-dimensional complement H = span(E_5..E_16).
_ACCRUAL_SETUP = {
    "electron": (16, 4),
    "pion": (12, 8),
    "proton": (12, 12),
}


def expected_accrual(particle: Particle) -> Fraction:
    N, n = _ACCRUAL_SETUP[particle]
    return Fraction(count_subspaces(n, 4), count_subspaces(N, 4))


def accrual_samples(particle: Particle, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    try:
        N, n = _ACCRUAL_SETUP[particle]
    except KeyError:
        raise DomainError(f"unknown particle {particle!r}") from None
    seed = _check_seed(seed)
    if n == N:
        # the subspace is all of H, which contains S~: alignment is certain
        return np.ones(samples)
    target = np.arange(4)
    return _run(_internal_block, samples, workers, seed, N, n, target)


def estimate_accrual(particle: Particle, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Monte Carlo phase-accrual fraction for ``electron``, ``pion`` or ``proton``.

    The particle's subspace is drawn Haar-randomly (4 in 16, 8 in 12, 12 in
    12); the estimate is the summed squared dot of its internal coordinate
    4-subspaces with the fixed represented space.
    """
    if samples < 100:
        raise DomainError(f"need at least 100 samples, got {samples}")
    values = accrual_samples(particle, samples, seed, workers)
    return _summarize(values, _check_seed(seed), expected_accrual(particle))
