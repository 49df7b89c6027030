import itertools

import numpy as np
import pytest


def leibniz_det(m):
    """Determinant by the permutation sum; independent of any LU or cofactor code."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    total = 0.0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1.0
        for i, p in enumerate(perm):
            prod *= m[i, p]
        total += -prod if inversions % 2 else prod
    return total


def plane_rotation(N, i, j, t):
    """Rotation by ``t`` in the (i, j) coordinate plane, 1-based indices."""
    r = np.eye(N)
    c, s = np.cos(t), np.sin(t)
    r[i - 1, i - 1] = r[j - 1, j - 1] = c
    r[i - 1, j - 1] = -s
    r[j - 1, i - 1] = s
    return r


def random_orthogonal(N, rng):
    q, r = np.linalg.qr(rng.standard_normal((N, N)))
    return q * np.sign(np.diag(r))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
