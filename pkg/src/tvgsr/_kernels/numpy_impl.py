"""Pure-numpy implementations of the solver hot-path kernels.

Semantics must stay identical to the compiled versions in ``_speedups``;
the backend is chosen once at import time in ``tvgsr._kernels``.
"""

import numpy as np
import scipy.sparse as sparse

name = "numpy"


def soft_threshold(z, t):
    """Elementwise shrinkage sign(z) * max(|z| - t, 0)."""
    z = np.asarray(z, dtype=np.float64)
    return np.sign(z) * np.maximum(np.abs(z) - t, 0.0)


def l1_ball_project(z, radius):
    """Euclidean projection of a flat vector onto {x : ||x||_1 <= radius}.

    Sort-and-scan algorithm: the shrinkage level s solves
    sum_j max(|z_j| - s, 0) = radius when z is outside the ball.
    """
    z = np.asarray(z, dtype=np.float64)
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    if radius == 0.0:
        return np.zeros_like(z)
    a = np.abs(z)
    if a.sum() <= radius:
        return z.copy()
    mu = np.sort(a)[::-1]
    cssv = np.cumsum(mu) - radius
    ranks = np.arange(1, mu.size + 1)
    rho = np.nonzero(mu * ranks > cssv)[0][-1]
    s = cssv[rho] / (rho + 1.0)
    return np.sign(z) * np.maximum(a - s, 0.0)


def temporal_diff(y, n, p):
    """Column differences of a column-stacked n x p matrix, flattened."""
    y = np.asarray(y, dtype=np.float64)
    return y[n:] - y[: n * (p - 1)]


def temporal_diff_adjoint(v, n, p):
    """Adjoint of ``temporal_diff`` (flat n*(p-1) -> flat n*p)."""
    v = np.asarray(v, dtype=np.float64)
    out = np.zeros(n * p)
    out[: n * (p - 1)] -= v
    out[n:] += v
    return out


def make_csr_matvec(n_rows, n_cols, indptr, indices, data):
    """Return a matvec closure for a CSR matrix given by its raw arrays."""
    mat = sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), indices, indptr),
        shape=(n_rows, n_cols),
    )

    def matvec(x):
        return mat.dot(x)

    return matvec
