"""Small dense complex matrices (2x2, 3x3, 4x4): determinant, unitarity, exponential."""
from __future__ import annotations

import math

import numpy as np

__all__ = ["block3", "det", "unitarity_residual", "mat_exp", "dagger"]


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def block3(m) -> tuple[np.ndarray, float]:
    """Split a scalar-last 4x4 matrix into its (e1, e2, e3) block.

    The second value is the largest deviation of the scalar row and column from
    the identity pattern (zero off-diagonal, one on the corner); it is zero for
    operators that fix the scalar slot.
    """
    m = np.asarray(m)
    resid = max(
        float(np.max(np.abs(m[3, :3]))),
        float(np.max(np.abs(m[:3, 3]))),
        abs(complex(m[3, 3]) - 1.0),
    )
    return m[:3, :3].copy(), resid


def _det3(m) -> complex:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def _det4_lu(m) -> complex:
    a = np.array(m, dtype=np.complex128)
    d = 1.0 + 0j
    for k in range(4):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if a[p, k] == 0:
            return 0j
        if p != k:
            a[[k, p]] = a[[p, k]]
            d = -d
        d *= a[k, k]
        a[k + 1 :, k:] -= np.outer(a[k + 1 :, k] / a[k, k], a[k, k:])
    return complex(d)


def det(m) -> complex:
    """Cofactor expansion for 2x2 and 3x3; LU with partial pivoting for 4x4."""
    m = np.asarray(m)
    if m.shape == (2, 2):
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if m.shape == (3, 3):
        return complex(_det3(m))
    if m.shape == (4, 4):
        return _det4_lu(m)
    raise ValueError(f"det supports 2x2, 3x3 and 4x4 matrices, got {m.shape}")


def unitarity_residual(m) -> float:
    """Max-entry norm of ``M^dagger M - I``."""
    m = np.asarray(m)
    return float(np.max(np.abs(dagger(m) @ m - np.eye(m.shape[0]))))


_TAYLOR_TERMS = 20


def mat_exp(m, tol: float = 1e-15) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a truncated Taylor series.

    The matrix is scaled by ``2**-s`` so its 1-norm drops below 0.5; the series
    is summed until a term falls below ``tol`` relative to the partial sum (at
    most 20 terms) and the result is squared ``s`` times.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=np.complex128)
    n = m.shape[0]
    norm = float(np.max(np.sum(np.abs(m), axis=0))) if m.size else 0.0
    s = 0
    if norm >= 0.5:
        s = int(math.ceil(math.log2(norm / 0.5))) + 1
    a = m / (2.0**s)
    out = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, _TAYLOR_TERMS + 1):
        term = term @ a / k
        out = out + term
        if np.max(np.abs(term)) <= tol * max(1.0, float(np.max(np.abs(out)))) * 1e-3:
            break
    for _ in range(s):
        out = out @ out
    return out
