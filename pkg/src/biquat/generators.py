"""Structured generators: antisymmetric, traceless-diagonal and diagonal-free symmetric maps.

Every constructor returns a :class:`~biquat.conway.ConwayOperator`. The
matrix forms below are in the scalar-last order (e1, e2, e3, e0).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .conway import ConwayOperator, compose, sandwich
from .core import BASIS, Biquaternion, UnitVector3

__all__ = [
    "AxisUndefined",
    "NeedsComplexAxis",
    "DiagParams",
    "OffDiagSym",
    "TracelessParams",
    "antisym3",
    "antisym4",
    "diag_op",
    "sym3",
    "offdiag_to_axis",
    "rescale",
    "sym4",
    "traceless3",
]


class AxisUndefined(ValueError):
    """An off-diagonal entry is zero, so the symmetric axis cannot be recovered."""


class NeedsComplexAxis(ValueError):
    """Recovering the axis requires imaginary components (SL(3, C) only)."""


@dataclass(frozen=True)
class DiagParams:
    d1: complex
    d2: complex
    d3: complex

    @classmethod
    def traceless(cls, d1, d2) -> "DiagParams":
        """Parameters with ``d3 = -d1 - d2``."""
        return cls(d1, d2, -d1 - d2)

    def as_tuple(self) -> tuple:
        return (self.d1, self.d2, self.d3)

    def __neg__(self):
        return DiagParams(-self.d1, -self.d2, -self.d3)


@dataclass(frozen=True)
class OffDiagSym:
    """Off-diagonal entries of a symmetric 3x3 block: t1=(2,3), t2=(1,3), t3=(1,2)."""

    t1: float
    t2: float
    t3: float

    @classmethod
    def from_matrix(cls, m) -> "OffDiagSym":
        m = np.asarray(m)
        return cls(m[1, 2], m[0, 2], m[0, 1])


@dataclass(frozen=True)
class TracelessParams:
    lam: float
    s: UnitVector3
    alpha: float
    a: UnitVector3
    d: DiagParams


def _vec(v) -> np.ndarray:
    if isinstance(v, UnitVector3):
        return v.vec
    return np.asarray(v).reshape(3)


def _pure(v) -> Biquaternion:
    v = _vec(v)
    return Biquaternion(0, v[0], v[1], v[2])


_ONE = BASIS[0]


def antisym3(a, scale=1.0) -> ConwayOperator:
    """``scale * (a[.] - [.]a) / 2``: the cross product ``x -> scale * a x x`` on the vector part."""
    q = _pure(a)
    return (sandwich(q, _ONE) - sandwich(_ONE, q)) * (0.5 * scale)


def antisym4(E, B) -> ConwayOperator:
    """``((E + iB)[.] + [.](E - iB)) / 2``: the general 4x4 antisymmetric matrix.

    The last column of the matrix is ``(E1, E2, E3)`` and the last row is its negative.
    """
    e = np.asarray(E, dtype=np.complex128).reshape(3)
    b = np.asarray(B, dtype=np.complex128).reshape(3)
    return (sandwich(_pure(e + 1j * b), _ONE) + sandwich(_ONE, _pure(e - 1j * b))) * 0.5


def diag_op(d) -> ConwayOperator:
    """``(d1 e1[.]e1 + d2 e2[.]e2 + d3 e3[.]e3) / 2``.

    Matrix: ``diag(-d1+d2+d3, d1-d2+d3, d1+d2-d3, -(d1+d2+d3)) / 2``.
    """
    d1, d2, d3 = d.as_tuple() if isinstance(d, DiagParams) else d
    z = np.zeros((4, 4), dtype=np.complex128)
    z[1, 1], z[2, 2], z[3, 3] = 0.5 * d1, 0.5 * d2, 0.5 * d3
    return ConwayOperator(z)


def sym3(s, scale=1.0) -> ConwayOperator:
    """Zero-diagonal symmetric block with entries ``scale * s_i s_j``.

    As a Conway form this is ``scale * (D(s1^2, s2^2, s3^2) - s[.]s / 2)``:
    on vectors ``s x s = x - 2 (s.x) s``, so ``s[.]s / 2`` carries ``-s_i s_j``
    off the diagonal. The scalar slot is left at zero.
    """
    v = _vec(s)
    q = _pure(v)
    return (diag_op(v * v) - sandwich(q, q) * 0.5) * scale


def offdiag_to_axis(t: OffDiagSym, complex_axis: bool = False):
    """Recover ``(lam, s)`` with ``sym3(s, lam)`` having off-diagonal entries ``t``.

    Uses ``lam s1^2 = t2 t3 / t1`` (and cyclic). ``s1`` is the principal root and
    ``s2 = t3 / (lam s1)``, ``s3 = t2 / (lam s1)``, so ``t`` is reproduced exactly;
    the overall sign of ``s`` is not recoverable. On the all-positive quadrant
    every component comes out positive.

    In real mode ``lam > 0`` is required, which fails when ``t1 t2 t3 < 0``
    (the ratios are then negative). With ``complex_axis`` any nonzero ``t`` is
    accepted and ``s`` is returned as a complex array (SL(3, C) use).
    """
    t1, t2, t3 = t.t1, t.t2, t.t3
    if t1 == 0 or t2 == 0 or t3 == 0:
        raise AxisUndefined(f"off-diagonal entries must be nonzero, got {(t1, t2, t3)}")
    r = np.array([t2 * t3 / t1, t3 * t1 / t2, t1 * t2 / t3])
    if np.iscomplexobj(r) and not np.any(r.imag):
        r = r.real
    lam = r.sum()
    if not complex_axis:
        if np.iscomplexobj(r) or np.any(r <= 0):
            raise NeedsComplexAxis(f"ratios {r} are not all positive")
        lam = float(lam)
        t2, t3 = complex(t2).real, complex(t3).real
        s1 = math.sqrt(r[0] / lam)
        return lam, UnitVector3(s1, t3 / (lam * s1), t2 / (lam * s1))
    lam = complex(lam)
    if lam == 0:
        raise AxisUndefined("ratios sum to zero")
    s1 = cmath.sqrt(r[0] / lam)
    return lam, np.array([s1, t3 / (lam * s1), t2 / (lam * s1)], dtype=np.complex128)


def rescale(sigma, nu) -> ConwayOperator:
    """``sigma Scal[.] + nu Vect[.]``; matrix ``diag(nu, nu, nu, sigma)``."""
    # Scal(Q) = (Q - sum_k e_k Q e_k) / 4
    z = np.zeros((4, 4), dtype=np.complex128)
    z[0, 0] = (sigma + 3 * nu) / 4
    for k in range(1, 4):
        z[k, k] = (nu - sigma) / 4
    return ConwayOperator(z)


def sym4(sigma, nu, s, u) -> ConwayOperator:
    """``R (.) (D(s1u1, s2u2, s3u3) - s[.]u / 2) (.) R`` with ``R = rescale(sigma, nu)``.

    Symmetric with zero diagonal; ``sym4(1, 1, s, s) == sym3(s)``.
    """
    sv, uv = _vec(s), _vec(u)
    core = diag_op(sv * uv) - sandwich(_pure(sv), _pure(uv)) * 0.5
    r = rescale(sigma, nu)
    return compose(r, compose(core, r))


def traceless3(p: TracelessParams) -> ConwayOperator:
    """General traceless map on C^3: ``lam/2 s[.]s + alpha/2 (a[.] - [.]a) + D(d - lam s^2)``.

    Equal to ``-lam * sym3(s) + antisym3(a, alpha) + diag_op(d)``.
    """
    s = _pure(p.s)
    sv = _vec(p.s)
    d = np.array(p.d.as_tuple(), dtype=np.complex128) - p.lam * sv * sv
    return sandwich(s, s) * (0.5 * p.lam) + antisym3(p.a, p.alpha) + diag_op(d)
