"""Group elements of SU(2), SO(3), SO(4), SU(3), SU(4) and the SL(n, R/C) variants.

All constructors return Conway operators; ``to_matrix`` gives the 4x4 matrix
in the scalar-last order. SU(3) and SL(3) elements fix the scalar slot, so
their (e1, e2, e3) block is the 3x3 group matrix.

In the SL modes the imaginary unit in the exponents is suppressed. This is
realized by rotating the phase arguments by ``-i``:
``exp(-i x i/2 X) = exp(x/2 X)``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .conway import ConwayOperator, compose_all, sandwich, to_matrix
from .core import E0, UnitVector3, exp_pure, hermitian_form
from .expmaps import exp_antisym, exp_diag, exp_so4, exp_sym, series_exp
from .generators import DiagParams
from .matrices import det, unitarity_residual

__all__ = [
    "FieldMode",
    "ModeMismatch",
    "NonUnitary",
    "Su3LieParams",
    "EulerSu3Params",
    "EulerSu4Params",
    "Frame3",
    "su2_left",
    "so3",
    "so4",
    "su3_lie",
    "su3_lie_factors",
    "su3_lie_inverse",
    "su2_euler",
    "su2_euler_matrix",
    "su2_angles_from_matrix",
    "doublet_matrix",
    "EULER_BASIS_CHANGE",
    "su3_euler",
    "su4_euler",
    "product_form",
]


class FieldMode(enum.Enum):
    UNITARY = "unitary"
    SL_REAL = "sl_real"
    SL_COMPLEX = "sl_complex"


class ModeMismatch(ValueError):
    """A complex parameter was passed in a mode that needs real parameters."""


class NonUnitary(ValueError):
    """Input matrix is not special unitary."""


def _check(mode: FieldMode, *values):
    mode = FieldMode(mode)
    if mode is FieldMode.SL_COMPLEX:
        return mode
    for v in values:
        if isinstance(v, complex) and v.imag != 0:
            raise ModeMismatch(f"complex parameter {v!r} not allowed in {mode.value} mode")
    return mode


def _real(v):
    if isinstance(v, complex) and v.imag == 0:
        return v.real
    return v


def _phase(mode: FieldMode, x):
    """Argument for the ``exp(i x ...)`` closed forms; drops the ``i`` in SL modes."""
    if mode is FieldMode.UNITARY:
        return _real(x)
    return -1j * x


@dataclass(frozen=True)
class Su3LieParams:
    alpha: float
    a: UnitVector3
    beta: float
    b: UnitVector3
    delta: DiagParams

    def __post_init__(self):
        s = self.delta.d1 + self.delta.d2 + self.delta.d3
        if abs(s) > 1e-12:
            raise ValueError(f"delta must be traceless, got sum {s!r}")

    @classmethod
    def make(cls, alpha, a, beta, b, delta1, delta2) -> "Su3LieParams":
        a = a if isinstance(a, UnitVector3) else UnitVector3(a)
        b = b if isinstance(b, UnitVector3) else UnitVector3(b)
        return cls(alpha, a, beta, b, DiagParams.traceless(delta1, delta2))

    @classmethod
    def zero(cls) -> "Su3LieParams":
        return cls.make(0.0, (0, 0, 1), 0.0, (0, 0, 1), 0.0, 0.0)

    def shifted_delta(self) -> DiagParams:
        """``delta_k - beta b_k^2``, the argument of the diagonal factor."""
        b2 = self.b.vec ** 2
        return DiagParams(
            self.delta.d1 - self.beta * b2[0],
            self.delta.d2 - self.beta * b2[1],
            self.delta.d3 - self.beta * b2[2],
        )


@dataclass(frozen=True)
class EulerSu3Params:
    alpha: float
    a: UnitVector3
    beta: float
    gamma: float
    delta: float
    b: UnitVector3


@dataclass(frozen=True)
class EulerSu4Params:
    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float
    psi: float
    eta: float
    a: UnitVector3
    b: UnitVector3
    c: UnitVector3
    d: UnitVector3


@dataclass(frozen=True)
class Frame3:
    """Orthonormal frame ``(u, v, w = u x v)``."""

    u: UnitVector3
    v: UnitVector3
    w: UnitVector3 = field(init=False)

    def __post_init__(self):
        dot = float(np.dot(self.u.vec, self.v.vec))
        if abs(dot) > 1e-12:
            raise ValueError(f"frame vectors are not orthogonal (u.v = {dot:.3g})")
        object.__setattr__(self, "w", UnitVector3(np.cross(self.u.vec, self.v.vec)))

    @classmethod
    def standard(cls) -> "Frame3":
        return cls(UnitVector3(1, 0, 0), UnitVector3(0, 1, 0))


# -- SU(2), SO(3), SO(4) ----------------------------------------------------


def su2_left(alpha, a: UnitVector3) -> ConwayOperator:
    """Left multiplication by ``exp(alpha a/2)``; preserves ``q conj(q)`` on real quaternions."""
    return sandwich(exp_pure(alpha, a), E0)


def so3(alpha, a: UnitVector3) -> ConwayOperator:
    return exp_antisym(alpha, a)


def so4(alpha, a: UnitVector3, beta, b: UnitVector3) -> ConwayOperator:
    return exp_so4(alpha, a, beta, b)


# -- Lie-type SU(3) -----------------------------------------------------------


def su3_lie_factors(p: Su3LieParams, mode=FieldMode.UNITARY) -> tuple[ConwayOperator, ...]:
    """The three factors (symmetric, rotation, diagonal) in composition order."""
    mode = _check(mode, p.alpha, p.beta, *p.delta.as_tuple())
    sd = p.shifted_delta()
    return (
        exp_sym(_phase(mode, p.beta), p.b),
        exp_antisym(_angle(mode, p.alpha), p.a),
        exp_diag(tuple(_phase(mode, x) for x in sd.as_tuple())),
    )


def su3_lie(p: Su3LieParams, mode=FieldMode.UNITARY) -> ConwayOperator:
    """Closed-form SU(3) element (SL(3) in the SL modes).

    The ``exp(-i beta/2)`` acquired by the scalar slot in the symmetric factor
    cancels against the diagonal factor, whose arguments sum to ``-beta``.
    """
    return compose_all(*su3_lie_factors(p, mode))


def su3_lie_inverse(p: Su3LieParams, mode=FieldMode.UNITARY) -> ConwayOperator:
    """Inverse: negated exponents in reversed order."""
    s, r, d = su3_lie_factors(_negated(p), mode)
    return compose_all(d, r, s)


def _negated(p: Su3LieParams) -> Su3LieParams:
    return Su3LieParams(-p.alpha, p.a, -p.beta, p.b, -p.delta)


# -- Euler-angle forms --------------------------------------------------------


def su2_euler(alpha, beta, gamma, frame: Frame3 | None = None) -> ConwayOperator:
    """Rotation about ``w`` by ``alpha``, phase ``exp(i beta/2 (u[.]u - v[.]v))``, rotation by ``gamma``.

    The doublet lives on the coefficients of ``u`` and ``v``.
    """
    frame = frame or Frame3.standard()
    middle = compose_all(exp_sym(beta, frame.u), exp_sym(-beta, frame.v))
    return compose_all(exp_antisym(alpha, frame.w), middle, exp_antisym(gamma, frame.w))


def doublet_matrix(op: ConwayOperator, frame: Frame3 | None = None) -> np.ndarray:
    """2x2 complex matrix of ``op`` restricted to ``span{u, v}``."""
    frame = frame or Frame3.standard()
    basis = [frame.u.as_biquaternion(), frame.v.as_biquaternion()]
    out = np.empty((2, 2), dtype=np.complex128)
    for j, bj in enumerate(basis):
        image = op(bj)
        for i, bi in enumerate(basis):
            out[i, j] = hermitian_form(bi, image)
    return out


def su2_euler_matrix(alpha, beta, gamma) -> np.ndarray:
    """The standard z-y-z Euler-angle SU(2) matrix, sign fixed so the origin maps to the identity."""
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    return np.array(
        [
            [cmath.exp(0.5j * (-alpha - gamma)) * c, -cmath.exp(0.5j * (-alpha + gamma)) * s],
            [cmath.exp(0.5j * (alpha - gamma)) * s, cmath.exp(0.5j * (alpha + gamma)) * c],
        ]
    )


# Hermitian unitary exchanging sigma_2 and sigma_3 under conjugation. With it,
#   EULER_BASIS_CHANGE @ doublet_matrix(su2_euler(a/2, b/2, g/2)) @ EULER_BASIS_CHANGE
#     == su2_euler_matrix(a, b, g)
# (the quaternion angles act on vectors, hence the halving).
EULER_BASIS_CHANGE = np.array([[1, -1j], [1j, -1]]) / math.sqrt(2)


def _wrap(x: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    y = math.remainder(x, 2 * math.pi)
    return math.pi if y == -math.pi else y


def su2_angles_from_matrix(u, tol: float = 1e-10) -> tuple[float, float, float]:
    """Euler angles ``(alpha, beta, gamma)`` with ``su2_euler_matrix`` equal to ``u`` up to sign.

    ``beta`` lies in [0, pi], ``alpha`` and ``gamma`` in (-pi, pi]. When
    ``beta`` is 0 or pi only one combination of ``alpha`` and ``gamma`` is
    defined, and ``gamma = 0`` is chosen.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NonUnitary(f"expected a 2x2 matrix, got shape {u.shape}")
    if unitarity_residual(u) > tol or abs(det(u) - 1) > tol:
        raise NonUnitary("matrix is not special unitary")
    c, s = abs(u[0, 0]), abs(u[1, 0])
    beta = 2 * math.atan2(s, c)
    if s <= 1e-12:
        return _wrap(-2 * cmath.phase(u[0, 0])), 0.0, 0.0
    if c <= 1e-12:
        return _wrap(2 * cmath.phase(u[1, 0])), math.pi, 0.0
    p11, p21 = cmath.phase(u[0, 0]), cmath.phase(u[1, 0])
    return _wrap(p21 - p11), beta, _wrap(-p11 - p21)


def su3_euler(p: EulerSu3Params, mode=FieldMode.UNITARY) -> ConwayOperator:
    """Rotation about ``b`` by ``delta``, then diagonal phases ``(beta, gamma, -beta-gamma)``, then rotation about ``a`` by ``alpha``."""
    mode = _check(mode, p.alpha, p.beta, p.gamma, p.delta)
    phases = tuple(_phase(mode, x) for x in (p.beta, p.gamma, -p.beta - p.gamma))
    return compose_all(
        exp_antisym(_angle(mode, p.alpha), p.a),
        exp_diag(phases),
        exp_antisym(_angle(mode, p.delta), p.b),
    )


def su4_euler(p: EulerSu4Params, mode=FieldMode.UNITARY) -> ConwayOperator:
    """Two SO(4) factors around the traceless diagonal phase ``exp(i D(gamma, delta, epsilon))``."""
    mode = _check(mode, p.alpha, p.beta, p.gamma, p.delta, p.epsilon, p.psi, p.eta)
    phases = tuple(_phase(mode, x) for x in (p.gamma, p.delta, p.epsilon))
    return compose_all(
        exp_so4(_angle(mode, p.alpha), p.a, _angle(mode, p.beta), p.b),
        exp_diag(phases),
        exp_so4(_angle(mode, p.psi), p.c, _angle(mode, p.eta), p.d),
    )


def _angle(mode: FieldMode, x):
    return x if mode is FieldMode.SL_COMPLEX else _real(x)


def product_form(factors: Sequence[tuple[ConwayOperator, complex]]) -> ConwayOperator:
    """Ordered product of series exponentials ``EXP(pi_n G_n)``."""
    return compose_all(*(series_exp(g * pi) for g, pi in factors))


def is_special_unitary(op: ConwayOperator, tol: float = 1e-12) -> bool:
    m = to_matrix(op)
    return unitarity_residual(m) < tol and abs(det(m) - 1) < tol
