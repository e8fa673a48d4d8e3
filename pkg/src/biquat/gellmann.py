"""Bridge between the Gell-Mann octet parameters and the quaternion SU(3) parameters.

The octet operator ``i beta/2 b[.]b + alpha/2 (a[.] - [.]a) + i D(delta - beta b^2)``
has the 3x3 block ``OCTET_NORMALIZATION * sum_n pi_n lambda_n`` with
``OCTET_NORMALIZATION = -i/2``, i.e. the quaternion parameters describe
``EXP(-i pi.lambda / 2)``.

Parameter relations (forward)::

    pi1 = 2 beta b1 b2    pi4 = 2 beta b3 b1    pi6 = 2 beta b2 b3
    pi2 = 2 alpha a3      pi5 = -2 alpha a2     pi7 = 2 alpha a1
    pi3 = delta1 - delta2                        pi8 = sqrt(3) (delta1 + delta2)

and the inverse::

    alpha = |(pi7, -pi5, pi2)| / 2               a = (pi7, -pi5, pi2) / (2 alpha)
    beta  = (pi1 pi4/pi6 + pi1 pi6/pi4 + pi4 pi6/pi1) / 2
    b1 = sqrt(pi1 pi4 / (2 beta pi6)), b2 = sqrt(pi1 pi6 / (2 beta pi4)), b3 = sqrt(pi4 pi6 / (2 beta pi1))
    delta1 = (pi8/sqrt(3) + pi3) / 2             delta2 = (pi8/sqrt(3) - pi3) / 2

The signs of ``b`` are recoverable only up to ``b -> -b``; ``b1 > 0`` is chosen
and ``b2``, ``b3`` take the signs of ``pi1`` and ``pi4`` relative to ``beta``.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass

import numpy as np

from .conway import ConwayOperator, from_matrix, sandwich
from .core import UnitVector3
from .generators import DiagParams, antisym3, diag_op
from .groups import Su3LieParams

__all__ = [
    "OutOfDomain",
    "OctetVector",
    "OCTET_NORMALIZATION",
    "gellmann_matrices",
    "gellmann_generators",
    "quat_to_pi",
    "pi_to_quat",
    "octet_operator",
    "octet_terms",
]

SQRT3 = math.sqrt(3.0)
OCTET_NORMALIZATION = -0.5j


class OutOfDomain(ValueError):
    """The octet vector lies where the quaternion parameters cannot be recovered."""


@dataclass(frozen=True)
class OctetVector:
    pi1: float
    pi2: float
    pi3: float
    pi4: float
    pi5: float
    pi6: float
    pi7: float
    pi8: float

    def __post_init__(self):
        for name, value in zip(self.__dataclass_fields__, astuple(self)):
            object.__setattr__(self, name, float(value))

    @classmethod
    def from_array(cls, values) -> "OctetVector":
        values = [float(x) for x in values]
        if len(values) != 8:
            raise ValueError(f"an octet vector has 8 components, got {len(values)}")
        return cls(*values)

    def as_array(self) -> np.ndarray:
        return np.array(astuple(self), dtype=np.float64)


def gellmann_matrices() -> list[np.ndarray]:
    """The eight standard lambda matrices, normalized by ``Tr(l_i l_j) = 2 delta_ij``."""
    lam = np.zeros((8, 3, 3), dtype=np.complex128)
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1], lam[1][1, 0] = -1j, 1j
    lam[2][0, 0], lam[2][1, 1] = 1, -1
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2], lam[4][2, 0] = -1j, 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2], lam[6][2, 1] = -1j, 1j
    lam[7] = np.diag([1, 1, -2]) / SQRT3
    return list(lam)


def gellmann_generators() -> list[ConwayOperator]:
    """Operators whose 3x3 block is ``OCTET_NORMALIZATION * lambda_n`` and that fix the scalar slot."""
    out = []
    for lam in gellmann_matrices():
        m = np.zeros((4, 4), dtype=np.complex128)
        m[:3, :3] = OCTET_NORMALIZATION * lam
        out.append(from_matrix(m))
    return out


def quat_to_pi(p: Su3LieParams) -> OctetVector:
    a, b = p.a.vec, p.b.vec
    al, be = p.alpha, p.beta
    d1, d2 = p.delta.d1, p.delta.d2
    return OctetVector(
        2 * be * b[0] * b[1],
        2 * al * a[2],
        d1 - d2,
        2 * be * b[2] * b[0],
        -2 * al * a[1],
        2 * be * b[1] * b[2],
        2 * al * a[0],
        SQRT3 * (d1 + d2),
    )


def pi_to_quat(pi: OctetVector) -> Su3LieParams:
    """Recover the quaternion parameters; the axis ``a`` defaults to e3 when ``alpha = 0``.

    Raises :class:`OutOfDomain` when some but not all of ``pi1, pi4, pi6``
    vanish, since ``beta`` is then undetermined. When all three vanish the
    symmetric part is absent and ``beta = 0`` with ``b = e3``.
    """
    p = pi.as_array()
    if not np.all(np.isfinite(p)):
        raise OutOfDomain("octet vector must be finite")
    p1, p2, p3, p4, p5, p6, p7, p8 = p

    av = np.array([p7, -p5, p2])
    alpha = 0.5 * float(np.linalg.norm(av))
    a = UnitVector3(av) if alpha > 0 else UnitVector3(0, 0, 1)

    sym = (float(p1), float(p4), float(p6))
    if all(x == 0 for x in sym):
        beta, b = 0.0, UnitVector3(0, 0, 1)
    elif any(x == 0 for x in sym):
        raise OutOfDomain(f"pi1, pi4, pi6 must all be nonzero (or all zero), got {sym}")
    else:
        r1, r2, r3 = p1 * p4 / p6, p1 * p6 / p4, p4 * p6 / p1
        # pi1 pi4 pi6 = 8 beta^3 (b1 b2 b3)^2 fixes the sign of beta
        beta = math.copysign(0.5 * (abs(r1) + abs(r2) + abs(r3)), p1 * p4 * p6)
        b1 = math.sqrt(r1 / (2 * beta))
        b2 = math.copysign(math.sqrt(r2 / (2 * beta)), p1 / beta)
        b3 = math.copysign(math.sqrt(r3 / (2 * beta)), p4 / beta)
        b = UnitVector3(b1, b2, b3)

    d1 = 0.5 * (p8 / SQRT3 + p3)
    d2 = 0.5 * (p8 / SQRT3 - p3)
    return Su3LieParams(alpha, a, beta, b, DiagParams.traceless(d1, d2))


def octet_terms(pi: OctetVector) -> tuple[ConwayOperator, ConwayOperator, ConwayOperator]:
    """The symmetric, antisymmetric and diagonal terms of the octet operator."""
    q = pi_to_quat(pi)
    bq = q.b.as_biquaternion()
    return (
        sandwich(bq, bq) * (0.5j * q.beta),
        antisym3(q.a, q.alpha),
        diag_op(q.shifted_delta()) * 1j,
    )


def octet_operator(pi: OctetVector) -> ConwayOperator:
    s, a, d = octet_terms(pi)
    return s + a + d
