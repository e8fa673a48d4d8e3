"""Complexified quaternions (biquaternions) and the embeddings of C^2, C^3, C^4.

A biquaternion is ``c0 + c1 e1 + c2 e2 + c3 e3`` with complex coefficients.
The commutative imaginary unit ``i`` (Python's ``1j``) is distinct from the
quaternion units and commutes with all of them.
"""
from __future__ import annotations

import cmath
import math
from typing import Iterable

import numpy as np

__all__ = [
    "Biquaternion",
    "UnitVector3",
    "qmul",
    "conjugate",
    "scal_vect",
    "exp_pure",
    "embed_doublet",
    "embed_c4",
    "hermitian_form",
    "E0",
    "E1",
    "E2",
    "E3",
    "BASIS",
]


class Biquaternion:
    """Immutable biquaternion stored as four complex coefficients (scalar first)."""

    __slots__ = ("_c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        c = np.array([c0, c1, c2, c3], dtype=np.complex128)
        c.flags.writeable = False
        self._c = c

    @classmethod
    def from_array(cls, coeffs) -> "Biquaternion":
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        if coeffs.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {coeffs.shape}")
        q = cls.__new__(cls)
        c = coeffs.copy()
        c.flags.writeable = False
        q._c = c
        return q

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only view of ``(c0, c1, c2, c3)``."""
        return self._c

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __iter__(self):
        return (complex(x) for x in self._c)

    def __add__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion.from_array(self._c + other._c)
        if isinstance(other, (int, float, complex)):
            c = self._c.copy()
            c[0] += other
            return Biquaternion.from_array(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Biquaternion.from_array(-self._c)

    def __sub__(self, other):
        if isinstance(other, (Biquaternion, int, float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            return qmul(self, other)
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c / other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other: "Biquaternion", atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def norm_form(self) -> complex:
        """The quaternion norm ``q * conj(q)`` (complex in general, no complex conjugation)."""
        c = self._c
        return complex(np.sum(c * c))

    def __repr__(self):
        parts = ", ".join(_fmt(x) for x in self._c)
        return f"Biquaternion({parts})"


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return repr(z)


E0 = Biquaternion(1, 0, 0, 0)
E1 = Biquaternion(0, 1, 0, 0)
E2 = Biquaternion(0, 0, 1, 0)
E3 = Biquaternion(0, 0, 0, 1)
BASIS = (E0, E1, E2, E3)


class UnitVector3:
    """Real unit 3-vector used for rotation axes and the symmetric-part axes.

    The input is normalized; vectors shorter than 1e-9 are rejected since the
    axis is undefined there.
    """

    __slots__ = ("_v",)

    MIN_NORM = 1e-9

    def __init__(self, a1: float, a2: float = None, a3: float = None):
        if a2 is None and a3 is None:
            v = np.asarray(a1, dtype=np.float64).reshape(3)
        else:
            v = np.array([a1, a2, a3], dtype=np.float64)
        if not np.all(np.isfinite(v)):
            raise ValueError("unit vector components must be finite")
        n = float(np.linalg.norm(v))
        if n < self.MIN_NORM:
            raise ValueError(f"cannot normalize a vector of norm {n:.3g}")
        v = v / n
        v.flags.writeable = False
        self._v = v

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "UnitVector3":
        """Spherical coordinates: polar angle ``theta`` from e3, azimuth ``phi``."""
        st = math.sin(theta)
        return cls(st * math.cos(phi), st * math.sin(phi), math.cos(theta))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "UnitVector3":
        while True:
            v = rng.standard_normal(3)
            if np.linalg.norm(v) > 1e-3:
                return cls(v)

    @property
    def vec(self) -> np.ndarray:
        return self._v

    def __iter__(self):
        return (float(x) for x in self._v)

    def __getitem__(self, k: int) -> float:
        return float(self._v[k])

    def __neg__(self):
        return UnitVector3(-self._v)

    def __eq__(self, other):
        if not isinstance(other, UnitVector3):
            return NotImplemented
        return bool(np.array_equal(self._v, other._v))

    def __hash__(self):
        return hash(self._v.tobytes())

    def as_biquaternion(self) -> Biquaternion:
        return Biquaternion(0, *self._v)

    def __repr__(self):
        return "UnitVector3({}, {}, {})".format(*(repr(float(x)) for x in self._v))


def qmul(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """Hamilton product, bilinear over the complex coefficients."""
    a0, a1, a2, a3 = p.coeffs
    b0, b1, b2, b3 = q.coeffs
    return Biquaternion.from_array(
        np.array(
            [
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            ]
        )
    )


_QSIGN = np.array([1, -1, -1, -1])


def conjugate(q: Biquaternion, kind: str = "bi") -> Biquaternion:
    """Quaternion, complex, or combined ("bi") conjugation."""
    if kind == "quaternion":
        return Biquaternion.from_array(q.coeffs * _QSIGN)
    if kind == "complex":
        return Biquaternion.from_array(np.conj(q.coeffs))
    if kind == "bi":
        return Biquaternion.from_array(np.conj(q.coeffs) * _QSIGN)
    raise ValueError(f"unknown conjugation kind {kind!r}")


def scal_vect(q: Biquaternion) -> tuple[complex, Biquaternion]:
    c = q.coeffs
    return complex(c[0]), Biquaternion(0, c[1], c[2], c[3])


def _axis_array(a) -> np.ndarray:
    if isinstance(a, UnitVector3):
        return a.vec
    return np.asarray(a).reshape(3)


def exp_pure(alpha, a) -> Biquaternion:
    """``exp(alpha/2 * a)`` for a unit axis ``a``: ``cos(alpha/2) + sin(alpha/2) a``.

    ``alpha`` may be complex (used by the SL(n, C) modes).
    """
    v = _axis_array(a)
    if isinstance(alpha, complex):
        c, s = cmath.cos(alpha / 2), cmath.sin(alpha / 2)
    else:
        c, s = math.cos(alpha / 2), math.sin(alpha / 2)
    return Biquaternion(c, s * v[0], s * v[1], s * v[2])


def embed_doublet(x: complex, y: complex) -> Biquaternion:
    """Map a C^2 column (x, y) onto the real quaternion (Re x + Im x e1) + (Re y + Im y e1) e2."""
    x, y = complex(x), complex(y)
    return Biquaternion(x.real, x.imag, y.real, y.imag)


def extract_doublet(q: Biquaternion) -> tuple[complex, complex]:
    """Inverse of :func:`embed_doublet`; ignores any imaginary parts of ``q``'s coefficients."""
    c = q.coeffs.real
    return complex(c[0], c[1]), complex(c[2], c[3])


def embed_c4(x0, x1=None, x2=None, x3=None) -> Biquaternion:
    """Embed a C^4 column as ``sum x_n e_n``; a C^3 triplet is ``embed_c4(0, x1, x2, x3)``."""
    if x1 is None and x2 is None and x3 is None:
        return Biquaternion.from_array(np.asarray(x0, dtype=np.complex128).reshape(4))
    return Biquaternion(x0, x1, x2, x3)


def embed_c3(x: Iterable[complex]) -> Biquaternion:
    x1, x2, x3 = x
    return Biquaternion(0, x1, x2, x3)


def hermitian_form(x: Biquaternion, y: Biquaternion) -> complex:
    """Scalar part of ``x^+ y``; equals ``sum conj(x_n) y_n`` on the coefficient vectors."""
    return complex(qmul(conjugate(x, "bi"), y).coeffs[0])
