"""Linear maps C^4 -> C^4 written as sums of Conway operators ``z_nm e_n [.] e_m``.

Matrix conversions use the scalar-last coordinate order ``(x1, x2, x3, x0)``.
With that order the 3x3 vector block is the upper-left block, which is how
the classical matrices of the antisymmetric, diagonal and symmetric
generators are usually displayed.
"""
from __future__ import annotations

import numpy as np

from .core import BASIS, Biquaternion

__all__ = [
    "ConwayOperator",
    "elementary",
    "identity",
    "zero",
    "sandwich",
    "apply",
    "compose",
    "lincomb",
    "to_matrix",
    "from_matrix",
    "associate",
    "biconjugate_op",
    "op_adjoint",
    "SCALAR_LAST",
]

# e_n e_p = _SGN[n, p] * e_{_IDX[n, p]}
_IDX = np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
_SGN = np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]])

# Coordinate permutation: matrix row/col r holds quaternion coefficient SCALAR_LAST[r].
SCALAR_LAST = np.array([1, 2, 3, 0])


def _mul_tensor() -> np.ndarray:
    t = np.zeros((4, 4, 4))
    for n in range(4):
        for p in range(4):
            t[n, p, _IDX[n, p]] = _SGN[n, p]
    return t


_MUL = _mul_tensor()

# _ACTION[k, p, n, m]: coefficient k of e_n e_p e_m, i.e. the scalar-first matrix
# of the elementary operator (n, m).
_ACTION = np.einsum("npr,rmk->kpnm", _MUL, _MUL)
_ACTION_FLAT = _ACTION.reshape(16, 16)
# The 16 elementary matrices are signed permutation matrices, mutually orthogonal
# under the trace inner product, each with squared norm 4.
_ACTION_INV = _ACTION_FLAT.T / 4.0

# _COMPOSE[(k, l), (n, m, p, q)] for f = z_nm e_n[.]e_m, g = w_pq e_p[.]e_q:
# f(g(Q)) = z_nm w_pq (e_n e_p) Q (e_q e_m).
_COMPOSE = np.einsum("npk,qml->klnmpq", _MUL, _MUL).reshape(16, 256)

_PERM = SCALAR_LAST


class ConwayOperator:
    """Immutable linear function on biquaternions, stored as 16 coefficients ``z[n, m]``."""

    __slots__ = ("_z",)

    def __init__(self, z):
        z = np.array(z, dtype=np.complex128)
        if z.shape != (4, 4):
            raise ValueError(f"expected 4x4 coefficient array, got shape {z.shape}")
        z.flags.writeable = False
        self._z = z

    @property
    def z(self) -> np.ndarray:
        return self._z

    def __call__(self, q: Biquaternion) -> Biquaternion:
        return apply(self, q)

    def __matmul__(self, other: "ConwayOperator") -> "ConwayOperator":
        return compose(self, other)

    def __add__(self, other):
        if not isinstance(other, ConwayOperator):
            return NotImplemented
        return ConwayOperator(self._z + other._z)

    def __sub__(self, other):
        if not isinstance(other, ConwayOperator):
            return NotImplemented
        return ConwayOperator(self._z - other._z)

    def __neg__(self):
        return ConwayOperator(-self._z)

    def __mul__(self, c):
        if isinstance(c, (int, float, complex, np.number)):
            return ConwayOperator(self._z * c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ConwayOperator):
            return NotImplemented
        return bool(np.array_equal(self._z, other._z))

    def __hash__(self):
        return hash(self._z.tobytes())

    def max_diff(self, other: "ConwayOperator") -> float:
        return float(np.max(np.abs(self._z - other._z)))

    def matrix(self) -> np.ndarray:
        return to_matrix(self)

    def __repr__(self):
        nz = [
            f"({n},{m}):{complex(self._z[n, m])!r}"
            for n in range(4)
            for m in range(4)
            if self._z[n, m] != 0
        ]
        return "ConwayOperator{" + ", ".join(nz) + "}"


def elementary(n: int, m: int) -> ConwayOperator:
    """The operator ``e_n [.] e_m``."""
    if not (0 <= n <= 3 and 0 <= m <= 3):
        raise IndexError(f"Conway operator indices must lie in 0..3, got ({n}, {m})")
    z = np.zeros((4, 4), dtype=np.complex128)
    z[n, m] = 1
    return ConwayOperator(z)


def identity() -> ConwayOperator:
    return elementary(0, 0)


def zero() -> ConwayOperator:
    return ConwayOperator(np.zeros((4, 4)))


def sandwich(a: Biquaternion, b: Biquaternion) -> ConwayOperator:
    """``Q -> a Q b``."""
    return ConwayOperator(np.outer(a.coeffs, b.coeffs))


def _matrix_scalar_first(f: ConwayOperator) -> np.ndarray:
    return (_ACTION_FLAT @ f.z.reshape(16)).reshape(4, 4)


def apply(f: ConwayOperator, q: Biquaternion) -> Biquaternion:
    return Biquaternion.from_array(_matrix_scalar_first(f) @ q.coeffs)


def apply_direct(f: ConwayOperator, q: Biquaternion) -> Biquaternion:
    """Reference evaluation of ``sum z_nm e_n q e_m`` by explicit products."""
    out = Biquaternion()
    for n in range(4):
        for m in range(4):
            z = f.z[n, m]
            if z != 0:
                out = out + complex(z) * (BASIS[n] * q * BASIS[m])
    return out


def compose(f: ConwayOperator, g: ConwayOperator) -> ConwayOperator:
    """``f (.) g``: apply ``g`` first, then ``f``."""
    w = np.outer(f.z.reshape(16), g.z.reshape(16)).reshape(256)
    return ConwayOperator((_COMPOSE @ w).reshape(4, 4))


def compose_all(*ops: ConwayOperator) -> ConwayOperator:
    """Left-to-right ``ops[0] (.) ops[1] (.) ...``; the empty product is the identity."""
    out = identity()
    for op in ops:
        out = compose(out, op)
    return out


def lincomb(f: ConwayOperator, g: ConwayOperator, cf=1, cg=1) -> ConwayOperator:
    return ConwayOperator(cf * f.z + cg * g.z)


def to_matrix(f: ConwayOperator) -> np.ndarray:
    """Complex 4x4 matrix in the scalar-last order (e1, e2, e3, e0)."""
    m = _matrix_scalar_first(f)
    return m[np.ix_(_PERM, _PERM)]


def from_matrix(m) -> ConwayOperator:
    """Inverse of :func:`to_matrix`."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    first = np.empty((4, 4), dtype=np.complex128)
    first[np.ix_(_PERM, _PERM)] = m
    return ConwayOperator((_ACTION_INV @ first.reshape(16)).reshape(4, 4))


def associate(f: ConwayOperator) -> ConwayOperator:
    """Function association: ``S[f(X) Y] = S[X f*(Y)]``; maps ``a[.]b`` to ``b[.]a``."""
    return ConwayOperator(f.z.T)


def biconjugate_op(f: ConwayOperator) -> ConwayOperator:
    """Operator biconjugation ``F+(X) = (F(X+))+``.

    Each term ``z e_n [X+] e_m`` biconjugates to ``conj(z) e_m+ [X] e_n+``.
    """
    s = np.array([1, -1, -1, -1])
    return ConwayOperator((np.conj(f.z) * np.outer(s, s)).T)


def op_adjoint(f: ConwayOperator) -> ConwayOperator:
    """Hermitian conjugate as biconjugation followed by association."""
    return associate(biconjugate_op(f))
