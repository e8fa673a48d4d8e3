"""Closed-form exponentials of the generators, and a series oracle to check them.

``exp_*`` functions evaluate elementary-function closed forms. ``series_exp``
sums the exponential series of an arbitrary operator through its matrix and is
independent of every closed form.
"""
from __future__ import annotations

import cmath
import math

from .conway import ConwayOperator, compose, elementary, from_matrix, identity, sandwich, to_matrix
from .core import Biquaternion, UnitVector3, exp_pure
from .generators import DiagParams
from .matrices import mat_exp

__all__ = [
    "exp_antisym",
    "exp_so4",
    "exp_ekek",
    "exp_diag",
    "exp_sym",
    "series_exp",
]


def _cos_sin(x):
    if isinstance(x, complex):
        return cmath.cos(x), cmath.sin(x)
    return math.cos(x), math.sin(x)


def exp_antisym(alpha, a: UnitVector3) -> ConwayOperator:
    """Rotation by ``alpha`` about ``a``: ``exp(alpha a/2) [.] exp(-alpha a/2)``."""
    return sandwich(exp_pure(alpha, a), exp_pure(-alpha, a))


def exp_so4(alpha, a: UnitVector3, beta, b: UnitVector3) -> ConwayOperator:
    """``exp(alpha a/2) [.] exp(-beta b/2)``, a general SO(4) element."""
    return sandwich(exp_pure(alpha, a), exp_pure(-beta, b))


def exp_ekek(theta, k: int) -> ConwayOperator:
    """``exp(theta i/2 e_k[.]e_k) = cos(theta/2) [.] + i sin(theta/2) e_k[.]e_k``.

    Holds because ``(e_k[.]e_k)^2`` is the identity; ``theta`` may be complex.
    """
    if not 1 <= k <= 3:
        raise IndexError(f"k must be 1, 2 or 3, got {k}")
    c, s = _cos_sin(theta / 2)
    return identity() * c + elementary(k, k) * (1j * s)


def exp_diag(delta) -> ConwayOperator:
    """``exp(i D(delta1, delta2, delta3))`` as a product of three commuting factors."""
    d1, d2, d3 = delta.as_tuple() if isinstance(delta, DiagParams) else delta
    return compose(exp_ekek(d1, 1), compose(exp_ekek(d2, 2), exp_ekek(d3, 3)))


def exp_sym(beta, b: UnitVector3) -> ConwayOperator:
    """``exp(i beta/2 b[.]b) = cos(beta/2) [.] + i sin(beta/2) b[.]b`` for unit ``b``."""
    q = b.as_biquaternion() if isinstance(b, UnitVector3) else Biquaternion(0, *b)
    c, s = _cos_sin(beta / 2)
    return identity() * c + sandwich(q, q) * (1j * s)


def series_exp(f: ConwayOperator, tol: float = 1e-15) -> ConwayOperator:
    """The exponential series of ``f``, summed on its 4x4 matrix."""
    return from_matrix(mat_exp(to_matrix(f), tol))
