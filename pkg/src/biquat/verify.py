"""Randomized verification suites behind ``biquat verify``.

Every check draws ``samples`` random inputs from its own seeded stream and
returns the largest residual seen; a suite passes when every residual is
strictly below its threshold.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import conway as cw
from .conway import compose, compose_all, from_matrix, identity, op_adjoint, to_matrix
from .core import E0, Biquaternion, UnitVector3, conjugate, exp_pure, hermitian_form, qmul
from .expmaps import exp_antisym, exp_diag, exp_ekek, exp_so4, exp_sym, series_exp
from .gellmann import (
    OCTET_NORMALIZATION,
    OctetVector,
    gellmann_matrices,
    octet_operator,
    pi_to_quat,
    quat_to_pi,
)
from .generators import DiagParams, antisym3, diag_op
from .groups import (
    FieldMode,
    Su3LieParams,
    su3_euler,
    su3_lie,
    su3_lie_factors,
    su3_lie_inverse,
    su4_euler,
)
from .matrices import block3, dagger, det, unitarity_residual
from .sampling import (
    make_rng,
    random_angle,
    random_biquaternion,
    random_complex,
    random_positive_axis,
    random_su3_euler,
    random_su3_lie,
    random_su4_euler,
)

__all__ = ["VerifyReport", "SUITES", "run_suite", "run_all"]


@dataclass
class VerifyReport:
    suite: str
    samples: int
    seed: int
    max_residuals: dict[str, float] = field(default_factory=dict)
    thresholds: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.max_residuals[k] < self.thresholds[k] for k in self.max_residuals)

    def merge(self, other: "VerifyReport") -> None:
        for k, v in other.max_residuals.items():
            self.max_residuals[k] = max(v, self.max_residuals.get(k, 0.0))
            self.thresholds[k] = other.thresholds[k]

    def format(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"samples: {self.samples}",
            f"seed: {self.seed}",
            "max_residuals:",
        ]
        width = max((len(k) for k in self.max_residuals), default=0)
        for k in sorted(self.max_residuals):
            r, t = self.max_residuals[k], self.thresholds[k]
            status = "ok" if r < t else "FAIL"
            lines.append(f"  {k:<{width}}  {r:.3e}  < {t:.0e}  {status}")
        lines.append(f"pass: {'true' if self.passed else 'false'}")
        return "\n".join(lines) + "\n"


Check = Callable[[np.random.Generator, int], float]


def _max(values) -> float:
    return float(max(values, default=0.0))


# -- algebra ----------------------------------------------------------------


def _assoc(rng, n):
    out = []
    for _ in range(n):
        p, q, r = (random_biquaternion(rng) for _ in range(3))
        out.append(np.max(np.abs((qmul(qmul(p, q), r) - qmul(p, qmul(q, r))).coeffs)))
    return _max(out)


def _conj_antiautomorphism(rng, n):
    out = []
    for _ in range(n):
        p, q = random_biquaternion(rng), random_biquaternion(rng)
        lhs = conjugate(qmul(p, q), "quaternion")
        rhs = qmul(conjugate(q, "quaternion"), conjugate(p, "quaternion"))
        out.append(np.max(np.abs((lhs - rhs).coeffs)))
    return _max(out)


def _hermitian_inner(rng, n):
    out = []
    for _ in range(n):
        x, y = random_biquaternion(rng), random_biquaternion(rng)
        out.append(abs(hermitian_form(x, y) - np.vdot(x.coeffs, y.coeffs)))
    return _max(out)


def _exp_pure_additive(rng, n):
    out = []
    for _ in range(n):
        a = UnitVector3.random(rng)
        s, t = random_angle(rng), random_angle(rng)
        d = qmul(exp_pure(s, a), exp_pure(t, a)) - exp_pure(s + t, a)
        out.append(np.max(np.abs(d.coeffs)))
    return _max(out)


def _random_matrix(rng, size=4):
    return rng.uniform(-1, 1, (size, size)) + 1j * rng.uniform(-1, 1, (size, size))


def _random_op(rng):
    return cw.ConwayOperator(_random_matrix(rng))


def _matrix_roundtrip(rng, n):
    out = []
    for _ in range(n):
        m = _random_matrix(rng)
        f = _random_op(rng)
        out.append(np.max(np.abs(to_matrix(from_matrix(m)) - m)))
        out.append(from_matrix(to_matrix(f)).max_diff(f))
    return _max(out)


def _compose_homomorphism(rng, n):
    out = []
    for _ in range(n):
        f, g = _random_op(rng), _random_op(rng)
        out.append(np.max(np.abs(to_matrix(compose(f, g)) - to_matrix(f) @ to_matrix(g))))
    return _max(out)


def _adjoint_dagger(rng, n):
    out = []
    for _ in range(n):
        f = _random_op(rng)
        out.append(np.max(np.abs(to_matrix(op_adjoint(f)) - dagger(to_matrix(f)))))
    return _max(out)


def _associate_relation(rng, n):
    out = []
    for _ in range(n):
        f = _random_op(rng)
        x, y = random_biquaternion(rng), random_biquaternion(rng)
        lhs = qmul(f(x), y)[0]
        rhs = qmul(x, cw.associate(f)(y))[0]
        out.append(abs(lhs - rhs))
    return _max(out)


# -- exponential maps ---------------------------------------------------------


def _oracle_antisym(rng, n):
    out = []
    for _ in range(n):
        a, t = UnitVector3.random(rng), random_angle(rng)
        out.append(series_exp(antisym3(a, t)).max_diff(exp_antisym(t, a)))
    return _max(out)


def _oracle_so4(rng, n):
    out = []
    for _ in range(n):
        a, b = UnitVector3.random(rng), UnitVector3.random(rng)
        s, t = random_angle(rng), random_angle(rng)
        # generator: s/2 a[.] - t/2 [.]b (the two parts commute)
        gen = (
            cw.sandwich(a.as_biquaternion(), E0) * (0.5 * s)
            - cw.sandwich(E0, b.as_biquaternion()) * (0.5 * t)
        )
        out.append(series_exp(gen).max_diff(exp_so4(s, a, t, b)))
    return _max(out)


def _oracle_ekek(rng, n):
    out = []
    for _ in range(n):
        k = int(rng.integers(1, 4))
        t = random_angle(rng)
        out.append(series_exp(cw.elementary(k, k) * (0.5j * t)).max_diff(exp_ekek(t, k)))
    return _max(out)


def _oracle_diag(rng, n):
    out = []
    for _ in range(n):
        d = DiagParams(random_angle(rng), random_angle(rng), random_angle(rng))
        out.append(series_exp(diag_op(d) * 1j).max_diff(exp_diag(d)))
    return _max(out)


def _oracle_sym(rng, n):
    out = []
    for _ in range(n):
        b, t = UnitVector3.random(rng), random_angle(rng)
        q = b.as_biquaternion()
        out.append(series_exp(cw.sandwich(q, q) * (0.5j * t)).max_diff(exp_sym(t, b)))
    return _max(out)


def _compactness(rng, n):
    out = []
    for _ in range(n):
        a, b = UnitVector3.random(rng), UnitVector3.random(rng)
        s, t = random_angle(rng), random_angle(rng)
        d = DiagParams(random_angle(rng), random_angle(rng), random_angle(rng))
        for op in (exp_antisym(s, a), exp_so4(s, a, t, b), exp_ekek(t, 2), exp_diag(d), exp_sym(t, b)):
            sv = np.linalg.svd(to_matrix(op), compute_uv=False)
            out.append(np.max(np.abs(sv - 1)))
    return _max(out)


# -- SU(3) ----------------------------------------------------------------------


def _su3_lie_unitary(rng, n):
    out = []
    for _ in range(n):
        b, _ = block3(to_matrix(su3_lie(random_su3_lie(rng))))
        out.append(unitarity_residual(b))
    return _max(out)


def _su3_lie_det(rng, n):
    return _max(abs(det(block3(to_matrix(su3_lie(random_su3_lie(rng))))[0]) - 1) for _ in range(n))


def _su3_lie_scalar(rng, n):
    return _max(block3(to_matrix(su3_lie(random_su3_lie(rng))))[1] for _ in range(n))


def _su3_euler_unitary(rng, n):
    out = []
    for _ in range(n):
        b, resid = block3(to_matrix(su3_euler(random_su3_euler(rng))))
        out.append(max(unitarity_residual(b), abs(det(b) - 1)))
    return _max(out)


def _su3_euler_scalar(rng, n):
    return _max(block3(to_matrix(su3_euler(random_su3_euler(rng))))[1] for _ in range(n))


def _su3_inverse(rng, n):
    out = []
    for _ in range(n):
        p = random_su3_lie(rng)
        out.append(compose(su3_lie(p), su3_lie_inverse(p)).max_diff(identity()))
    return _max(out)


def _su3_adjoint(rng, n):
    out = []
    for _ in range(n):
        p = random_su3_lie(rng)
        out.append(su3_lie_inverse(p).max_diff(op_adjoint(su3_lie(p))))
    return _max(out)


def _random_triplet(rng):
    return Biquaternion.from_array(np.concatenate([[0], rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)]))


def _hermitian_invariance(make, triplet):
    def check(rng, n):
        out = []
        for _ in range(n):
            g = make(rng)
            if triplet:
                x, y = _random_triplet(rng), _random_triplet(rng)
            else:
                x, y = random_biquaternion(rng), random_biquaternion(rng)
            out.append(abs(hermitian_form(g(x), g(y)) - hermitian_form(x, y)))
        return _max(out)

    return check


def _su3_permutations(rng, n):
    out = []
    for _ in range(n):
        factors = su3_lie_factors(random_su3_lie(rng))
        for perm in itertools.permutations(factors):
            b, resid = block3(to_matrix(compose_all(*perm)))
            out.append(max(resid, unitarity_residual(b), abs(det(b) - 1)))
    return _max(out)


def _real_sl_lie(rng) -> Su3LieParams:
    u = lambda: float(rng.uniform(-1, 1))  # noqa: E731
    return Su3LieParams.make(u(), UnitVector3.random(rng), u(), UnitVector3.random(rng), u(), u())


def _real_sl_euler(rng):
    p = random_su3_euler(rng)
    u = lambda: float(rng.uniform(-1, 1))  # noqa: E731
    return type(p)(u(), p.a, u(), u(), u(), p.b)


def _sl3_real(rng, n):
    # non-compact: scalar parameters drawn from [-1, 1] keep entries O(10)
    out = []
    for _ in range(n):
        for m in (
            to_matrix(su3_lie(_real_sl_lie(rng), FieldMode.SL_REAL)),
            to_matrix(su3_euler(_real_sl_euler(rng), FieldMode.SL_REAL)),
        ):
            b, resid = block3(m)
            out.append(max(abs(det(b) - 1), float(np.max(np.abs(b.imag))), resid))
    return _max(out)


def _complex_lie(rng) -> Su3LieParams:
    return Su3LieParams.make(
        random_complex(rng),
        UnitVector3.random(rng),
        random_complex(rng),
        UnitVector3.random(rng),
        random_complex(rng),
        random_complex(rng),
    )


def _complex_euler(rng):
    p = random_su3_euler(rng)
    return type(p)(
        random_complex(rng), p.a, random_complex(rng), random_complex(rng), random_complex(rng), p.b
    )


def _sl3_complex(rng, n):
    out = []
    for _ in range(n):
        for m in (
            to_matrix(su3_lie(_complex_lie(rng), FieldMode.SL_COMPLEX)),
            to_matrix(su3_euler(_complex_euler(rng), FieldMode.SL_COMPLEX)),
        ):
            b, resid = block3(m)
            out.append(max(abs(det(b) - 1), resid))
    return _max(out)


# -- SU(4) ----------------------------------------------------------------------


def _su4_unitary(rng, n):
    return _max(unitarity_residual(to_matrix(su4_euler(random_su4_euler(rng)))) for _ in range(n))


def _su4_det(rng, n):
    return _max(abs(det(to_matrix(su4_euler(random_su4_euler(rng)))) - 1) for _ in range(n))


def _su4_closure(rng, n):
    out = []
    for _ in range(n):
        m = to_matrix(compose(su4_euler(random_su4_euler(rng)), su4_euler(random_su4_euler(rng))))
        out.append(max(unitarity_residual(m), abs(det(m) - 1)))
    return _max(out)


# -- octet <-> quaternion conversion ---------------------------------------------


def random_table1_params(rng) -> Su3LieParams:
    """Valid quaternion parameters with ``alpha, beta > 0`` and ``b`` in the positive octant."""
    return Su3LieParams.make(
        float(rng.uniform(0.05, 3.0)),
        UnitVector3.random(rng),
        float(rng.uniform(0.05, 3.0)),
        random_positive_axis(rng),
        random_angle(rng),
        random_angle(rng),
    )


def params_distance(p: Su3LieParams, q: Su3LieParams) -> float:
    return float(
        max(
            abs(p.alpha - q.alpha),
            np.max(np.abs(p.a.vec - q.a.vec)),
            abs(p.beta - q.beta),
            np.max(np.abs(p.b.vec - q.b.vec)),
            *(abs(x - y) for x, y in zip(p.delta.as_tuple(), q.delta.as_tuple())),
        )
    )


def _table1_quat_roundtrip(rng, n):
    out = []
    for _ in range(n):
        p = random_table1_params(rng)
        out.append(params_distance(pi_to_quat(quat_to_pi(p)), p))
    return _max(out)


def _table1_pi_roundtrip(rng, n):
    out = []
    for _ in range(n):
        pi = quat_to_pi(random_table1_params(rng)).as_array()
        # perturb to a generic octet vector of the same sign pattern
        pi = pi * rng.uniform(0.5, 1.5, 8)
        back = quat_to_pi(pi_to_quat(OctetVector.from_array(pi))).as_array()
        out.append(np.max(np.abs(back - pi)))
    return _max(out)


def _table1_normalization(rng, n):
    lam = gellmann_matrices()
    out = []
    for _ in range(n):
        pi = quat_to_pi(random_table1_params(rng))
        block, resid = block3(to_matrix(octet_operator(pi)) + np.diag([0, 0, 0, 1]))
        expected = OCTET_NORMALIZATION * sum(x * l for x, l in zip(pi.as_array(), lam))
        out.append(max(np.max(np.abs(block - expected)), resid))
    return _max(out)


SUITES: dict[str, list[tuple[str, float, Check]]] = {
    "algebra": [
        ("qmul_associativity", 1e-13, _assoc),
        ("conjugate_antiautomorphism", 1e-14, _conj_antiautomorphism),
        ("hermitian_form_inner_product", 1e-14, _hermitian_inner),
        ("exp_pure_additivity", 1e-13, _exp_pure_additive),
        ("matrix_roundtrip", 1e-14, _matrix_roundtrip),
        ("compose_homomorphism", 1e-13, _compose_homomorphism),
        ("adjoint_is_dagger", 1e-14, _adjoint_dagger),
        ("associate_relation", 1e-13, _associate_relation),
    ],
    "expmaps": [
        ("oracle_exp_antisym", 1e-10, _oracle_antisym),
        ("oracle_exp_so4", 1e-10, _oracle_so4),
        ("oracle_exp_ekek", 1e-10, _oracle_ekek),
        ("oracle_exp_diag", 1e-10, _oracle_diag),
        ("oracle_exp_sym", 1e-10, _oracle_sym),
        ("compactness", 1e-12, _compactness),
    ],
    "su3": [
        ("su3_lie_unitarity", 1e-12, _su3_lie_unitary),
        ("su3_lie_det", 1e-12, _su3_lie_det),
        ("su3_lie_scalar_slot", 1e-13, _su3_lie_scalar),
        ("su3_euler_unitarity_det", 1e-12, _su3_euler_unitary),
        ("su3_euler_scalar_slot", 1e-13, _su3_euler_scalar),
        ("su3_inverse", 1e-12, _su3_inverse),
        ("su3_inverse_is_adjoint", 1e-12, _su3_adjoint),
        ("su3_hermitian_form", 1e-12, _hermitian_invariance(lambda r: su3_lie(random_su3_lie(r)), True)),
        ("su3_factor_permutations", 1e-12, _su3_permutations),
        ("sl3_real", 1e-12, _sl3_real),
        ("sl3_complex", 1e-10, _sl3_complex),
    ],
    "su4": [
        ("su4_unitarity", 1e-12, _su4_unitary),
        ("su4_det", 1e-12, _su4_det),
        ("su4_closure", 1e-12, _su4_closure),
        ("su4_hermitian_form", 1e-12, _hermitian_invariance(lambda r: su4_euler(random_su4_euler(r)), False)),
    ],
    "table1": [
        ("quat_pi_quat_roundtrip", 1e-10, _table1_quat_roundtrip),
        ("pi_quat_pi_roundtrip", 1e-10, _table1_pi_roundtrip),
        ("octet_normalization", 1e-13, _table1_normalization),
    ],
}

_SUITE_ORDER = list(SUITES)


def run_suite(name: str, samples: int, seed: int) -> VerifyReport:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if name not in SUITES:
        raise KeyError(name)
    report = VerifyReport(name, samples, seed)
    base = _SUITE_ORDER.index(name) * 100
    for k, (check, threshold, fn) in enumerate(SUITES[name]):
        report.max_residuals[check] = fn(make_rng(seed, base + k), samples)
        report.thresholds[check] = threshold
    return report


def run_all(samples: int, seed: int) -> VerifyReport:
    report = VerifyReport("all", samples, seed)
    for name in _SUITE_ORDER:
        report.merge(run_suite(name, samples, seed))
    return report
