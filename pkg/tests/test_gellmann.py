import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from biquat.conway import sandwich, to_matrix, zero
from biquat.core import UnitVector3
from biquat.expmaps import series_exp
from biquat.gellmann import (
    OCTET_NORMALIZATION,
    OctetVector,
    OutOfDomain,
    gellmann_generators,
    gellmann_matrices,
    octet_operator,
    octet_terms,
    pi_to_quat,
    quat_to_pi,
)
from biquat.groups import Su3LieParams, su3_lie, su3_lie_factors
from biquat.matrices import block3, det, unitarity_residual
from biquat.verify import params_distance, random_table1_params

from conftest import maxabs

SQ3 = math.sqrt(3)
EZ = UnitVector3(0, 0, 1)


def random_octet(rng):
    while True:
        p = rng.uniform(-2, 2, 8)
        if min(abs(p[0]), abs(p[3]), abs(p[5])) > 0.05:
            return OctetVector.from_array(p)


# -- the lambda matrices --------------------------------------------------------------


def test_lambda3():
    np.testing.assert_array_equal(gellmann_matrices()[2], np.diag([1, -1, 0]))


def test_lambda_normalization():
    lam = gellmann_matrices()
    gram = np.array([[np.trace(a @ b) for b in lam] for a in lam])
    assert maxabs(gram - 2 * np.eye(8)) < 1e-15
    for m in lam:
        assert maxabs(m - m.conj().T) == 0
        assert abs(np.trace(m)) < 1e-15


def test_lambda_structure_constants():
    # [l1, l2] = 2i l3 and [l4, l5] = i l3 + i sqrt(3) l8
    lam = gellmann_matrices()
    assert maxabs(lam[0] @ lam[1] - lam[1] @ lam[0] - 2j * lam[2]) < 1e-15
    comm = lam[3] @ lam[4] - lam[4] @ lam[3]
    assert maxabs(comm - 1j * lam[2] - 1j * SQ3 * lam[7]) < 1e-15


def test_generators_embed_lambdas():
    for g, lam in zip(gellmann_generators(), gellmann_matrices()):
        m = to_matrix(g)
        assert maxabs(m[:3, :3] - OCTET_NORMALIZATION * lam) < 1e-15
        assert maxabs(m[3]) < 1e-15 and maxabs(m[:, 3]) < 1e-15


# -- forward map ---------------------------------------------------------------------------


def test_quat_to_pi_examples():
    pi = quat_to_pi(Su3LieParams.make(0.5, UnitVector3(1, 0, 0), 0.0, EZ, 0.0, 0.0))
    np.testing.assert_allclose(pi.as_array(), [0, 0, 0, 0, 0, 0, 1, 0], atol=1e-16)
    assert not np.any(quat_to_pi(Su3LieParams.zero()).as_array())


def test_quat_to_pi_symmetric_part_sign():
    p = Su3LieParams.make(0.0, EZ, 0.5, UnitVector3(1, 1, 1), 0.0, 0.0)
    pi = quat_to_pi(p).as_array()
    np.testing.assert_allclose(pi[[0, 3, 5]], [1 / 3] * 3, atol=1e-15)


def test_quat_to_pi_diagonal():
    pi = quat_to_pi(Su3LieParams.make(0.0, EZ, 0.0, EZ, 0.4, -0.1)).as_array()
    assert pi[2] == pytest.approx(0.5)
    assert pi[7] == pytest.approx(SQ3 * 0.3)


# -- inverse map ----------------------------------------------------------------------------


def test_pi_to_quat_rotation_only():
    q = pi_to_quat(OctetVector(0, 0, 0, 0, 0, 0, 1, 0))
    assert q.alpha == pytest.approx(0.5)
    np.testing.assert_allclose(q.a.vec, [1, 0, 0])
    assert q.beta == 0.0


def test_pi_to_quat_zero_gauge():
    q = pi_to_quat(OctetVector(*[0.0] * 8))
    assert q.alpha == 0 and q.beta == 0
    assert q.a == EZ and q.b == EZ


@pytest.mark.parametrize("k", [0, 3, 5])
def test_pi_to_quat_partial_zero_is_out_of_domain(k):
    p = np.full(8, 0.3)
    p[k] = 0.0
    with pytest.raises(OutOfDomain):
        pi_to_quat(OctetVector.from_array(p))


def test_pi_to_quat_rejects_non_finite():
    with pytest.raises(OutOfDomain):
        pi_to_quat(OctetVector(math.nan, 1, 1, 1, 1, 1, 1, 1))


def test_octet_vector_length_checked():
    with pytest.raises(ValueError):
        OctetVector.from_array([1, 2, 3])


def test_round_trip_positive_quadrant(rng):
    for _ in range(500):
        p = random_table1_params(rng)
        assert params_distance(pi_to_quat(quat_to_pi(p)), p) < 1e-10


def test_round_trip_from_octet(rng):
    for _ in range(500):
        pi = random_octet(rng)
        back = quat_to_pi(pi_to_quat(pi))
        assert maxabs(back.as_array() - pi.as_array()) < 1e-10


def test_round_trip_sign_gauge(rng):
    # b and -b give the same octet; the recovered axis has b1 > 0
    p = random_table1_params(rng)
    flipped = Su3LieParams(p.alpha, p.a, p.beta, -p.b, p.delta)
    assert maxabs(quat_to_pi(flipped).as_array() - quat_to_pi(p).as_array()) < 1e-15
    assert params_distance(pi_to_quat(quat_to_pi(flipped)), p) < 1e-10


def test_round_trip_negative_beta(rng):
    p = random_table1_params(rng)
    neg = Su3LieParams(p.alpha, p.a, -p.beta, p.b, p.delta)
    assert params_distance(pi_to_quat(quat_to_pi(neg)), neg) < 1e-10


def test_recovered_delta_is_exactly_traceless(rng):
    for _ in range(50):
        d = pi_to_quat(random_octet(rng)).delta
        assert d.d1 + d.d2 + d.d3 == 0


@given(st.lists(st.floats(-5, 5).filter(lambda x: abs(x) > 1e-3), min_size=8, max_size=8))
def test_round_trip_property(values):
    pi = OctetVector.from_array(values)
    back = quat_to_pi(pi_to_quat(pi)).as_array()
    assert maxabs(back - pi.as_array()) <= 1e-10 * max(1.0, maxabs(values) ** 2)


# -- uncorrected conversion formulas -----------------------------------------------------------
# Each uncorrected formula is swapped in one at a time to show the
# round trip fails without the correction.


def uncorrected_forward(p: Su3LieParams) -> np.ndarray:
    pi = quat_to_pi(p).as_array()
    pi[[0, 3, 5]] *= -1  # flipped signs on the symmetric entries
    return pi


def inverse(pi, *, beta_mid="pi1pi6/pi4", beta_sqrt=False, delta_sign=1.0):
    p1, p2, p3, p4, p5, p6, p7, p8 = pi
    alpha = 0.5 * math.sqrt(p2**2 + p5**2 + p7**2)
    mid = p1 * p1 / p4 if beta_mid == "pi1pi1/pi4" else p1 * p6 / p4
    total = abs(p1 * p4 / p6) + abs(mid) + abs(p4 * p6 / p1)
    beta = 0.5 * (math.sqrt(total) if beta_sqrt else total)
    with np.errstate(invalid="ignore"):
        b = np.sqrt(np.array([p1 * p4 / p6, p1 * p6 / p4, p4 * p6 / p1]) / (2 * beta))
    d1 = delta_sign * 0.5 * (p8 / SQ3 + p3)
    d2 = delta_sign * 0.5 * (p8 / SQ3 - p3)
    a = np.array([p7, -p5, p2]) / (2 * alpha)
    return alpha, a, beta, b, d1, d2


def conversion_residual(rng, forward, **kw) -> float:
    worst = 0.0
    for _ in range(50):
        p = random_table1_params(rng)
        alpha, a, beta, b, d1, d2 = inverse(forward(p), **kw)
        diffs = [
            abs(alpha - p.alpha), maxabs(a - p.a.vec), abs(beta - p.beta), maxabs(b - p.b.vec),
            abs(d1 - p.delta.d1), abs(d2 - p.delta.d2),
        ]
        worst = max(worst, *(d if np.isfinite(d) else np.inf for d in diffs))
    return worst


def forward(p):
    return quat_to_pi(p).as_array()


def test_corrected_table_round_trips(rng):
    assert conversion_residual(rng, forward) < 1e-10


def test_uncorrected_beta_middle_term_fails(rng):
    assert conversion_residual(rng, forward, beta_mid="pi1pi1/pi4") > 1e-3


def test_uncorrected_beta_square_root_fails(rng):
    assert conversion_residual(rng, forward, beta_sqrt=True) > 1e-3


def test_uncorrected_symmetric_signs_fail(rng):
    # flipped forward signs make every b_k^2 negative in the inverse
    assert conversion_residual(rng, uncorrected_forward) == np.inf


def test_uncorrected_delta_signs_fail(rng):
    assert conversion_residual(rng, forward, delta_sign=-1.0) > 1e-3


def test_pi2_reads_as_alpha_a3(rng):
    # the inverse a3 = pi2 / 2 alpha forces pi2 = 2 alpha a3
    p = random_table1_params(rng)
    pi = quat_to_pi(p).as_array()
    assert pi[1] == pytest.approx(2 * p.alpha * p.a.vec[2])
    alpha, a, *_ = inverse(pi)
    assert a[2] == pytest.approx(p.a.vec[2])


# -- the octet operator -------------------------------------------------------------------------


def test_octet_operator_zero():
    assert octet_operator(OctetVector(*[0.0] * 8)).max_diff(zero()) == 0


def test_octet_block_structure(rng):
    for _ in range(100):
        m = to_matrix(octet_operator(random_octet(rng)))
        blk = m[:3, :3]
        assert abs(np.trace(blk)) < 1e-13
        assert maxabs(blk + blk.conj().T) < 1e-13
        assert maxabs(m[3]) < 1e-14 and maxabs(m[:, 3]) < 1e-14


def test_octet_normalization(rng):
    lam = gellmann_matrices()
    for _ in range(100):
        pi = random_octet(rng)
        blk = to_matrix(octet_operator(pi))[:3, :3]
        expected = OCTET_NORMALIZATION * sum(x * l for x, l in zip(pi.as_array(), lam))
        assert maxabs(blk - expected) < 1e-13


def test_octet_normalization_fit(rng):
    # least-squares fit of c in block = c * sum(pi lambda) picks -i/2 from the candidates
    lam = gellmann_matrices()
    num = den = 0
    for _ in range(50):
        pi = random_octet(rng)
        blk = to_matrix(octet_operator(pi))[:3, :3]
        ref = sum(x * l for x, l in zip(pi.as_array(), lam))
        num += np.vdot(ref, blk)
        den += np.vdot(ref, ref).real
    c = num / den
    candidates = [0.5j, -0.5j, 1j, -1j]
    assert min(candidates, key=lambda z: abs(z - c)) == OCTET_NORMALIZATION
    assert abs(c - OCTET_NORMALIZATION) < 1e-14


def test_octet_terms_exponentiate_to_su3_factors(rng):
    for _ in range(50):
        pi = random_octet(rng)
        terms = octet_terms(pi)
        factors = su3_lie_factors(pi_to_quat(pi))
        for t, f in zip(terms, factors):
            assert series_exp(t).max_diff(f) < 1e-10


def test_series_exp_of_octet_is_su3(rng):
    pi = random_octet(rng)
    u, resid = block3(to_matrix(series_exp(octet_operator(pi))))
    assert resid < 1e-12
    assert unitarity_residual(u) < 1e-12 and abs(det(u) - 1) < 1e-12


def test_octet_exponent_convention(rng):
    # series_exp(octet_operator) is exp(-i pi.lambda / 2) on the triplet
    from scipy.linalg import expm

    pi = random_octet(rng)
    lam = gellmann_matrices()
    h = sum(x * l for x, l in zip(pi.as_array(), lam))
    u = to_matrix(series_exp(octet_operator(pi)))[:3, :3]
    assert maxabs(u - expm(-0.5j * h)) < 1e-12


def test_su3_lie_differs_from_exp_of_sum_in_general(rng):
    # the closed form multiplies the exponentials of the three terms, not of their sum
    pi = random_octet(rng)
    g = su3_lie(pi_to_quat(pi))
    assert g.max_diff(series_exp(octet_operator(pi))) > 1e-6


def test_symmetric_term_is_sandwich(rng):
    pi = random_octet(rng)
    q = pi_to_quat(pi)
    bq = q.b.as_biquaternion()
    assert octet_terms(pi)[0].max_diff(sandwich(bq, bq) * (0.5j * q.beta)) < 1e-16
