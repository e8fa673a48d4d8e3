import math

import numpy as np
import pytest
from hypothesis import strategies as st

from biquat.core import Biquaternion, UnitVector3
from biquat.sampling import make_rng

finite = st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False)
angles = st.floats(-math.pi, math.pi, allow_nan=False)
complexes = st.builds(complex, finite, finite)
biquats = st.builds(Biquaternion, complexes, complexes, complexes, complexes)
unit_vectors = st.builds(
    UnitVector3.from_angles, st.floats(0.0, math.pi), st.floats(-math.pi, math.pi)
)


@pytest.fixture
def rng():
    return make_rng(20240611, 0)


def rand_matrix(rng, n=4):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def maxabs(x) -> float:
    return float(np.max(np.abs(np.asarray(x))))


# -- parameter maps for Jacobian rank checks --------------------------------------
# Unit vectors are parametrized by spherical angles so every coordinate is free.


def _axis(theta, phi):
    return UnitVector3.from_angles(theta, phi)


def _su3_lie_map(x):
    from biquat.groups import Su3LieParams, su3_lie

    p = Su3LieParams.make(x[0], _axis(x[1], x[2]), x[3], _axis(x[4], x[5]), x[6], x[7])
    return su3_lie(p)


def _su3_euler_map(x):
    from biquat.groups import EulerSu3Params, su3_euler

    return su3_euler(EulerSu3Params(x[0], _axis(x[1], x[2]), x[3], x[4], x[5], _axis(x[6], x[7])))


def _su4_euler_map(x):
    from biquat.groups import EulerSu4Params, su4_euler

    axes = [_axis(x[7 + 2 * k], x[8 + 2 * k]) for k in range(4)]
    return su4_euler(EulerSu4Params(*x[:7], *axes))


def _so3_map(x):
    from biquat.groups import so3

    return so3(x[0], _axis(x[1], x[2]))


def _so4_map(x):
    from biquat.groups import so4

    return so4(x[0], _axis(x[1], x[2]), x[3], _axis(x[4], x[5]))


# name -> (map, number of parameters, expected rank)
PARAM_MAPS = {
    "su3_lie": (_su3_lie_map, 8, 8),
    "su3_euler": (_su3_euler_map, 8, 8),
    "su4_euler": (_su4_euler_map, 15, 15),
    "so3": (_so3_map, 3, 3),
    "so4": (_so4_map, 6, 6),
}


def interior_point(rng, n):
    """Random parameters in (0.2, 2.9): nonzero angles, polar angles off the poles."""
    return rng.uniform(0.2, 2.9, n)


def jacobian_rank(fn, x0, step=1e-6, floor=1e-8) -> int:
    from biquat.conway import to_matrix

    def flat(x):
        m = to_matrix(fn(x))
        return np.concatenate([m.real.ravel(), m.imag.ravel()])

    cols = []
    for k in range(len(x0)):
        e = np.zeros(len(x0))
        e[k] = step
        cols.append((flat(x0 + e) - flat(x0 - e)) / (2 * step))
    sv = np.linalg.svd(np.array(cols), compute_uv=False)
    return int(np.sum(sv > floor))


# -- acceptance summary ---------------------------------------------------------------
# Acceptance tests attach a one-line verdict as a user property; it is printed
# after the run so the lines show up without ``-s``.


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            for key, value in rep.user_properties:
                if key == "acceptance":
                    lines.append(value)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda t: int(t.split()[1])):
            terminalreporter.write_line(line)
