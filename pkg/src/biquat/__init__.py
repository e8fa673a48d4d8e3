"""Biquaternion parametrizations of SU(2), SO(3), SO(4), SU(3), SU(4) and SL(3).

Group elements are built as Conway operators, linear maps on the
biquaternions written as sums ``z_nm e_n[.]e_m``. Every operator has a
4x4 complex matrix (basis order e1, e2, e3, e0) and every closed-form
exponential can be checked against a series exponential of its generator.
"""
from .core import *  # noqa: F401,F403
from .conway import *  # noqa: F401,F403
from .matrices import *  # noqa: F401,F403
from .generators import *  # noqa: F401,F403
from .expmaps import *  # noqa: F401,F403
from .groups import *  # noqa: F401,F403
from .gellmann import *  # noqa: F401,F403
from . import core, conway, matrices, generators, expmaps, groups, gellmann  # noqa: F401

__version__ = "0.1.0"
