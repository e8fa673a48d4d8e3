"""Seeded random parameter draws.

All draws use numpy's ``Generator`` (PCG64). Streams are reproducible for a
given numpy version; golden outputs are kept per implementation only.
"""
from __future__ import annotations

import math

import numpy as np

from .core import Biquaternion, UnitVector3
from .groups import EulerSu3Params, EulerSu4Params, Su3LieParams

__all__ = [
    "make_rng",
    "random_angle",
    "random_biquaternion",
    "random_su3_lie",
    "random_su3_euler",
    "random_su4_euler",
    "random_positive_axis",
]


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for ``(seed, stream)``; streams do not overlap."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))


def random_angle(rng: np.random.Generator) -> float:
    return float(rng.uniform(-math.pi, math.pi))


def random_biquaternion(rng: np.random.Generator, scale: float = 1.0) -> Biquaternion:
    return Biquaternion.from_array(scale * (rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)))


def random_complex(rng: np.random.Generator, scale: float = 1.0) -> complex:
    return complex(scale * rng.uniform(-1, 1), scale * rng.uniform(-1, 1))


def random_su3_lie(rng: np.random.Generator) -> Su3LieParams:
    return Su3LieParams.make(
        random_angle(rng),
        UnitVector3.random(rng),
        random_angle(rng),
        UnitVector3.random(rng),
        random_angle(rng),
        random_angle(rng),
    )


def random_su3_euler(rng: np.random.Generator) -> EulerSu3Params:
    return EulerSu3Params(
        random_angle(rng),
        UnitVector3.random(rng),
        random_angle(rng),
        random_angle(rng),
        random_angle(rng),
        UnitVector3.random(rng),
    )


def random_su4_euler(rng: np.random.Generator) -> EulerSu4Params:
    angles = [random_angle(rng) for _ in range(7)]
    axes = [UnitVector3.random(rng) for _ in range(4)]
    return EulerSu4Params(*angles, *axes)


def random_positive_axis(rng: np.random.Generator, floor: float = 0.05) -> UnitVector3:
    """Unit vector with every component at least ``floor`` before normalization."""
    return UnitVector3(rng.uniform(floor, 1.0, 3))
