"""Normalized cos^q power radiation patterns and their gains.

The pattern is cos^q(theta) over the forward hemisphere and exactly zero
behind it, independent of azimuth. For this family the hemispheric gain
integral has the closed form: integral of cos^q(theta) sin(theta) over the
hemisphere = 2*pi/(q+1), so G = 2(q+1). The closed form is used in
production; adaptive quadrature is kept as an independent test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CosinePattern:
    """cos^q normalized power pattern; q >= 0, peak value 1 at boresight."""

    exponent: float

    def __post_init__(self):
        if not self.exponent >= 0.0:
            raise ValueError(f"pattern exponent must be >= 0, got {self.exponent}")


@dataclass(frozen=True)
class GainValue:
    """Linear power gain (> 0) with a dB accessor."""

    linear: float

    def __post_init__(self):
        if not self.linear > 0.0:
            raise ValueError(f"linear gain must be > 0, got {self.linear}")

    @property
    def db(self) -> float:
        return 10.0 * math.log10(self.linear)

    @classmethod
    def from_db(cls, db: float) -> "GainValue":
        return cls(10.0 ** (db / 10.0))


def pattern_value_from_cosine(pattern: CosinePattern, cos_theta):
    """Pattern value given cos(theta); vectorized, zero for cos(theta) < 0."""
    ct = np.asarray(cos_theta, dtype=float)
    value = np.where(ct >= 0.0, np.maximum(ct, 0.0) ** pattern.exponent, 0.0)
    return float(value) if np.isscalar(cos_theta) or value.ndim == 0 else value


def pattern_value(pattern: CosinePattern, theta, phi=0.0):
    """cos^q(theta) on [0, pi/2], exactly 0 on (pi/2, pi]; azimuth-independent."""
    th = np.asarray(theta, dtype=float)
    if np.any(th < 0.0) or np.any(th > math.pi):
        raise ValueError("theta must be within [0, pi]")
    return pattern_value_from_cosine(pattern, np.cos(th))


def gain_from_pattern(pattern: CosinePattern) -> GainValue:
    """Gain 4*pi / (hemispheric integral of F sin(theta)) = 2(q+1)."""
    return GainValue(2.0 * (pattern.exponent + 1.0))


def exponent_from_gain(gain: GainValue) -> CosinePattern:
    """Invert the gain relation: q = G/2 - 1.

    The hemispheric cos^q family cannot produce G < 2 (q = 0 already gives
    the isotropic-over-hemisphere gain of 2), so smaller gains are rejected.
    """
    if gain.linear < 2.0:
        raise ValueError(
            f"gain {gain.linear:.6g} ({gain.db:.3f} dB) is below the cos^q "
            "family floor of 2 (3.01 dB, isotropic over the hemisphere)"
        )
    return CosinePattern(gain.linear / 2.0 - 1.0)
