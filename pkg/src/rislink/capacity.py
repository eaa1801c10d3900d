"""Sub-band decomposition, per-band SNR and wideband Shannon capacity.

The wide band is split into W contiguous sub-bands, each narrow enough to
be flat-fading; capacity is the compensated sum of the per-band Shannon
terms. Channel wavelength and transmittance are re-evaluated per band;
the pattern exponents and gains are held frequency-flat, matching the
single dB values the scenario quotes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum

import numpy as np

from .channel import ChannelConfig, channel_gain_exact, evaluate
from .geometry import positions_from_geometry


@dataclass(frozen=True)
class SubBandPlan:
    """W contiguous bands covering [f_lo, f_hi]; centers and widths in Hz."""

    f_lo: float
    f_hi: float
    centers_hz: np.ndarray
    widths_hz: np.ndarray

    def __post_init__(self):
        centers = np.asarray(self.centers_hz, dtype=float)
        widths = np.asarray(self.widths_hz, dtype=float)
        if centers.ndim != 1 or widths.shape != centers.shape or centers.size < 1:
            raise ValueError("centers and widths must be equal-length 1-D arrays, W >= 1")
        if np.any(widths <= 0.0):
            raise ValueError("sub-band widths must be > 0")
        if not self.f_lo < self.f_hi:
            raise ValueError(f"need f_lo < f_hi, got [{self.f_lo}, {self.f_hi}]")
        total = self.f_hi - self.f_lo
        if not math.isclose(float(widths.sum()), total, rel_tol=1e-9):
            raise ValueError("sub-bands must cover [f_lo, f_hi]: widths do not sum to the band")
        edges = np.concatenate(([self.f_lo], np.cumsum(widths) + self.f_lo))
        expected_centers = 0.5 * (edges[:-1] + edges[1:])
        if not np.allclose(centers, expected_centers, rtol=1e-9, atol=0.0):
            raise ValueError("sub-bands must be contiguous and non-overlapping")
        object.__setattr__(self, "centers_hz", centers)
        object.__setattr__(self, "widths_hz", widths)

    @property
    def count(self) -> int:
        return int(self.centers_hz.size)


@dataclass(frozen=True)
class PowerAllocation:
    """Per-band transmit powers P_t_i (watts) under the total-power constraint."""

    per_band_w: np.ndarray
    total_w: float

    def __post_init__(self):
        powers = np.asarray(self.per_band_w, dtype=float)
        if np.any(powers < 0.0):
            raise ValueError("per-band powers must be >= 0")
        if not self.total_w > 0.0:
            raise ValueError(f"total power must be > 0 W, got {self.total_w}")
        if float(powers.sum()) > self.total_w * (1.0 + 1e-12):
            raise ValueError("per-band powers exceed the total-power constraint")
        object.__setattr__(self, "per_band_w", powers)


@dataclass(frozen=True)
class NoiseSpec:
    """Noise power N_o dividing each band's received power in the SNR."""

    n_o: float

    def __post_init__(self):
        if not self.n_o > 0.0:
            raise ValueError(f"N_o must be > 0, got {self.n_o}")


def make_subband_plan(f_lo: float, f_hi: float, w: int) -> SubBandPlan:
    """W equal-width contiguous bands with centers at the midpoints."""
    if not f_lo < f_hi:
        raise ValueError(f"need f_lo < f_hi, got [{f_lo}, {f_hi}]")
    if w < 1:
        raise ValueError(f"need at least one sub-band, got W={w}")
    edges = np.linspace(f_lo, f_hi, w + 1)
    return SubBandPlan(
        f_lo=f_lo,
        f_hi=f_hi,
        centers_hz=0.5 * (edges[:-1] + edges[1:]),
        widths_hz=np.diff(edges),
    )


def equal_power_allocation(total_w: float, plan: SubBandPlan) -> PowerAllocation:
    """The equal split P_t_i = P / W; meets the constraint with equality."""
    if not total_w > 0.0:
        raise ValueError(f"total power must be > 0 W, got {total_w}")
    return PowerAllocation(
        per_band_w=np.full(plan.count, total_w / plan.count),
        total_w=total_w,
    )


def snr_per_band(
    cfg: ChannelConfig,
    plan: SubBandPlan,
    alloc: PowerAllocation,
    noise: NoiseSpec,
    evaluator: str = "specular",
) -> np.ndarray:
    """SNR_i = |h(f_i)|^2 P_t_i / N_o for every sub-band.

    The channel config is re-issued at each band center so wavelength and
    transmittance track frequency. Failures are re-raised with the band
    index attached.
    """
    if alloc.per_band_w.size != plan.count:
        raise ValueError(
            f"allocation has {alloc.per_band_w.size} bands, plan has {plan.count}"
        )
    if evaluator == "exact":
        tx, rx = positions_from_geometry(cfg.link)
    snrs = np.empty(plan.count)
    for i, (f_i, p_i) in enumerate(zip(plan.centers_hz, alloc.per_band_w)):
        try:
            band_cfg = cfg.at_frequency(float(f_i))
            if evaluator == "exact":
                h = channel_gain_exact(band_cfg, tx, rx)
            else:
                h = evaluate(band_cfg, evaluator)
        except ValueError as err:
            raise ValueError(f"sub-band {i} (f={f_i:.6g} Hz): {err}") from err
        snrs[i] = h.magnitude ** 2 * p_i / noise.n_o
    return snrs


def capacity(plan: SubBandPlan, snrs) -> float:
    """C = sum of df_i * log2(1 + SNR_i) in bits/second (compensated sum)."""
    values = np.asarray(snrs, dtype=float)
    if values.shape != (plan.count,):
        raise ValueError(
            f"expected {plan.count} SNR values matching the plan, got shape {values.shape}"
        )
    if np.any(values < 0.0):
        raise ValueError("SNR values must be >= 0")
    return fsum(
        float(df) * math.log2(1.0 + float(snr))
        for df, snr in zip(plan.widths_hz, values)
    )
