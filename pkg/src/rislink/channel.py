"""Channel-gain evaluators for the RIS-relayed link.

Three routes to |h|:

* exact per-cell double sum over all N*M unit cells (amplitude, phase and
  per-leg transmittance per cell),
* far-field factorized form with the array factor expressed as sinc ratios,
* specular closed form, the reduction of the factorized form when the
  transverse projections of the TX/RX directions cancel.

The pattern product per cell is F_tx(angle at TX) * F_cell(cell toward TX)
* F_cell(cell toward RX) * F_rx(angle at RX). With the transceivers aimed
at the RIS center (the default), the TX/RX factors are taken as exactly 1;
turning the flag off computes them per cell against the boresight through
the RIS center, which quantifies that approximation. The factorized and
specular forms carry the unit-cell pattern evaluated at the link angles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from math import fsum

import numpy as np

from .antenna import CosinePattern, GainValue, gain_from_pattern, pattern_value, pattern_value_from_cosine
from .atmosphere import AbsorptionSpectrum
from .geometry import (
    LinkGeometry,
    NodePosition,
    RisGrid,
    positions_from_geometry,
    specular_mismatch,
)

SPEED_OF_LIGHT = 299_792_458.0  # m/s, exact

_SIXTY_FOUR_PI_CUBED = 64.0 * math.pi ** 3


@dataclass(frozen=True)
class ReflectionCoefficient:
    """Programmable per-cell reflection Lambda = A * exp(j*phase), |A| in [0,1]."""

    amplitude: float
    phase: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.amplitude <= 1.0:
            raise ValueError(f"reflection amplitude must be within [0, 1], got {self.amplitude}")

    @property
    def value(self) -> complex:
        return self.amplitude * cmath.exp(1j * self.phase)


@dataclass(frozen=True)
class ComplexGain:
    """Channel coefficient; the closed forms carry magnitude only (zero phase)."""

    value: complex

    @property
    def magnitude(self) -> float:
        return abs(self.value)


@dataclass(frozen=True)
class ChannelConfig:
    """Everything the evaluators need for one frequency point."""

    grid: RisGrid
    link: LinkGeometry
    tx_pattern: CosinePattern
    rx_pattern: CosinePattern
    cell_pattern: CosinePattern
    reflection: ReflectionCoefficient
    spectrum: AbsorptionSpectrum
    frequency: float
    reflection_map: np.ndarray | None = None  # per-cell Lambda, exact sum only
    transceivers_at_peak: bool = True  # F_tx = F_rx = 1 inside the exact sum

    def __post_init__(self):
        if not self.frequency > 0.0:
            raise ValueError(f"frequency must be > 0 Hz, got {self.frequency}")
        lo, hi = self.spectrum.domain
        if not lo <= self.frequency <= hi:
            raise ValueError(
                f"frequency {self.frequency:.6g} Hz outside the absorption table "
                f"domain [{lo:.6g}, {hi:.6g}] Hz"
            )
        if self.reflection_map is not None:
            lam = np.asarray(self.reflection_map, dtype=complex)
            expected = (self.grid.rows, self.grid.cols)
            if lam.shape != expected:
                raise ValueError(
                    f"reflection_map shape {lam.shape} does not match grid {expected}"
                )
            if np.any(np.abs(lam) > 1.0 + 1e-12):
                raise ValueError("reflection_map amplitudes must be within [0, 1]")
            object.__setattr__(self, "reflection_map", lam)

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.frequency

    @property
    def tx_gain(self) -> GainValue:
        return gain_from_pattern(self.tx_pattern)

    @property
    def rx_gain(self) -> GainValue:
        return gain_from_pattern(self.rx_pattern)

    @property
    def cell_gain(self) -> GainValue:
        return gain_from_pattern(self.cell_pattern)

    def at_frequency(self, f: float) -> "ChannelConfig":
        return replace(self, frequency=f)


def _sinc(x: float) -> float:
    """Unnormalized sin(x)/x with a series fallback near 0."""
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def _require_uniform(cfg: ChannelConfig, evaluator: str) -> None:
    if cfg.reflection_map is not None:
        raise ValueError(
            f"the {evaluator} evaluator assumes all unit cells share the same "
            "reflection coefficient; got a per-cell reflection_map"
        )


def _amplitude_prefactor(cfg: ChannelConfig) -> float:
    return math.sqrt(
        cfg.tx_gain.linear * cfg.rx_gain.linear * cfg.cell_gain.linear
        * cfg.grid.pitch_x * cfg.grid.pitch_y / _SIXTY_FOUR_PI_CUBED
    )


def cell_contributions(
    cfg: ChannelConfig,
    tx: NodePosition | None = None,
    rx: NodePosition | None = None,
) -> np.ndarray:
    """Per-cell complex summands of the exact sum (without the prefactor).

    Shape (rows, cols). Summing and scaling by sqrt(Gt*Gr*G*dx*dy/64pi^3)*lambda
    reproduces channel_gain_exact; the per-cell magnitudes give the
    incoherent (phase-stripped) bound.
    """
    if tx is None or rx is None:
        tx_d, rx_d = positions_from_geometry(cfg.link)
        tx = tx if tx is not None else tx_d
        rx = rx if rx is not None else rx_d
    tx.require_above_surface("tx")
    rx.require_above_surface("rx")

    lam = cfg.wavelength
    xs = cfg.grid.center_xs[None, :]
    ys = cfg.grid.center_ys[:, None]

    d_tx = np.sqrt((tx.x - xs) ** 2 + (tx.y - ys) ** 2 + tx.z ** 2)
    d_rx = np.sqrt((rx.x - xs) ** 2 + (rx.y - ys) ** 2 + rx.z ** 2)

    # cell pattern toward each transceiver; elevation from the surface normal
    f_c = pattern_value_from_cosine(cfg.cell_pattern, tx.z / d_tx)
    f_c = f_c * pattern_value_from_cosine(cfg.cell_pattern, rx.z / d_rx)

    if not cfg.transceivers_at_peak:
        # true transceiver factors, boresight through the RIS center
        for node, dist, pattern in (
            (tx, d_tx, cfg.tx_pattern),
            (rx, d_rx, cfg.rx_pattern),
        ):
            # cos(angle between node->center and node->cell)
            norm = node.norm
            dot = (
                node.x * (node.x - xs) + node.y * (node.y - ys) + node.z * node.z
            )
            f_c = f_c * pattern_value_from_cosine(pattern, dot / (norm * dist))

    if cfg.reflection_map is not None:
        lam_nm = cfg.reflection_map
    else:
        lam_nm = cfg.reflection.value

    kappa = cfg.spectrum.kappa_at(cfg.frequency)
    total_path = d_tx + d_rx
    return (
        np.sqrt(f_c) * lam_nm / (d_tx * d_rx)
        * np.exp(-1j * 2.0 * math.pi * total_path / lam)
        * np.exp(-0.5 * kappa * total_path)
    )


def channel_gain_exact(
    cfg: ChannelConfig,
    tx: NodePosition | None = None,
    rx: NodePosition | None = None,
) -> ComplexGain:
    """Exact double sum over all N*M unit cells.

    Positions default to the reconstruction of cfg.link. The complex
    reduction uses exact (Shewchuk) summation of the real and imaginary
    parts, so the result is independent of cell ordering or partitioning.
    """
    terms = cell_contributions(cfg, tx, rx)
    total = complex(fsum(terms.real.ravel().tolist()), fsum(terms.imag.ravel().tolist()))
    return ComplexGain(_amplitude_prefactor(cfg) * cfg.wavelength * total)


def _b_factor(cfg: ChannelConfig) -> float:
    """B(f) = Gt*Gr*G*M^2*N^2*dx*dy*lambda^2*A^2*tau(f, d1+d2)."""
    grid, link = cfg.grid, cfg.link
    kappa = cfg.spectrum.kappa_at(cfg.frequency)
    tau = math.exp(-kappa * (link.d1 + link.d2))
    return (
        cfg.tx_gain.linear * cfg.rx_gain.linear * cfg.cell_gain.linear
        * grid.cols ** 2 * grid.rows ** 2 * grid.pitch_x * grid.pitch_y
        * cfg.wavelength ** 2 * cfg.reflection.amplitude ** 2 * tau
    )


def _closed_form_magnitude(cfg: ChannelConfig) -> float:
    link = cfg.link
    f_t = pattern_value(cfg.cell_pattern, link.theta_tx, link.phi_tx)
    f_r = pattern_value(cfg.cell_pattern, link.theta_rx, link.phi_rx)
    return math.sqrt(
        _b_factor(cfg) * f_t * f_r
        / (_SIXTY_FOUR_PI_CUBED * link.d1 ** 2 * link.d2 ** 2)
    )


def channel_gain_far_field(cfg: ChannelConfig) -> ComplexGain:
    """Factorized far-field form with the array factor as sinc ratios."""
    _require_uniform(cfg, "far-field")
    link, grid = cfg.link, cfg.grid
    lam = cfg.wavelength
    u, v = specular_mismatch(link)

    phi_num = _sinc(grid.cols * math.pi / lam * u * grid.pitch_x)
    x_den = _sinc(math.pi / lam * u * grid.pitch_x)
    psi_num = _sinc(grid.rows * math.pi / lam * v * grid.pitch_y)
    omega_den = _sinc(math.pi / lam * v * grid.pitch_y)

    magnitude = _closed_form_magnitude(cfg) * abs(phi_num / x_den) * abs(psi_num / omega_den)
    return ComplexGain(complex(magnitude, 0.0))


def channel_gain_specular(cfg: ChannelConfig) -> ComplexGain:
    """Closed form for the specular configuration (sinc ratios identically 1)."""
    _require_uniform(cfg, "specular")
    u, v = specular_mismatch(cfg.link)
    tol = 1e-9
    if abs(u) > tol:
        raise ValueError(
            "geometry is not specular: sin(theta_tx)cos(phi_tx) + "
            f"sin(theta_rx)cos(phi_rx) = {u:.3e} != 0"
        )
    if abs(v) > tol:
        raise ValueError(
            "geometry is not specular: sin(theta_tx)sin(phi_tx) + "
            f"sin(theta_rx)sin(phi_rx) = {v:.3e} != 0"
        )
    return ComplexGain(complex(_closed_form_magnitude(cfg), 0.0))


EVALUATORS = {
    "exact": channel_gain_exact,
    "far_field": channel_gain_far_field,
    "specular": channel_gain_specular,
}


def evaluate(cfg: ChannelConfig, evaluator: str) -> ComplexGain:
    """Dispatch to one of the three evaluators by name."""
    try:
        fn = EVALUATORS[evaluator]
    except KeyError:
        raise ValueError(
            f"unknown evaluator {evaluator!r}; expected one of {sorted(EVALUATORS)}"
        ) from None
    return fn(cfg)


def path_gain_db(h: ComplexGain) -> float:
    """PG = 20 log10 |h| (the dB power gain of the amplitude coefficient)."""
    mag = h.magnitude
    if not mag > 0.0:
        raise ValueError("path gain is undefined for |h| = 0 (negative-infinite dB)")
    return 20.0 * math.log10(mag)
