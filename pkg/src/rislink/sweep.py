"""Single-point evaluation and deterministic parameter sweeps.

A sweep walks a Cartesian grid over one or two axes (outer axis major),
evaluating the requested metrics at every point. Per-point failures land in
an `error` column and never abort the run. Points may be evaluated
concurrently; the output order is fixed by the grid, not by completion.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import product

import numpy as np

from .antenna import GainValue, exponent_from_gain, pattern_value
from .capacity import NoiseSpec, equal_power_allocation, make_subband_plan
from .capacity import capacity as wideband_capacity
from .capacity import snr_per_band
from .channel import channel_gain_exact, evaluate
from .config import Scenario
from .geometry import LinkGeometry, far_field_boundary, positions_from_geometry
from .output import Table

AXIS_NAMES = ("theta_deg", "gain_db", "d_m", "pitch_m", "p_over_no_db", "frequency_hz")

METRIC_COLUMNS = {
    "pattern": ["pattern_tx", "pattern_rx"],
    "pathgain_db": ["pathgain_db"],
    "capacity_bps": ["capacity_bps"],
    "snr": ["snr_db_min", "snr_db_mean", "snr_db_max"],
}

POINT_COLUMNS = [
    "channel_gain",
    "pathgain_db",
    "pattern_tx",
    "pattern_rx",
    "snr_db_min",
    "snr_db_mean",
    "snr_db_max",
    "capacity_bps",
]


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: a uniform grid or an explicit value list."""

    name: str
    start: float = math.nan
    stop: float = math.nan
    steps: int = 0
    explicit: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ValueError(f"unknown sweep axis {self.name!r}; expected one of {AXIS_NAMES}")
        if self.explicit is None:
            if self.steps < 2:
                raise ValueError(f"axis {self.name}: steps must be >= 2, got {self.steps}")
            if not (math.isfinite(self.start) and math.isfinite(self.stop)):
                raise ValueError(f"axis {self.name}: start and stop must be finite")
        elif len(self.explicit) < 2:
            raise ValueError(f"axis {self.name}: need at least 2 values")

    @classmethod
    def from_values(cls, name: str, values) -> "SweepAxis":
        return cls(name=name, explicit=tuple(float(v) for v in values))

    @property
    def values(self) -> np.ndarray:
        if self.explicit is not None:
            return np.array(self.explicit)
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepSpec:
    """Base scenario, one or two axes, and the metric set to emit."""

    base: Scenario
    axes: tuple[SweepAxis, ...]
    metrics: tuple[str, ...]

    def __post_init__(self):
        if not 1 <= len(self.axes) <= 2:
            raise ValueError(f"a sweep needs 1 or 2 axes, got {len(self.axes)}")
        names = [a.name for a in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate sweep axes {names}")
        if not self.metrics:
            raise ValueError("at least one output metric is required")
        unknown = [m for m in self.metrics if m not in METRIC_COLUMNS]
        if unknown:
            raise ValueError(
                f"unknown metrics {unknown}; expected a subset of {sorted(METRIC_COLUMNS)}"
            )


def apply_axis(scenario: Scenario, name: str, value: float) -> Scenario:
    """Return a scenario with one swept parameter replaced."""
    link = scenario.channel.link
    if name == "theta_deg":
        theta = math.radians(value)
        new_link = LinkGeometry(
            d1=link.d1, d2=link.d2,
            theta_tx=theta, phi_tx=link.phi_tx,
            theta_rx=theta, phi_rx=link.phi_rx,
        )
        return scenario.with_channel(link=new_link)
    if name == "d_m":
        new_link = replace(link, d1=value, d2=value)
        return scenario.with_channel(link=new_link)
    if name == "gain_db":
        pattern = exponent_from_gain(GainValue.from_db(value))
        return scenario.with_channel(tx_pattern=pattern, rx_pattern=pattern)
    if name == "pitch_m":
        grid = replace(scenario.channel.grid, pitch_x=value, pitch_y=value)
        return scenario.with_channel(grid=grid)
    if name == "p_over_no_db":
        return replace(scenario, p_over_no_db=value)
    if name == "frequency_hz":
        return scenario.with_channel(frequency=value)
    raise ValueError(f"unknown sweep axis {name!r}")


def pointing_factor(scenario: Scenario) -> float:
    """Transceiver pattern product applied in surface-normal pointing mode.

    With antennas facing along the surface normal instead of tracking the
    RIS center, the link budget picks up F_tx(theta_tx) * F_rx(theta_rx).
    This is the evaluation behind the published gain-versus-elevation
    figures; in ris_center mode the factor is 1.
    """
    if scenario.pointing != "surface_normal":
        return 1.0
    link = scenario.channel.link
    f_tx = pattern_value(scenario.channel.tx_pattern, link.theta_tx, link.phi_tx)
    f_rx = pattern_value(scenario.channel.rx_pattern, link.theta_rx, link.phi_rx)
    return f_tx * f_rx


def _channel_gain(scenario: Scenario) -> float:
    cfg = scenario.channel
    if scenario.evaluator == "exact":
        tx, rx = positions_from_geometry(cfg.link)
        h = channel_gain_exact(cfg, tx, rx)
    else:
        h = evaluate(cfg, scenario.evaluator)
    return h.magnitude * math.sqrt(pointing_factor(scenario))


def _snrs(scenario: Scenario) -> tuple[np.ndarray, object]:
    plan = make_subband_plan(scenario.band_lo, scenario.band_hi, scenario.subbands)
    total_power = 10.0 ** (scenario.p_over_no_db / 10.0)
    alloc = equal_power_allocation(total_power, plan)
    snrs = snr_per_band(scenario.channel, plan, alloc, NoiseSpec(1.0), scenario.evaluator)
    return snrs * pointing_factor(scenario), plan


def evaluate_metrics(scenario: Scenario, metrics) -> dict[str, float]:
    """Compute the requested metric columns for one scenario."""
    record: dict[str, float] = {}
    link = scenario.channel.link
    if "pattern" in metrics:
        record["pattern_tx"] = pattern_value(scenario.channel.tx_pattern, link.theta_tx, link.phi_tx)
        record["pattern_rx"] = pattern_value(scenario.channel.rx_pattern, link.theta_rx, link.phi_rx)
    if "pathgain_db" in metrics or "channel_gain" in metrics:
        magnitude = _channel_gain(scenario)
        if "channel_gain" in metrics:
            record["channel_gain"] = magnitude
        if "pathgain_db" in metrics:
            if not magnitude > 0.0:
                raise ValueError("path gain is undefined for |h| = 0")
            record["pathgain_db"] = 20.0 * math.log10(magnitude)
    if "snr" in metrics or "capacity_bps" in metrics:
        snrs, plan = _snrs(scenario)
        if "snr" in metrics:
            if np.any(snrs <= 0.0):
                raise ValueError("SNR is zero in at least one sub-band (dB undefined)")
            snr_db = 10.0 * np.log10(snrs)
            record["snr_db_min"] = float(snr_db.min())
            record["snr_db_mean"] = float(snr_db.mean())
            record["snr_db_max"] = float(snr_db.max())
        if "capacity_bps" in metrics:
            record["capacity_bps"] = wideband_capacity(plan, snrs)
    return record


def scenario_notes(scenario: Scenario) -> list[str]:
    """Echo of every resolved parameter and default that shapes the results."""
    cfg = scenario.channel
    link = cfg.link
    lam = cfg.wavelength
    boundary = far_field_boundary(cfg.grid, lam)
    spectrum = cfg.spectrum
    lo, hi = spectrum.domain
    notes = [
        f"evaluator = {scenario.evaluator}; pointing = {scenario.pointing}",
        f"frequency_hz = {cfg.frequency:.9g}; wavelength_m = {lam:.9g}",
        f"grid: rows = {cfg.grid.rows}, cols = {cfg.grid.cols}, "
        f"pitch_x_m = {cfg.grid.pitch_x:.9g}, pitch_y_m = {cfg.grid.pitch_y:.9g}",
        f"pitch within [lambda/10, lambda/2] at {cfg.frequency / 1e9:.9g} GHz: "
        f"{str(cfg.grid.pitch_in_design_range(lam)).lower()} "
        f"(range [{lam / 10.0:.9g}, {lam / 2.0:.9g}] m)",
        f"link: d1_m = {link.d1:.9g}, d2_m = {link.d2:.9g}, "
        f"theta_tx_deg = {math.degrees(link.theta_tx):.9g}, "
        f"theta_rx_deg = {math.degrees(link.theta_rx):.9g}, "
        f"phi_tx_deg = {math.degrees(link.phi_tx):.9g}, "
        f"phi_rx_deg = {math.degrees(link.phi_rx):.9g}",
        f"far_field_boundary_m = {boundary:.9g} (2 D^2 / lambda); "
        f"d1 {'outside' if link.d1 >= boundary else 'INSIDE'}, "
        f"d2 {'outside' if link.d2 >= boundary else 'INSIDE'}"
        " (inside means the closed forms are near-field-suspect)",
        f"antenna gains: tx = {cfg.tx_gain.db:.9g} dB (exponent {cfg.tx_pattern.exponent:.9g}), "
        f"rx = {cfg.rx_gain.db:.9g} dB (exponent {cfg.rx_pattern.exponent:.9g}), "
        f"cell = {cfg.cell_gain.db:.9g} dB (exponent {cfg.cell_pattern.exponent:.9g})",
        f"transceivers_at_peak = {str(cfg.transceivers_at_peak).lower()} "
        "(true means F_tx = F_rx = 1 inside the exact sum)",
        f"reflection: amplitude = {cfg.reflection.amplitude:.9g}, "
        f"phase_rad = {cfg.reflection.phase:.9g}, uniform across cells",
        f"absorption table = {spectrum.label or 'inline'}; "
        f"domain [{lo:.9g}, {hi:.9g}] Hz",
        f"capacity: band [{scenario.band_lo:.9g}, {scenario.band_hi:.9g}] Hz, "
        f"W = {scenario.subbands} equal sub-bands, P/N_o = {scenario.p_over_no_db:.9g} dB "
        "(N_o = 1, P = 10^(dB/10), equal split)",
        "pathgain_db = 20*log10|h|; snr and capacity include the pointing factor",
    ]
    return notes


def run_point(scenario: Scenario) -> Table:
    """Evaluate every metric at one parameter point."""
    record = evaluate_metrics(
        scenario, ("pattern", "pathgain_db", "channel_gain", "snr", "capacity_bps")
    )
    return Table(
        columns=list(POINT_COLUMNS),
        rows=[[record[c] for c in POINT_COLUMNS]],
        notes=scenario_notes(scenario),
    )


def _metric_columns(metrics) -> list[str]:
    cols: list[str] = []
    for metric in metrics:
        cols.extend(METRIC_COLUMNS[metric])
    return cols


def _evaluate_sweep_point(spec: SweepSpec, combo) -> list:
    values = list(combo)
    cols = _metric_columns(spec.metrics)
    try:
        scenario = spec.base
        for axis, value in zip(spec.axes, combo):
            scenario = apply_axis(scenario, axis.name, float(value))
        record = evaluate_metrics(scenario, spec.metrics)
        return values + [record[c] for c in cols] + [""]
    except (ValueError, ArithmeticError) as err:
        return values + [None] * len(cols) + [str(err)]


def run_sweep(spec: SweepSpec, jobs: int = 1) -> Table:
    """Cartesian sweep; one row per point, outer axis major, error column row-local."""
    combos = list(product(*(axis.values for axis in spec.axes)))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda c: _evaluate_sweep_point(spec, c), combos))
    else:
        rows = [_evaluate_sweep_point(spec, c) for c in combos]
    axis_desc = ", ".join(
        f"{a.name} ({len(a.values)} values)" for a in spec.axes
    )
    notes = [f"sweep axes: {axis_desc}; metrics: {', '.join(spec.metrics)}"]
    notes.extend(scenario_notes(spec.base))
    return Table(
        columns=[a.name for a in spec.axes] + _metric_columns(spec.metrics) + ["error"],
        rows=rows,
        notes=notes,
    )


def load_sweep_spec(data: dict, base: Scenario) -> SweepSpec:
    """Parse the `sweep` section of a configuration mapping."""
    sweep_s = data.get("sweep")
    if not isinstance(sweep_s, dict):
        raise ValueError("sweep: section is missing or not a mapping")
    unknown = set(sweep_s) - {"axes", "metrics"}
    if unknown:
        raise ValueError(f"sweep: unknown keys {sorted(unknown)}")
    metrics = sweep_s.get("metrics")
    if not isinstance(metrics, list) or not all(isinstance(m, str) for m in metrics):
        raise ValueError("sweep.metrics: expected a list of metric names")
    axes_raw = sweep_s.get("axes")
    if not isinstance(axes_raw, list) or not axes_raw:
        raise ValueError("sweep.axes: expected a non-empty list of axis mappings")
    axes = []
    for i, axis_s in enumerate(axes_raw):
        path = f"sweep.axes[{i}]"
        if not isinstance(axis_s, dict):
            raise ValueError(f"{path}: expected a mapping")
        unknown = set(axis_s) - {"name", "start", "stop", "steps"}
        if unknown:
            raise ValueError(f"{path}: unknown keys {sorted(unknown)}")
        try:
            axes.append(
                SweepAxis(
                    name=axis_s.get("name", ""),
                    start=float(axis_s["start"]),
                    stop=float(axis_s["stop"]),
                    steps=int(axis_s["steps"]),
                )
            )
        except KeyError as err:
            raise ValueError(f"{path}: missing required key {err.args[0]!r}") from None
        except (TypeError, ValueError) as err:
            raise ValueError(f"{path}: {err}") from None
    try:
        return SweepSpec(base=base, axes=tuple(axes), metrics=tuple(metrics))
    except ValueError as err:
        raise ValueError(f"sweep: {err}") from None
