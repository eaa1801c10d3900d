"""Scenario assembly from configuration mappings (YAML at the CLI boundary).

Keys carry explicit unit suffixes (…_m, …_hz, …_db, …_deg) to keep units
honest; angles are degrees at this boundary and radians everywhere inside.
Validation failures name the offending field path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path

from .antenna import GainValue, exponent_from_gain
from .atmosphere import AbsorptionSpectrum, default_spectrum, load_spectrum, vacuum_spectrum
from .channel import ChannelConfig, ReflectionCoefficient
from .geometry import NodePosition, geometry_from_positions, specular_geometry

EVALUATOR_NAMES = ("exact", "far_field", "specular")
POINTING_MODES = ("ris_center", "surface_normal")


@dataclass(frozen=True)
class Scenario:
    """A fully resolved evaluation scenario: one channel plus capacity inputs."""

    channel: ChannelConfig
    evaluator: str
    pointing: str
    band_lo: float
    band_hi: float
    subbands: int
    p_over_no_db: float

    def __post_init__(self):
        if self.evaluator not in EVALUATOR_NAMES:
            raise ValueError(
                f"evaluator must be one of {EVALUATOR_NAMES}, got {self.evaluator!r}"
            )
        if self.pointing not in POINTING_MODES:
            raise ValueError(
                f"pointing must be one of {POINTING_MODES}, got {self.pointing!r}"
            )
        if not self.band_lo < self.band_hi:
            raise ValueError(
                f"capacity band must satisfy lo < hi, got [{self.band_lo}, {self.band_hi}]"
            )
        if self.subbands < 1:
            raise ValueError(f"subbands must be >= 1, got {self.subbands}")

    def with_channel(self, **changes) -> "Scenario":
        return replace(self, channel=replace(self.channel, **changes))


def _fail(path: str, message: str):
    raise ValueError(f"{path}: {message}")


def _section(data: dict, name: str, required: bool = True) -> dict:
    value = data.get(name)
    if value is None:
        if required:
            _fail(name, "section is missing")
        return {}
    if not isinstance(value, dict):
        _fail(name, "must be a mapping")
    return value


def _check_keys(section: dict, path: str, allowed: set[str]) -> None:
    unknown = set(section) - allowed
    if unknown:
        _fail(path, f"unknown keys {sorted(unknown)}; allowed: {sorted(allowed)}")


def _as_float(section: dict, key: str, path: str, default=None) -> float:
    if key not in section:
        if default is None:
            _fail(f"{path}.{key}", "required value is missing")
        return float(default)
    value = section[key]
    if isinstance(value, bool):
        _fail(f"{path}.{key}", f"expected a number, got boolean {value}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        # YAML 1.1 parses '110e9' (no dot) as a string; accept it as a float
        try:
            return float(value)
        except ValueError:
            pass
    _fail(f"{path}.{key}", f"expected a number, got {value!r}")


def _as_int(section: dict, key: str, path: str, default=None) -> int:
    if key not in section:
        if default is None:
            _fail(f"{path}.{key}", "required value is missing")
        return int(default)
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{path}.{key}", f"expected an integer, got {value!r}")
    return int(value)


def _as_bool(section: dict, key: str, path: str, default: bool) -> bool:
    value = section.get(key, default)
    if not isinstance(value, bool):
        _fail(f"{path}.{key}", f"expected a boolean, got {value!r}")
    return bool(value)


def _as_choice(section: dict, key: str, path: str, choices, default=None) -> str:
    value = section.get(key, default)
    if value not in choices:
        _fail(f"{path}.{key}", f"must be one of {list(choices)}, got {value!r}")
    return value


def _as_xyz(section: dict, key: str, path: str) -> NodePosition:
    value = section.get(key)
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        _fail(f"{path}.{key}", f"expected [x, y, z] in meters, got {value!r}")
    coords = []
    for axis, item in zip("xyz", value):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            _fail(f"{path}.{key}.{axis}", f"expected a number, got {item!r}")
        coords.append(float(item))
    return NodePosition(*coords)


def resolve_spectrum(absorption: str | Path, band_lo: float, band_hi: float,
                     frequency: float) -> AbsorptionSpectrum:
    """Map the --absorption selector (vacuum | default | FILE) to a spectrum."""
    if absorption == "vacuum":
        lo = min(band_lo, frequency)
        hi = max(band_hi, frequency)
        return vacuum_spectrum(lo, hi)
    if absorption == "default":
        return default_spectrum()
    path = Path(absorption)
    if not path.exists():
        raise ValueError(
            f"absorption: {absorption!r} is neither 'vacuum', 'default' nor an existing file"
        )
    return load_spectrum(path)


def load_scenario(data: dict, absorption: str | Path = "default") -> Scenario:
    """Build a validated Scenario from a parsed configuration mapping."""
    if not isinstance(data, dict):
        raise ValueError("configuration root must be a mapping")
    _check_keys(data, "config", {"grid", "link", "antennas", "reflection", "channel", "capacity", "sweep"})

    from .geometry import RisGrid  # local to keep module import order simple

    grid_s = _section(data, "grid")
    _check_keys(grid_s, "grid", {"rows", "cols", "pitch_x_m", "pitch_y_m"})
    try:
        grid = RisGrid(
            rows=_as_int(grid_s, "rows", "grid"),
            cols=_as_int(grid_s, "cols", "grid"),
            pitch_x=_as_float(grid_s, "pitch_x_m", "grid"),
            pitch_y=_as_float(grid_s, "pitch_y_m", "grid"),
        )
    except ValueError as err:
        _fail("grid", str(err))

    link_s = _section(data, "link")
    mode = _as_choice(link_s, "mode", "link", ("specular", "positions"), default="specular")
    if mode == "specular":
        _check_keys(link_s, "link", {"mode", "distance_m", "theta_deg", "phi_deg"})
        distance = _as_float(link_s, "distance_m", "link")
        theta = math.radians(_as_float(link_s, "theta_deg", "link"))
        phi = math.radians(_as_float(link_s, "phi_deg", "link", default=0.0))
        try:
            link = specular_geometry(d=distance, theta=theta, phi=phi)
        except ValueError as err:
            _fail("link", str(err))
    else:
        _check_keys(link_s, "link", {"mode", "tx_m", "rx_m"})
        tx = _as_xyz(link_s, "tx_m", "link")
        rx = _as_xyz(link_s, "rx_m", "link")
        try:
            link = geometry_from_positions(tx, rx)
        except ValueError as err:
            _fail("link", str(err))

    ant_s = _section(data, "antennas")
    _check_keys(ant_s, "antennas", {"tx_gain_db", "rx_gain_db", "cell_gain_db", "pointing", "peak_at_ris_center"})
    try:
        tx_pattern = exponent_from_gain(GainValue.from_db(_as_float(ant_s, "tx_gain_db", "antennas")))
        rx_pattern = exponent_from_gain(GainValue.from_db(_as_float(ant_s, "rx_gain_db", "antennas")))
        cell_pattern = exponent_from_gain(GainValue.from_db(_as_float(ant_s, "cell_gain_db", "antennas", default=10.0)))
    except ValueError as err:
        _fail("antennas", str(err))
    pointing = _as_choice(ant_s, "pointing", "antennas", POINTING_MODES, default="ris_center")
    at_peak = _as_bool(ant_s, "peak_at_ris_center", "antennas", default=True)

    refl_s = _section(data, "reflection", required=False)
    _check_keys(refl_s, "reflection", {"amplitude", "phase_rad"})
    try:
        reflection = ReflectionCoefficient(
            amplitude=_as_float(refl_s, "amplitude", "reflection", default=1.0),
            phase=_as_float(refl_s, "phase_rad", "reflection", default=0.0),
        )
    except ValueError as err:
        _fail("reflection", str(err))

    chan_s = _section(data, "channel")
    _check_keys(chan_s, "channel", {"frequency_hz", "evaluator"})
    frequency = _as_float(chan_s, "frequency_hz", "channel")
    evaluator = _as_choice(chan_s, "evaluator", "channel", EVALUATOR_NAMES, default="specular")

    cap_s = _section(data, "capacity", required=False)
    _check_keys(cap_s, "capacity", {"band_lo_hz", "band_hi_hz", "subbands", "p_over_no_db"})
    band_lo = _as_float(cap_s, "band_lo_hz", "capacity", default=110e9)
    band_hi = _as_float(cap_s, "band_hi_hz", "capacity", default=170e9)
    subbands = _as_int(cap_s, "subbands", "capacity", default=60)
    p_over_no_db = _as_float(cap_s, "p_over_no_db", "capacity", default=25.0)

    spectrum = resolve_spectrum(absorption, band_lo, band_hi, frequency)

    channel = ChannelConfig(
        grid=grid,
        link=link,
        tx_pattern=tx_pattern,
        rx_pattern=rx_pattern,
        cell_pattern=cell_pattern,
        reflection=reflection,
        spectrum=spectrum,
        frequency=frequency,
        transceivers_at_peak=at_peak,
    )
    return Scenario(
        channel=channel,
        evaluator=evaluator,
        pointing=pointing,
        band_lo=band_lo,
        band_hi=band_hi,
        subbands=subbands,
        p_over_no_db=p_over_no_db,
    )
