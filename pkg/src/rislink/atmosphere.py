"""Transmittance of the absorbing atmosphere via a table-driven Beer-Lambert law.

tau(f, d) = exp(-kappa(f) * d) with kappa linearly interpolated in frequency
from a committed table. Out-of-domain frequencies are an error rather than an
extrapolation: silently extending absorption-line wings is the classic source
of wrong link budgets.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

CSV_HEADER = "frequency_hz,kappa_per_m"
DEFAULT_TABLE = "dband_standard_atmosphere.csv"


@dataclass(frozen=True)
class AtmosphereState:
    """Conditions a spectrum table was generated for (metadata, not a model input)."""

    temperature: float
    pressure: float
    relative_humidity: float

    def __post_init__(self):
        if not self.temperature > 0.0:
            raise ValueError(f"temperature must be > 0 K, got {self.temperature}")
        if not self.pressure > 0.0:
            raise ValueError(f"pressure must be > 0 Pa, got {self.pressure}")
        if not 0.0 <= self.relative_humidity <= 1.0:
            raise ValueError(
                f"relative_humidity must be within [0, 1], got {self.relative_humidity}"
            )


@dataclass(frozen=True)
class AbsorptionSpectrum:
    """Sorted (frequency, kappa) samples with linear interpolation in frequency."""

    frequencies_hz: np.ndarray
    kappa_per_m: np.ndarray
    state: AtmosphereState | None = None
    label: str = ""

    def __post_init__(self):
        freqs = np.asarray(self.frequencies_hz, dtype=float)
        kappa = np.asarray(self.kappa_per_m, dtype=float)
        if freqs.ndim != 1 or kappa.shape != freqs.shape:
            raise ValueError("frequency and kappa arrays must be 1-D and equal length")
        if freqs.size == 0:
            raise ValueError("spectrum table must contain at least one sample")
        if np.any(~np.isfinite(freqs)) or np.any(~np.isfinite(kappa)):
            raise ValueError("spectrum table contains non-finite values")
        if np.any(np.diff(freqs) <= 0.0):
            raise ValueError("frequencies must be strictly increasing")
        if np.any(freqs <= 0.0):
            raise ValueError("frequencies must be > 0 Hz")
        if np.any(kappa < 0.0):
            raise ValueError("kappa must be >= 0 everywhere")
        object.__setattr__(self, "frequencies_hz", freqs)
        object.__setattr__(self, "kappa_per_m", kappa)

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.frequencies_hz[0]), float(self.frequencies_hz[-1])

    def kappa_at(self, f: float) -> float:
        """Absorption coefficient (1/m) at frequency f, linear in frequency."""
        lo, hi = self.domain
        if not lo <= f <= hi:
            raise ValueError(
                f"frequency {f:.6g} Hz outside the table domain "
                f"[{lo:.6g}, {hi:.6g}] Hz"
            )
        return float(np.interp(f, self.frequencies_hz, self.kappa_per_m))


def transmittance(spectrum: AbsorptionSpectrum, f: float, d):
    """Fraction exp(-kappa(f) d) of the EM energy surviving absorption.

    `d` may be a scalar or an array of path lengths (meters); all must be
    non-negative. Multiplicative in distance by construction.
    """
    kappa = spectrum.kappa_at(f)
    dist = np.asarray(d, dtype=float)
    if np.any(dist < 0.0):
        raise ValueError("path length must be >= 0 m")
    tau = np.exp(-kappa * dist)
    return float(tau) if np.isscalar(d) or tau.ndim == 0 else tau


def load_spectrum(source, state: AtmosphereState | None = None,
                  label: str = "") -> AbsorptionSpectrum:
    """Parse an absorption table from a file path, text, bytes or stream.

    Schema: UTF-8 CSV with header `frequency_hz,kappa_per_m`, rows sorted
    ascending by frequency, `#` comment lines permitted anywhere.
    """
    looks_like_path = (
        isinstance(source, Path)
        or (
            isinstance(source, str)
            and source.strip() != ""
            and "\n" not in source
            and "," not in source
        )
    )
    if looks_like_path:
        path = Path(source)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as err:
            raise ValueError(f"cannot read spectrum table {path}: {err}") from None
        label = label or path.name
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        raise TypeError(f"unsupported spectrum source {type(source)!r}")

    freqs: list[float] = []
    kappas: list[float] = []
    header_seen = False
    last_f = -math.inf
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line.replace(" ", "") != CSV_HEADER:
                raise ValueError(
                    f"line {lineno}: expected header '{CSV_HEADER}', got {line!r}"
                )
            header_seen = True
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 2 comma-separated fields, got {len(parts)}")
        try:
            f_hz, kappa = float(parts[0]), float(parts[1])
        except ValueError as err:
            raise ValueError(f"line {lineno}: malformed number ({err})") from None
        if f_hz <= last_f:
            raise ValueError(
                f"line {lineno}: frequency {f_hz:.6g} Hz is not strictly increasing"
            )
        if kappa < 0.0:
            raise ValueError(f"line {lineno}: kappa must be >= 0, got {kappa:.6g}")
        freqs.append(f_hz)
        kappas.append(kappa)
        last_f = f_hz

    if not header_seen:
        raise ValueError("empty table: no header line found")
    if not freqs:
        raise ValueError("empty table: no data rows found")
    return AbsorptionSpectrum(np.array(freqs), np.array(kappas), state=state, label=label)


def vacuum_spectrum(f_min: float, f_max: float) -> AbsorptionSpectrum:
    """kappa = 0 over [f_min, f_max]: tau = 1 everywhere (pure-FSPL fixture)."""
    if not f_min < f_max:
        raise ValueError(f"need f_min < f_max, got [{f_min}, {f_max}]")
    return AbsorptionSpectrum(
        np.array([f_min, f_max]), np.zeros(2), label="vacuum"
    )


@lru_cache(maxsize=1)
def default_spectrum() -> AbsorptionSpectrum:
    """Bundled D-band table for T=296 K, p=101325 Pa, 50 % relative humidity."""
    text = (resources.files("rislink") / "data" / DEFAULT_TABLE).read_text(
        encoding="utf-8"
    )
    return load_spectrum(
        text,
        state=AtmosphereState(temperature=296.0, pressure=101325.0, relative_humidity=0.5),
        label=DEFAULT_TABLE,
    )
