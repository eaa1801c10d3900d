#!/usr/bin/env python3
"""Regenerate data/dband_standard_atmosphere.csv.

Clear-air specific attenuation from the ITU-R P.676-10 Annex 2.1
approximate method (valid 1-350 GHz at sea level), converted to a linear
absorption coefficient kappa [1/m] so that tau = exp(-kappa * d).

Conditions: T = 296 K, p = 101325 Pa, relative humidity 50 %. The
water-vapour density follows from the Buck saturation-pressure formula.

Usage: python scripts/make_absorption_table.py [OUTPUT]
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

import numpy as np

# P.676-10 Annex 2.1 helper parameters: phi0 * r_p^a * r_t^b * exp(c(1-r_p) + d(1-r_t))
_HELPERS = {
    "xi1": (1.0, 0.0717, -1.8132, 0.0156, -1.6515),
    "xi2": (1.0, 0.5146, -4.6368, -0.1921, -5.7416),
    "xi3": (1.0, 0.3414, -6.5851, 0.2130, -8.5854),
    "xi4": (1.0, -0.0112, 0.0092, -0.1033, -0.0009),
    "xi5": (1.0, 0.2705, -2.7192, -0.3016, -4.1033),
    "xi6": (1.0, 0.2445, -5.9191, 0.0422, -8.0719),
    "xi7": (1.0, -0.1833, 6.5589, -0.2402, 6.131),
    "gamma54": (2.192, 1.8286, -1.9487, 0.4051, -2.8509),
    "gamma58": (12.59, 1.0045, 3.5610, 0.1588, 1.2834),
    "gamma60": (15.0, 0.9003, 4.1335, 0.0427, 1.6088),
    "gamma62": (14.28, 0.9886, 3.4176, 0.1827, 1.3429),
    "gamma64": (6.819, 1.4320, 0.6258, 0.3177, -0.5914),
    "gamma66": (1.908, 2.0717, -4.1404, 0.4910, -4.8718),
    "delta": (-0.00306, 3.211, -14.94, 1.583, -16.37),
}

# water-vapour pseudo-lines: (a, use_eta2, b, center_ghz, d, apply_g)
_WATER_LINES = [
    (3.98, False, 2.23, 22.235, 9.42, True),
    (11.96, False, 0.7, 183.31, 11.14, False),
    (0.081, False, 6.44, 321.226, 6.29, False),
    (3.66, False, 1.6, 325.153, 9.22, False),
    (25.37, False, 1.09, 380.0, 0.0, False),
    (17.4, False, 1.46, 448.0, 0.0, False),
    (844.6, False, 0.17, 557.0, 0.0, True),
    (290.0, False, 0.41, 752.0, 0.0, True),
    (83328.0, True, 0.99, 1780.0, 0.0, True),
]


def _phi(r_p: float, r_t: float, args) -> float:
    phi0, a, b, c, d = args
    return phi0 * r_p**a * r_t**b * math.exp(c * (1.0 - r_p) + d * (1.0 - r_t))


def specific_attenuation(f_ghz: np.ndarray, pressure_hpa: float, rho_water: float,
                         temperature_k: float) -> np.ndarray:
    """Total specific attenuation (dB/km), P.676-10 Annex 2.1, 1-350 GHz."""
    f = np.atleast_1d(np.asarray(f_ghz, dtype=float))
    if np.any(f <= 0.0) or np.any(f > 350.0):
        raise ValueError("the Annex 2 fits are valid for 0 < f <= 350 GHz")

    r_p = pressure_hpa / 1013.0
    r_t = 288.0 / (temperature_k - 0.15)
    h = {k: _phi(r_p, r_t, v) for k, v in _HELPERS.items()}

    dry = np.empty_like(f)

    mask = f <= 54.0
    fm = f[mask]
    dry[mask] = fm**2 * r_p**2 * 1e-3 * (
        7.2 * r_t**2.8 / (fm**2 + 0.34 * r_p**2 * r_t**1.6)
        + 0.62 * h["xi3"] / ((54.0 - fm) ** (1.16 * h["xi1"]) + 0.83 * h["xi2"])
    )

    mask = (f > 54.0) & (f <= 60.0)
    fm = f[mask]
    dry[mask] = np.exp(
        math.log(h["gamma54"]) / 24.0 * (fm - 58.0) * (fm - 60.0)
        - math.log(h["gamma58"]) / 8.0 * (fm - 54.0) * (fm - 60.0)
        + math.log(h["gamma60"]) / 12.0 * (fm - 54.0) * (fm - 58.0)
    )

    mask = (f > 60.0) & (f <= 62.0)
    fm = f[mask]
    dry[mask] = h["gamma60"] + (h["gamma62"] - h["gamma60"]) * (fm - 60.0) / 2.0

    mask = (f > 62.0) & (f <= 66.0)
    fm = f[mask]
    dry[mask] = np.exp(
        math.log(h["gamma62"]) / 8.0 * (fm - 64.0) * (fm - 66.0)
        - math.log(h["gamma64"]) / 4.0 * (fm - 62.0) * (fm - 66.0)
        + math.log(h["gamma66"]) / 8.0 * (fm - 62.0) * (fm - 64.0)
    )

    mask = (f > 66.0) & (f <= 120.0)
    fm = f[mask]
    dry[mask] = fm**2 * r_p**2 * 1e-3 * (
        3.02e-4 * r_t**3.5
        + 0.283 * r_t**3.8 / ((fm - 118.75) ** 2 + 2.91 * r_p**2 * r_t**1.6)
        + 0.502 * h["xi6"] * (1.0 - 0.0163 * h["xi7"] * (fm - 66.0))
        / ((fm - 66.0) ** (1.4346 * h["xi4"]) + 1.15 * h["xi5"])
    )

    mask = (f > 120.0) & (f <= 350.0)
    fm = f[mask]
    dry[mask] = h["delta"] + fm**2 * r_p**3.5 * 1e-3 * (
        3.02e-4 / (1.0 + 1.9e-5 * fm**1.5)
        + 0.283 * r_t**0.3 / ((fm - 118.75) ** 2 + 2.91 * r_p**2 * r_t**1.6)
    )

    eta_1 = 0.955 * r_p * r_t**0.68 + 0.006 * rho_water
    eta_2 = 0.735 * r_p * r_t**0.5 + 0.0353 * r_t**4 * rho_water

    wet = np.zeros_like(f)
    for a, use_eta2, b, center, d, apply_g in _WATER_LINES:
        eta = eta_2 if use_eta2 else eta_1
        term = a * eta * math.exp(b * (1.0 - r_t)) / ((f - center) ** 2 + d * eta**2)
        if apply_g:
            f_i = int(center + 0.5)
            term = term * (1.0 + ((f - f_i) / (f + f_i)) ** 2)
        wet += term
    wet *= f**2 * r_t**2.5 * rho_water * 1e-4

    return dry + wet


def water_vapour_density(temperature_k: float, pressure_pa: float,
                         relative_humidity: float) -> float:
    """g/m^3 from relative humidity via the Buck saturation formula."""
    t_c = temperature_k - 273.15
    e_sat_hpa = 6.112 * math.exp(17.62 * t_c / (243.12 + t_c))
    e_hpa = relative_humidity * e_sat_hpa
    return 216.7 * e_hpa / temperature_k


def main(argv: list[str]) -> int:
    out = Path(argv[1]) if len(argv) > 1 else (
        Path(__file__).resolve().parents[1]
        / "src" / "rislink" / "data" / "dband_standard_atmosphere.csv"
    )

    temperature_k = 296.0
    pressure_pa = 101325.0
    rel_humidity = 0.5
    rho = water_vapour_density(temperature_k, pressure_pa, rel_humidity)

    f_ghz = np.arange(110.0, 170.0 + 1e-9, 0.25)
    gamma_db_km = specific_attenuation(f_ghz, pressure_pa / 100.0, rho, temperature_k)
    kappa_per_m = gamma_db_km * math.log(10.0) / 10.0 / 1000.0

    lines = [
        "# D-band clear-air absorption coefficients for a standard indoor atmosphere.",
        "# Source: ITU-R P.676-10 Annex 2.1 approximate specific-attenuation model,",
        f"# evaluated at T = {temperature_k:g} K, p = {pressure_pa:g} Pa, relative humidity "
        f"{rel_humidity:.0%} (water-vapour density {rho:.3f} g/m^3, Buck formula).",
        "# kappa_per_m = gamma[dB/km] * ln(10) / 10 / 1000, so tau(f, d) = exp(-kappa * d).",
        "# Regenerate with: python scripts/make_absorption_table.py",
        "frequency_hz,kappa_per_m",
    ]
    for f, kappa in zip(f_ghz, kappa_per_m):
        lines.append(f"{f * 1e9:.10g},{kappa:.6e}")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(f_ghz)} rows, rho_w = {rho:.3f} g/m^3)")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
