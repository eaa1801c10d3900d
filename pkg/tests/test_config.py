import math

import pytest

import rislink as rl
from rislink.config import load_scenario, resolve_spectrum


def minimal_config(**overrides):
    data = {
        "grid": {"rows": 16, "cols": 16, "pitch_x_m": 0.00027, "pitch_y_m": 0.00027},
        "link": {"mode": "specular", "distance_m": 2.5, "theta_deg": 1.0},
        "antennas": {"tx_gain_db": 30.0, "rx_gain_db": 30.0},
        "channel": {"frequency_hz": 110e9},
    }
    data.update(overrides)
    return data


def test_load_scenario_defaults():
    s = load_scenario(minimal_config())
    assert s.evaluator == "specular"
    assert s.pointing == "ris_center"
    assert s.subbands == 60
    assert s.band_lo == 110e9 and s.band_hi == 170e9
    assert s.p_over_no_db == 25.0
    assert s.channel.transceivers_at_peak
    assert math.isclose(s.channel.cell_gain.db, 10.0, rel_tol=1e-12)
    assert math.isclose(s.channel.link.theta_tx, math.radians(1.0), rel_tol=1e-12)
    assert math.isclose(s.channel.link.phi_rx, math.pi, rel_tol=1e-12)
    assert s.channel.reflection.amplitude == 1.0
    assert s.channel.spectrum.label == "dband_standard_atmosphere.csv"


def test_load_scenario_positions_mode():
    cfg = minimal_config(
        link={"mode": "positions", "tx_m": [0.0, 0.0, 2.5], "rx_m": [0.0, -1.0, 1.7320508]}
    )
    s = load_scenario(cfg)
    assert math.isclose(s.channel.link.d1, 2.5, rel_tol=1e-12)
    assert math.isclose(s.channel.link.theta_rx, math.pi / 6.0, rel_tol=1e-6)


def test_load_scenario_accepts_numeric_strings():
    cfg = minimal_config()
    cfg["channel"] = {"frequency_hz": "110e9"}  # YAML 1.1 string form
    s = load_scenario(cfg)
    assert s.channel.frequency == 110e9


@pytest.mark.parametrize(
    "mutate, path_fragment",
    [
        (lambda c: c.pop("grid"), "grid"),
        (lambda c: c["grid"].update(rows=15), "grid"),
        (lambda c: c["grid"].update(bogus=1), "grid"),
        (lambda c: c["grid"].update(rows="ten"), "grid.rows"),
        (lambda c: c["link"].update(theta_deg=100.0), "link"),
        (lambda c: c["link"].update(distance_m=-1.0), "link"),
        (lambda c: c["link"].update(mode="weird"), "link.mode"),
        (lambda c: c["antennas"].update(tx_gain_db=0.0), "antennas"),
        (lambda c: c["antennas"].update(pointing="sideways"), "antennas.pointing"),
        (lambda c: c["channel"].update(evaluator="guess"), "channel.evaluator"),
        (lambda c: c.update(reflection={"amplitude": 1.5}), "reflection"),
        (lambda c: c.update(capacity={"subbands": 0}), "subbands"),
        (lambda c: c.update(capacity={"band_lo_hz": 170e9, "band_hi_hz": 110e9}), "band"),
        (lambda c: c.update(unknown_section={}), "config"),
    ],
)
def test_load_scenario_validation_errors_carry_paths(mutate, path_fragment):
    cfg = minimal_config()
    mutate(cfg)
    with pytest.raises(ValueError, match=path_fragment):
        load_scenario(cfg)


def test_positions_mode_validation():
    cfg = minimal_config(link={"mode": "positions", "tx_m": [0.0, 0.0], "rx_m": [0, 0, 1]})
    with pytest.raises(ValueError, match="link.tx_m"):
        load_scenario(cfg)
    cfg = minimal_config(link={"mode": "positions", "tx_m": [0, 0, 1], "rx_m": [0, 0, -1]})
    with pytest.raises(ValueError, match="z > 0"):
        load_scenario(cfg)


def test_frequency_outside_table_domain_names_domain():
    cfg = minimal_config()
    cfg["channel"]["frequency_hz"] = 200e9
    with pytest.raises(ValueError, match=r"1\.1e\+11.*1\.7e\+11"):
        load_scenario(cfg)


def test_resolve_spectrum_variants(tmp_path):
    vac = resolve_spectrum("vacuum", 110e9, 170e9, 140e9)
    assert rl.transmittance(vac, 140e9, 1e5) == 1.0
    # vacuum domain expands to cover an out-of-band carrier
    vac = resolve_spectrum("vacuum", 110e9, 170e9, 300e9)
    assert vac.domain == (110e9, 300e9)

    default = resolve_spectrum("default", 110e9, 170e9, 140e9)
    assert default.label == "dband_standard_atmosphere.csv"

    table = tmp_path / "flat.csv"
    table.write_text("frequency_hz,kappa_per_m\n100e9,1e-5\n200e9,1e-5\n", encoding="utf-8")
    custom = resolve_spectrum(str(table), 110e9, 170e9, 140e9)
    assert custom.domain == (100e9, 200e9)

    with pytest.raises(ValueError, match="neither"):
        resolve_spectrum("no_such_file.csv", 110e9, 170e9, 140e9)


def test_scenario_validation():
    s = load_scenario(minimal_config())
    with pytest.raises(ValueError, match="evaluator"):
        rl.Scenario(
            channel=s.channel, evaluator="nope", pointing="ris_center",
            band_lo=110e9, band_hi=170e9, subbands=60, p_over_no_db=25.0,
        )
