import json
import math
import subprocess
import sys

import pytest
import yaml

import rislink as rl
from rislink.cli import main

POINT_CONFIG = """\
grid:
  rows: 16
  cols: 16
  pitch_x_m: 0.00027
  pitch_y_m: 0.00027
link:
  mode: specular
  distance_m: 2.5
  theta_deg: 1.0
  phi_deg: 0.0
antennas:
  tx_gain_db: 30.0
  rx_gain_db: 30.0
  cell_gain_db: 10.0
channel:
  frequency_hz: 110.0e9
  evaluator: specular
capacity:
  band_lo_hz: 110.0e9
  band_hi_hz: 170.0e9
  subbands: 12
  p_over_no_db: 25.0
"""

SWEEP_SECTION = """\
sweep:
  metrics: [pattern, pathgain_db]
  axes:
    - name: theta_deg
      start: 0.0
      stop: 5.0
      steps: 6
"""


@pytest.fixture
def point_config(tmp_path):
    path = tmp_path / "point.yaml"
    path.write_text(POINT_CONFIG, encoding="utf-8")
    return path


@pytest.fixture
def sweep_config(tmp_path):
    path = tmp_path / "sweep.yaml"
    path.write_text(POINT_CONFIG + SWEEP_SECTION, encoding="utf-8")
    return path


def parse_csv(text):
    notes = [l for l in text.splitlines() if l.startswith("# ")]
    data = [l for l in text.splitlines() if l and not l.startswith("# ")]
    header = data[0].split(",")
    rows = [line.split(",") for line in data[1:]]
    return notes, header, rows


def test_point_csv_matches_library(point_config, capsys):
    assert main(["point", "--config", str(point_config)]) == 0
    notes, header, rows = parse_csv(capsys.readouterr().out)
    assert notes and header[0] == "channel_gain"
    assert len(rows) == 1
    record = dict(zip(header, rows[0]))

    scenario = rl.load_scenario(yaml.safe_load(POINT_CONFIG))
    h = rl.channel_gain_specular(scenario.channel)
    assert math.isclose(float(record["pathgain_db"]), rl.path_gain_db(h), rel_tol=1e-9)
    assert math.isclose(float(record["channel_gain"]), h.magnitude, rel_tol=1e-9)


def test_point_json_format(point_config, capsys):
    assert main(["--format", "json", "point", "--config", str(point_config)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["columns"][0] == "channel_gain"
    assert len(payload["rows"]) == 1
    assert any("evaluator = specular" in note for note in payload["notes"])


def test_point_output_file(point_config, tmp_path, capsys):
    out = tmp_path / "point.csv"
    assert main(["--output", str(out), "point", "--config", str(point_config)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text(encoding="utf-8").startswith("# ")


def test_point_validation_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.yaml"
    bad.write_text(POINT_CONFIG.replace("theta_deg: 1.0", "theta_deg: 100.0"), encoding="utf-8")
    assert main(["point", "--config", str(bad)]) == 1
    assert "link" in capsys.readouterr().err


def test_point_frequency_domain_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.yaml"
    bad.write_text(POINT_CONFIG.replace("frequency_hz: 110.0e9", "frequency_hz: 200.0e9"),
                   encoding="utf-8")
    assert main(["point", "--config", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "1.1e+11" in err and "1.7e+11" in err


def test_missing_config_file_exits_1(capsys):
    assert main(["point", "--config", "definitely_missing.yaml"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_invalid_yaml_exits_1(tmp_path, capsys):
    bad = tmp_path / "broken.yaml"
    bad.write_text("grid: [unclosed", encoding="utf-8")
    assert main(["point", "--config", str(bad)]) == 1
    assert "not valid YAML" in capsys.readouterr().err


def test_unknown_preset_exits_1(capsys):
    assert main(["preset", "--name", "fig9"]) == 1
    assert "unknown preset" in capsys.readouterr().err


def test_numeric_errors_exit_2(monkeypatch, point_config, capsys):
    import rislink.cli as cli_mod

    def boom(scenario):
        raise ZeroDivisionError("synthetic numeric failure")

    monkeypatch.setattr(cli_mod, "run_point", boom)
    assert main(["point", "--config", str(point_config)]) == 2
    assert "numeric error" in capsys.readouterr().err


def test_sweep_command(sweep_config, capsys):
    assert main(["sweep", "--config", str(sweep_config)]) == 0
    notes, header, rows = parse_csv(capsys.readouterr().out)
    assert header == ["theta_deg", "pattern_tx", "pattern_rx", "pathgain_db", "error"]
    assert len(rows) == 6
    assert [float(r[0]) for r in rows] == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]


def test_sweep_requires_sweep_section(point_config, capsys):
    assert main(["sweep", "--config", str(point_config)]) == 1
    assert "sweep" in capsys.readouterr().err


def test_absorption_vacuum_flag(point_config, capsys):
    assert main(["--absorption", "vacuum", "point", "--config", str(point_config)]) == 0
    out = capsys.readouterr().out
    assert "absorption table = vacuum" in out


def test_absorption_missing_file_exits_1(point_config, capsys):
    assert main(["--absorption", "nope.csv", "point", "--config", str(point_config)]) == 1
    assert "neither" in capsys.readouterr().err


def test_preset_to_file_with_plot(tmp_path, capsys):
    out = tmp_path / "fig2.csv"
    assert main(["--output", str(out), "--plot", "preset", "--name", "fig2"]) == 0
    assert out.exists()
    png = tmp_path / "fig2.png"
    assert png.exists() and png.stat().st_size > 1000


def test_plot_requires_output(capsys):
    assert main(["--plot", "preset", "--name", "fig2"]) == 1
    assert "--output" in capsys.readouterr().err


def test_sweep_plot_renders(sweep_config, tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["--output", str(out), "--plot", "sweep", "--config", str(sweep_config)]) == 0
    assert (tmp_path / "sweep.png").exists()


def test_jobs_flag_keeps_output_identical(sweep_config, tmp_path):
    out1 = tmp_path / "a.csv"
    out4 = tmp_path / "b.csv"
    assert main(["--output", str(out1), "--jobs", "1", "sweep", "--config", str(sweep_config)]) == 0
    assert main(["--output", str(out4), "--jobs", "4", "sweep", "--config", str(sweep_config)]) == 0
    assert out1.read_bytes() == out4.read_bytes()


def test_module_entry_point(point_config):
    proc = subprocess.run(
        [sys.executable, "-m", "rislink", "point", "--config", str(point_config)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "pathgain_db" in proc.stdout
