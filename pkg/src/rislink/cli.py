"""Command-line front end: point evaluations, sweeps and figure presets.

Exit codes: 0 on success, 1 on validation errors (bad config values, unknown
names, domain violations), 2 on runtime numeric errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import yaml

from .config import load_scenario
from .output import Table, write_table
from .presets import PRESET_NAMES, PRESET_PLOTS, figure_preset
from .sweep import load_sweep_spec, run_point, run_sweep


def _load_config_file(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise ValueError(f"cannot read config file {path}: {err}") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise ValueError(f"config file {path} is not valid YAML: {err}") from None
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must contain a mapping at the top level")
    return data


def _emit(table: Table, fmt: str, output: str | None, plot: bool,
          plot_spec: dict | None) -> None:
    if output:
        out_path = Path(output)
        with out_path.open("w", encoding="utf-8", newline="") as stream:
            write_table(table, stream, fmt)
        if plot:
            if plot_spec is None:
                raise ValueError("this table has no associated plot layout")
            from .plotting import render_table

            render_table(table, out_path.with_suffix(".png"), **plot_spec)
    else:
        if plot:
            raise ValueError("--plot requires --output so the figure lands next to the data")
        write_table(table, sys.stdout, fmt)


@click.group()
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True, help="Output serialization.")
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write results to this file instead of stdout.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Concurrent evaluations for sweeps and presets.")
@click.option("--absorption", default="default", show_default=True,
              help="Absorption table: 'vacuum', 'default', or a CSV file path.")
@click.option("--plot", is_flag=True, default=False,
              help="Also render a PNG figure alongside the output file.")
@click.pass_context
def cli(ctx, fmt, output, jobs, absorption, plot):
    """Channel gain, path gain and capacity of a RIS-relayed D-band link."""
    if jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {jobs}")
    ctx.obj = {
        "fmt": fmt,
        "output": output,
        "jobs": jobs,
        "absorption": absorption,
        "plot": plot,
    }


@cli.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=False, dir_okay=False), help="YAML scenario file.")
@click.pass_obj
def point(obj, config_path):
    """Evaluate every metric at a single parameter point."""
    data = _load_config_file(config_path)
    scenario = load_scenario(data, absorption=obj["absorption"])
    table = run_point(scenario)
    _emit(table, obj["fmt"], obj["output"], obj["plot"], None)


@cli.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(exists=False, dir_okay=False),
              help="YAML scenario file with a sweep section.")
@click.pass_obj
def sweep(obj, config_path):
    """Run the parameter sweep described by the config's sweep section."""
    data = _load_config_file(config_path)
    scenario = load_scenario(data, absorption=obj["absorption"])
    spec = load_sweep_spec(data, scenario)
    table = run_sweep(spec, jobs=obj["jobs"])
    plot_spec = None
    if obj["plot"]:
        from .plotting import plot_spec_for_sweep

        plot_spec = plot_spec_for_sweep(table)
    _emit(table, obj["fmt"], obj["output"], obj["plot"], plot_spec)


@cli.command()
@click.option("--name", required=True, help=f"Preset name: one of {', '.join(PRESET_NAMES)}.")
@click.pass_obj
def preset(obj, name):
    """Emit one of the documented figure series."""
    table = figure_preset(name, jobs=obj["jobs"], absorption=obj["absorption"])
    _emit(table, obj["fmt"], obj["output"], obj["plot"], PRESET_PLOTS.get(name))


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as err:
        return err.exit_code
    except click.ClickException as err:
        err.show()
        return err.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except ValueError as err:
        click.echo(f"error: {err}", err=True)
        return 1
    except ArithmeticError as err:
        click.echo(f"numeric error: {err}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
