"""Render result tables to figure files (the report path of the CLI).

One line per series value, grouped on the series column(s); rows with a
non-empty error cell are skipped. Uses the Agg backend so the CLI works
headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .output import Table


def render_table(
    table: Table,
    path,
    *,
    x: str,
    y: str,
    series: tuple[str, ...] = (),
    xlabel: str | None = None,
    ylabel: str | None = None,
    title: str | None = None,
) -> None:
    """Plot column y against column x, one line per distinct series tuple."""
    for name in (x, y, *series):
        if name not in table.columns:
            raise ValueError(f"plot column {name!r} not in table columns {table.columns}")
    ix = table.columns.index(x)
    iy = table.columns.index(y)
    iseries = [table.columns.index(s) for s in series]
    ierror = table.columns.index("error") if "error" in table.columns else None

    groups: dict[tuple, list[tuple[float, float]]] = {}
    for row in table.rows:
        if ierror is not None and row[ierror]:
            continue
        if row[ix] is None or row[iy] is None:
            continue
        key = tuple(row[i] for i in iseries)
        groups.setdefault(key, []).append((float(row[ix]), float(row[iy])))

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for key, points in groups.items():
        points.sort()
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        if key:
            label = ", ".join(f"{s}={v:g}" for s, v in zip(series, key))
        else:
            label = y
        ax.plot(xs, ys, label=label)
    ax.set_xlabel(xlabel or x)
    ax.set_ylabel(ylabel or y)
    if title:
        ax.set_title(title)
    ax.grid(True, linestyle=":", linewidth=0.8)
    if groups and len(groups) <= 12:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_spec_for_sweep(table: Table) -> dict:
    """Derive a generic plot mapping for a sweep table: first metric vs first axis."""
    known_metrics = {
        "pattern_tx", "pattern_rx", "pathgain_db", "capacity_bps",
        "snr_db_min", "snr_db_mean", "snr_db_max",
    }
    axes = [c for c in table.columns if c not in known_metrics and c != "error"]
    metrics = [c for c in table.columns if c in known_metrics]
    if not axes or not metrics:
        raise ValueError("table has no plottable axis/metric columns")
    return {
        "x": axes[0],
        "y": metrics[0],
        "series": tuple(axes[1:]),
    }
