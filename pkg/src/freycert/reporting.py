"""Report files: delimited tables plus matplotlib figures rendered to disk.

Each helper writes a CSV and a PNG side by side under the requested
directory and returns the written paths, so the CLI can echo them.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dimensions import NEWFORM_FREE_LEVELS, DimensionRecord, genus_X0
from .search import SearchReport

_RECORD_HEADER = ["level", "mu", "nu2", "nu3", "nu_inf", "genus", "dim_s2", "dim_s2_new"]


def write_table(path: Path, header: list[str], rows: list[list]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _record_rows(records) -> list[list[int]]:
    return [
        [r.level, r.mu, r.nu2, r.nu3, r.nu_inf, r.genus, r.dim_s2, r.dim_s2_new]
        for r in records
    ]


def render_level_report(
    records: tuple[DimensionRecord, ...], out_dir: Path, scan_to: int = 60
) -> list[Path]:
    """CSV of the verified levels plus a dim-new bar chart up to scan_to."""
    out_dir = Path(out_dir)
    paths = [write_table(out_dir / "levels.csv", _RECORD_HEADER, _record_rows(records))]
    scan = [genus_X0(n) for n in range(1, scan_to + 1)]
    verified = {r.level for r in records}
    fig, ax = plt.subplots(figsize=(10, 4))
    colors = ["tab:green" if r.level in verified else "tab:gray" for r in scan]
    ax.bar([r.level for r in scan], [r.dim_s2_new for r in scan], color=colors)
    ax.set_xlabel("level N")
    ax.set_ylabel("dim new subspace, weight 2")
    ax.set_title("Newform-free levels (green) among N <= %d" % scan_to)
    fig.tight_layout()
    fig_path = out_dir / "levels.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    paths.append(fig_path)
    return paths


def render_dimension_scan(records: list[DimensionRecord], out_dir: Path) -> list[Path]:
    """CSV plus genus/dim-new curves for a contiguous range of levels."""
    out_dir = Path(out_dir)
    paths = [write_table(out_dir / "dims.csv", _RECORD_HEADER, _record_rows(records))]
    levels = [r.level for r in records]
    fig, ax = plt.subplots(figsize=(10, 4))
    ax.plot(levels, [r.genus for r in records], label="genus X0(N)", lw=1)
    ax.plot(levels, [r.dim_s2_new for r in records], label="dim new", lw=1)
    ax.scatter(
        [n for n in NEWFORM_FREE_LEVELS if n <= max(levels)],
        [0] * len([n for n in NEWFORM_FREE_LEVELS if n <= max(levels)]),
        color="tab:green",
        s=12,
        zorder=3,
        label="verified zero levels",
    )
    ax.set_xlabel("level N")
    ax.legend()
    fig.tight_layout()
    fig_path = out_dir / "dims.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    paths.append(fig_path)
    return paths


def render_search_report(report: SearchReport, out_dir: Path) -> list[Path]:
    """Witness table plus a coverage figure for a family search."""
    out_dir = Path(out_dir)
    rows = [
        [w.x, w.y, w.alpha, w.p, w.n, "|".join(w.violated), w.fatal]
        for w in report.witnesses
    ]
    header = ["x", "y", "alpha", "p", "n", "violated_hypotheses", "fatal"]
    paths = [write_table(out_dir / "witnesses.csv", header, rows)]
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    by_n = report.candidates_by_n
    left.bar([str(n) for n in sorted(by_n)], [by_n[n] for n in sorted(by_n)])
    left.set_xlabel("exponent n")
    left.set_ylabel("candidates tested")
    left.set_title("coverage by exponent")
    if report.witnesses:
        right.scatter(
            [w.y for w in report.witnesses],
            [w.x for w in report.witnesses],
            c=["red" if w.fatal else "tab:blue" for w in report.witnesses],
            s=16,
        )
        right.set_title("witnesses (red = FATAL)")
    else:
        right.text(0.5, 0.5, "no witnesses", ha="center", va="center")
        right.set_axis_off()
    right.set_xlabel("y")
    right.set_ylabel("x")
    fig.tight_layout()
    fig_path = out_dir / "search.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    paths.append(fig_path)
    return paths
