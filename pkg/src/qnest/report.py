"""CSV and figure rendering for the catalog verification report."""

from __future__ import annotations

import csv
import os
from fractions import Fraction
from typing import List, Optional

from .catalog import FixtureReport, get_entry
from .stabilizer import using_rate


def fixture_rate(entry_id: str) -> Optional[Fraction]:
    entry = get_entry(entry_id)
    if entry.kind != "code":
        return None
    return using_rate(entry.claimed_n, entry.claimed_s, 1)


def write_report_files(reports: List[FixtureReport], outdir: str) -> List[str]:
    """Write fixtures.csv and a using-rate chart; returns the paths written."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "fixtures.csv")
    with open(csv_path, "w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(
            ["id", "kind", "n", "generators", "claimed_distance", "status",
             "using_rate", "using_rate_decimal", "errata"]
        )
        for rep in reports:
            entry = get_entry(rep.entry_id)
            g = fixture_rate(rep.entry_id)
            writer.writerow([
                entry.id, entry.kind, entry.claimed_n, entry.claimed_s,
                entry.claimed_d if entry.claimed_d is not None else "",
                rep.status,
                str(g) if g is not None else "",
                "%.6f" % float(g) if g is not None else "",
                "; ".join(e.check for e in rep.errata),
            ])
    png_path = os.path.join(outdir, "using_rate.png")
    _write_rate_figure(reports, png_path)
    return [csv_path, png_path]


def _write_rate_figure(reports: List[FixtureReport], path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = []
    rates = []
    colors = []
    for rep in reports:
        g = fixture_rate(rep.entry_id)
        if g is None:
            continue
        ids.append(rep.entry_id)
        rates.append(float(g))
        colors.append({"valid": "tab:blue", "erratum": "tab:orange"}.get(rep.status, "tab:red"))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(range(len(ids)), rates, color=colors)
    ax.axhline(1.0, color="gray", lw=0.8, ls="--")
    ax.axhline(0.5, color="gray", lw=0.8, ls=":")
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("syndrome using rate g(n, s, 1)")
    ax.set_title("catalog fixtures: using rate (dashed: g=1, dotted: g=1/2)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
