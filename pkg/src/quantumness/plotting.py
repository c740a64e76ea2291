"""Figure rendering for sweep CSVs.

Reads a CSV produced by the run command and saves one PNG per report
family next to it: quantifier curves (LQU / LQFI / coherence vs the time
axis) and, when present, average teleportation fidelity curves.
"""
from __future__ import annotations

import csv
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _read_rows(csv_path: Path) -> list[dict]:
    with open(csv_path, "r", encoding="utf-8") as fh:
        return [row for row in csv.DictReader(fh) if row.get("model") != "ERROR"]


def _group_key(row: dict) -> str:
    parts = [f"purity={float(row['purity']):g}", f"alpha={float(row['alpha']):.3g}"]
    if row["tau"]:
        parts.append(f"tau={float(row['tau']):g}")
    return ", ".join(parts)


def _time_axis(row: dict) -> tuple[str, float]:
    if row["gamma_t"]:
        return r"$\gamma t$", float(row["gamma_t"])
    return r"$t/2\tau$", float(row["xi"])


def render_csv(csv_path) -> list[Path]:
    """Render the figures implied by a sweep CSV; returns the written paths."""
    csv_path = Path(csv_path)
    rows = _read_rows(csv_path)
    written: list[Path] = []
    if not rows:
        return written

    quant_rows = [r for r in rows if r["lqu"]]
    if quant_rows:
        fig, axes = plt.subplots(1, 3, figsize=(13.5, 4.0), sharex=True)
        for ax, column, label in zip(
            axes, ("lqu", "lqfi", "coherence"), ("LQU", "LQFI", "coherence")
        ):
            groups: dict[str, list[tuple[float, float]]] = defaultdict(list)
            xlabel = ""
            for r in quant_rows:
                xlabel, x = _time_axis(r)
                groups[_group_key(r)].append((x, float(r[column])))
            for key, pts in groups.items():
                pts.sort()
                ax.plot([p[0] for p in pts], [p[1] for p in pts], lw=1.2, label=key)
            ax.set_xlabel(xlabel)
            ax.set_ylabel(label)
            ax.grid(alpha=0.3)
        axes[0].legend(fontsize=7)
        fig.tight_layout()
        out = csv_path.with_name(csv_path.stem + "_quantifiers.png")
        fig.savefig(out, dpi=150)
        plt.close(fig)
        written.append(out)

    tele_rows = [r for r in rows if r["f_av"]]
    if tele_rows:
        fig, ax = plt.subplots(figsize=(6.0, 4.2))
        groups = defaultdict(list)
        xlabel = ""
        for r in tele_rows:
            xlabel, x = _time_axis(r)
            groups[_group_key(r)].append((x, float(r["f_av"])))
        for key, pts in groups.items():
            pts.sort()
            ax.plot([p[0] for p in pts], [p[1] for p in pts], lw=1.2, label=key)
        ax.axhline(2.0 / 3.0, color="gray", ls="--", lw=0.8, label="classical bound")
        ax.set_xlabel(xlabel)
        ax.set_ylabel(r"$F_{av}$")
        ax.grid(alpha=0.3)
        ax.legend(fontsize=7)
        fig.tight_layout()
        out = csv_path.with_name(csv_path.stem + "_teleport.png")
        fig.savefig(out, dpi=150)
        plt.close(fig)
        written.append(out)
    return written
