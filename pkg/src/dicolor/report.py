"""Report rendering: CSV tables plus matplotlib figures written to a
directory, for the inversion and equivalence-harness CLI paths."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .inversion import InversionTrace


def write_inversion_report(trace: InversionTrace, outdir: str) -> list[str]:
    """steps.csv (one row per reversal) and forward_progress.png."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "steps.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step", "circuit_length", "forward_after"])
        for i, (circ, fwd) in enumerate(trace.steps, start=1):
            writer.writerow([i, len(circ), fwd])
    fig_path = os.path.join(outdir, "forward_progress.png")
    counts = [trace.initial_forward] + [f for _, f in trace.steps]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(range(len(counts)), counts, marker="o")
    ax.set_xlabel("reversal step")
    ax.set_ylabel("forward arcs")
    ax.set_title("forward-arc count per reversal")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def write_equivalence_report(rows: list[dict], outdir: str) -> list[str]:
    """samples.csv (one row per sample) and a histogram of the exact
    dichromatic numbers with agreement marks."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "samples.csv")
    fields = ["sample", "n", "m", "dichromatic", "best_ordering_k", "agree"]
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    fig_path = os.path.join(outdir, "dichromatic_hist.png")
    values = [r["dichromatic"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    if values:
        lo, hi = min(values), max(values)
        bins = [x - 0.5 for x in range(lo, hi + 2)]
        ax.hist(values, bins=bins, rwidth=0.8)
    ax.set_xlabel("dichromatic number")
    ax.set_ylabel("samples")
    agree = sum(1 for r in rows if r["agree"])
    ax.set_title(f"exact vs ordering search: {agree}/{len(rows)} agree")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]
