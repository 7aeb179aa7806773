"""Render a fuzz report to files: delimited summaries plus figures.

Writes summary.csv and mismatches.csv, then regenerates the word stream
from the report's seed and parameters (the generator is deterministic) to
plot length and timestamp histograms.  Floats appear here only as plot
coordinates; the semantics stays exact.
"""

import csv
import random
from pathlib import Path

from .fuzz import FuzzReport, random_word
from .io_format import format_timed_word


def write_report(
    report: FuzzReport, alphabet: tuple, out_dir, strict: bool = False
) -> list:
    """Write CSV tables and PNG figures into out_dir; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    summary = out / "summary.csv"
    with summary.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["seed", "tried", "max_len", "max_time", "denominators", "mismatches"]
        )
        writer.writerow(
            [
                report.seed,
                report.tried,
                report.max_len,
                report.max_time,
                " ".join(str(d) for d in report.denominators),
                len(report.mismatches),
            ]
        )

    mismatches = out / "mismatches.csv"
    with mismatches.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["word", "member_a", "member_b"])
        for w, va, vb in report.mismatches:
            writer.writerow([format_timed_word(w), va, vb])

    rng = random.Random(report.seed)
    words = [
        random_word(
            rng,
            alphabet,
            report.max_len,
            report.max_time,
            report.denominators,
            strict,
        )
        for _ in range(report.tried)
    ]
    lengths = [len(w) for w in words]
    times = [float(t) for w in words for _, t in w]

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lengths_png = out / "lengths.png"
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(lengths, bins=range(report.max_len + 2), edgecolor="black")
    ax.set_xlabel("events per word")
    ax.set_ylabel("words")
    ax.set_title(f"Word lengths (seed {report.seed}, {report.tried} words)")
    fig.tight_layout()
    fig.savefig(lengths_png, dpi=120)
    plt.close(fig)

    times_png = out / "times.png"
    fig, ax = plt.subplots(figsize=(6, 4))
    if times:
        ax.hist(times, bins=40, edgecolor="black")
    ax.set_xlabel("timestamp")
    ax.set_ylabel("events")
    ax.set_title("Event timestamps")
    fig.tight_layout()
    fig.savefig(times_png, dpi=120)
    plt.close(fig)

    return [summary, mismatches, lengths_png, times_png]
