"""Render a suite report as a figure file next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import CheckReport


def report_figure(report: CheckReport, path: Path) -> Path:
    """Draw per-law case counts (passed, discarded, failed) as stacked bars."""
    laws = report.laws
    names = [lr.law for lr in laws]
    failed = [len(lr.failures) for lr in laws]
    passed = [lr.checked - nf for lr, nf in zip(laws, failed)]
    discarded = [lr.discarded for lr in laws]

    fig, ax = plt.subplots(figsize=(7.0, 1.2 + 0.6 * len(laws)))
    ypos = range(len(laws))
    left = [0] * len(laws)
    for counts, label, color in (
        (passed, "passed", "tab:green"),
        (discarded, "discarded", "tab:gray"),
        (failed, "failed", "tab:red"),
    ):
        ax.barh(ypos, counts, left=left, label=label, color=color)
        left = [a + b for a, b in zip(left, counts)]
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("cases")
    ax.set_title(f"{report.suite} ({report.container})")
    ax.legend(loc="lower right")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
