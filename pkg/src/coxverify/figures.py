"""Matplotlib renderings of suite reports.

Figures are written next to the delimited check output when the CLI is
given --figures DIR.  Only suites with a natural numeric series get a
plot; every suite gets the CSV.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .report import PASS, VerificationReport  # noqa: E402


def _save(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_length_series(report: VerificationReport, out_dir: str) -> str | None:
    """ℓ growth plot for the power-reduced and growth suites."""
    lengths = report.parameters.get("lengths")
    if not lengths:
        return None
    ks = list(range(1, len(lengths) + 1))
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    ax.plot(ks, lengths, "o-", ms=3.5, lw=1.0, label="observed length")
    if report.suite == "power-reduced":
        n = len(report.parameters.get("c_word", []))
        ax.plot(ks, [k * n for k in ks], "--", lw=1.0, label=f"k*n (n={n})")
    else:
        ax.plot(ks, ks, "--", lw=1.0, label="k (lower bound)")
    ax.set_xlabel("k")
    ax.set_ylabel("length")
    ax.set_title(f"{report.suite}: {report.group}")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, os.path.join(out_dir, f"{report.suite}_{report.group}_lengths.png"))


def save_census_histogram(report: VerificationReport, out_dir: str) -> str | None:
    """Sequence counts per length for the admissible-reduced suite."""
    census = report.parameters.get("census")
    if not census:
        return None
    lengths = sorted(int(k) for k in census)
    counts = [census[str(k)] for k in lengths]
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    ax.bar(lengths, counts, width=0.8)
    ax.set_xlabel("sequence length")
    ax.set_ylabel("playable sequences")
    ax.set_title(f"admissible census: {report.group}")
    return _save(fig, os.path.join(out_dir, f"{report.suite}_{report.group}_census.png"))


def save_summary(report: VerificationReport, out_dir: str) -> str | None:
    """Pass/fail counts per check family (the id prefix before the last colon)."""
    if not report.checks:
        return None
    families: dict[str, list[int]] = {}
    for c in report.sorted_checks():
        family = c.id.rsplit(":", 1)[0] if ":" in c.id else c.id
        bucket = families.setdefault(family, [0, 0])
        if c.status == PASS:
            bucket[0] += 1
        else:
            bucket[1] += 1
    names = list(families)
    passed = [families[f][0] for f in names]
    failed = [families[f][1] for f in names]
    height = max(2.5, 0.22 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(7.0, height))
    ys = range(len(names))
    ax.barh(ys, passed, color="#2a9d4e", label="pass")
    ax.barh(ys, failed, left=passed, color="#c13030", label="fail/error")
    ax.set_yticks(list(ys))
    ax.set_yticklabels(names, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.set_title(f"{report.suite}: {report.group}")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, os.path.join(out_dir, f"{report.suite}_{report.group}_summary.png"))


def render_report_figures(report: VerificationReport, out_dir: str) -> list[str]:
    """Write every applicable figure plus the CSV of checks; returns paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    csv_path = os.path.join(out_dir, f"{report.suite}_{report.group}_checks.csv")
    report.write_csv(csv_path)
    written.append(csv_path)
    for renderer in (save_length_series, save_census_histogram, save_summary):
        path = renderer(report, out_dir)
        if path:
            written.append(path)
    return written
