"""Figure rendering for the report-producing CLI paths.

Everything draws through the file-only backend, so these functions work
on headless machines and never pop a window.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_length_histograms(
    slogan_lengths: dict[int, int],
    description_lengths: dict[int, int],
    path: str,
) -> str:
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    for axis, counts, label in (
        (left, slogan_lengths, "slogan length (words)"),
        (right, description_lengths, "description length (words)"),
    ):
        if counts:
            xs = sorted(counts)
            axis.bar(xs, [counts[x] for x in xs], width=0.8)
        axis.set_xlabel(label)
        axis.set_ylabel("pairs")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_sweep_curve(scores: dict[int, float], best_k: int, path: str) -> str:
    fig, axis = plt.subplots(figsize=(7, 4))
    ks = sorted(scores)
    axis.plot(ks, [scores[k] for k in ks], marker="o")
    axis.axvline(best_k, linestyle="--", linewidth=1)
    axis.annotate("best k = %d" % best_k, xy=(best_k, scores[best_k]))
    axis.set_xlabel("k (words kept)")
    axis.set_ylabel("mean unigram F1")
    axis.set_xticks(ks)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_metric_bars(
    scores_by_system: dict[str, dict[str, float]], path: str
) -> str:
    """Grouped bars: one cluster per metric, one bar per system."""
    systems = sorted(scores_by_system)
    metrics: list[str] = []
    for scores in scores_by_system.values():
        for name in scores:
            if name not in metrics:
                metrics.append(name)
    fig, axis = plt.subplots(figsize=(max(6, 1.6 * len(metrics)), 4))
    width = 0.8 / max(1, len(systems))
    for offset, system in enumerate(systems):
        xs = [
            i + offset * width
            for i, metric in enumerate(metrics)
            if metric in scores_by_system[system]
        ]
        ys = [
            scores_by_system[system][metric]
            for metric in metrics
            if metric in scores_by_system[system]
        ]
        axis.bar(xs, ys, width=width, label=system)
    axis.set_xticks([i + 0.4 - width / 2 for i in range(len(metrics))])
    axis.set_xticklabels(metrics, rotation=20, ha="right")
    axis.set_ylabel("score")
    axis.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
