"""Census summary figure."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _label(profile: dict) -> str:
    if profile.get("parity") == "odd":
        return "odd lk={},{}".format(*profile["lk"])
    return "lk={},{} j={},{} f={}".format(*profile["lk"], *profile["j"], ",".join(map(str, profile["fbar"])))


def plot_census(report: dict, path) -> None:
    """Bar chart of group sizes with the share reached by search overlaid."""
    groups = sorted(report["groups"], key=lambda g: -g["member_count"])
    labels = [_label(g["profile"]) for g in groups]
    sizes = [g["member_count"] for g in groups]
    reached = [1 + g["connected_pairs_found"] for g in groups]
    width = max(6.0, 0.22 * len(groups))
    fig, ax = plt.subplots(figsize=(width, 4.5))
    xs = range(len(groups))
    ax.bar(xs, sizes, color="#c8d3e0", label="diagrams in class")
    ax.bar(xs, reached, color="#35608f", width=0.5, label="joined by search")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_ylabel("diagrams")
    ax.set_title(f"census up to {report['max_chords']} chords: "
                 f"{report['diagram_count']} diagrams, {report['group_count']} classes")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
