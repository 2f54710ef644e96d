"""Render Lorenz curves to image files."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_lorenz_plot(curves, path):
    """Write a PNG of named Lorenz curves with the flat Gibbs diagonal.

    ``curves`` is a sequence of (name, LorenzCurve) pairs, drawn in the
    given order.
    """
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    for name, curve in curves:
        xs = [float(t) for t, _ in curve.points]
        ys = [float(v) for _, v in curve.points]
        ax.plot(xs, ys, marker="o", markersize=3, label=name)
    ax.plot([0, 1], [0, 1], linestyle="--", linewidth=1.0, color="black", label="gibbs")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.02)
    ax.set_xlabel("t")
    ax.set_ylabel("L(t)")
    ax.legend(loc="lower right")
    ax.grid(True, linestyle=":", linewidth=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
