"""Render computed coefficient sequences to figure files."""


def save_sequence_plot(xs, ys, title, xlabel, ylabel, path):
    """Save a simple marker plot of a sequence; None values (scale-exceeded
    cells) are marked with dotted vertical lines instead of points."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    known = [(x, y) for x, y in zip(xs, ys) if y is not None]
    if known:
        ax.plot([p[0] for p in known], [p[1] for p in known],
                marker="o", linewidth=1)
    for x, y in zip(xs, ys):
        if y is None:
            ax.axvline(x, color="red", linestyle=":", linewidth=0.8)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
