"""Matplotlib figures for reports (PNG/PDF)."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from pathlib import Path  # noqa: E402

from .render import _prepare, layout, segments  # noqa: E402

# drop timestamps so repeated runs write identical files
_METADATA = {".png": {"Software": None}, ".pdf": {"CreationDate": None}}


def draw_frieze(ax, f, heavy=(), highlight=(), title=None):
    """Draw ``f`` on ``ax``; vertices in ``highlight`` and the segments among
    them are coloured."""
    pts = layout(f.n, size=2.0, radius=1.0)
    hl = set(highlight)
    for i, j, kind in segments(f, set(heavy)):
        (x1, y1), (x2, y2) = pts[i], pts[j]
        inside = i in hl and j in hl
        ax.plot([x1, x2], [y1, y2],
                color="tab:red" if inside else "black",
                linewidth=2.5 if kind in ("edge", "heavy") else 0.6,
                alpha=1.0 if kind != "diagonal" or inside else 0.5,
                zorder=2 if inside else 1)
        ax.text((x1 + x2) / 2, (y1 + y2) / 2, str(f.label(i, j)),
                ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none", alpha=0.8))
    for k, (x, y) in enumerate(pts):
        ax.plot([x], [y], "o", color="tab:red" if k in hl else "black",
                markersize=5, zorder=3)
        ax.text(1 + (x - 1) * 1.15, 1 + (y - 1) * 1.15, str(k),
                ha="center", va="center", fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def save_figure(obj, path, highlight=(), title=None, overlay=None):
    """Render a Frieze or Triangulation to ``path`` (format from suffix)."""
    f, heavy = _prepare(obj, overlay)
    fig, ax = plt.subplots(figsize=(5, 5))
    draw_frieze(ax, f, heavy, highlight, title)
    fig.savefig(path, bbox_inches="tight",
                metadata=_METADATA.get(Path(path).suffix.lower()))
    plt.close(fig)
    return path
