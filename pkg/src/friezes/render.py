"""Static diagrams of friezes: SVG 1.1 and Graphviz dot text.

Vertices sit on a circle at angle ``2 pi k / n``; every edge and diagonal is
labelled at its midpoint.  Triangulation diagonals (the label-1 diagonals of a
Conway-Coxeter frieze) are stroked heavier.
"""

import math

from .core import Frieze, is_conway_coxeter
from .errors import UnsupportedFormat
from .triangulation import Triangulation, frieze_of, is_diagonal

CANVAS = 400
RADIUS = 150
HEAVY = 3.5
LIGHT = 1.0


def layout(n: int, size=CANVAS, radius=RADIUS) -> list:
    c = size / 2
    return [(c + radius * math.cos(2 * math.pi * k / n),
             c - radius * math.sin(2 * math.pi * k / n)) for k in range(n)]


def _prepare(obj, overlay=None):
    if isinstance(obj, Triangulation):
        return frieze_of(obj), set(obj.diagonals)
    if overlay is not None:
        return obj, set(overlay.diagonals)
    if is_conway_coxeter(obj):
        return obj, {(i, j) for i, j in obj.pairs()
                     if is_diagonal(obj.n, i, j) and obj.label(i, j) == 1}
    return obj, set()


def segments(f: Frieze, heavy):
    """``(i, j, kind)`` for every pair; kind is edge, diagonal or heavy."""
    for i, j in f.pairs():
        if not is_diagonal(f.n, i, j):
            yield i, j, "edge"
        else:
            yield i, j, "heavy" if (i, j) in heavy else "diagonal"


def to_svg(f: Frieze, heavy=()) -> str:
    pts = layout(f.n)
    heavy = set(heavy)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           'width="%d" height="%d" viewBox="0 0 %d %d">' % ((CANVAS,) * 4),
           '<g id="segments">']
    for i, j, kind in segments(f, heavy):
        (x1, y1), (x2, y2) = pts[i], pts[j]
        width = HEAVY if kind in ("heavy", "edge") else LIGHT
        out.append('<line class="%s" data-pair="%d,%d" x1="%.2f" y1="%.2f" '
                   'x2="%.2f" y2="%.2f" stroke="black" stroke-width="%.1f"/>'
                   % (kind, i, j, x1, y1, x2, y2, width))
    out.append('</g>')
    out.append('<g id="labels" font-family="sans-serif" font-size="12" '
               'text-anchor="middle">')
    for i, j, _ in segments(f, heavy):
        (x1, y1), (x2, y2) = pts[i], pts[j]
        out.append('<text class="label" data-pair="%d,%d" x="%.2f" y="%.2f" '
                   'fill="darkred">%d</text>'
                   % (i, j, (x1 + x2) / 2, (y1 + y2) / 2, f.label(i, j)))
    out.append('</g>')
    out.append('<g id="vertices" font-family="sans-serif" font-size="13">')
    c = CANVAS / 2
    for k, (x, y) in enumerate(pts):
        tx, ty = c + (x - c) * 1.15, c + (y - c) * 1.15
        out.append('<circle class="vertex" cx="%.2f" cy="%.2f" r="4" fill="black"/>'
                   % (x, y))
        out.append('<text class="vertex-label" x="%.2f" y="%.2f" '
                   'text-anchor="middle">%d</text>' % (tx, ty, k))
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def to_dot(f: Frieze, heavy=()) -> str:
    pts = layout(f.n, size=4.0, radius=1.5)
    heavy = set(heavy)
    out = ["graph frieze {", "  node [shape=point];"]
    for k, (x, y) in enumerate(pts):
        out.append('  v%d [xlabel="%d", pos="%.3f,%.3f!"];' % (k, k, x, -y))
    for i, j, kind in segments(f, heavy):
        width = HEAVY if kind in ("heavy", "edge") else LIGHT
        out.append('  v%d -- v%d [label="%d", penwidth=%.1f];'
                   % (i, j, f.label(i, j), width))
    out.append("}")
    return "\n".join(out) + "\n"


def render(obj, fmt: str, overlay=None) -> str:
    """Render a Frieze or a Triangulation as ``svg`` or ``dot`` text."""
    f, heavy = _prepare(obj, overlay)
    if fmt == "svg":
        return to_svg(f, heavy)
    if fmt == "dot":
        return to_dot(f, heavy)
    raise UnsupportedFormat("unknown format %r (expected svg or dot)" % (fmt,))
