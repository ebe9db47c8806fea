"""SVG rendering of a drawing.

Coordinates are converted to floats here and only here; the optional jitter
spreads collinear overlapping segments apart on screen and never touches the
drawing itself.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .layout import Drawing

HORIZONTAL_COLOR = "#228b22"
VERTICAL_COLOR = "#00008b"
GRID_COLOR = "#d3d3d3"


def _jitter_offsets(d: Drawing, step: float) -> dict:
    offsets = {}
    lines: dict = {}
    for s in d.segments:
        lines.setdefault((s.dir, s.at), []).append(s)
    for segs in lines.values():
        segs.sort(key=lambda s: (s.lo, s.hi))
        tracks: list = []  # right end of the last segment placed on each track
        for s in segs:
            k = next((k for k, end in enumerate(tracks) if end < s.lo), len(tracks))
            if k == len(tracks):
                tracks.append(s.hi)
            else:
                tracks[k] = s.hi
            offsets[s.vertex] = k * step
    return offsets


def render_svg(d: Drawing, scale: float = 40.0, jitter: float = 0.0, margin: float = 1.0) -> str:
    """Render ``d`` with ``scale`` pixels per unit; the y axis points up."""
    if not d.segments:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"/>\n'
    xs = [float(v) for s in d.segments for v in s.xrange]
    ys = [float(v) for s in d.segments for v in s.yrange]
    x0, x1 = math.floor(min(xs)) - margin, math.ceil(max(xs)) + margin
    y0, y1 = math.floor(min(ys)) - margin, math.ceil(max(ys)) + margin
    width, height = (x1 - x0) * scale, (y1 - y0) * scale

    def sx(x):
        return round((x - x0) * scale, 3)

    def sy(y):
        return round((y1 - y) * scale, 3)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
           f'viewBox="0 0 {width:g} {height:g}" font-family="sans-serif">']
    out.append(f'<g stroke="{GRID_COLOR}" stroke-width="0.5">')
    for gx in range(int(x0), int(x1) + 1):
        out.append(f'<line x1="{sx(gx)}" y1="0" x2="{sx(gx)}" y2="{height:g}"/>')
    for gy in range(int(y0), int(y1) + 1):
        out.append(f'<line x1="0" y1="{sy(gy)}" x2="{width:g}" y2="{sy(gy)}"/>')
    out.append("</g>")
    fs = max(scale / 4, 6)
    out.append(f'<g font-size="{fs:g}" fill="#555">')
    for gx in range(int(x0) + 1, int(x1)):
        out.append(f'<text x="{sx(gx)}" y="{height - 2:g}" text-anchor="middle">{gx}</text>')
    for gy in range(int(y0) + 1, int(y1)):
        out.append(f'<text x="2" y="{sy(gy)}" dominant-baseline="middle">{gy}</text>')
    out.append("</g>")

    offsets = _jitter_offsets(d, jitter) if jitter else {}
    for s in d.segments:
        off = offsets.get(s.vertex, 0.0)
        label = escape(str(s.vertex))
        if s.horizontal:
            y = sy(float(s.at)) - off
            a, b = sx(float(s.lo)), sx(float(s.hi))
            color, coords = HORIZONTAL_COLOR, (a, y, b, y)
            tx, ty = b + 3, y
        else:
            x = sx(float(s.at)) + off
            a, b = sy(float(s.lo)), sy(float(s.hi))
            color, coords = VERTICAL_COLOR, (x, a, x, b)
            tx, ty = x + 3, b - 3
        out.append(f'<line x1="{coords[0]}" y1="{coords[1]}" x2="{coords[2]}" y2="{coords[3]}" '
                   f'stroke="{color}" stroke-width="3" stroke-linecap="round">'
                   f'<title>{label}</title></line>')
        out.append(f'<text x="{tx:g}" y="{ty:g}" font-size="{fs:g}" fill="{color}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
