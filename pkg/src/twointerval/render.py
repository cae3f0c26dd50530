"""SVG drawing of an instance: one lane per 2-interval, the two intervals as
horizontal segments joined by an arc, gadget regions shaded and labelled
when provenance is available."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .model import Instance

MARGIN = 40
WIDTH = 960
LANE = 14
ARC_RISE = 10
PALETTE = {
    "vertex": "#1f77b4",
    "vertex'": "#17becf",
    "edge": "#d62728",
    "edge'": "#ff7f0e",
    "directed": "#2ca02c",
}


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(inst: Instance, provenance: dict | None = None) -> str:
    regions = (provenance or {}).get("regions", [])
    roles = (provenance or {}).get("roles", {})
    coords = [x for d in inst.two_intervals for iv in d.intervals for x in (iv.lo, iv.hi)]
    coords += [x for reg in regions for x in (reg["lo"], reg["hi"])]
    lo, hi = (min(coords), max(coords)) if coords else (0, 1)
    if hi == lo:
        hi = lo + 1
    scale = (WIDTH - 2 * MARGIN) / (hi - lo)

    def sx(x: int) -> str:
        return _fmt(MARGIN + (x - lo) * scale)

    top = MARGIN + (20 if regions else 0)
    lanes = max(len(inst), 1)
    axis_y = top + lanes * LANE + LANE
    height = axis_y + MARGIN

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}" font-family="monospace" font-size="10">',
        f"<title>2-interval instance, relations {escape(str(inst.relations))}</title>",
    ]
    for reg in regions:
        name = escape(reg["gadget"])
        x0, x1 = sx(reg["lo"]), sx(reg["hi"])
        out.append(
            f'<rect class="region" x="{x0}" y="{MARGIN}" '
            f'width="{_fmt(float(x1) - float(x0))}" height="{axis_y - MARGIN}" '
            f'fill="#eeeeee" stroke="#bbbbbb"/>'
        )
        out.append(
            f'<text class="region-label" x="{x0}" y="{MARGIN + 12}">{name}</text>'
        )
    for lane, d in enumerate(inst.two_intervals):
        y = top + lane * LANE + LANE
        colour = PALETTE.get(roles.get(d.label, {}).get("role"), "#333333")
        out.append(f'<g class="two-interval" data-label="{escape(d.label)}">')
        for iv in d.intervals:
            out.append(
                f'<line x1="{sx(iv.lo)}" y1="{y}" x2="{sx(iv.hi)}" y2="{y}" '
                f'stroke="{colour}" stroke-width="3"/>'
            )
        a = (d.left.lo + d.left.hi) / 2
        b = (d.right.lo + d.right.hi) / 2
        xa, xb = MARGIN + (a - lo) * scale, MARGIN + (b - lo) * scale
        out.append(
            f'<path d="M {_fmt(xa)} {y} Q {_fmt((xa + xb) / 2)} {y - ARC_RISE} {_fmt(xb)} {y}" '
            f'fill="none" stroke="{colour}" stroke-dasharray="3,2"/>'
        )
        out.append(f'<text x="{_fmt(WIDTH - MARGIN + 4)}" y="{y + 3}">{escape(d.label)}</text>')
        out.append("</g>")
    out.append(
        f'<line class="axis" x1="{MARGIN}" y1="{axis_y}" x2="{WIDTH - MARGIN}" y2="{axis_y}" '
        f'stroke="black"/>'
    )
    out.append(f'<text class="tick" x="{MARGIN}" y="{axis_y + 14}">{lo}</text>')
    out.append(
        f'<text class="tick" x="{WIDTH - MARGIN}" y="{axis_y + 14}" text-anchor="end">{hi}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
