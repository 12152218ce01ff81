"""SVG drawing of a disk instance. Read-only: nothing here touches the data."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .geom import overlapping_pairs, penetration_cmp, penetration_depth
from .mbs import MbsInstance

COLORS = {
    "D": "#4c72b0",
    "Dprime": "#8172b2",
    "A": "#dd8452",
    "B": "#55a868",
    "Aprime": "#c44e52",
    "Bprime": "#937860",
    "Corridor": "#8c8c8c",
}


def _f(v) -> str:
    return "%.2f" % v


def to_svg(inst: MbsInstance, width: int = 1200, annotate: bool = False) -> str:
    xs, ys = [], []
    for d in inst.disks:
        cx, cy, r = float(d.center[0]), float(d.center[1]), float(d.radius)
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    for p in (inst.x, inst.y, *inst.markers):
        xs.append(float(p[0]))
        ys.append(float(p[1]))
    pad = 0.03 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, x1, y0, y1 = min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad
    k = width / (x1 - x0)
    height = int(round((y1 - y0) * k))

    def px(p):
        return (float(p[0]) - x0) * k, (y1 - float(p[1])) * k

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height),
        '<rect width="100%" height="100%" fill="white"/>',
        '<g id="disks" fill-opacity="0.25" stroke-width="1">',
    ]
    for d in inst.disks:
        cx, cy = px(d.center)
        c = COLORS.get(d.role, "#000000")
        out.append('<circle id="%s" cx="%s" cy="%s" r="%s" fill="%s" stroke="%s"/>'
                   % (escape(d.id), _f(cx), _f(cy), _f(float(d.radius) * k), c, c))
    out.append("</g>")
    out.append('<g id="thick" stroke="black" stroke-width="3" stroke-linecap="round">')
    notes = []
    for i, j in overlapping_pairs(inst.disks):
        a, b = inst.disks[i], inst.disks[j]
        (ax, ay), (bx, by) = px(a.center), px(b.center)
        if penetration_cmp(a, b, inst.lam) >= 0:
            out.append('<line x1="%s" y1="%s" x2="%s" y2="%s"/>' % (_f(ax), _f(ay), _f(bx), _f(by)))
        elif annotate:
            notes.append(((ax + bx) / 2, (ay + by) / 2, penetration_depth(a, b)))
    out.append("</g>")
    font = max(10, width // 90)
    out.append('<g id="labels" font-family="sans-serif" font-size="%d" text-anchor="middle">' % font)
    named = [("x", inst.x), ("y", inst.y)] + [("y%d" % i, m) for i, m in enumerate(inst.markers, start=1)]
    for label, p in named:
        cx, cy = px(p)
        out.append('<circle cx="%s" cy="%s" r="3" fill="black"/>' % (_f(cx), _f(cy)))
        out.append('<text x="%s" y="%s">%s</text>' % (_f(cx), _f(cy - 6), escape(label)))
    for mx, my, depth in notes:
        out.append('<text x="%s" y="%s" fill="#b00000">%.3f</text>' % (_f(mx), _f(my), depth))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
