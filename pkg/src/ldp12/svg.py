"""Static SVG drawings of a polygon, its dual, its sails and the dual chain.

Every drawn coordinate is an integer: the scale is a multiple of the common
denominator of all points in the picture.  Exact coordinates are attached as
``data-x``/``data-y`` attributes.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, lcm
from typing import List, Sequence

from .fan import sail_chain, spanning_fan, refined_fan
from .identity import dual_chain
from .lattice import Point, det2, format_rational
from .polygon import Polygon, dual

KINDS = ("polygon", "dual", "sails", "dual-chain")
UNIT = 40
MARGIN = 1


class _Canvas:
    def __init__(self, points: Sequence[Point]):
        pts = list(points) + [(0, 0)]
        denominators = [Fraction(c).denominator for p in pts for c in p]
        self.scale = UNIT * lcm(*denominators)
        self.x0 = floor(min(Fraction(p[0]) for p in pts)) - MARGIN
        self.x1 = ceil(max(Fraction(p[0]) for p in pts)) + MARGIN
        self.y0 = floor(min(Fraction(p[1]) for p in pts)) - MARGIN
        self.y1 = ceil(max(Fraction(p[1]) for p in pts)) + MARGIN
        self.items: List[str] = []

    def xy(self, p: Point):
        x = (Fraction(p[0]) - self.x0) * self.scale
        y = (self.y1 - Fraction(p[1])) * self.scale
        return int(x), int(y)

    def grid(self):
        for x in range(self.x0, self.x1 + 1):
            for y in range(self.y0, self.y1 + 1):
                px, py = self.xy((x, y))
                self.items.append(f'<circle class="lattice" cx="{px}" cy="{py}" r="2" fill="#999"/>')
        ox, oy = self.xy((0, 0))
        self.items.append(f'<circle class="origin" cx="{ox}" cy="{oy}" r="8" fill="#ddd"/>')

    def polygon(self, vs: Sequence[Point], cls: str, fill: str, stroke: str = "#333"):
        coords = " ".join("%d,%d" % self.xy(v) for v in vs)
        self.items.append(
            f'<polygon class="{cls}" points="{coords}" fill="{fill}" '
            f'fill-opacity="0.4" stroke="{stroke}" stroke-width="2"/>'
        )

    def line(self, a: Point, b: Point, cls: str, stroke: str):
        (x1, y1), (x2, y2) = self.xy(a), self.xy(b)
        self.items.append(
            f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{stroke}" stroke-width="2"/>'
        )

    def vertex(self, p: Point, cls: str, fill: str):
        px, py = self.xy(p)
        self.items.append(
            f'<circle class="{cls}" cx="{px}" cy="{py}" r="5" fill="{fill}" '
            f'data-x="{format_rational(p[0])}" data-y="{format_rational(p[1])}"/>'
        )

    def render(self) -> str:
        w = (self.x1 - self.x0) * self.scale
        h = (self.y1 - self.y0) * self.scale
        body = "\n  ".join(self.items)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">\n  {body}\n</svg>\n'
        )


def render_svg(p: Polygon, kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown drawing {kind!r}; choose from {', '.join(KINDS)}")
    if kind == "polygon":
        cv = _Canvas(p.vertices)
        cv.grid()
        cv.polygon(p.vertices, "polygon", "#bbb")
        for v in p.vertices:
            cv.vertex(v, "vertex", "#333")
    elif kind == "dual":
        d = dual(p)
        cv = _Canvas(d.vertices)
        cv.grid()
        cv.polygon(d.vertices, "dual", "#bbb")
        for v in d.vertices:
            lattice = all(Fraction(c).denominator == 1 for c in v)
            cv.vertex(v, "vertex" if lattice else "vertex rational", "#333" if lattice else "#1f5fd0")
    elif kind == "sails":
        cv = _Canvas(p.vertices)
        cv.grid()
        cv.polygon(p.vertices, "polygon", "#ddd")
        for c in spanning_fan(p):
            chain = sail_chain(c.u1, c.u2)
            if len(chain) > 2:
                cv.polygon([(0, 0)] + chain, "sail", "#1f5fd0")
        for v in refined_fan(p).rays:
            cv.line((0, 0), v, "ray", "#555")
            cv.vertex(v, "vertex", "#333")
    else:
        chain = dual_chain(refined_fan(p))
        cv = _Canvas([q for edge in chain for q in edge])
        cv.grid()
        for start, end in chain:
            d = det2(start, end)
            if d == 0:
                cv.vertex(start, "degenerate", "#c00")
            else:
                cls, color = ("edge positive", "#1f5fd0") if d > 0 else ("edge negative", "#2a9d3a")
                cv.line(start, end, cls, color)
    return cv.render()


def write_svg(p: Polygon, kind: str, path) -> None:
    text = render_svg(p, kind)
    with open(path, "w") as fh:
        fh.write(text)
