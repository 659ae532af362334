"""Deterministic, self-contained SVG rendering of plane figures.

Shapes are collected in plane coordinates and mapped to a square
pixel canvas with equal scales on both axes (so disks stay round).
Rendering uses fixed-precision decimal formatting and no external
assets, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

# Fill/stroke palette for the standard figures.
REGION_FILL = "#e8913a"
REGION_EDGE = "#b05f10"
HULL_FILL = "#b8b8b8"
HULL_EDGE = "#7a7a7a"
CURVE_COLOR = "#000000"
DOT_COLOR = "#000000"


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


@dataclass
class _Polygon:
    points: list[complex]
    fill: str
    stroke: str
    stroke_width: float
    opacity: float


@dataclass
class _Polyline:
    points: list[complex]
    stroke: str
    stroke_width: float


@dataclass
class _Dot:
    point: complex
    radius: float
    fill: str


class SvgFigure:
    """Accumulates shapes in plane coordinates; renders one SVG string."""

    def __init__(self, size: int = 640, title: str | None = None):
        self.size = int(size)
        self.title = title
        self._items: list = []
        self._xs: list[float] = []
        self._ys: list[float] = []

    def _track(self, points) -> list[complex]:
        pts = [complex(p) for p in points]
        for p in pts:
            self._xs.append(p.real)
            self._ys.append(p.imag)
        return pts

    def add_polygon(self, points, fill: str = REGION_FILL, stroke: str = "none",
                    stroke_width: float = 1.0, opacity: float = 0.85) -> None:
        pts = self._track(points)
        if pts:
            self._items.append(_Polygon(pts, fill, stroke, stroke_width, opacity))

    def add_polyline(self, points, stroke: str = CURVE_COLOR,
                     stroke_width: float = 1.5) -> None:
        pts = self._track(points)
        if len(pts) >= 2:
            self._items.append(_Polyline(pts, stroke, stroke_width))

    def add_dot(self, point, radius: float = 4.0, fill: str = DOT_COLOR) -> None:
        (pt,) = self._track([point])
        self._items.append(_Dot(pt, radius, fill))

    def _mapper(self):
        if self._xs:
            xmin, xmax = min(self._xs), max(self._xs)
            ymin, ymax = min(self._ys), max(self._ys)
        else:
            xmin = ymin = -1.0
            xmax = ymax = 1.0
        cx = 0.5 * (xmin + xmax)
        cy = 0.5 * (ymin + ymax)
        half = 0.54 * max(xmax - xmin, ymax - ymin, 1e-6)
        size = float(self.size)

        def to_px(p: complex) -> tuple[float, float]:
            px = (p.real - (cx - half)) / (2.0 * half) * size
            py = size - (p.imag - (cy - half)) / (2.0 * half) * size
            return px, py

        return to_px

    def render(self) -> str:
        to_px = self._mapper()
        size = self.size
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">'
        ]
        if self.title:
            out.append(f"<title>{self.title}</title>")
        out.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>')
        for item in self._items:
            if isinstance(item, _Polygon):
                coords = " ".join(
                    "{},{}".format(*(_fmt(c) for c in to_px(p))) for p in item.points
                )
                out.append(
                    f'<polygon points="{coords}" fill="{item.fill}" '
                    f'fill-opacity="{_fmt(item.opacity)}" fill-rule="evenodd" '
                    f'stroke="{item.stroke}" stroke-width="{_fmt(item.stroke_width)}"/>'
                )
            elif isinstance(item, _Polyline):
                coords = " ".join(
                    "{},{}".format(*(_fmt(c) for c in to_px(p))) for p in item.points
                )
                out.append(
                    f'<polyline points="{coords}" fill="none" '
                    f'stroke="{item.stroke}" stroke-width="{_fmt(item.stroke_width)}" '
                    f'stroke-linejoin="round"/>'
                )
            else:
                px, py = to_px(item.point)
                out.append(
                    f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(item.radius)}" '
                    f'fill="{item.fill}"/>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"
