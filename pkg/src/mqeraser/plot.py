"""Minimal static SVG line charts for the sweep tables."""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 360, 260
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 48, 12, 28, 36
COLOURS = ("#6a3d9a", "#1f78b4", "#33a02c", "#e31a1c")


@dataclass(frozen=True)
class Series:
    label: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _panel(series: list[Series], title: str, x_label: str, offset_x: float) -> list[str]:
    xs = [x for s in series for x in s.xs]
    ys = [y for s in series for y in s.ys]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys + [0.0]), max(ys + [0.0])
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = offset_x + MARGIN_LEFT + (x - x0) / (x1 - x0) * pw
        py = MARGIN_TOP + (y1 - y) / (y1 - y0) * ph
        return px, py

    left, top = offset_x + MARGIN_LEFT, MARGIN_TOP
    out = [
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#000"/>',
        f'<text x="{left + pw / 2}" y="{MARGIN_TOP - 10}" text-anchor="middle">{escape(title)}</text>',
        f'<text x="{left + pw / 2}" y="{HEIGHT - 6}" text-anchor="middle">{escape(x_label)}</text>',
    ]
    for frac in (0.0, 0.5, 1.0):
        yv = y0 + frac * (y1 - y0)
        _, py = to_px(x0, yv)
        out.append(f'<text x="{left - 4}" y="{py + 4:.1f}" text-anchor="end">{_fmt(yv)}</text>')
        xv = x0 + frac * (x1 - x0)
        px, _ = to_px(xv, y0)
        out.append(f'<text x="{px:.1f}" y="{top + ph + 14}" text-anchor="middle">{_fmt(xv)}</text>')
    for k, s in enumerate(series):
        colour = COLOURS[k % len(COLOURS)]
        pts = " ".join("{:.2f},{:.2f}".format(*to_px(x, y)) for x, y in zip(s.xs, s.ys))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="1.5"/>')
        ly = top + 14 + 14 * k
        out.append(f'<line x1="{left + pw - 60}" y1="{ly - 4}" x2="{left + pw - 44}" y2="{ly - 4}" stroke="{colour}"/>')
        out.append(f'<text x="{left + pw - 40}" y="{ly}">{escape(s.label)}</text>')
    return out


def render_svg(panels: list[tuple[str, list[Series]]], x_label: str = "n") -> str:
    """Side-by-side panels, each a list of labelled polylines."""
    body = []
    for k, (title, series) in enumerate(panels):
        body.extend(_panel(series, title, x_label, k * WIDTH))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH * len(panels)}" height="{HEIGHT}" '
        'font-family="sans-serif" font-size="11">\n' + "\n".join(body) + "\n</svg>\n"
    )


def sweep_figure(rows) -> str:
    ns = tuple(float(r.n) for r in rows)

    def col(attr: str) -> tuple[float, ...]:
        return tuple(getattr(r, attr) for r in rows)

    return render_svg(
        [
            (
                "C, V, P after the eraser",
                [Series("C", ns, col("concurrence")), Series("V", ns, col("visibility")),
                 Series("P", ns, col("predictability"))],
            ),
            (
                "change of distinguishability",
                [Series("dD_F", ns, col("delta_D_F")), Series("dD_R", ns, col("delta_D_R")),
                 Series("dD_T", ns, col("delta_D_T"))],
            ),
        ]
    )
