"""Deterministic SVG scatter plots (fixed 800x600 viewBox, radius-2 points)."""

from __future__ import annotations

WIDTH = 800
HEIGHT = 600
MARGIN = 60


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def scatter_svg(points, *, title: str = "") -> str:
    """Render (x, y) pairs as an SVG scatter; y may be int, float or Fraction.

    Output is byte-deterministic for a fixed point list: coordinates are
    formatted with two decimals and points keep their input order.
    """
    pts = [(int(x), float(y)) for x, y in points]
    if pts:
        x_lo = min(x for x, _ in pts)
        x_hi = max(x for x, _ in pts)
        y_lo = min(y for _, y in pts)
        y_hi = max(y for _, y in pts)
    else:
        x_lo, x_hi, y_lo, y_hi = 0, 1, 0.0, 1.0
    if x_lo == x_hi:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5

    span_x = x_hi - x_lo
    span_y = y_hi - y_lo
    inner_w = WIDTH - 2 * MARGIN
    inner_h = HEIGHT - 2 * MARGIN

    def sx(x) -> str:
        return _fmt(MARGIN + (x - x_lo) / span_x * inner_w)

    def sy(y) -> str:
        return _fmt(HEIGHT - MARGIN - (y - y_lo) / span_y * inner_h)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black" stroke-width="1"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black" stroke-width="1"/>',
    ]
    if title:
        lines.append(
            f'<text x="{WIDTH // 2}" y="30" text-anchor="middle" '
            f'font-family="monospace" font-size="14">{title}</text>'
        )
    lines.append(
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 20}" font-family="monospace" '
        f'font-size="11">{x_lo}</text>'
    )
    lines.append(
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 20}" text-anchor="end" '
        f'font-family="monospace" font-size="11">{x_hi}</text>'
    )
    lines.append(
        f'<text x="{MARGIN - 8}" y="{HEIGHT - MARGIN}" text-anchor="end" '
        f'font-family="monospace" font-size="11">{_fmt(y_lo)}</text>'
    )
    lines.append(
        f'<text x="{MARGIN - 8}" y="{MARGIN + 4}" text-anchor="end" '
        f'font-family="monospace" font-size="11">{_fmt(y_hi)}</text>'
    )
    for x, y in pts:
        lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="2" fill="steelblue"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
