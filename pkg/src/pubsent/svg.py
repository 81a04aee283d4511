"""Hand-written SVG 1.1 charts with a fixed view box.

Coordinates are written with two decimals so output is byte-stable.
"""

import math
from xml.sax.saxutils import escape

__all__ = ["WIDTH", "HEIGHT", "MARGIN", "x_position", "y_position", "interval_chart", "histogram_chart"]

WIDTH = 800
HEIGHT = 420
MARGIN = {"left": 70, "right": 20, "top": 40, "bottom": 80}
MARKER_SIZE = 8.0
TICKS = 5


def _plot_box():
    x0 = MARGIN["left"]
    y0 = MARGIN["top"]
    return x0, y0, WIDTH - MARGIN["right"] - x0, HEIGHT - MARGIN["bottom"] - y0


def x_position(ordinal, n):
    """Horizontal center of the ``ordinal``-th of ``n`` slots."""
    x0, _, w, _ = _plot_box()
    return x0 + (ordinal + 0.5) * w / n


def y_position(value, lo, hi):
    _, y0, _, h = _plot_box()
    return y0 + h * (1.0 - (value - lo) / (hi - lo))


def _f(v):
    return f"{v:.2f}"


def _header(title):
    return [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect class="background" x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text class="title" x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(title)}</text>',
    ]


def _axes(lo, hi, y_label):
    x0, y0, w, h = _plot_box()
    out = [
        f'<line class="axis" x1="{_f(x0)}" y1="{_f(y0 + h)}" x2="{_f(x0 + w)}" y2="{_f(y0 + h)}" stroke="black"/>',
        f'<line class="axis" x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x0)}" y2="{_f(y0 + h)}" stroke="black"/>',
    ]
    for i in range(TICKS + 1):
        v = lo + (hi - lo) * i / TICKS
        y = y_position(v, lo, hi)
        out.append(f'<line class="tick" x1="{_f(x0 - 5)}" y1="{_f(y)}" x2="{_f(x0)}" y2="{_f(y)}" stroke="black"/>')
        out.append(
            f'<text class="tick-label" x="{_f(x0 - 8)}" y="{_f(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{v:.4g}</text>'
        )
    cy = y0 + h / 2
    out.append(
        f'<text class="axis-label" x="16" y="{_f(cy)}" transform="rotate(-90 16 {_f(cy)})" '
        f'text-anchor="middle" font-family="sans-serif" font-size="12">{escape(y_label)}</text>'
    )
    return out


def _value_range(lows, highs):
    lo = min(lows)
    hi = max(highs)
    pad = 0.05 * (hi - lo) if hi > lo else max(abs(hi), 1.0) * 0.05
    lo = lo - pad if lo < 0 else max(0.0, lo - pad)
    return lo, hi + pad


def interval_chart(labels, means, lows, highs, title="", y_label="", value_range=None):
    """Mean markers with credible-interval bars, one slot per label.

    Each slot gets a vertical ``line.ci-bar`` from low to high with short
    caps, and a square ``rect.mean-marker`` centered on the mean.
    """
    n = len(labels)
    if not (n == len(means) == len(lows) == len(highs)) or n == 0:
        raise ValueError("labels, means, lows and highs must be non-empty and equally long")
    lo, hi = value_range or _value_range(lows, highs)
    _, y0, _, h = _plot_box()
    out = _header(title) + _axes(lo, hi, y_label)
    half = MARKER_SIZE / 2
    for i, (label, m, l, u) in enumerate(zip(labels, means, lows, highs)):
        x = x_position(i, n)
        yl, yu, ym = y_position(l, lo, hi), y_position(u, lo, hi), y_position(m, lo, hi)
        out.append(f'<line class="ci-bar" x1="{_f(x)}" y1="{_f(yl)}" x2="{_f(x)}" y2="{_f(yu)}" stroke="blue" stroke-width="2"/>')
        for yc in (yl, yu):
            out.append(f'<line class="ci-cap" x1="{_f(x - 5)}" y1="{_f(yc)}" x2="{_f(x + 5)}" y2="{_f(yc)}" stroke="blue" stroke-width="2"/>')
        out.append(
            f'<rect class="mean-marker" x="{_f(x - half)}" y="{_f(ym - half)}" '
            f'width="{_f(MARKER_SIZE)}" height="{_f(MARKER_SIZE)}" fill="red"/>'
        )
        ty = y0 + h + 14
        out.append(
            f'<text class="bucket-label" x="{_f(x)}" y="{_f(ty)}" text-anchor="end" '
            f'transform="rotate(-45 {_f(x)} {_f(ty)})" font-family="sans-serif" font-size="11">'
            f"{escape(str(label))}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def histogram_chart(histogram, title="", x_label=""):
    """Bars for the finite bins of a ``(lower, upper, count)`` table.

    Open-ended overflow/underflow bins are not drawn; their counts are
    written as a note under the axis.
    """
    finite = [b for b in histogram if math.isfinite(b[0]) and math.isfinite(b[1])]
    tails = [b for b in histogram if not (math.isfinite(b[0]) and math.isfinite(b[1]))]
    if not finite:
        raise ValueError("histogram has no finite bins")
    top = max(c for _, _, c in finite) or 1
    x0, y0, w, h = _plot_box()
    out = _header(title) + _axes(0.0, float(top), "count")
    lo, hi = finite[0][0], finite[-1][1]
    span = hi - lo
    for b_lo, b_hi, count in finite:
        bx = x0 + w * (b_lo - lo) / span
        bw = w * (b_hi - b_lo) / span
        by = y_position(count, 0.0, float(top))
        out.append(
            f'<rect class="bin" x="{_f(bx)}" y="{_f(by)}" width="{_f(bw)}" '
            f'height="{_f(y0 + h - by)}" fill="steelblue" stroke="white" stroke-width="0.5"/>'
        )
    for v, anchor, xx in ((lo, "start", x0), (hi, "end", x0 + w)):
        out.append(
            f'<text class="x-tick-label" x="{_f(xx)}" y="{_f(y0 + h + 16)}" text-anchor="{anchor}" '
            f'font-family="sans-serif" font-size="11">{v:.4g}</text>'
        )
    out.append(
        f'<text class="axis-label" x="{_f(x0 + w / 2)}" y="{_f(y0 + h + 36)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(x_label)}</text>'
    )
    for b_lo, b_hi, count in tails:
        edge = f"&gt; {b_lo:.4g}" if math.isinf(b_hi) else f"&lt; {b_hi:.4g}"
        out.append(
            f'<text class="tail-note" x="{_f(x0 + w)}" y="{_f(y0 + h + 56)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{count} values {edge} not shown</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
