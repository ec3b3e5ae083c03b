"""Hand-emitted SVG scatter plots of first-zero indices against the prime.

No plotting dependency: output bytes must be identical across runs and
platforms for golden-file comparisons, so the file is assembled from a
fixed template with fixed-precision coordinates.

Marker classes are the contract: every located first zero is a ``circle``
(class ``found``, or ``violation`` when it reached p**deg), and every
prime whose sequence provably never hits zero gets a four-spoke star
``path`` (class ``none``) drawn at height 0.
"""

from __future__ import annotations

from dataclasses import dataclass

WIDTH, HEIGHT = 480, 340
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 54, 16, 34, 42

_STYLE = (
    "circle.found{fill:#2a6fb0;}"
    "circle.violation{fill:#c22f2f;stroke:#7b0d0d;stroke-width:1.5;}"
    "path.none{stroke:#c22f2f;stroke-width:1.6;fill:none;}"
    ".axis{stroke:#333;stroke-width:1;}"
    ".grid{stroke:#ddd;stroke-width:0.5;}"
    "text{font-family:monospace;font-size:11px;fill:#222;}"
    "text.title{font-size:12px;}"
)


@dataclass(frozen=True)
class PlotPoint:
    p: int
    n0: int | None  # None: no zero exists for this prime
    violation: bool = False


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )


def scatter_svg(title: str, points: list[PlotPoint]) -> str:
    """One scatter: x = prime, y = first zero (stars for no-zero primes)."""
    xmax = max([pt.p for pt in points], default=1)
    ymax = max([pt.n0 for pt in points if pt.n0 is not None], default=0)
    xmax = max(xmax, 2)
    ymax = max(ymax, 1)

    inner_w = WIDTH - MARGIN_L - MARGIN_R
    inner_h = HEIGHT - MARGIN_T - MARGIN_B

    def X(p: float) -> float:
        return MARGIN_L + inner_w * p / (xmax * 1.05)

    def Y(n: float) -> float:
        return MARGIN_T + inner_h * (1 - n / (ymax * 1.05))

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<style>{_STYLE}</style>",
        f'<text class="title" x="{MARGIN_L}" y="20">{_esc(title)}</text>',
        # axes
        f'<line class="axis" x1="{MARGIN_L}" y1="{_fmt(Y(0))}" '
        f'x2="{WIDTH - MARGIN_R}" y2="{_fmt(Y(0))}"/>',
        f'<line class="axis" x1="{MARGIN_L}" y1="{MARGIN_T}" '
        f'x2="{MARGIN_L}" y2="{_fmt(Y(0))}"/>',
        f'<text x="{MARGIN_L + inner_w // 2 - 24}" y="{HEIGHT - 8}">prime p</text>',
        f'<text x="8" y="{MARGIN_T - 12}">first zero</text>',
    ]
    # y ticks at 0, half, max
    for val in (0, ymax // 2, ymax):
        y = Y(val)
        lines.append(
            f'<line class="grid" x1="{MARGIN_L}" y1="{_fmt(y)}" '
            f'x2="{WIDTH - MARGIN_R}" y2="{_fmt(y)}"/>'
        )
        lines.append(
            f'<text x="{MARGIN_L - 6}" y="{_fmt(y + 4)}" '
            f'text-anchor="end">{val}</text>'
        )
    # x ticks at the plotted primes
    for pt in sorted(points, key=lambda q: q.p):
        x = X(pt.p)
        lines.append(
            f'<line class="axis" x1="{_fmt(x)}" y1="{_fmt(Y(0))}" '
            f'x2="{_fmt(x)}" y2="{_fmt(Y(0) + 4)}"/>'
        )
        lines.append(
            f'<text x="{_fmt(x)}" y="{_fmt(Y(0) + 16)}" '
            f'text-anchor="middle">{pt.p}</text>'
        )
    for pt in sorted(points, key=lambda q: q.p):
        x = X(pt.p)
        if pt.n0 is None:
            y = Y(0)
            a = 4.2
            d = (
                f"M{_fmt(x - a)} {_fmt(y)}H{_fmt(x + a)}"
                f"M{_fmt(x)} {_fmt(y - a)}V{_fmt(y + a)}"
                f"M{_fmt(x - 3)} {_fmt(y - 3)}L{_fmt(x + 3)} {_fmt(y + 3)}"
                f"M{_fmt(x - 3)} {_fmt(y + 3)}L{_fmt(x + 3)} {_fmt(y - 3)}"
            )
            lines.append(f'<path class="none" d="{d}"/>')
        else:
            cls = "violation" if pt.violation else "found"
            lines.append(
                f'<circle class="{cls}" cx="{_fmt(x)}" '
                f'cy="{_fmt(Y(pt.n0))}" r="3.5"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
