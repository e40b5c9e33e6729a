"""Standalone SVG charts for the report bundle.

Charts are assembled as strings with every coordinate printed to two decimals,
so the same inputs always give the same bytes.
"""

from collections.abc import Mapping, Sequence

BG = "#ffffff"
FG = "#222222"
GRID = "#dddddd"
MUTED = "#777777"
SERIES_COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"]
DIAGONAL_COLOR = "#2ca02c"

FONT = 'font-family="Helvetica, Arial, sans-serif"'


def _escape(text: str) -> str:
    """Escape XML special characters."""
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _f(x: float) -> str:
    return f"{x:.2f}"


def _open(width: int, height: int, title: str) -> list[str]:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="{BG}"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_f(width / 2)}" y="24" text-anchor="middle" fill="{FG}" '
            f'font-size="15" font-weight="600" {FONT}>{_escape(title)}</text>'
        )
    return parts


def _close(parts: list[str]) -> str:
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _legend(parts: list[str], names: Sequence[str], x0: float, y: float) -> None:
    for si, name in enumerate(names):
        x = x0 + si * 160
        color = SERIES_COLORS[si % len(SERIES_COLORS)]
        parts.append(f'<rect x="{_f(x)}" y="{_f(y - 10)}" width="12" height="12" fill="{color}"/>')
        parts.append(
            f'<text x="{_f(x + 17)}" y="{_f(y)}" fill="{FG}" font-size="12" {FONT}>{_escape(name)}</text>'
        )


def weights_bar_chart(
    criteria: Sequence[str],
    series: Mapping[str, Sequence[float]],
    *,
    title: str = "Criterion weights",
    width: int = 760,
    height: int = 400,
) -> str:
    """Grouped bars: one group per criterion, one bar per weighting method."""
    names = list(series)
    n_series = max(len(names), 1)
    margin_l, margin_r, margin_t, margin_b = 60, 20, 44, 90
    chart_w = width - margin_l - margin_r
    chart_h = height - margin_t - margin_b
    all_values = [v for values in series.values() for v in values]
    max_val = max(all_values, default=0.0)
    if max_val <= 0:
        max_val = 1.0

    parts = _open(width, height, title)

    n_ticks = 5
    for i in range(n_ticks + 1):
        val = max_val * i / n_ticks
        y = margin_t + chart_h - chart_h * i / n_ticks
        parts.append(
            f'<line x1="{margin_l}" y1="{_f(y)}" x2="{margin_l + chart_w}" y2="{_f(y)}" '
            f'stroke="{GRID}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin_l - 6}" y="{_f(y + 4)}" text-anchor="end" fill="{MUTED}" '
            f'font-size="10" {FONT}>{val:.3f}</text>'
        )

    group_w = chart_w / max(len(criteria), 1)
    pad = 4.0
    bar_w = max(4.0, (group_w - pad * (n_series + 1)) / n_series)
    for gi, criterion in enumerate(criteria):
        gx = margin_l + gi * group_w
        for si, name in enumerate(names):
            val = series[name][gi]
            bar_h = val / max_val * chart_h
            bx = gx + pad + si * (bar_w + pad)
            by = margin_t + chart_h - bar_h
            color = SERIES_COLORS[si % len(SERIES_COLORS)]
            parts.append(
                f'<rect class="bar" x="{_f(bx)}" y="{_f(by)}" width="{_f(bar_w)}" height="{_f(bar_h)}" '
                f'fill="{color}"><title>{_escape(criterion)} / {_escape(name)}: {val:.6f}</title></rect>'
            )
        parts.append(
            f'<text x="{_f(gx + group_w / 2)}" y="{_f(margin_t + chart_h + 16)}" text-anchor="middle" '
            f'fill="{FG}" font-size="11" {FONT}>{_escape(criterion)}</text>'
        )

    _legend(parts, names, margin_l, height - 16)
    return _close(parts)


def rank_scatter_chart(
    labels: Sequence[str],
    ranks_a: Sequence[int],
    ranks_b: Sequence[int],
    name_a: str,
    name_b: str,
    *,
    title: str = "Rank agreement",
    size: int = 480,
) -> str:
    """One point per alternative at (rank under A, rank under B).

    Points on the diagonal (equal ranks) are marked ``on-diagonal``.
    """
    m = len(labels)
    margin = 56
    plot = size - 2 * margin
    step = plot / max(m - 1, 1)

    def px(rank: int) -> float:
        return margin + (rank - 1) * step

    def py(rank: int) -> float:
        return size - margin - (rank - 1) * step

    parts = _open(size, size, title)
    parts.append(
        f'<rect x="{margin}" y="{margin}" width="{_f(plot)}" height="{_f(plot)}" '
        f'fill="none" stroke="{GRID}" stroke-width="1"/>'
    )
    parts.append(
        f'<line class="diagonal" x1="{_f(px(1))}" y1="{_f(py(1))}" x2="{_f(px(m))}" y2="{_f(py(m))}" '
        f'stroke="{GRID}" stroke-width="1" stroke-dasharray="4 3"/>'
    )
    parts.append(
        f'<text x="{_f(size / 2)}" y="{size - 14}" text-anchor="middle" fill="{FG}" '
        f'font-size="12" {FONT}>{_escape(name_a)} rank</text>'
    )
    parts.append(
        f'<text x="16" y="{_f(size / 2)}" text-anchor="middle" fill="{FG}" font-size="12" {FONT} '
        f'transform="rotate(-90 16 {_f(size / 2)})">{_escape(name_b)} rank</text>'
    )
    for rank in sorted({1, m}):
        parts.append(
            f'<text x="{_f(px(rank))}" y="{size - margin + 16}" text-anchor="middle" fill="{MUTED}" '
            f'font-size="10" {FONT}>{rank}</text>'
        )
        parts.append(
            f'<text x="{margin - 8}" y="{_f(py(rank) + 4)}" text-anchor="end" fill="{MUTED}" '
            f'font-size="10" {FONT}>{rank}</text>'
        )

    for label, ra, rb in zip(labels, ranks_a, ranks_b):
        on_diag = ra == rb
        cls = "point on-diagonal" if on_diag else "point"
        color = DIAGONAL_COLOR if on_diag else SERIES_COLORS[0]
        parts.append(
            f'<circle class="{cls}" cx="{_f(px(ra))}" cy="{_f(py(rb))}" r="4" fill="{color}">'
            f"<title>{_escape(label)}: {ra} / {rb}</title></circle>"
        )
    return _close(parts)


def rank_pairs_chart(
    labels: Sequence[str],
    ranks_a: Sequence[int],
    ranks_b: Sequence[int],
    name_a: str,
    name_b: str,
    *,
    title: str = "Rank per alternative",
    height: int = 400,
) -> str:
    """Per-alternative paired bars of both methods' ranks (shorter is better)."""
    m = len(labels)
    margin_l, margin_r, margin_t, margin_b = 50, 20, 44, 80
    group_w = 26.0
    width = int(margin_l + margin_r + group_w * m)
    chart_h = height - margin_t - margin_b
    bar_w = (group_w - 6) / 2

    parts = _open(width, height, title)
    for i in range(5):
        rank = 1 + (m - 1) * i / 4
        y = margin_t + chart_h - chart_h * rank / m
        parts.append(
            f'<line x1="{margin_l}" y1="{_f(y)}" x2="{width - margin_r}" y2="{_f(y)}" '
            f'stroke="{GRID}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin_l - 6}" y="{_f(y + 4)}" text-anchor="end" fill="{MUTED}" '
            f'font-size="10" {FONT}>{rank:.0f}</text>'
        )

    for i, (label, ra, rb) in enumerate(zip(labels, ranks_a, ranks_b)):
        gx = margin_l + i * group_w
        for si, rank in enumerate((ra, rb)):
            bar_h = chart_h * rank / m
            bx = gx + 2 + si * (bar_w + 2)
            color = SERIES_COLORS[si]
            parts.append(
                f'<rect class="bar" x="{_f(bx)}" y="{_f(margin_t + chart_h - bar_h)}" width="{_f(bar_w)}" '
                f'height="{_f(bar_h)}" fill="{color}"><title>{_escape(label)}: {rank}</title></rect>'
            )
        lx = gx + group_w / 2
        ly = margin_t + chart_h + 12
        parts.append(
            f'<text x="{_f(lx)}" y="{_f(ly)}" text-anchor="end" fill="{FG}" font-size="10" {FONT} '
            f'transform="rotate(-60 {_f(lx)} {_f(ly)})">{_escape(label)}</text>'
        )

    _legend(parts, [name_a, name_b], margin_l, height - 14)
    return _close(parts)
