"""Minimal self-contained SVG line plots for the CLI figure commands."""

import numpy as np

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")

_WIDTH, _HEIGHT = 860, 520
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 30, 40, 50


def line_plot_svg(x: np.ndarray, series: dict[str, np.ndarray], title: str = "") -> str:
    """Render one polyline per named series over a shared x axis."""
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise ValueError("need at least two points to plot")
    ys = {name: np.asarray(v, dtype=float) for name, v in series.items()}
    if not ys:
        raise ValueError("need at least one series")
    y_all = np.concatenate(list(ys.values()))
    y_lo, y_hi = float(np.min(y_all)), float(np.max(y_all))
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    x_lo, x_hi = float(x[0]), float(x[-1])

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(xv):
        return _MARGIN_L + (xv - x_lo) / (x_hi - x_lo) * plot_w

    def py(yv):
        return _MARGIN_T + (y_hi - yv) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="#444" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH / 2}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{title}</text>'
        )
    # axis extents
    labels = [
        (px(x_lo), _HEIGHT - _MARGIN_B + 18, "start", f"{x_lo:.4g}"),
        (px(x_hi), _HEIGHT - _MARGIN_B + 18, "end", f"{x_hi:.4g}"),
        (_MARGIN_L - 6, py(y_lo) + 4, "end", f"{y_lo:.4g}"),
        (_MARGIN_L - 6, py(y_hi) + 4, "end", f"{y_hi:.4g}"),
    ]
    for lx, ly, anchor, text in labels:
        parts.append(
            f'<text x="{lx:.1f}" y="{ly:.1f}" text-anchor="{anchor}" '
            f'font-family="sans-serif" font-size="12">{text}</text>'
        )
    for i, (name, y) in enumerate(ys.items()):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{px(xv):.2f},{py(yv):.2f}" for xv, yv in zip(x, y))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        ly = _MARGIN_T + 18 + 18 * i
        lx = _WIDTH - _MARGIN_R - 150
        parts.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 24}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 30}" y="{ly}" font-family="sans-serif" '
            f'font-size="13">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
