"""Static SVG rendering of a four-circle configuration.

Draws the unit circle, the four tangent circles, the six chords (labeled
d_ij), the six exterior bitangent segments (labeled t_ij), and the six
hyperbolic geodesics between tangency points as circular arcs orthogonal to
the unit circle.  Output is deterministic: fixed element order and fixed
6-decimal coordinate formatting, so golden-file comparisons are stable.
"""

from __future__ import annotations

import math

from .measurements import ConcyclicConfig, euclidean_center
from .relations import PAIRS

# Unit circle maps to a 1000x1000 viewport: radius 480 px centered at
# (500, 500), y axis flipped to mathematical orientation.
VIEW = 1000.0
SCALE = 480.0
CENTER = 500.0

# Geodesics between nearly antipodal boundary points degenerate to diameters.
_DIAMETER_TOL = 1e-12


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _px(p: tuple[float, float]) -> tuple[float, float]:
    return (CENTER + SCALE * p[0], CENTER - SCALE * p[1])


def _circle(center: tuple[float, float], radius: float, cls: str) -> str:
    cx, cy = _px(center)
    return (
        f'<circle class="{cls}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
        f'r="{_fmt(SCALE * radius)}"/>'
    )


def _line(a: tuple[float, float], b: tuple[float, float], cls: str) -> str:
    ax, ay = _px(a)
    bx, by = _px(b)
    return (
        f'<line class="{cls}" x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
        f'x2="{_fmt(bx)}" y2="{_fmt(by)}"/>'
    )


def _label(p: tuple[float, float], text: str) -> str:
    x, y = _px(p)
    return f'<text class="label" x="{_fmt(x)}" y="{_fmt(y)}">{text}</text>'


def bitangent_segment(
    cfg: ConcyclicConfig, i: int, j: int
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Endpoints of the exterior bitangent segment between circles i and j.

    The tangent line has unit normal m with <C_j - C_i, m> = r_j - r_i and
    both circles on the same side; of the two such lines we draw the one
    whose segment midpoint lies farther from the origin (the outer one).
    """
    ci, cj = euclidean_center(cfg, i), euclidean_center(cfg, j)
    ri, rj = cfg.r[i - 1], cfg.r[j - 1]
    dx, dy = cj[0] - ci[0], cj[1] - ci[1]
    c = math.hypot(dx, dy)
    ux, uy = dx / c, dy / c
    cos_psi = (rj - ri) / c
    sin_psi = math.sqrt(max(0.0, 1.0 - cos_psi * cos_psi))
    best = None
    best_dist = -1.0
    for sign in (1.0, -1.0):
        mx = cos_psi * ux - sign * sin_psi * uy
        my = cos_psi * uy + sign * sin_psi * ux
        ti = (ci[0] - ri * mx, ci[1] - ri * my)
        tj = (cj[0] - rj * mx, cj[1] - rj * my)
        mid = math.hypot((ti[0] + tj[0]) / 2.0, (ti[1] + tj[1]) / 2.0)
        if mid > best_dist:
            best_dist = mid
            best = (ti, tj)
    return best


def geodesic_arc_params(theta_i: float, theta_j: float):
    """Center and radius of the circle orthogonal to the unit circle through
    two boundary angles, or None when the geodesic is a diameter.

    The center M solves <A_i, M> = <A_j, M> = 1 (the orthogonality
    condition) and the radius is sqrt(|M|^2 - 1).
    """
    ai = (math.cos(theta_i), math.sin(theta_i))
    aj = (math.cos(theta_j), math.sin(theta_j))
    det = ai[0] * aj[1] - ai[1] * aj[0]
    if abs(det) < _DIAMETER_TOL:
        return None
    mx = (aj[1] - ai[1]) / det
    my = (ai[0] - aj[0]) / det
    radius = math.sqrt(mx * mx + my * my - 1.0)
    return (mx, my), radius


def _geodesic_element(theta_i: float, theta_j: float) -> str:
    ai = (math.cos(theta_i), math.sin(theta_i))
    aj = (math.cos(theta_j), math.sin(theta_j))
    params = geodesic_arc_params(theta_i, theta_j)
    if params is None:
        return _line(ai, aj, "geodesic")
    (mx, my), radius = params
    # Minor arc; math-counterclockwise becomes sweep 0 after the y flip.
    cross = (ai[0] - mx) * (aj[1] - my) - (ai[1] - my) * (aj[0] - mx)
    sweep = 0 if cross > 0 else 1
    x1, y1 = _px(ai)
    x2, y2 = _px(aj)
    rpx = _fmt(SCALE * radius)
    return (
        f'<path class="geodesic" d="M {_fmt(x1)} {_fmt(y1)} '
        f'A {rpx} {rpx} 0 0 {sweep} {_fmt(x2)} {_fmt(y2)}"/>'
    )


def render_svg(cfg: ConcyclicConfig) -> str:
    """Render a configuration to a complete SVG document."""
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW:.0f}" '
        f'height="{VIEW:.0f}" viewBox="0 0 {VIEW:.0f} {VIEW:.0f}">',
        "<style>"
        "circle,line,path{fill:none;stroke:black;stroke-width:1.5}"
        ".chord{stroke:#0088aa}.bitangent{stroke:#aa00aa}"
        ".geodesic{stroke:#aa6600}"
        ".label{font:20px sans-serif;fill:#333;stroke:none}"
        "</style>",
        _circle((0.0, 0.0), 1.0, "boundary"),
    ]
    for i in range(1, 5):
        parts.append(_circle(euclidean_center(cfg, i), cfg.r[i - 1], "horocycle"))
    tangency = {i: cfg.tangency_point(i) for i in range(1, 5)}
    for i, j in PAIRS:
        ai, aj = tangency[i], tangency[j]
        parts.append(_line(ai, aj, "chord"))
        parts.append(
            _label(((ai[0] + aj[0]) / 2.0, (ai[1] + aj[1]) / 2.0), f"d{i}{j}")
        )
    for i, j in PAIRS:
        ti, tj = bitangent_segment(cfg, i, j)
        parts.append(_line(ti, tj, "bitangent"))
        parts.append(
            _label(((ti[0] + tj[0]) / 2.0, (ti[1] + tj[1]) / 2.0), f"t{i}{j}")
        )
    for i, j in PAIRS:
        parts.append(
            _geodesic_element(2.0 * cfg.alpha[i - 1], 2.0 * cfg.alpha[j - 1])
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
