"""Static SVG frames showing how the class rotation acts on a graph.

Each frame draws the order-n polygon with the graph's edges colored per
jump. Vertices in class 0 (multiples of m) sit at their original corners
in every frame; each other vertex x is drawn at corner theta(x), i.e.
displaced by (x mod m)*t*m positions along the circle. Frames whose image
is circulant in form carry its jump set in the caption.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable

from .modarith import check_canonical
from .type2 import ThetaParams, theta_point, theta_set

_SIZE = 640
_RADIUS = 260
_CENTER = _SIZE / 2
_PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#b7950b", "#7d3c98",
            "#a04000", "#148f77", "#b03a2e", "#5d6d7e", "#76448a")


def corner_xy(n: int, i: int) -> tuple[float, float]:
    """Corner i of the regular n-gon, v0 on top, labels clockwise."""
    angle = -math.pi / 2 + 2 * math.pi * (i % n) / n
    return (_CENTER + _RADIUS * math.cos(angle),
            _CENTER + _RADIUS * math.sin(angle))


def frame_svg(n: int, jumps: Iterable[int], m: int, t: int) -> str:
    """One frame as SVG text; deterministic and diffable."""
    r = check_canonical(n, jumps)
    params = ThetaParams(n, m, t)
    pos = {x: corner_xy(n, theta_point(params, x)) for x in range(n)}
    color = {j: _PALETTE[i % len(_PALETTE)] for i, j in enumerate(r)}

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE + 40}" viewBox="0 0 {_SIZE} {_SIZE + 40}">',
        f'  <rect width="{_SIZE}" height="{_SIZE + 40}" fill="white"/>',
    ]
    for i in range(n):
        cx, cy = corner_xy(n, i)
        out.append(f'  <circle cx="{cx:.2f}" cy="{cy:.2f}" r="2" fill="#d5d8dc"/>')
    for x in range(n):
        for j in r:
            y = (x + j) % n
            if x < y:
                (x1, y1), (x2, y2) = pos[x], pos[y]
                out.append(f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
                           f'y2="{y2:.2f}" stroke="{color[j]}" stroke-width="1"/>')
    for x in range(n):
        cx, cy = pos[x]
        fill = "#17202a" if x % m == 0 else "#e74c3c"
        out.append(f'  <circle id="v{x}" cx="{cx:.2f}" cy="{cy:.2f}" r="5" fill="{fill}"/>')
        lx = _CENTER + (cx - _CENTER) * 1.07
        ly = _CENTER + (cy - _CENTER) * 1.07
        out.append(f'  <text x="{lx:.2f}" y="{ly:.2f}" font-size="10" '
                   f'text-anchor="middle">v{x}</text>')

    image = theta_set(params, r)
    verdict = ("circulant: " + ",".join(map(str, image))) if image else "not circulant"
    label = f'C_{n}({",".join(map(str, r))})  m={m} t={t}  {verdict}'
    out.append(f'  <text x="{_CENTER}" y="{_SIZE + 24}" font-size="16" '
               f'text-anchor="middle">{label}</text>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def render_frames(n: int, jumps: Iterable[int], m: int, t_from: int, t_to: int,
                  out_dir) -> list[Path]:
    """Write one SVG per t in [t_from, t_to]; filenames zero-padded by t."""
    r = check_canonical(n, jumps)
    if not 0 <= t_from <= t_to <= n // m - 1:
        raise ValueError(f"t range [{t_from}, {t_to}] invalid for n/m = {n // m}")
    d = Path(out_dir)
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create frame directory {d}: {exc}") from exc
    width = len(str(n // m - 1))
    paths = []
    for t in range(t_from, t_to + 1):
        path = d / f"frame_t{t:0{width}d}.svg"
        try:
            path.write_text(frame_svg(n, r, m, t))
        except OSError as exc:
            raise OSError(f"cannot write frame {path}: {exc}") from exc
        paths.append(path)
    return paths
