"""SVG pictures of a disk mapped through an analytic function.

Concentric circles and radial segments of the disk ``|z| < radius`` are
pushed through ``f`` and drawn as polylines.  The output is plain SVG 1.1
text with fixed number formatting, so the same spec always yields the same
bytes.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import DomainError

__all__ = ["PlotSpec", "mapped_curves", "render_svg", "write_svg", "parse_polylines"]

_SIZE = 512
_PAD = 0.05


@dataclass(frozen=True)
class PlotSpec:
    """What to draw.  ``f`` needs a ``__call__`` on complex arrays."""

    f: object
    radius: float = 1.0
    n_circles: int = 8
    n_rays: int = 16
    samples: int = 512
    title: str = ""

    def __post_init__(self):
        if not 0.0 < self.radius <= 1.0:
            raise DomainError(f"radius must lie in (0, 1], got {self.radius}")
        if self.n_circles < 2 or self.n_rays < 2:
            raise DomainError("need at least 2 circles and 2 rays")
        if self.samples < 2:
            raise DomainError("need at least 2 samples per curve")


def mapped_curves(spec: PlotSpec) -> list:
    """Images of the circles then the rays, each an array of complex points."""
    n = spec.samples
    out = []
    theta = 2.0 * np.pi * np.arange(n + 1) / n  # closed loop
    for j in range(1, spec.n_circles + 1):
        r = spec.radius * j / spec.n_circles
        out.append(np.asarray(spec.f(r * np.exp(1j * theta)), dtype=complex))
    t = spec.radius * np.arange(n) / (n - 1)
    for k in range(spec.n_rays):
        ang = 2.0 * math.pi * k / spec.n_rays
        out.append(np.asarray(spec.f(t * complex(math.cos(ang), math.sin(ang))), dtype=complex))
    return out


def _fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def render_svg(spec: PlotSpec) -> str:
    curves = mapped_curves(spec)
    pts = np.concatenate(curves)
    if not np.all(np.isfinite(pts)):
        raise DomainError("the mapped curves contain non-finite points")
    xs, ys = pts.real, -pts.imag  # SVG y axis points down
    x0, x1, y0, y1 = xs.min(), xs.max(), ys.min(), ys.max()
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = _PAD * span
    vb = (x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    stroke = _fmt(span / 400.0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="{" ".join(_fmt(v) for v in vb)}">',
    ]
    if spec.title:
        lines.append(f"<title>{_escape(spec.title)}</title>")
    lines.append(f'<g fill="none" stroke="black" stroke-width="{stroke}">')
    for i, c in enumerate(curves):
        kind = "circle" if i < spec.n_circles else "ray"
        coords = " ".join(f"{_fmt(p.real)},{_fmt(-p.imag)}" for p in c)
        lines.append(f'<polyline class="{kind}" points="{coords}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def write_svg(spec: PlotSpec, path) -> Path:
    path = Path(path)
    path.write_text(render_svg(spec), encoding="utf-8")
    return path


def parse_polylines(svg: str, kind: Optional[str] = None) -> list:
    """Read back polyline vertices as complex arrays (y un-flipped)."""
    out = []
    for m in re.finditer(r'<polyline class="(\w+)" points="([^"]*)"/>', svg):
        if kind is not None and m.group(1) != kind:
            continue
        xy = np.array([[float(v) for v in pair.split(",")] for pair in m.group(2).split()])
        out.append(xy[:, 0] - 1j * xy[:, 1])
    return out
