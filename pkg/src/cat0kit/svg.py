"""SVG drawings of disk diagrams via a Tutte embedding."""
from __future__ import annotations

import math
from typing import Callable
from xml.sax.saxutils import escape

import numpy as np

from .disks import DiskDiagram, validate_disk
from .errors import SingularDisk

SIZE = 400
RADIUS = 170


def tutte_layout(D: DiskDiagram) -> dict[int, tuple[float, float]]:
    """Boundary on a circle, each interior vertex at the mean of its neighbours."""
    walk = D.boundary[:-1]
    centre = SIZE / 2
    pos: dict[int, tuple[float, float]] = {}
    for k, v in enumerate(walk):
        angle = 2 * math.pi * k / len(walk) - math.pi / 2
        pos[v] = (centre + RADIUS * math.cos(angle), centre + RADIUS * math.sin(angle))
    inner = list(D.interior_vertices)
    if inner:
        index = {v: i for i, v in enumerate(inner)}
        A = np.zeros((len(inner), len(inner)))
        b = np.zeros((len(inner), 2))
        for v in inner:
            i = index[v]
            for w in D.neighbors[v]:
                A[i, i] += 1
                if w in index:
                    A[i, index[w]] -= 1
                else:
                    b[i] += pos[w]
        xy = np.linalg.solve(A, b)
        for v in inner:
            pos[v] = (float(xy[index[v], 0]), float(xy[index[v], 1]))
    return pos


def export_disk_svg(D: DiskDiagram, name: Callable[[int], str] = str) -> str:
    """Deterministic SVG text for a nonsingular disk; ``name`` renders labels."""
    if not validate_disk(D).nonsingular:
        raise SingularDisk("only nonsingular disks can be drawn")
    pos = tutte_layout(D)

    def pt(v: int) -> str:
        x, y = pos[v]
        return f"{x:.2f},{y:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        '<g class="faces" fill="#dde8f5" stroke="#555" stroke-width="1">',
    ]
    for t in D.triangles:
        out.append(f'<polygon points="{" ".join(pt(v) for v in t)}"/>')
    out.append("</g>")
    out.append(
        f'<polygon class="boundary" fill="none" stroke="#c0392b" stroke-width="3" '
        f'points="{" ".join(pt(v) for v in D.boundary[:-1])}"/>'
    )
    out.append('<g class="vertices" font-family="sans-serif" font-size="12">')
    for v in range(D.n_vertices):
        x, y = pos[v]
        kind = "interior" if v in D.interior_vertices else "boundary"
        fill = "#2c3e50" if kind == "interior" else "#c0392b"
        out.append(f'<circle class="{kind}" cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{fill}"/>')
        out.append(f'<text x="{x + 6:.2f}" y="{y - 6:.2f}">{escape(name(D.labels[v]))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
