"""Straight-line layouts and renderers for one-crossing drawings.

Coordinates are cosmetic: the rotation system is the certificate. The layout
pins the largest face of each component on a circle and places the rest at
the barycenter of their neighbours (Tutte-style); degeneracies for graphs of
low connectivity are tolerated.
"""

from __future__ import annotations

import math

import numpy as np

from .characterize import OneDrawing
from .graph import connected_components
from .planarity import RotationSystem

Point = tuple[float, float]


def _outer_face_vertices(rs: RotationSystem, comp: frozenset[int]) -> list[int]:
    best: list[int] = []
    for walk in rs.face_walks():
        if walk[0][0] not in comp:
            continue
        seq = []
        for v, _ in walk:
            if v not in seq:
                seq.append(v)
        if len(seq) > len(best):
            best = seq
    if not best:
        best = sorted(comp)
    return best


def tutte_layout(rs: RotationSystem) -> dict[int, Point]:
    """Barycentric coordinates per component, components offset horizontally."""
    positions: dict[int, Point] = {}
    offset = 0.0
    for comp in connected_components(rs.graph):
        comp_pos = _layout_component(rs, comp)
        for v, (x, y) in comp_pos.items():
            positions[v] = (x + offset, y)
        offset += 2.5
    return positions


def _layout_component(rs: RotationSystem, comp: frozenset[int]) -> dict[int, Point]:
    outer = _outer_face_vertices(rs, comp)
    k = len(outer)
    pinned: dict[int, Point] = {}
    for i, v in enumerate(outer):
        angle = 2 * math.pi * i / max(k, 1)
        pinned[v] = (math.cos(angle), math.sin(angle))
    free = sorted(comp - set(outer))
    if not free:
        return pinned

    index = {v: i for i, v in enumerate(free)}
    a = np.zeros((len(free), len(free)))
    bx = np.zeros(len(free))
    by = np.zeros(len(free))
    for v in free:
        i = index[v]
        nbrs = [rs.graph.other_end(e, v) for e in rs.graph.edges_at(v)]
        if not nbrs:
            a[i, i] = 1.0
            continue
        a[i, i] = float(len(nbrs))
        for w in nbrs:
            if w in pinned:
                bx[i] += pinned[w][0]
                by[i] += pinned[w][1]
            else:
                a[i, index[w]] -= 1.0
    try:
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
    except np.linalg.LinAlgError:
        xs = np.linspace(-0.5, 0.5, len(free))
        ys = np.zeros(len(free))
    out = dict(pinned)
    for v in free:
        out[v] = (float(xs[index[v]]), float(ys[index[v]]))
    return out


def to_dot(drawing: OneDrawing, labels: list[str] | None = None) -> str:
    """DOT text of the planarized graph with the crossing vertex marked."""
    pz = drawing.planarization
    p = pz.pair

    def name(v: int) -> str:
        if v == pz.w:
            return "crossing"
        return labels[v] if labels and v < len(labels) else str(v)

    lines = [
        "graph onedrawing {",
        f'  // crossing pair: edges {p.e} and {p.f}',
        f'  crossing [shape=point, width=0.12, xlabel="e{p.e} x e{p.f}"];',
    ]
    for v in sorted(pz.graph.vertices):
        if v != pz.w:
            lines.append(f'  "{name(v)}";')
    for e, (u, v) in pz.graph.edge_items():
        style = ' [style=dashed]' if e in pz.e_halves + pz.f_halves else ""
        a, b = name(u), name(v)
        qa = a if a == "crossing" else f'"{a}"'
        qb = b if b == "crossing" else f'"{b}"'
        lines.append(f"  {qa} -- {qb}{style};  // edge {e}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(drawing: OneDrawing, labels: list[str] | None = None, size: int = 480) -> str:
    """Straight-line SVG of the drawing; the crossing vertex is drawn as an x."""
    pz = drawing.planarization
    pos = tutte_layout(drawing.rotation)
    xs = [x for x, _ in pos.values()]
    ys = [y for _, y in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    pad = 30.0
    scale = (size - 2 * pad) / span

    def pt(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return (pad + (x - min(xs)) * scale, pad + (y - min(ys)) * scale)

    def name(v: int) -> str:
        return labels[v] if labels and v < len(labels) else str(v)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for e, (u, v) in pz.graph.edge_items():
        (x1, y1), (x2, y2) = pt(u), pt(v)
        colour = "#c02020" if e in pz.e_halves + pz.f_halves else "#333333"
        parts.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'stroke="{colour}" stroke-width="1.5"/>'
        )
    for v in sorted(pz.graph.vertices):
        x, y = pt(v)
        if v == pz.w:
            d = 5.0
            parts.append(
                f'<path d="M {x-d:.1f} {y-d:.1f} L {x+d:.1f} {y+d:.1f} '
                f'M {x-d:.1f} {y+d:.1f} L {x+d:.1f} {y-d:.1f}" '
                'stroke="#c02020" stroke-width="2" fill="none"/>'
            )
        else:
            parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="#1f4e9c"/>')
            parts.append(
                f'<text x="{x+6:.1f}" y="{y-6:.1f}" font-size="11" '
                f'font-family="sans-serif">{name(v)}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
