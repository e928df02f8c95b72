"""Static figure exports: SVG for line arrangements, OFF for single 3D cells.

Exports are terminal artifacts, never re-ingested, so this is the one place
exact coordinates are allowed to become decimal text.  All element orders,
colors and number formats are fixed, making output byte-identical for
identical input.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import (
    Arrangement,
    enumerate_bounded_cells,
    enumerate_edges,
    enumerate_vertices,
    require_simple,
)
from .cells import build_cell_records
from .errors import InputError, UnsupportedDimensionError
from .jsonio import signature_str
from .rational import decimal_display

_RAMP_LOW = (255, 255, 204)
_RAMP_HIGH = (177, 0, 38)


def diameter_color(diameter: int, max_diameter: int) -> str:
    t = 0.0 if max_diameter <= 1 else (diameter - 1) / (max_diameter - 1)
    channels = tuple(
        round(lo + (hi - lo) * t) for lo, hi in zip(_RAMP_LOW, _RAMP_HIGH)
    )
    return "#%02x%02x%02x" % channels


def _cycle_order(adj: dict[int, tuple[int, ...]]) -> list[int]:
    """Walk a cycle graph deterministically: start at the smallest vertex,
    step to its smaller neighbour first."""
    start = min(adj)
    order = [start]
    previous, current = None, start
    while True:
        a, b = adj[current]
        nxt = a if a != previous else b
        if nxt == start:
            return order
        order.append(nxt)
        previous, current = current, nxt


def render_svg(arr: Arrangement, width: float = 900.0) -> str:
    """All lines clipped to the padded vertex bounding box, bounded cells
    filled on a diameter color ramp, vertices as dots."""
    if arr.dim != 2:
        raise UnsupportedDimensionError("SVG export requires a 2-dimensional arrangement")
    require_simple(arr)
    vertices = enumerate_vertices(arr)
    edges = enumerate_edges(arr, vertices)
    cells = enumerate_bounded_cells(arr, vertices, edges)
    records = build_cell_records(arr, vertices, edges, cells)

    xs = [v.point[0] for v in vertices]
    ys = [v.point[1] for v in vertices]
    pad_x = (max(xs) - min(xs)) * Fraction(1, 5)
    pad_y = (max(ys) - min(ys)) * Fraction(1, 5)
    x0, x1 = min(xs) - pad_x, max(xs) + pad_x
    y0, y1 = min(ys) - pad_y, max(ys) + pad_y

    scale = width / float(x1 - x0)
    height = float(y1 - y0) * scale

    def to_px(x: Fraction, y: Fraction) -> tuple[float, float]:
        return (float(x - x0) * scale, (float(y1 - y) * scale))

    max_diameter = max(rec.diameter for rec in records)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}">'
    ]
    for rec in records:
        adj = rec.adjacency_dict()
        points = []
        for vid in _cycle_order(adj):
            px, py = to_px(*vertices[vid].point)
            points.append(f"{px:.3f},{py:.3f}")
        parts.append(
            f'<polygon points="{" ".join(points)}" '
            f'fill="{diameter_color(rec.diameter, max_diameter)}" '
            f'stroke="#777777" stroke-width="0.6">'
            f"<title>{signature_str(rec.signature)} diameter {rec.diameter}</title>"
            f"</polygon>"
        )
    for h in arr.hyperplanes:
        clipped = _clip_line(h.a, h.b, x0, x1, y0, y1)
        if clipped is None:
            continue
        (ax, ay), (bx, by) = clipped
        pax, pay = to_px(ax, ay)
        pbx, pby = to_px(bx, by)
        parts.append(
            f'<line x1="{pax:.3f}" y1="{pay:.3f}" x2="{pbx:.3f}" y2="{pby:.3f}" '
            f'stroke="#333333" stroke-width="1.2"/>'
        )
    for v in vertices:
        px, py = to_px(*v.point)
        parts.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="3" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _clip_line(a, b, x0, x1, y0, y1):
    """Intersect the line a.x = b with the rectangle; exact arithmetic."""
    hits = []
    a1, a2 = a
    for x_edge in (x0, x1):
        if a2 != 0:
            y = (b - a1 * x_edge) / a2
            if y0 <= y <= y1:
                hits.append((x_edge, y))
    for y_edge in (y0, y1):
        if a1 != 0:
            x = (b - a2 * y_edge) / a1
            if x0 <= x <= x1:
                hits.append((x, y_edge))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def render_off(arr: Arrangement, signature: tuple[int, ...]) -> str:
    """One bounded cell of a 3D arrangement as OFF text: vertices first,
    facets ordered by hyperplane index with vertices in cyclic order."""
    if arr.dim != 3:
        raise UnsupportedDimensionError("OFF export requires a 3-dimensional arrangement")
    require_simple(arr)
    if len(signature) != arr.n:
        raise InputError(
            f"signature length {len(signature)} does not match n = {arr.n}"
        )
    vertices = enumerate_vertices(arr)
    edges = enumerate_edges(arr, vertices)
    cells = enumerate_bounded_cells(arr, vertices, edges)
    by_signature = {cell.signature: cell for cell in cells}
    cell = by_signature.get(signature)
    if cell is None:
        raise InputError(
            f"{signature_str(signature)} is not a bounded cell of this arrangement"
        )
    records = build_cell_records(arr, vertices, edges, [cell])
    record = records[0]
    adj = record.adjacency_dict()

    local = {vid: i for i, vid in enumerate(cell.vertex_ids)}
    facet_planes = sorted(
        {index for vid in cell.vertex_ids for index in vertices[vid].tight_set}
    )
    facets = []
    for plane in facet_planes:
        members = [vid for vid in cell.vertex_ids if plane in vertices[vid].tight_set]
        member_set = set(members)
        ring_adj = {
            vid: tuple(w for w in adj[vid] if w in member_set) for vid in members
        }
        facets.append([local[vid] for vid in _cycle_order(ring_adj)])

    lines = ["OFF", f"{record.vertex_count} {record.facet_count} {record.edge_count}"]
    for vid in cell.vertex_ids:
        point = vertices[vid].point
        lines.append(" ".join(decimal_display(c) for c in point))
    for facet in facets:
        lines.append(" ".join(str(v) for v in [len(facet)] + facet))
    return "\n".join(lines) + "\n"
