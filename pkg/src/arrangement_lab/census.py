"""Arrangement-level aggregates: censuses, average diameter, face statistics.

Everything here is an exact rational or an integer count; decimal displays
are attached only at serialization time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import (
    Arrangement,
    enumerate_bounded_cells,
    enumerate_bounded_facets,
    enumerate_edges,
    enumerate_vertices,
    require_simple,
)
from .cells import (
    CellClass,
    CellRecord,
    build_cell_records,
    cell_diameter,
    cube,
    polygon,
    simplex,
    simplex_product,
    skeletons_for_cells,
)
from .errors import UnsupportedDimensionError


@dataclass
class CensusReport:
    dim: int
    n: int
    vertex_count: int
    cell_count: int
    class_counts: dict[CellClass, int]
    delta: Fraction
    f_bounded: Optional[int]
    f_external: Optional[int]
    p_odd: Optional[int]
    records: list[CellRecord]
    metadata: dict = field(default_factory=dict)


def _enumerate(arr: Arrangement):
    vertices = enumerate_vertices(arr)
    edges = enumerate_edges(arr, vertices)
    cells = enumerate_bounded_cells(arr, vertices, edges)
    return vertices, edges, cells


def average_diameter(arr: Arrangement) -> Fraction:
    """Exact mean of bounded-cell diameters."""
    _, edges, cells = _enumerate(arr)
    total = sum(cell_diameter(adj) for adj in skeletons_for_cells(cells, edges, arr.dim))
    return Fraction(total, len(cells))


def census(arr: Arrangement, metadata: Optional[dict] = None) -> CensusReport:
    """Full aggregate over the bounded cells of a simple arrangement."""
    require_simple(arr)
    vertices, edges, cells = _enumerate(arr)
    records = build_cell_records(arr, vertices, edges, cells)
    counts = Counter(rec.cell_class for rec in records)
    delta = Fraction(sum(rec.diameter for rec in records), len(records))

    bounded_sigs = {cell.signature for cell in cells}
    f_bounded = f_external = p_odd = None
    if arr.dim == 2:
        segments = [e for e in edges if e.is_segment]
        f_bounded = len(segments)
        f_external = _external_2d(segments, bounded_sigs)
        p_odd = sum(1 for rec in records if rec.vertex_count % 2 == 1)
    elif arr.dim == 3:
        facets = enumerate_bounded_facets(arr)
        f_bounded = len(facets)
        f_external = sum(
            1 for rec in facets
            if sum(sig in bounded_sigs for sig in rec.incident) == 1
        )

    return CensusReport(
        dim=arr.dim,
        n=arr.n,
        vertex_count=len(vertices),
        cell_count=len(records),
        class_counts=dict(counts),
        delta=delta,
        f_bounded=f_bounded,
        f_external=f_external,
        p_odd=p_odd,
        records=records,
        metadata=metadata or {},
    )


def _external_2d(segments, bounded_sigs) -> int:
    count = 0
    for edge in segments:
        line = edge.line_set[0]
        incident = 0
        for s in (-1, 1):
            sig = list(edge.sign_vector)
            sig[line] = s
            if tuple(sig) in bounded_sigs:
                incident += 1
        if incident == 1:
            count += 1
    return count


def external_face_count(arr: Arrangement) -> int:
    """Bounded (d-1)-faces incident to exactly one bounded cell."""
    if arr.dim not in (2, 3):
        raise UnsupportedDimensionError("external faces are defined for d in {2, 3}")
    require_simple(arr)
    _, edges, cells = _enumerate(arr)
    bounded_sigs = {cell.signature for cell in cells}
    if arr.dim == 2:
        return _external_2d([e for e in edges if e.is_segment], bounded_sigs)
    facets = enumerate_bounded_facets(arr)
    return sum(
        1 for rec in facets if sum(sig in bounded_sigs for sig in rec.incident) == 1
    )


def p_odd_count(arr: Arrangement) -> int:
    """Bounded cells with an odd number of edges (equivalently vertices)."""
    if arr.dim != 2:
        raise UnsupportedDimensionError("odd-cell counting is defined for d = 2")
    require_simple(arr)
    _, edges, cells = _enumerate(arr)
    return sum(1 for cell in cells if len(cell.vertex_ids) % 2 == 1)


# ---------------------------------------------------------------------------
# class-count views; in dimension 2 every cell is a polygon, so the square
# plays the role of both the 2-cube and the prism over a 1-simplex
# ---------------------------------------------------------------------------

def class_count(report: CensusReport, cls: CellClass) -> int:
    return report.class_counts.get(cls, 0)


def simplex_count(report: CensusReport) -> int:
    if report.dim == 2:
        return class_count(report, polygon(3))
    return class_count(report, simplex(report.dim))


def cube_count(report: CensusReport) -> int:
    if report.dim == 2:
        return class_count(report, polygon(4))
    return class_count(report, cube(report.dim))


def prism_count(report: CensusReport) -> int:
    if report.dim == 2:
        return class_count(report, polygon(4))
    return class_count(report, simplex_product(1, report.dim - 1))
