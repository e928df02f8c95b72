"""Simple hyperplane arrangements and exact sign-vector enumeration.

The combinatorics is driven entirely by sign vectors: a vertex is the unique
solution of d tight hyperplanes, an edge lives on the line cut out by d-1
hyperplanes, and a full-dimensional cell is a zero-free sign vector.  A face
belongs to the closure of a cell exactly when its sign vector agrees with the
cell's signature on every coordinate where the face is not tight, so all
incidence questions reduce to completing zeros with +/- and hashing.

Boundedness is decided by ray incidence: a candidate cell is bounded iff no
unbounded edge of the arrangement is compatible with its signature.  No
linear programming and no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Optional

from .errors import (
    DimensionMismatchError,
    InternalConsistencyError,
    NotSimpleError,
    UnsupportedDimensionError,
)
from .rational import (
    Vec,
    dot,
    sign_affine,
    solve_linear_system,
    vec_add,
    vec_neg,
    vec_scale,
    vector,
)

Sign = int  # -1, 0, +1
SignVector = tuple[Sign, ...]


@dataclass(frozen=True)
class Hyperplane:
    """Affine functional a·x = b; the stored orientation defines its signs."""

    a: Vec
    b: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.a):
            raise ValueError("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.a)


def hyperplane(a, b) -> Hyperplane:
    return Hyperplane(vector(a), Fraction(b))


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of hyperplanes in dimension dim; order is identity."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("arrangements require dimension >= 2")
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise DimensionMismatchError(
                    f"hyperplane of dimension {h.dim} in a {self.dim}-dimensional arrangement"
                )

    @property
    def n(self) -> int:
        return len(self.hyperplanes)


@dataclass(frozen=True)
class Vertex:
    point: Vec
    tight_set: tuple[int, ...]   # exactly d hyperplane indices, sorted
    sign_vector: SignVector      # zeros exactly on tight_set


@dataclass(frozen=True)
class ArrangementEdge:
    """A 1-face: bounded segment (head set) or ray (direction set)."""

    line_set: tuple[int, ...]    # d-1 hyperplane indices, sorted
    sign_vector: SignVector      # zeros exactly on line_set
    tail: int                    # vertex id
    head: Optional[int] = None
    direction: Optional[Vec] = None

    @property
    def is_segment(self) -> bool:
        return self.head is not None


@dataclass(frozen=True)
class BoundedCell:
    signature: SignVector        # zero-free, length n
    vertex_ids: tuple[int, ...]  # sorted


@dataclass(frozen=True)
class SimplicityReport:
    is_simple: bool
    witness: Optional[tuple[int, ...]] = None  # offending subset, 0-based
    reason: Optional[str] = None


@dataclass(frozen=True)
class FacetRecord:
    """A bounded 2-face of a 3-dimensional arrangement."""

    hyperplane: int                       # index of the carrying plane
    induced_signature: SignVector         # over the induced 2D arrangement
    signature: SignVector                 # full length n, zero at `hyperplane`
    incident: tuple[SignVector, SignVector]   # carrier set to -, then +


@dataclass(frozen=True)
class Restriction:
    """A (d-1)-dimensional arrangement induced on one hyperplane.

    Points of the chart map into the ambient space via
    base + sum(t[k] * directions[k]).
    """

    arrangement: Arrangement
    index: int                  # the hyperplane that was restricted to
    base: Vec
    directions: tuple[Vec, ...]
    kept: tuple[int, ...]       # original indices, in induced order
    excluded: tuple[int, ...]   # parallel hyperplanes (empty for simple input)

    def embed(self, t: Vec) -> Vec:
        point = self.base
        for coord, direction in zip(t, self.directions):
            point = vec_add(point, vec_scale(direction, coord))
        return point


def evaluate_sign(h: Hyperplane, x: Vec) -> Sign:
    """Exact sign of h at the point x."""
    return sign_affine(h.a, h.b, x)


def require_simple(arr: Arrangement) -> None:
    """Raise NotSimpleError (with the report attached) unless arr is simple."""
    report = check_simple(arr)
    if not report.is_simple:
        raise NotSimpleError(f"arrangement is not simple: {report.reason}", report=report)


def check_simple(arr: Arrangement) -> SimplicityReport:
    """Decide simplicity by the definition: n >= d+1, every d-subset of
    hyperplanes meets in a unique point, and all such points are distinct."""
    d, n = arr.dim, arr.n
    if n < d + 1:
        return SimplicityReport(False, None, f"need at least {d + 1} hyperplanes, got {n}")
    seen: dict[Vec, tuple[int, ...]] = {}
    for subset in itertools.combinations(range(n), d):
        point = _intersection_point(arr, subset)
        if point is None:
            return SimplicityReport(False, subset, "hyperplanes do not meet in a single point")
        if point in seen:
            return SimplicityReport(
                False, subset, f"intersection point coincides with subset {seen[point]}"
            )
        seen[point] = subset
    return SimplicityReport(True)


def _intersection_point(arr: Arrangement, subset: tuple[int, ...]) -> Optional[Vec]:
    m = tuple(arr.hyperplanes[i].a for i in subset)
    rhs = tuple(arr.hyperplanes[i].b for i in subset)
    return solve_linear_system(m, rhs)


def enumerate_vertices(arr: Arrangement) -> list[Vertex]:
    """All C(n,d) vertices, sorted by tight set; raises NotSimpleError when
    the input violates simplicity (detected for free during enumeration)."""
    d, n = arr.dim, arr.n
    if n < d + 1:
        raise NotSimpleError(f"need at least {d + 1} hyperplanes, got {n}")
    vertices: list[Vertex] = []
    seen: dict[Vec, tuple[int, ...]] = {}
    for subset in itertools.combinations(range(n), d):
        point = _intersection_point(arr, subset)
        if point is None:
            raise NotSimpleError(f"hyperplane subset {subset} is singular")
        if point in seen:
            raise NotSimpleError(
                f"subsets {seen[point]} and {subset} intersect at the same point"
            )
        seen[point] = subset
        signs = tuple(evaluate_sign(h, point) for h in arr.hyperplanes)
        zeros = tuple(i for i, s in enumerate(signs) if s == 0)
        if zeros != subset:
            raise NotSimpleError(
                f"point of subset {subset} lies on extra hyperplanes {set(zeros) - set(subset)}"
            )
        vertices.append(Vertex(point, subset, signs))
    return vertices


def _line_direction(arr: Arrangement, line_set: tuple[int, ...]) -> Vec:
    """A nonzero vector parallel to the intersection of the line_set normals.

    The (d-1) x d system has rank d-1 for a simple arrangement, so exactly
    one free column remains after Gaussian elimination.
    """
    d = arr.dim
    rows = [list(arr.hyperplanes[i].a) for i in line_set]
    pivot_cols: list[int] = []
    r = 0
    for col in range(d):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(rows):
            break
    if r != len(rows):
        raise InternalConsistencyError(f"line normals {line_set} are linearly dependent")
    free = next(c for c in range(d) if c not in pivot_cols)
    direction = [Fraction(0)] * d
    direction[free] = Fraction(1)
    for row_idx, col in enumerate(pivot_cols):
        direction[col] = -rows[row_idx][free]
    return tuple(direction)


def enumerate_edges(arr: Arrangement, vertices: list[Vertex]) -> list[ArrangementEdge]:
    """Decompose every line (each (d-1)-subset of hyperplanes) into its
    bounded segments between consecutive vertices plus the two extreme rays."""
    d = arr.dim
    lines: dict[tuple[int, ...], list[int]] = {}
    for vid, v in enumerate(vertices):
        for sub in itertools.combinations(v.tight_set, d - 1):
            lines.setdefault(sub, []).append(vid)

    edges: list[ArrangementEdge] = []
    for line_set in sorted(lines):
        direction = _line_direction(arr, line_set)
        # sort along the axis with the largest |direction| component,
        # ties broken by lowest axis index
        axis = max(range(d), key=lambda c: (abs(direction[c]), -c))
        if direction[axis] < 0:
            direction = vec_neg(direction)
        order = sorted(lines[line_set], key=lambda vid: vertices[vid].point[axis])

        first, last = order[0], order[-1]
        edges.append(
            _make_ray(arr, line_set, first, vertices[first].point, vec_neg(direction))
        )
        for u, w in zip(order, order[1:]):
            midpoint = vec_scale(vec_add(vertices[u].point, vertices[w].point), Fraction(1, 2))
            edges.append(
                ArrangementEdge(line_set, _face_signs(arr, line_set, midpoint), u, head=w)
            )
        edges.append(
            _make_ray(arr, line_set, last, vertices[last].point, direction)
        )
    return edges


def _make_ray(arr, line_set, tail, tail_point, direction) -> ArrangementEdge:
    probe = vec_add(tail_point, direction)  # no vertex beyond the extreme one
    return ArrangementEdge(
        line_set, _face_signs(arr, line_set, probe), tail, direction=direction
    )


def _face_signs(arr: Arrangement, zero_set: tuple[int, ...], interior: Vec) -> SignVector:
    signs = tuple(evaluate_sign(h, interior) for h in arr.hyperplanes)
    if tuple(i for i, s in enumerate(signs) if s == 0) != zero_set:
        raise InternalConsistencyError(
            f"face on {zero_set} has unexpected zeros at its interior point"
        )
    return signs


def _completions(signs: SignVector, zero_set: tuple[int, ...]) -> Iterator[SignVector]:
    """All sign vectors obtained by filling the given zeros with +/-."""
    base = list(signs)
    for combo in itertools.product((-1, 1), repeat=len(zero_set)):
        for pos, s in zip(zero_set, combo):
            base[pos] = s
        yield tuple(base)


def enumerate_bounded_cells(
    arr: Arrangement, vertices: list[Vertex], edges: list[ArrangementEdge]
) -> list[BoundedCell]:
    """Bounded cells as zero-free sign vectors with their vertex sets.

    Candidates come from expanding each vertex's d zeros into all 2^d
    combinations; a candidate is unbounded iff some ray's sign vector is
    compatible with it.  The count must equal C(n-1, d).
    """
    d, n = arr.dim, arr.n
    members: dict[SignVector, list[int]] = {}
    for vid, v in enumerate(vertices):
        for sig in _completions(v.sign_vector, v.tight_set):
            members.setdefault(sig, []).append(vid)

    unbounded: set[SignVector] = set()
    for edge in edges:
        if edge.is_segment:
            continue
        unbounded.update(_completions(edge.sign_vector, edge.line_set))

    bounded = [sig for sig in members if sig not in unbounded]
    expected = comb(n - 1, d)
    if len(bounded) != expected:
        raise InternalConsistencyError(
            f"found {len(bounded)} bounded cells, expected C({n - 1},{d}) = {expected}"
        )
    bounded.sort()
    return [BoundedCell(sig, tuple(sorted(members[sig]))) for sig in bounded]


def restrict_to_hyperplane(arr: Arrangement, index: int) -> Restriction:
    """The arrangement induced on hyperplane `index` by all others, expressed
    in an explicit affine chart (base point plus d-1 direction vectors)."""
    d = arr.dim
    if d < 3:
        raise UnsupportedDimensionError("restriction requires dimension >= 3")
    if not 0 <= index < arr.n:
        raise ValueError(f"hyperplane index {index} out of range")
    carrier = arr.hyperplanes[index]
    pivot = next(i for i, c in enumerate(carrier.a) if c != 0)
    base = tuple(
        carrier.b / carrier.a[pivot] if i == pivot else Fraction(0) for i in range(d)
    )
    directions = []
    for c in range(d):
        if c == pivot:
            continue
        u = [Fraction(0)] * d
        u[c] = Fraction(1)
        u[pivot] = -carrier.a[c] / carrier.a[pivot]
        directions.append(tuple(u))

    induced: list[Hyperplane] = []
    kept: list[int] = []
    excluded: list[int] = []
    for j, h in enumerate(arr.hyperplanes):
        if j == index:
            continue
        a_induced = tuple(dot(h.a, u) for u in directions)
        if all(c == 0 for c in a_induced):
            excluded.append(j)  # parallel within the carrier; impossible when simple
            continue
        induced.append(Hyperplane(a_induced, h.b - dot(h.a, base)))
        kept.append(j)
    return Restriction(
        Arrangement(d - 1, tuple(induced)),
        index,
        base,
        tuple(directions),
        tuple(kept),
        tuple(excluded),
    )


def enumerate_bounded_facets(arr: Arrangement) -> list[FacetRecord]:
    """All bounded 2-faces of a 3-dimensional simple arrangement.

    The bounded cells of each restriction are exactly the bounded 2-faces on
    that plane; the two incident full-dimensional cells are obtained by
    setting the carrier coordinate to - and +.  Total must be n*C(n-2,2).
    """
    d, n = arr.dim, arr.n
    if d != 3:
        raise UnsupportedDimensionError("facet enumeration is defined for dimension 3")
    records: list[FacetRecord] = []
    for i in range(n):
        restriction = restrict_to_hyperplane(arr, i)
        sub_vertices = enumerate_vertices(restriction.arrangement)
        sub_edges = enumerate_edges(restriction.arrangement, sub_vertices)
        sub_cells = enumerate_bounded_cells(restriction.arrangement, sub_vertices, sub_edges)
        for cell in sub_cells:
            full = [0] * n
            for pos, orig in enumerate(restriction.kept):
                full[orig] = cell.signature[pos]
            minus, plus = list(full), list(full)
            minus[i], plus[i] = -1, 1
            records.append(
                FacetRecord(i, cell.signature, tuple(full), (tuple(minus), tuple(plus)))
            )
    expected = n * comb(n - 2, 2)
    if len(records) != expected:
        raise InternalConsistencyError(
            f"found {len(records)} bounded facets, expected n*C(n-2,2) = {expected}"
        )
    return records
