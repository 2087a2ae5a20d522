"""
Combinatorial degeneration of an embedded Hirzebruch surface F_{k(a,b)}.

The surface degenerates to a union of ``2ab + kb^2`` planes, one per triangle
of the following integer-grid picture:

* an ``a x b`` rectangle ``-a <= x <= 0, 0 <= y <= b`` of unit squares, each
  cut by its anti-diagonal into two triangles;
* ``k`` Veronese blocks glued in a fan around the apex ``(0, b)``.  Block ``j``
  is the image of the standard triangle ``u, v >= 0, u + v <= b`` (cut into
  ``b^2`` unit triangles) under ``(u, v) -> ((j-1)b + u - (j-1)v, v)``, so block
  1 sits right of the rectangle and each further block shares its left edge
  with the previous block's hypotenuse.

Vertices are numbered right to left and then bottom to top, i.e. by sorting
``(-x, y)``.  Inner edges (shared by two triangles) are the intersection lines.
They are numbered lexicographically by (higher endpoint, lower endpoint).  For
``k = 1`` this reproduces ``m0 = b(b+1)/2 + 1`` and ``nu0 = m0 + a(b+1) + b`` with
special vertices ``1, m0+b, nu0-b, nu0``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

from .arrangement import LineArrangement, NonGenericArrangement, critical_data

Point = tuple[int, int]

THREE_POINT = "three_point"
SIX_POINT = "six_point"
ON_S = "nonsingular_on_S"
OFF_S = "nonsingular_off_S"
MULTIPLE = "multiple_point"


def validate_params(k: int, a: int, b: int) -> None:
    if not all(isinstance(v, int) for v in (k, a, b)):
        raise TypeError("k, a, b must be integers")
    if k < 0 or a < 0 or b < 1:
        raise ValueError(f"need k >= 0, a >= 0, b >= 1; got ({k}, {a}, {b})")
    if a == 0 and k == 0:
        raise ValueError("a = 0 needs k >= 1")


def _veronese(j: int, b: int, u: int, v: int) -> Point:
    return ((j - 1) * b + u - (j - 1) * v, v)


def _triangles(k: int, a: int, b: int) -> list[tuple[Point, Point, Point]]:
    tris = []
    for x in range(-a, 0):
        for y in range(b):
            tris.append(((x, y), (x + 1, y), (x, y + 1)))
            tris.append(((x + 1, y), (x + 1, y + 1), (x, y + 1)))
    for j in range(1, k + 1):
        f = lambda u, v: _veronese(j, b, u, v)  # noqa: E731
        for u in range(b):
            for v in range(b - u):
                tris.append((f(u, v), f(u + 1, v), f(u, v + 1)))
                if u + v <= b - 2:
                    tris.append((f(u + 1, v), f(u + 1, v + 1), f(u, v + 1)))
    return tris


@dataclass(frozen=True)
class Line:
    index: int          # 1-based
    lo: int             # endpoint vertex ids, lo < hi
    hi: int
    direction: str      # "horizontal" | "vertical" | "diagonal"


@dataclass(frozen=True)
class VertexClass:
    kind: str
    incident_lines: tuple[int, ...]
    triangles: int
    subtype: str | None = None
    six_type: int | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind,
            "incident_lines": list(self.incident_lines),
            "triangles": self.triangles,
        }
        if self.subtype is not None:
            out["subtype"] = self.subtype
        if self.six_type is not None:
            out["six_type"] = self.six_type
        return out


@dataclass(frozen=True)
class DegenerationComplex:
    k: int
    a: int
    b: int
    triangles: tuple[tuple[int, int, int], ...]   # vertex ids, sorted
    vertices: tuple[Point, ...]                   # vertex id i at index i-1
    lines: tuple[Line, ...]
    boundary_edges: tuple[tuple[int, int], ...]
    _index: dict[Point, int] = field(default=None, repr=False, compare=False)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.k, self.a, self.b)

    @property
    def p0(self) -> int:
        return len(self.lines)

    @property
    def nu0(self) -> int:
        return len(self.vertices)

    @property
    def m0(self) -> int:
        return self.b * (self.b + 1) // 2 + 1

    def vertex_id(self, pt: Point) -> int:
        return self._index[pt]

    def line(self, i: int) -> Line:
        return self.lines[i - 1]

    def lines_at(self, v: int) -> tuple[int, ...]:
        return tuple(L.index for L in self.lines if v in (L.lo, L.hi))

    def triangles_at(self, v: int) -> int:
        return sum(v in t for t in self.triangles)

    def lines_meet(self, i: int, j: int) -> bool:
        A, B = self.line(i), self.line(j)
        return bool({A.lo, A.hi} & {B.lo, B.hi})

    def disjoint_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(1, self.p0 + 1), 2)
                if not self.lines_meet(i, j)]

    def special_vertices(self) -> dict[str, int]:
        """The four nonsingular corner vertices (meaningful for k = 1)."""
        nu0, m0, b = self.nu0, self.m0, self.b
        return {"first": 1, "apex": m0 + b, "bottom_left": nu0 - b, "last": nu0}

    def to_json(self) -> dict[str, Any]:
        classes = classify_vertices(self)
        return {
            "params": {"k": self.k, "a": self.a, "b": self.b},
            "counts": dict(zip(("planes", "lines", "vertices"), counts(self))),
            "vertices": [
                {"id": i, "x": x, "y": y, **classes[i].to_json()}
                for i, (x, y) in enumerate(self.vertices, start=1)
            ],
            "lines": [
                {"id": L.index, "endpoints": [L.lo, L.hi], "direction": L.direction}
                for L in self.lines
            ],
            "triangles": [list(t) for t in self.triangles],
        }


def _direction(p: Point, q: Point) -> str:
    if p[1] == q[1]:
        return "horizontal"
    if p[0] == q[0]:
        return "vertical"
    return "diagonal"


def build_complex(k: int, a: int, b: int) -> DegenerationComplex:
    validate_params(k, a, b)
    raw = _triangles(k, a, b)
    pts = sorted({p for t in raw for p in t}, key=lambda p: (-p[0], p[1]))
    index = {p: i for i, p in enumerate(pts, start=1)}
    tris = tuple(sorted(tuple(sorted(index[p] for p in t)) for t in raw))
    edge_count: Counter = Counter()
    for t in tris:
        for e in combinations(t, 2):
            edge_count[e] += 1
    if any(c > 2 for c in edge_count.values()):
        raise AssertionError("edge shared by more than two triangles")
    inner = sorted((e for e, c in edge_count.items() if c == 2), key=lambda e: (e[1], e[0]))
    lines = tuple(
        Line(i, lo, hi, _direction(pts[lo - 1], pts[hi - 1]))
        for i, (lo, hi) in enumerate(inner, start=1)
    )
    boundary = tuple(sorted(e for e, c in edge_count.items() if c == 1))
    return DegenerationComplex(k, a, b, tris, tuple(pts), lines, boundary, index)


def counts(c: DegenerationComplex) -> tuple[int, int, int]:
    """(planes, lines, vertices)."""
    return len(c.triangles), c.p0, c.nu0


def _three_point_subtype(c: DegenerationComplex, v: int, lines: tuple[int, ...]) -> str:
    first = c.line(lines[0])
    ends = ["hi" if c.line(i).hi == v else "lo" for i in lines]
    meet = ends[0] if ends[0] == ends[1] else "mixed"
    return f"{first.direction}:{meet}"


def _local_pattern(c: DegenerationComplex, v: int, lines: tuple[int, ...]) -> tuple:
    return tuple(
        (c.line(i).direction, "hi" if c.line(i).hi == v else "lo") for i in lines
    )


def _six_type(c: DegenerationComplex, v: int) -> int:
    # The index pattern of the six lines is the same everywhere on the grid,
    # so the type is read from position: rectangle interior, the seam x = 0,
    # Veronese interior.
    x, _ = c.vertices[v - 1]
    if x < 0:
        return 1
    if x == 0:
        return 2
    return 3


def classify_vertices(c: DegenerationComplex) -> dict[int, VertexClass]:
    out = {}
    for v in range(1, c.nu0 + 1):
        lines = c.lines_at(v)
        ntri = c.triangles_at(v)
        n = len(lines)
        if n == 0:
            out[v] = VertexClass(OFF_S, lines, ntri)
        elif n == 1:
            out[v] = VertexClass(ON_S, lines, ntri)
        elif n == 2 and ntri == 3:
            out[v] = VertexClass(THREE_POINT, lines, ntri,
                                 subtype=_three_point_subtype(c, v, lines))
        elif n == 6 and ntri == 6:
            out[v] = VertexClass(SIX_POINT, lines, ntri, six_type=_six_type(c, v))
        else:
            out[v] = VertexClass(MULTIPLE, lines, ntri)
    return out


@dataclass(frozen=True)
class InducedArrangement:
    """A rational line arrangement realizing the incidences of a complex.

    ``arrangement.lines[j-1]`` is the image of ``L_j``.  ``vertex_images``
    maps each vertex id on at least two lines to its image point.
    ``extra_crossings`` lists the images of disjoint line pairs that meet in
    the plane.
    """

    arrangement: LineArrangement
    vertex_images: dict[int, tuple[Fraction, Fraction]]
    extra_crossings: tuple[tuple[int, int, Fraction, Fraction], ...]
    seed: int


def _attempt(c: DegenerationComplex, rng: random.Random):
    pts = {
        v: (Fraction(-v), Fraction(rng.randint(-997, 997), rng.randint(1, 23)))
        for v in range(1, c.nu0 + 1)
    }
    rows = []
    for L in c.lines:
        (x1, y1), (x2, y2) = pts[L.lo], pts[L.hi]
        m = (y2 - y1) / (x2 - x1)
        rows.append((m, y1 - m * x1))
    arr = LineArrangement(tuple(rows))
    data = critical_data(arr)
    expected = {v: c.lines_at(v) for v in range(1, c.nu0 + 1) if len(c.lines_at(v)) >= 2}
    by_lines = {ls: v for v, ls in expected.items()}
    seen = set()
    extra = []
    for pt in data.points:
        ls = tuple(j + 1 for j in pt.lines)
        if ls in by_lines:
            v = by_lines[ls]
            if pts[v] != (pt.x, pt.y):
                raise NonGenericArrangement("concurrence away from its vertex")
            seen.add(v)
        elif len(ls) == 2 and not c.lines_meet(*ls):
            extra.append((ls[0], ls[1], pt.x, pt.y))
        else:
            raise NonGenericArrangement(f"unexpected concurrence of lines {ls}")
    if seen != set(expected):
        raise NonGenericArrangement("a vertex lost its concurrence")
    images = {v: pts[v] for v in sorted(expected)}
    return arr, images, tuple(sorted(extra))


def induced_arrangement(c: DegenerationComplex, seed: int = 0, max_tries: int = 200) -> InducedArrangement:
    """Realize the lines of ``c`` as real rational lines.

    Vertex ``v`` goes to a point with x-coordinate ``-v``, so a sweep from the
    right meets vertex images in numbering order.  Heights come from a seeded
    generator; a non-generic draw is retried with the next seed.
    """
    if c.p0 == 0:
        raise ValueError("complex has no intersection lines")
    for s in range(seed, seed + max_tries):
        try:
            arr, images, extra = _attempt(c, random.Random(s))
        except NonGenericArrangement:
            continue
        return InducedArrangement(arr, images, extra, s)
    raise NonGenericArrangement(f"no generic realization in {max_tries} seeds")


def render_ascii(c: DegenerationComplex) -> str:
    """Vertex ids on their grid positions, top row first."""
    xs = [x for x, _ in c.vertices]
    ys = [y for _, y in c.vertices]
    width = len(str(c.nu0)) + 1
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        cells = []
        for x in range(min(xs), max(xs) + 1):
            v = c._index.get((x, y))
            cells.append(str(v).rjust(width) if v else " " * (width - 1) + ".")
        rows.append("".join(cells).rstrip())
    return "\n".join(rows)
