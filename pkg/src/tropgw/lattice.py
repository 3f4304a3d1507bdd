"""Lattice polygons, Newton fans and dual subdivisions.

Points are plain integer pairs.  Areas are normalized (twice Euclidean),
so the unit triangle has area 1.  A Newton fan is a balanced multiset of
nonzero integer vectors; its dual polygon is obtained by rotating the
aggregated direction vectors by 90 degrees and chaining them in angular
order, anchored so the lexicographically least vertex sits at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

Point = tuple[int, int]


def lattice_length(p: Point, q: Point) -> int:
    """gcd of the coordinate differences; the integer length of segment pq."""
    if p == q:
        raise ValueError(f"degenerate segment at {p}")
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))


def normalized_area(a: Point, b: Point, c: Point) -> int:
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if det == 0:
        raise ValueError(f"collinear triangle {a}, {b}, {c}")
    return abs(det)


def triangle_boundary_count(a: Point, b: Point, c: Point) -> int:
    return lattice_length(a, b) + lattice_length(b, c) + lattice_length(c, a)


def interior_points(a: Point, b: Point, c: Point) -> int:
    """Lattice points strictly inside the triangle, via Pick's identity."""
    area = normalized_area(a, b, c)
    return (area - triangle_boundary_count(a, b, c) + 2) // 2


def primitive(v: Point) -> tuple[Point, int]:
    """Split a nonzero vector into (primitive direction, positive length)."""
    if v == (0, 0):
        raise ValueError("zero vector has no direction")
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g), g


def _angle_cmp(u: Point, v: Point) -> int:
    def half(w: Point) -> int:
        return 0 if w[1] > 0 or (w[1] == 0 and w[0] > 0) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cr = u[0] * v[1] - u[1] * v[0]
    return 0 if cr == 0 else (-1 if cr > 0 else 1)


@dataclass(frozen=True)
class NewtonFan:
    """Multiset of nonzero integer vectors with zero weighted sum.

    Entries are ((x, y), multiplicity); a non-primitive vector encodes an
    end of higher weight.
    """

    entries: tuple[tuple[Point, int], ...]

    def __post_init__(self):
        sx = sy = 0
        for v, m in self.entries:
            if v == (0, 0):
                raise ValueError("fan contains the zero vector")
            if m < 1:
                raise ValueError("fan multiplicities must be positive")
            sx += v[0] * m
            sy += v[1] * m
        if (sx, sy) != (0, 0):
            raise ValueError(f"unbalanced fan, weighted sum ({sx}, {sy})")

    @staticmethod
    def from_vectors(vectors) -> "NewtonFan":
        d: dict[Point, int] = {}
        for v in vectors:
            v = (int(v[0]), int(v[1]))
            d[v] = d.get(v, 0) + 1
        return NewtonFan(tuple(sorted(d.items())))

    @property
    def num_ends(self) -> int:
        return sum(m for _, m in self.entries)

    def end_weights(self) -> tuple[int, ...]:
        out = []
        for v, m in self.entries:
            _, w = primitive(v)
            out.extend([w] * m)
        return tuple(sorted(out))


def delta_fan(d: int) -> NewtonFan:
    """Fan of degree-d plane curves: d each of (-1,0), (0,-1), (1,1)."""
    if d < 1:
        raise ValueError("degree must be positive")
    return NewtonFan((((-1, 0), d), ((0, -1), d), ((1, 1), d)))


def hirzebruch_fan(k: int, a: int, w_left, w_right) -> NewtonFan:
    """Fan with a ends (0,-1), a ends (k,1), left ends (-1,0) of weights
    w_left and right ends (1,0) of weights w_right.

    Balance forces sum(w_left) = a*k + sum(w_right).
    """
    if k < 0 or a < 1:
        raise ValueError("need k >= 0 and a >= 1")
    w_left, w_right = tuple(w_left), tuple(w_right)
    if any(w < 1 for w in w_left + w_right):
        raise ValueError("end weights must be positive")
    if sum(w_left) != a * k + sum(w_right):
        raise ValueError(
            f"unbalanced weights: sum(w_left)={sum(w_left)} != "
            f"a*k + sum(w_right)={a * k + sum(w_right)}"
        )
    vectors = [(0, -1)] * a + [(k, 1)] * a
    vectors += [(-w, 0) for w in w_left]
    vectors += [(w, 0) for w in w_right]
    return NewtonFan.from_vectors(vectors)


@dataclass(frozen=True)
class Polygon:
    """Convex lattice polygon; vertices CCW starting at the lex-least one."""

    vertices: tuple[Point, ...]

    @staticmethod
    def from_vertices(points) -> "Polygon":
        pts = [tuple(p) for p in points]
        if len(pts) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        # normalize: CCW orientation, drop collinear vertices, start lex-least
        area2 = 0
        for i, p in enumerate(pts):
            q = pts[(i + 1) % len(pts)]
            area2 += p[0] * q[1] - p[1] * q[0]
        if area2 == 0:
            raise ValueError("degenerate polygon")
        if area2 < 0:
            pts.reverse()
        kept = []
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if cr < 0:
                raise ValueError("polygon is not convex")
            if cr > 0:
                kept.append(b)
        start = kept.index(min(kept))
        return Polygon(tuple(kept[start:] + kept[:start]))

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @property
    def area2(self) -> int:
        s = 0
        for p, q in self.edges():
            s += p[0] * q[1] - p[1] * q[0]
        return s

    def boundary_lattice_points(self) -> list[Point]:
        """All boundary lattice points, CCW, starting at the first vertex."""
        out: list[Point] = []
        for p, q in self.edges():
            n = lattice_length(p, q)
            dx, dy = (q[0] - p[0]) // n, (q[1] - p[1]) // n
            out.extend((p[0] + i * dx, p[1] + i * dy) for i in range(n))
        return out

    def num_boundary_points(self) -> int:
        return sum(lattice_length(p, q) for p, q in self.edges())

    def interior_count(self) -> int:
        return (self.area2 - self.num_boundary_points() + 2) // 2

    def contains(self, pt: Point) -> bool:
        for p, q in self.edges():
            if (q[0] - p[0]) * (pt[1] - p[1]) - (q[1] - p[1]) * (pt[0] - p[0]) < 0:
                return False
        return True

    def lattice_points(self) -> list[Point]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        ]


def dual_polygon(fan: NewtonFan) -> Polygon:
    """Polygon whose oriented boundary edges are the rotated fan vectors."""
    weights: dict[Point, int] = {}
    for v, m in fan.entries:
        d, w = primitive(v)
        weights[d] = weights.get(d, 0) + w * m
    edges = sorted(
        (((-d[1], d[0]), w) for d, w in weights.items()),
        key=cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0])),
    )
    pts = [(0, 0)]
    for (ex, ey), w in edges:
        x, y = pts[-1]
        pts.append((x + w * ex, y + w * ey))
    if pts[-1] != pts[0]:
        raise ValueError("fan does not close up")
    pts.pop()
    anchor = min(pts)
    return Polygon.from_vertices([(x - anchor[0], y - anchor[1]) for x, y in pts])


def delta_polygon(d: int) -> Polygon:
    return Polygon.from_vertices([(0, 0), (d, 0), (0, d)])


def hirzebruch_polygon(k: int, a: int, b: int) -> Polygon:
    """Trapezoid with left side a*k+b, right side b, width a (b = 0: triangle)."""
    if b == 0:
        return Polygon.from_vertices([(0, 0), (a, 0), (0, a * k)])
    return Polygon.from_vertices([(0, 0), (a, 0), (a, b), (0, a * k + b)])


@dataclass(frozen=True)
class DualSubdivision:
    """Triangles and parallelograms tiling a polygon.

    A parallelogram is stored by three corners (a, b, c) with the fourth
    implied as a + c - b.
    """

    triangles: tuple[tuple[Point, Point, Point], ...]
    parallelograms: tuple[tuple[Point, Point, Point], ...] = ()

    def piece_area2(self) -> int:
        s = sum(normalized_area(*t) for t in self.triangles)
        s += sum(2 * normalized_area(*q) for q in self.parallelograms)
        return s

    def to_json(self) -> dict:
        return {
            "triangles": [[list(p) for p in t] for t in self.triangles],
            "parallelograms": [[list(p) for p in q] for q in self.parallelograms],
        }

    def edge_lengths(self) -> list[int]:
        out = []
        for a, b, c in self.triangles:
            out += [lattice_length(a, b), lattice_length(b, c), lattice_length(c, a)]
        for a, b, c in self.parallelograms:
            out += [lattice_length(a, b), lattice_length(b, c)] * 2
        return out


def boundary_end_weights(sub: DualSubdivision, polygon: Polygon) -> tuple[int, ...]:
    """Lattice lengths of the subdivision edges lying on the polygon boundary."""

    def within(a: Point, b: Point, p: Point) -> bool:
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(
            a[1], b[1]
        ) <= p[1] <= max(a[1], b[1])

    def on_boundary(p: Point, q: Point) -> bool:
        for a, b in polygon.edges():
            d = (b[0] - a[0], b[1] - a[1])
            if (
                (p[0] - a[0]) * d[1] == (p[1] - a[1]) * d[0]
                and (q[0] - a[0]) * d[1] == (q[1] - a[1]) * d[0]
                and within(a, b, p)
                and within(a, b, q)
            ):
                return True
        return False

    seen: dict[tuple[Point, Point], int] = {}
    for tri in sub.triangles:
        corners = list(tri)
        for i in range(3):
            p, q = corners[i], corners[(i + 1) % 3]
            key = (min(p, q), max(p, q))
            seen[key] = seen.get(key, 0) + 1
    for a, b, c in sub.parallelograms:
        d = (a[0] + c[0] - b[0], a[1] + c[1] - b[1])
        for p, q in ((a, b), (b, c), (c, d), (d, a)):
            key = (min(p, q), max(p, q))
            seen[key] = seen.get(key, 0) + 1
    out = []
    for (p, q), mult in seen.items():
        if mult == 1 and on_boundary(p, q):
            out.append(lattice_length(p, q))
    return tuple(sorted(out))
