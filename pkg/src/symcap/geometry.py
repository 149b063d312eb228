"""Exact planar geometry over the rationals.

Conventions used throughout the package:

  * scalars are fractions.Fraction, never floats;
  * points are (x, y) pairs of Fractions;
  * polygons are vertex cycles with consecutive duplicates dropped and
    collinear runs merged, orientation as supplied by the caller;
  * lattice paths live on integer coordinates and are encoded by their
    integer edge vectors, walked from (0, start_y).

Lattice-point counts are exact integers obtained by scanning integer
columns; Pick's theorem is used in the tests as an independent oracle,
not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, Fraction]
Edge = tuple[int, int]


def rational(x) -> Fraction:
    """Coerce int / str / Fraction to an exact Fraction.

    Strings accept "p/q" and plain "p". Floats are rejected: every quantity
    in this library is exact and rounding must never slip in silently.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    # floats included: a binary float is not the number the user wrote down
    raise ValueError(f"expected an exact rational (int, 'p/q' string, or "
                     f"Fraction), got {type(x).__name__}")


def rational_str(q) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def point(x, y) -> Point:
    return (rational(x), rational(y))


def cross(u: Sequence, v: Sequence):
    """2D cross product u x v; sign gives the turn direction u -> v."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1]


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class Polygon:
    """Vertex cycle; construction canonicalizes but never reorders.

    Canonical form: no two consecutive vertices equal, no straight-through
    vertex (collinear run) survives, and direction reversals (spikes) are
    rejected outright.
    """

    vertices: tuple[Point, ...]

    @staticmethod
    def from_points(pts: Iterable) -> "Polygon":
        cycle = [point(p[0], p[1]) for p in pts]
        out: list[Point] = []
        for p in cycle:
            if not out or p != out[-1]:
                out.append(p)
        while len(out) > 1 and out[0] == out[-1]:
            out.pop()
        if len(out) < 3:
            raise ValueError("degenerate polygon: fewer than 3 distinct vertices")
        # merge straight-through vertices, cyclically, until stable
        changed = True
        while changed and len(out) >= 3:
            changed = False
            n = len(out)
            for i in range(n):
                a, b, c = out[i - 1], out[i], out[(i + 1) % n]
                u, v = _sub(b, a), _sub(c, b)
                if cross(u, v) == 0:
                    if dot(u, v) < 0:
                        raise ValueError(f"degenerate polygon: reversal at vertex {b}")
                    del out[i]
                    changed = True
                    break
        if len(out) < 3:
            raise ValueError("degenerate polygon: collapses to a segment")
        return Polygon(tuple(out))

    def signed_area(self) -> Fraction:
        s = Fraction(0)
        vs = self.vertices
        for i in range(len(vs)):
            s += cross(vs[i], vs[(i + 1) % len(vs)])
        return s / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def reversed(self) -> "Polygon":
        return Polygon(tuple(self.vertices[::-1]))


def is_convex(p: Polygon) -> bool:
    """True iff every consecutive edge pair turns left or goes straight.

    Checks cross products >= 0 around the cycle, so the answer is True only
    for counterclockwise vertex order.
    """
    vs = p.vertices
    if len(vs) < 3:
        raise ValueError("degenerate polygon: fewer than 3 vertices")
    n = len(vs)
    for i in range(n):
        u = _sub(vs[(i + 1) % n], vs[i])
        v = _sub(vs[(i + 2) % n], vs[(i + 1) % n])
        if cross(u, v) < 0:
            return False
    return True


def path_vertices(edges: Sequence[Edge], start_y: int) -> list[tuple[int, int]]:
    """Integer vertices visited by the path, start point included."""
    x, y = 0, int(start_y)
    verts = [(x, y)]
    for dx, dy in edges:
        x += dx
        y += dy
        verts.append((x, y))
    return verts


def lattice_points_on_path(edges: Sequence[Edge]) -> int:
    """Lattice points lying on the path itself (a single point if empty)."""
    total = 1
    for dx, dy in edges:
        total += math.gcd(abs(dx), abs(dy))
    return total


def _region_cycle(edges: Sequence[Edge], start_y: int) -> list[tuple[int, int]]:
    # closed cycle (0,0) -> (0,b) -> path -> (a,0) -> (0,0), duplicates dropped
    cycle = [(0, 0)]
    for v in path_vertices(edges, start_y):
        if v != cycle[-1]:
            cycle.append(v)
    while len(cycle) > 1 and cycle[-1] == cycle[0]:
        cycle.pop()
    return cycle


def lattice_points_under_path(edges: Sequence[Edge], start_y: int,
                              include_path: bool = True) -> int:
    """Count lattice points of the region bounded by the path and the axes.

    The region is the closed polygon (0,0),(0,start_y),...,(a,0); it must be
    column-convex (true for every valid convex or concave path, degenerate
    axis segments included).  With include_path False, points lying on the
    path itself (its endpoints included) are not counted; points on the axis
    closures still are.
    """
    cycle = _region_cycle(edges, start_y)
    n = len(cycle)
    if n == 1:
        count = 1
    else:
        xmax = max(v[0] for v in cycle)
        xmin = min(v[0] for v in cycle)
        if xmin < 0 or min(v[1] for v in cycle) < 0:
            raise ValueError("path region leaves the nonnegative quadrant")
        count = 0
        for x0 in range(xmin, xmax + 1):
            ylo = None
            yhi = None
            for i in range(n):
                (px, py), (qx, qy) = cycle[i], cycle[(i + 1) % n]
                if n == 2 and i == 1:
                    break  # a segment has one geometric edge
                if min(px, qx) <= x0 <= max(px, qx):
                    if px == qx:
                        lo, hi = min(py, qy), max(py, qy)
                    else:
                        y = Fraction(py) + Fraction(qy - py, qx - px) * (x0 - px)
                        lo = hi = y
                    ylo = lo if ylo is None else min(ylo, lo)
                    yhi = hi if yhi is None else max(yhi, hi)
            if ylo is None:
                continue
            count += math.floor(yhi) - math.ceil(ylo) + 1
    if include_path:
        return count
    return count - lattice_points_on_path(edges)


def point_on_path(edges: Sequence[Edge], start_y: int, q) -> bool:
    """True iff q lies on some closed edge segment of the path.

    The empty path is the single point (0, start_y).
    """
    qp = point(q[0], q[1])
    verts = path_vertices(edges, start_y)
    if len(verts) == 1:
        return qp == (Fraction(verts[0][0]), Fraction(verts[0][1]))
    for i in range(len(verts) - 1):
        a, b = verts[i], verts[i + 1]
        av = (Fraction(a[0]), Fraction(a[1]))
        bv = (Fraction(b[0]), Fraction(b[1]))
        if cross(_sub(bv, av), _sub(qp, av)) != 0:
            continue
        if min(av[0], bv[0]) <= qp[0] <= max(av[0], bv[0]) and \
           min(av[1], bv[1]) <= qp[1] <= max(av[1], bv[1]):
            return True
    return False
