"""Ball decompositions of toric moment polygons.

A concave polygon expands into a multiset of ball sizes (its weight
expansion): peel off the largest inscribed triangle {x + y <= r}, shear the
two leftover pieces back onto the axes, recurse.  The piece touching the
y-axis maps by (x, y) -> (x, x + y - r) and the piece touching the x-axis
by (x, y) -> (x + y - r, y); both are unimodular, so areas and lattice
structure are preserved.  The multiset fills the polygon exactly: the sum
of a_i^2 / 2 equals the area, asserted on every call.

A convex polygon instead gets a negative weight sequence: the head is the
smallest h with the polygon contained in the triangle {x + y <= h}, and the
complement splits along the diagonal edge into two corner pieces (either
may be empty).  Shearing by (x, y) -> (x, h - x - y) on the left and
(x, y) -> (h - x - y, y) on the right turns each piece into a concave
polygon, which is then expanded.  Identity: h^2/2 - sum a_i^2/2 = area.

Both shear conventions are validated at runtime: every intermediate piece
must pass the concave-chain checks and the volume identity must close, so
a wrong convention fails loudly instead of silently producing numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import domains
from .geometry import Point, Polygon, cross, rational_str


class DepthCapError(Exception):
    """Recursion exceeded depth_cap; should not happen for rational input."""


@dataclass(frozen=True)
class NegativeWeightDecomposition:
    head: Fraction
    negatives: tuple[Fraction, ...]


def _report(omega) -> domains.DomainKindReport:
    if isinstance(omega, (Polygon, list)):
        return domains.classify_polygon(omega)
    return domains.validate(omega)


def _chain_of(omega) -> tuple[Point, ...]:
    """Outer boundary chain from (0, b) to (a, 0).

    Accepts a raw chain (tuple of points), a Polygon or vertex list, or any
    domain with a moment polygon.
    """
    if isinstance(omega, tuple) and omega and isinstance(omega[0], tuple):
        return omega
    report = _report(omega)
    if report.normalized_omega is None:
        raise ValueError("domain has no moment polygon")
    return tuple(reversed(report.normalized_omega.vertices[1:]))


def _check_chain(chain) -> None:
    # valid concave boundary: starts on the y-axis, ends on the x-axis,
    # x strictly increasing, y strictly decreasing, slopes strictly increasing
    if len(chain) < 2:
        raise ValueError(f"bad boundary chain (too short): {chain}")
    if not (chain[0][0] == 0 and chain[0][1] > 0 and chain[-1][1] == 0 and chain[-1][0] > 0):
        raise ValueError(f"bad boundary chain (endpoints off the axes): {chain}")
    dirs = []
    for i in range(len(chain) - 1):
        dx = chain[i + 1][0] - chain[i][0]
        dy = chain[i + 1][1] - chain[i][1]
        if not (dx > 0 and dy < 0):
            raise ValueError(f"bad boundary chain (not monotone): {chain}")
        dirs.append((dx, dy))
    for i in range(len(dirs) - 1):
        if cross(dirs[i], dirs[i + 1]) <= 0:
            raise ValueError(f"bad boundary chain (slopes not increasing): {chain}")


def _chain_area(chain) -> Fraction:
    # area of the region bounded by the chain and the two axes
    cycle = [(Fraction(0), Fraction(0))] + list(chain)
    s = Fraction(0)
    for i in range(len(cycle)):
        s += cross(cycle[i], cycle[(i + 1) % len(cycle)])
    return abs(s) / 2


def inscribed_triangle_size(omega) -> Fraction:
    """Largest r with {x + y <= r} (within the quadrant) inside the region.

    Equals the minimum of x + y over the outer boundary chain, attained at
    a vertex.
    """
    return min(x + y for x, y in _chain_of(omega))


def _expand(chain, depth_cap: int, out: list) -> None:
    if depth_cap <= 0:
        raise DepthCapError("weight expansion exceeded depth_cap; "
                            "check the polygon or raise the cap")
    _check_chain(chain)
    g = [x + y for x, y in chain]
    r = min(g)
    out.append(r)
    i1 = g.index(r)
    i2 = len(g) - 1 - g[::-1].index(r)
    if i1 > 0:
        piece = tuple((x, x + y - r) for x, y in chain[:i1 + 1])
        _expand(piece, depth_cap - 1, out)
    if i2 < len(chain) - 1:
        piece = tuple((x + y - r, y) for x, y in chain[i2:])
        _expand(piece, depth_cap - 1, out)


def weight_expansion(omega, depth_cap: int = 64) -> tuple[Fraction, ...]:
    """Ball sizes filling a concave region, sorted nonincreasing."""
    chain = _chain_of(omega)
    out: list[Fraction] = []
    _expand(chain, depth_cap, out)
    weights = tuple(sorted(out, reverse=True))
    total = sum((w * w / 2 for w in weights), Fraction(0))
    want = _chain_area(chain)
    if total != want:
        raise ValueError("volume identity failed for weight expansion "
                         f"(got {rational_str(total)}, want {rational_str(want)})")
    return weights


def negative_weight_sequence(omega, depth_cap: int = 64) -> NegativeWeightDecomposition:
    """Head size plus the ball sizes of the two sheared corner pieces of the
    head triangle minus the polygon, sorted nonincreasing."""
    report = _report(omega)
    if not report.is_convex_toric or report.normalized_omega is None:
        raise ValueError("negative weight sequence needs a convex toric polygon")
    chain = tuple(reversed(report.normalized_omega.vertices[1:]))
    area = report.normalized_omega.area()
    g = [x + y for x, y in chain]
    head = max(g)
    # x + y is unimodal along the chain, so the peak is a vertex or one
    # diagonal edge; the corner pieces sit strictly before and after it
    i1 = g.index(head)
    i2 = len(g) - 1 - g[::-1].index(head)
    out: list[Fraction] = []
    if i1 > 0:
        piece = tuple((x, head - x - y) for x, y in chain[:i1 + 1])
        _expand(piece, depth_cap, out)
    if i2 < len(chain) - 1:
        piece = tuple((head - x - y, y) for x, y in chain[i2:])
        _expand(piece, depth_cap, out)
    negatives = tuple(sorted(out, reverse=True))
    deficit = head * head / 2 - sum((w * w / 2 for w in negatives), Fraction(0))
    if deficit != area:
        raise ValueError("volume identity failed for negative weight sequence "
                         f"(got {rational_str(deficit)}, want {rational_str(area)})")
    return NegativeWeightDecomposition(head, negatives)
