"""Edge-length functionals on lattice vectors.

For a convex moment polygon the dual norm of v is the support value
max <(|v1|,|v2|), w> over the polygon's vertices; by the symmetry of the
reflected polygon this equals the maximum over the whole reflection.  For a
concave polygon the anti-norm is min <(|v1|,|v2|), w> over the vertices of
the outer boundary chain, axis endpoints included (a minimum of a linear
functional over a polyline is attained at a vertex).

Both functionals depend only on (|v1|, |v2|); the anti-norm of a vector
with a zero component is 0 whenever the chain meets the matching axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import domains
from .geometry import Point, Polygon


@dataclass(frozen=True)
class NormContext:
    """Vertex data extracted once per domain; norms are the inner loop of
    the path optimizers, so keep this flat and immutable."""

    kind: str  # "convex" | "concave"
    support_vertices: tuple[Point, ...]


def convex_context(d) -> NormContext:
    """Context for the dual norm; accepts a Domain or a moment Polygon."""
    if isinstance(d, (Polygon, list, tuple)):
        report = domains.classify_polygon(d)
        if not report.is_convex_toric:
            raise ValueError("polygon is not convex toric")
        return NormContext("convex", report.normalized_omega.vertices)
    report = domains.validate(d)
    if not report.is_convex_toric:
        raise ValueError(f"domain is not convex toric: {d!r}")
    return NormContext("convex", report.normalized_omega.vertices)


def concave_context(d) -> NormContext:
    """Context for the anti-norm; vertices are the outer boundary chain."""
    if isinstance(d, (Polygon, list, tuple)):
        report = domains.classify_polygon(d)
        if not report.is_concave_toric:
            raise ValueError("polygon is not concave toric")
        vs = report.normalized_omega.vertices
        return NormContext("concave", tuple(reversed(vs[1:])))
    report = domains.validate(d)
    if not report.is_concave_toric:
        raise ValueError(f"domain is not concave toric: {d!r}")
    vs = report.normalized_omega.vertices
    return NormContext("concave", tuple(reversed(vs[1:])))


def chain_context(chain) -> NormContext:
    """Concave context straight from an outer boundary chain
    ((0,b) ... (a,0)); used by the weight recursion on intermediate pieces."""
    return NormContext("concave", tuple((Fraction(x), Fraction(y)) for x, y in chain))


def dual_norm(ctx: NormContext, v) -> Fraction:
    if ctx.kind != "convex":
        raise ValueError("dual_norm needs a convex context")
    p, q = abs(v[0]), abs(v[1])
    return max(p * x + q * y for x, y in ctx.support_vertices)


def anti_norm(ctx: NormContext, v) -> Fraction:
    if ctx.kind != "concave":
        raise ValueError("anti_norm needs a concave context")
    p, q = abs(v[0]), abs(v[1])
    return min(p * x + q * y for x, y in ctx.support_vertices)
