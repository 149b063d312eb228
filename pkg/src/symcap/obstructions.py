"""Embedding obstructions, scaling bounds, and growth-rate reports.

A symplectic embedding forces every capacity of the source to stay at or
below the matching capacity of the target, so the first index where the
source exceeds the target certifies non-embeddability.  The converse is
not claimed: a clean scan is merely "no obstruction up to k_max".

Square roots (for the 2*sqrt(vol*k) growth model) are bracketed by rational
intervals instead of floats, keeping every reported inequality exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import domains
from .capacities import ck
from .geometry import rational


@dataclass(frozen=True)
class ObstructionReport:
    obstructed: bool
    first_k: int | None
    c_source: Fraction | None  # values at first_k when obstructed
    c_target: Fraction | None
    k_max: int
    volume_ok: bool
    table: tuple  # (k, c_source, c_target) rows for the scanned range

    @property
    def verdict(self) -> str:
        return "obstructed" if self.obstructed else "no_obstruction_up_to"


def check_embedding(src, tgt, k_max) -> ObstructionReport:
    """Scan k = 0..k_max for a capacity violation of src -> tgt."""
    k_max = int(k_max)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    volume_ok = domains.volume(src) <= domains.volume(tgt)
    rows = []
    for k in range(k_max + 1):
        cs = ck(src, k).value
        ct = ck(tgt, k).value
        rows.append((k, cs, ct))
        if cs > ct:
            return ObstructionReport(True, k, cs, ct, k_max, volume_ok, tuple(rows))
    return ObstructionReport(False, None, None, None, k_max, volume_ok, tuple(rows))


def scaling_lower_bound(src, tgt, k_max) -> Fraction:
    """max over 1 <= k <= k_max of c_k(src)/c_k(tgt): a lower bound for
    lambda^2 over all embeddings of src into the lambda-scaled target.

    The target must scale quadratically, which rules out the closed
    manifolds; capacities are positive for k >= 1, so no division by zero.
    """
    k_max = int(k_max)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if isinstance(tgt, domains.CLOSED_KINDS):
        raise ValueError("scaling bound needs a target that scales "
                         "quadratically; closed manifolds do not")
    best = Fraction(0)
    for k in range(1, k_max + 1):
        ratio = ck(src, k).value / ck(tgt, k).value
        if ratio > best:
            best = ratio
    return best


def sqrt_interval(value, eps=Fraction(1, 10 ** 9)) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(value) <= hi with hi - lo <= eps."""
    value = rational(value)
    eps = rational(eps)
    if value < 0:
        raise ValueError("square root of a negative value")
    if eps <= 0:
        raise ValueError("eps must be positive")
    p, q = value.numerator, value.denominator
    scale = -(-eps.denominator // eps.numerator)  # ceil(1/eps)
    n = math.isqrt(p * q * scale * scale)
    return Fraction(n, q * scale), Fraction(n + 1, q * scale)


@dataclass(frozen=True)
class AsymptoticReport:
    k: int
    value: Fraction
    model_low: Fraction  # bracket of 2*sqrt(vol*k), width <= 2e-9
    model_high: Fraction
    residual_high: Fraction  # upper bound for |c_k - model| / k^(1/4)


def asymptotic_ratio(d, k) -> AsymptoticReport:
    """Compare c_k against the growth model 2*sqrt(vol*k)."""
    k = int(k)
    if k < 1:
        raise ValueError("k must be at least 1")
    vol = domains.volume(d)
    if vol <= 0:
        raise ValueError("domain volume must be positive")
    c = ck(d, k).value
    s_lo, s_hi = sqrt_interval(vol * k)
    model_low, model_high = 2 * s_lo, 2 * s_hi
    # k^(1/4) from below: root of the lower bracket of sqrt(k)
    r_lo, _ = sqrt_interval(Fraction(k))
    q_lo, _ = sqrt_interval(r_lo)
    residual_high = max(abs(c - model_low), abs(c - model_high)) / q_lo
    return AsymptoticReport(k, c, model_low, model_high, residual_high)
