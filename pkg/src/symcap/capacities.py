"""Capacity computation: closed forms, spectra, path optima, weight
decompositions, and the dispatcher tying them together.

Formulas implemented here:
  ball        c_k(B(a)) = d*a with d the unique integer satisfying
              d^2+d <= 2k <= d^2+3d
  ellipsoid   c_k(E(a,b)) = k-th smallest element of {m*a+n*b : m,n >= 0}
  polydisk    c_k(P(a,b)) = min{a*m+b*n : (m+1)(n+1) >= k+1}
  convex      minimum path length over convex paths enclosing >= k+1
              lattice points (paths.min_convex)
  concave     weight expansion plus the disjoint-union maximum over the k
              largest balls (the concave path optimum is the cross-check)
  union       max over compositions k_1+...+k_m = k of the part sums
  closed      the projective plane shares the ball values, the sphere
              product shares the polydisk values

The dispatcher memoizes by (canonical domain key, k) behind a lock; values
are deterministic so racing writers are harmless.  The memo can be spilled
to and reloaded from a JSON file for cross-process reuse.
"""

from __future__ import annotations

import json
import math
import os
import threading
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import domains, paths
from .domains import (CP2, Ball, ConcaveToric, ConvexToric, DisjointUnion,
                      Domain, Ellipsoid, Polydisk, S2xS2, domain_key)
from .geometry import rational, rational_str
from .norms import concave_context, convex_context
from .paths import LatticePath, path_to_json
from .weights import negative_weight_sequence, weight_expansion


class TruncationWarning(RuntimeWarning):
    """The inf over the shift l was truncated exactly at l_max."""


class _Infinity:
    """Marker for +infinity capacities.  Never produced for the supported
    domain families (all their capacities are finite); carried on the value
    type for forward compatibility only."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class CapacityResult:
    k: int
    value: Fraction
    method: str
    witness: object = None


@dataclass(frozen=True)
class SpectrumEntry:
    action: Fraction
    m: int
    n: int
    ech_index: int


def _checked(result: CapacityResult) -> CapacityResult:
    if isinstance(result.value, _Infinity):
        return result
    if result.value < 0 or (result.value == 0) != (result.k == 0):
        raise RuntimeError(f"capacity invariant violated: {result}")
    return result


def _nonneg_k(k) -> int:
    k = int(k)
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k


def ball_multiplicity(k: int) -> int:
    """The unique d >= 0 with d^2+d <= 2k <= d^2+3d."""
    k = _nonneg_k(k)
    d = (math.isqrt(8 * k + 1) - 1) // 2
    # d*(d+3) is always even, so maximality of d gives the upper bound too
    assert d * d + d <= 2 * k <= d * d + 3 * d
    return d


def ck_ball(a, k) -> CapacityResult:
    a = rational(a)
    if a <= 0:
        raise ValueError("ball size must be positive")
    k = _nonneg_k(k)
    d = ball_multiplicity(k)
    return _checked(CapacityResult(k, d * a, "ball_formula", d))


_SPECTRUM_LOCK = threading.Lock()
_SPECTRUM_CACHE: dict = {}


def ellipsoid_spectrum(a, b, k_max) -> list:
    """The k_max+1 smallest actions m*a+n*b, sorted, ties ordered by (m,n);
    entry k carries ech_index 2k."""
    a, b = rational(a), rational(b)
    if a <= 0 or b <= 0:
        raise ValueError("ellipsoid axes must be positive")
    k_max = _nonneg_k(k_max)
    need = k_max + 1
    key = (a, b)
    with _SPECTRUM_LOCK:
        cached = _SPECTRUM_CACHE.get(key)
        if cached is not None and len(cached) >= need:
            return list(cached[:need])
    L = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    A, B = int(a * L), int(b * L)
    T = A + B
    while sum((T - m * A) // B + 1 for m in range(T // A + 1)) < need:
        T *= 2
    raw = []
    for m in range(T // A + 1):
        rem = T - m * A
        for n in range(rem // B + 1):
            raw.append((m * A + n * B, m, n))
    raw.sort()
    entries = [SpectrumEntry(Fraction(v, L), m, n, 2 * i)
               for i, (v, m, n) in enumerate(raw[:need])]
    with _SPECTRUM_LOCK:
        cached = _SPECTRUM_CACHE.get(key)
        if cached is None or len(cached) < len(entries):
            _SPECTRUM_CACHE[key] = entries
    return list(entries)


def ck_polydisk(a, b, k) -> CapacityResult:
    a, b = rational(a), rational(b)
    if a <= 0 or b <= 0:
        raise ValueError("polydisk factors must be positive")
    k = _nonneg_k(k)
    best = None
    witness = None
    for m in range(k + 1):
        n = -(-(k + 1) // (m + 1)) - 1  # smallest n with (m+1)(n+1) >= k+1
        v = a * m + b * n
        if best is None or v < best:
            best, witness = v, (m, n)
    return _checked(CapacityResult(k, best, "polydisk_formula", witness))


def ck_convex_toric(omega, k, fast_monotone: bool = False) -> CapacityResult:
    k = _nonneg_k(k)
    opt = paths.min_convex(convex_context(omega), k, "at_least",
                           fast_monotone=fast_monotone)
    return _checked(CapacityResult(k, opt.value, "convex_path", opt.witness))


def ck_concave_toric(omega, k) -> CapacityResult:
    k = _nonneg_k(k)
    opt = paths.max_concave(concave_context(omega), k)
    return _checked(CapacityResult(k, opt.value, "concave_path", opt.witness))


def _union_table(parts, kmax: int):
    """DP over parts; returns (values row 0..kmax, pick tables for parts
    1..m-1 used to rebuild the witness composition)."""
    rows = [[ck(p, t).value for t in range(kmax + 1)] for p in parts]
    f = list(rows[0])
    picks = []
    for i in range(1, len(parts)):
        vi = rows[i]
        nf, pk = [], []
        for j in range(kmax + 1):
            bt, bv = 0, f[j] + vi[0]
            for t in range(1, j + 1):
                v = f[j - t] + vi[t]
                if v > bv:
                    bv, bt = v, t
            nf.append(bv)
            pk.append(bt)
        f = nf
        picks.append(pk)
    return f, picks


def _union_witness(picks, k: int, nparts: int):
    comp = [0] * nparts
    j = k
    for i in range(nparts - 1, 0, -1):
        t = picks[i - 1][j]
        comp[i] = t
        j -= t
    comp[0] = j
    return tuple(comp)


def ck_union(parts, k) -> CapacityResult:
    if isinstance(parts, DisjointUnion):
        parts = parts.parts
    parts = tuple(parts)
    if not parts:
        raise ValueError("disjoint union needs at least one part")
    k = _nonneg_k(k)
    f, picks = _union_table(parts, k)
    witness = _union_witness(picks, k, len(parts))
    return _checked(CapacityResult(k, f[k], "union_dp", witness))


def ck_concave_via_weights(omega, k, depth_cap: int = 64) -> CapacityResult:
    k = _nonneg_k(k)
    if k == 0:
        return CapacityResult(0, Fraction(0), "weights", ())
    ws = weight_expansion(omega, depth_cap)
    # at most k parts can receive a positive share, and the ball formula
    # prefers larger sizes, so the k largest weights suffice
    balls = [Ball(w) for w in ws[:k]]
    f, picks = _union_table(balls, k)
    witness = _union_witness(picks, k, len(balls))
    return _checked(CapacityResult(k, f[k], "weights", witness))


def ck_convex_via_weights(omega, k, l_max: int = 100,
                          depth_cap: int = 64) -> CapacityResult:
    k = _nonneg_k(k)
    l_max = int(l_max)
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    decomp = negative_weight_sequence(omega, depth_cap)
    if decomp.negatives:
        balls = [Ball(w) for w in decomp.negatives[:max(l_max, 1)]]
        f_neg, _ = _union_table(balls, l_max)
    else:
        f_neg = [Fraction(0)]  # no excised balls: only l = 0 applies
    best = None
    l_star = 0
    for l in range(len(f_neg)):
        v = ck_ball(decomp.head, k + l).value - f_neg[l]
        if best is None or v < best:
            best, l_star = v, l
    if decomp.negatives and l_star == l_max:
        warnings.warn(
            f"shift minimum attained at the truncation bound l_max={l_max}; "
            "the reported value is an upper bound", TruncationWarning,
            stacklevel=2)
    return _checked(CapacityResult(k, best, "weights", {"l": l_star}))


def ck_closed(d, k) -> CapacityResult:
    k = _nonneg_k(k)
    if isinstance(d, CP2):
        inner = ck_ball(d.a, k)
        return CapacityResult(k, inner.value, "cp2", inner.witness)
    if isinstance(d, S2xS2):
        inner = ck_polydisk(d.a, d.b, k)
        return CapacityResult(k, inner.value, "s2xs2", inner.witness)
    raise ValueError(f"not a supported closed manifold: {d!r}")


def ech_index_closed(kind: str, cls) -> int:
    """Index of the degree-d line class (cp2) or the bidegree-(m,n) class
    (s2xs2)."""
    if kind == "cp2":
        d = int(cls[0]) if isinstance(cls, (tuple, list)) else int(cls)
        if d < 0:
            raise ValueError("class degree must be nonnegative")
        return d * d + 3 * d
    if kind == "s2xs2":
        m, n = int(cls[0]), int(cls[1])
        if m < 0 or n < 0:
            raise ValueError("class bidegree must be nonnegative")
        return 2 * (m * n + m + n)
    raise ValueError(f"unknown closed kind {kind!r}")


_MEMO_LOCK = threading.Lock()
_MEMO: dict = {}


def _dispatch(d: Domain, k: int) -> CapacityResult:
    if isinstance(d, Ball):
        return ck_ball(d.a, k)
    if isinstance(d, Ellipsoid):
        e = ellipsoid_spectrum(d.a, d.b, k)[k]
        return _checked(CapacityResult(k, e.action, "ellipsoid_spectrum", (e.m, e.n)))
    if isinstance(d, Polydisk):
        return ck_polydisk(d.a, d.b, k)
    if isinstance(d, ConvexToric):
        return ck_convex_toric(d, k)
    if isinstance(d, ConcaveToric):
        return ck_concave_via_weights(d, k)
    if isinstance(d, DisjointUnion):
        return ck_union(d, k)
    if isinstance(d, (CP2, S2xS2)):
        return ck_closed(d, k)
    raise ValueError(f"unsupported domain: {d!r}")


def _cross_check(d: Domain, k: int, result: CapacityResult) -> None:
    if isinstance(d, ConcaveToric):
        other = ck_concave_toric(d, k)
    elif isinstance(d, ConvexToric):
        other = ck_convex_via_weights(d, k)
    else:
        return
    if other.value != result.value:
        raise RuntimeError(
            f"cross-check failed for {domain_key(d)} at k={k}: "
            f"{result.method} gives {rational_str(result.value)}, "
            f"{other.method} gives {rational_str(other.value)}")


def ck(d: Domain, k, verify: bool = False) -> CapacityResult:
    """Capacity via the fastest applicable formula.

    verify=True recomputes convex-toric values through the weight formula
    and concave-toric values through the path optimum and insists they
    agree; other kinds have a single formula each.
    """
    k = _nonneg_k(k)
    key = (domain_key(d), k)
    if not verify:
        with _MEMO_LOCK:
            hit = _MEMO.get(key)
        if hit is not None:
            return hit
    result = _dispatch(d, k)
    if verify:
        _cross_check(d, k, result)
    with _MEMO_LOCK:
        _MEMO.setdefault(key, result)
    return result


def capacity_sequence(d: Domain, kmax) -> list:
    """CapacityResults for k = 0..kmax; ellipsoids build their spectrum
    once instead of once per k."""
    kmax = _nonneg_k(kmax)
    if isinstance(d, Ellipsoid):
        ellipsoid_spectrum(d.a, d.b, kmax)  # warm the shared cache
    return [ck(d, k) for k in range(kmax + 1)]


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


# --- cross-process persistence --------------------------------------------

def witness_to_json(w):
    """Witnesses are heterogeneous (path, pair, composition, shift, degree);
    normalize to plain JSON for output and persistence."""
    if w is None or isinstance(w, (int, bool)):
        return w
    if isinstance(w, LatticePath):
        return path_to_json(w)
    if isinstance(w, Fraction):
        return rational_str(w)
    if isinstance(w, (tuple, list)):
        return [witness_to_json(x) for x in w]
    if isinstance(w, dict):
        return {str(key): witness_to_json(v) for key, v in w.items()}
    raise ValueError(f"unserializable witness: {w!r}")


def _cache_file(cache_dir: str) -> str:
    return os.path.join(cache_dir, "capacities.json")


def load_disk_cache(cache_dir: str) -> int:
    """Merge a previously saved memo file into the in-process memo.
    Returns the number of entries loaded; missing file is not an error."""
    try:
        with open(_cache_file(cache_dir), "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except FileNotFoundError:
        return 0
    if not isinstance(payload, dict) or payload.get("version") != 1:
        raise ValueError("unrecognized capacity cache format")
    loaded = 0
    for key, entry in payload.get("entries", {}).items():
        dk, _, ks = key.rpartition("#")
        result = CapacityResult(int(ks), rational(entry["c"]), entry["method"],
                                entry.get("witness"))
        with _MEMO_LOCK:
            _MEMO.setdefault((dk, int(ks)), result)
        loaded += 1
    return loaded


def save_disk_cache(cache_dir: str) -> int:
    """Write the current memo next to any previously saved entries."""
    os.makedirs(cache_dir, exist_ok=True)
    try:
        with open(_cache_file(cache_dir), "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        entries = payload.get("entries", {}) if payload.get("version") == 1 else {}
    except (FileNotFoundError, ValueError):
        entries = {}
    with _MEMO_LOCK:
        snapshot = dict(_MEMO)
    for (dk, k), result in snapshot.items():
        if isinstance(result.value, _Infinity):
            continue
        entries[f"{dk}#{k}"] = {"c": rational_str(result.value),
                                "method": result.method,
                                "witness": witness_to_json(result.witness)}
    tmp = _cache_file(cache_dir) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        # sort entry keys by hand; sort_keys would also reorder nested
        # witness objects and break byte-stable reloads
        json.dump({"version": 1,
                   "entries": {key: entries[key] for key in sorted(entries)}}, fh)
    os.replace(tmp, _cache_file(cache_dir))
    return len(entries)
