"""Extremal constructions and seeded test-bed instances.

All generators are deterministic functions of their parameters (and seed).
"""

from dataclasses import dataclass

import numpy as np

from .errors import CannotSatisfyError, EvenOrderError, GlueSpecError
from .graph import OrientedGraph, degree_summary, directed_girth


def blow_up_cycle(k, m):
    """Blow-up of a directed k-cycle with parts of size m.

    Part i is vertices [i*m, (i+1)*m); every vertex of part i sends an edge
    to every vertex of part i+1 mod k.  Minimum semidegree is m = floor(n/k),
    and every closed walk has length divisible by k.
    """
    if k < 3 or m < 1:
        raise ValueError("need k >= 3 and m >= 1")
    edges = []
    for i in range(k):
        nxt = (i + 1) % k
        for u in range(i * m, (i + 1) * m):
            for v in range(nxt * m, (nxt + 1) * m):
                edges.append((u, v))
    return OrientedGraph(k * m, edges)


def regular_tournament(m):
    """Rotational tournament on odd m: i beats i+1 .. i+(m-1)/2 (mod m)."""
    if m < 3 or m % 2 == 0:
        raise EvenOrderError(f"regular tournament needs odd order >= 3, got {m}")
    half = (m - 1) // 2
    edges = [(i, (i + d) % m) for i in range(m) for d in range(1, half + 1)]
    return OrientedGraph(m, edges)


@dataclass(frozen=True)
class GlueSpec:
    """Parameters for gluing regular tournaments at a shared vertex."""

    k: int
    ell: int

    def __post_init__(self):
        if self.k < 3:
            raise GlueSpecError(f"k must be >= 3, got {self.k}")
        if self.ell <= 4 or self.ell % 2:
            raise GlueSpecError(f"ell must be even and > 4, got {self.ell}")

    @property
    def copies(self):
        return (self.k - 1) // 2

    @property
    def tournament_order(self):
        return self.ell - 1

    @property
    def n(self):
        return self.copies * (self.ell - 2) + 1


def glued_tournaments(spec):
    """Union of floor((k-1)/2) regular tournaments on ell-1 vertices sharing
    vertex 0.

    No cycle is longer than ell-1 (every cycle stays inside one copy), the
    minimum semidegree is (ell-2)/2, attained away from the shared vertex,
    and floor(n/k) + 1 <= delta0.
    """
    order = spec.tournament_order
    base = regular_tournament(order)
    edges = []
    for c in range(spec.copies):
        offset = 1 + c * (spec.ell - 2)

        def relabel(local, offset=offset):
            return 0 if local == 0 else offset + (local - 1)

        for u, v in base.edges:
            edges.append((relabel(u), relabel(v)))
    return OrientedGraph(spec.n, edges)


def regime_instance(k, n, seed):
    """Seeded instance with verified delta0 > n/k and directed girth >= k.

    Construction: every vertex i sends edges to i+1 .. i+d (mod n) with
    d = floor(n/k) + 1, plus a seeded random set of longer forward chords of
    span at most ceil(n/(k-1)) - 1.  Every directed cycle winds around 0..n-1
    at least once using steps below n/(k-1), hence has length >= k; both
    properties are re-verified before returning.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    if n < 64 * k:
        raise CannotSatisfyError(f"regime instances need n >= 64k = {64 * k}, got {n}")
    d = n // k + 1
    span_cap = -((-n) // (k - 1)) - 1  # largest span keeping all cycles >= k
    if d > span_cap:
        raise CannotSatisfyError(
            f"window d={d} exceeds girth-safe span cap {span_cap}"
        )
    rng = np.random.default_rng(seed)
    edges = []
    for v in range(n):
        spans = list(range(1, d + 1))
        extra_room = span_cap - d
        if extra_room > 0:
            count = int(rng.integers(0, min(3, extra_room) + 1))
            if count:
                spans.extend(
                    int(s)
                    for s in rng.choice(
                        np.arange(d + 1, span_cap + 1), size=count, replace=False
                    )
                )
        for s in spans:
            edges.append((v, (v + s) % n))
    g = OrientedGraph(n, edges)
    summary = degree_summary(g)
    if summary.min_semi * k <= n:
        raise CannotSatisfyError(
            f"self-check failed: delta0={summary.min_semi} not above n/k"
        )
    girth = directed_girth(g).girth
    if not girth >= k:
        raise CannotSatisfyError(f"self-check failed: girth {girth} below k={k}")
    return g


def bipartite_chorded_cycle(r, chords=1, seed=None):
    """Bipartite host for the layered search: a directed 2r-cycle plus
    span-3 forward chords.

    Each chord u -> u+3 keeps the graph bipartite (odd span) and creates a
    closed mixed walk with 3 forward and 1 backward steps.  A directed cycle
    using c chords has length 2r - 2c, so with chords <= r - 4 the directed
    girth stays >= 8.  Strongly connected via the base cycle.
    """
    n = 2 * r
    if r < 5:
        raise ValueError("need r >= 5 so a chord fits while girth stays >= 8")
    if not 1 <= chords <= r - 4:
        raise ValueError(f"chords must be in [1, {r - 4}] to keep girth >= 8")
    rng = np.random.default_rng(seed)
    positions = sorted(
        int(p) for p in rng.choice(np.arange(n), size=chords, replace=False)
    )
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((u, (u + 3) % n) for u in positions)
    return OrientedGraph(n, edges)
