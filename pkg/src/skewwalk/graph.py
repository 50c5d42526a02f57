"""Oriented-graph data type and its elementary statistics.

An oriented graph is loop-free and contains no anti-parallel edge pair;
both properties are enforced at construction.  Instances are immutable
after construction and safe to share across threads.
"""

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import (
    EdgeListParseError,
    EmptyGraphError,
    InvalidDegreeError,
    KTooSmallError,
    LoopError,
    NotBipartiteError,
    TwoCycleError,
)
from .walks import DirectedWalk, MixedWalk


class OrientedGraph:
    """Loop-free digraph with no 2-cycles; vertices are 0..n-1."""

    __slots__ = ("n", "_edge_set", "_out", "_in", "_cache")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        edge_set = set()
        out = [[] for _ in range(n)]
        incoming = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if (u, v) in edge_set:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if (v, u) in edge_set:
                raise TwoCycleError(f"anti-parallel pair between {u} and {v}")
            edge_set.add((u, v))
            out[u].append(v)
            incoming[v].append(u)
        self._edge_set = frozenset(edge_set)
        self._out = tuple(tuple(sorted(ws)) for ws in out)
        self._in = tuple(tuple(sorted(ws)) for ws in incoming)
        self._cache = {}

    @property
    def edges(self):
        return self._edge_set

    @property
    def edge_count(self):
        return len(self._edge_set)

    def has_edge(self, u, v):
        return (u, v) in self._edge_set

    def out_neighbors(self, v):
        return self._out[v]

    def in_neighbors(self, v):
        return self._in[v]

    def underlying_neighbors(self, v):
        return tuple(sorted(set(self._out[v]) | set(self._in[v])))

    # cached accelerator-facing representations -----------------------------

    def csr_out(self):
        if "csr_out" not in self._cache:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._out[v])
            indices = np.fromiter(
                (w for ws in self._out for w in ws), dtype=np.int32,
                count=self.edge_count,
            )
            self._cache["csr_out"] = (indptr, indices)
        return self._cache["csr_out"]

    def bool_adjacency(self):
        if "bool_adj" not in self._cache:
            mat = np.zeros((self.n, self.n), dtype=bool)
            for u, v in self._edge_set:
                mat[u, v] = True
            self._cache["bool_adj"] = mat
        return self._cache["bool_adj"]

    def __repr__(self):
        return f"OrientedGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeSummary:
    min_out: int
    min_in: int
    min_semi: int
    min_underlying: int


def degree_summary(graph):
    """Exact degree minima; raises EmptyGraphError for n = 0."""
    if graph.n == 0:
        raise EmptyGraphError("degree summary of the empty graph")
    outs = [len(graph.out_neighbors(v)) for v in range(graph.n)]
    ins = [len(graph.in_neighbors(v)) for v in range(graph.n)]
    return DegreeSummary(
        min_out=min(outs),
        min_in=min(ins),
        min_semi=min(min(outs), min(ins)),
        # no double counting: an oriented graph has deg = outdeg + indeg
        min_underlying=min(o + i for o, i in zip(outs, ins)),
    )


class GirthResult(NamedTuple):
    girth: object  # int, or math.inf when acyclic
    witness: object  # DirectedWalk or None


def _shortest_cycle_through(graph, s, target_len):
    """Witness cycle of length target_len through s (BFS with parents)."""
    parent = {s: None}
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        if dist[u] + 1 == target_len and graph.has_edge(u, s):
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            return DirectedWalk(tuple(path) + (s,), closed=True)
        for w in graph.out_neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
    raise AssertionError("witness reconstruction failed")  # pragma: no cover


def directed_girth(graph):
    """Length of the shortest directed cycle plus one witness cycle.

    Runs one BFS per start vertex (O(n*m)); returns (math.inf, None) for
    acyclic graphs.
    """
    if graph.n == 0:
        return GirthResult(math.inf, None)
    indptr, indices = graph.csr_out()
    per_start = _kernels.girth_per_start(
        indptr, indices, graph.n,
        adj_bool=None if _kernels.NUMBA_ACTIVE else graph.bool_adjacency(),
    )
    finite = per_start[per_start != _kernels.NO_CYCLE]
    if finite.size == 0:
        return GirthResult(math.inf, None)
    girth = int(finite.min())
    start = int(np.where(per_start == girth)[0][0])
    return GirthResult(girth, _shortest_cycle_through(graph, start, girth))


# -- girth upper bound for given minimum outdegree --------------------------

_LOG_CONST_CACHE = {}


def _log_constant_bounds(digits):
    """Certified rational bounds on ln((2+sqrt(7))/3)."""
    if digits not in _LOG_CONST_CACHE:
        import mpmath

        with mpmath.workdps(digits + 15):
            scaled = int(mpmath.floor(mpmath.ln((2 + mpmath.sqrt(7)) / 3) * 10**digits))
        _LOG_CONST_CACHE[digits] = (
            Fraction(scaled - 1, 10**digits),
            Fraction(scaled + 2, 10**digits),
        )
    return _LOG_CONST_CACHE[digits]


def shen_girth_bound(n, d):
    """3 * ceil(ln((2+sqrt(7))/3) * n / d): girth bound at min outdegree d.

    The constant is evaluated with certified rational bounds at increasing
    precision until the ceiling is provably correct and the argument is
    certifiably not within 1e-9 of an integer.
    """
    if d < 1 or d >= n:
        raise InvalidDegreeError(f"need 1 <= d < n, got d={d}, n={n}")
    digits = 30
    while True:
        lo, hi = _log_constant_bounds(digits)
        xlo = lo * n / d
        xhi = hi * n / d
        clo = -((-xlo.numerator) // xlo.denominator)  # ceil
        chi = -((-xhi.numerator) // xhi.denominator)
        if clo == chi:
            margin = Fraction(1, 10**9)
            near_int = (xlo - (clo - 1)) < margin or (chi - xhi) < margin
            if not near_int or digits >= 240:
                return 3 * clo
        digits *= 2


def corollary_shen_threshold(n, k):
    """Smallest integer d >= 63n/32k; at that outdegree the girth is < k."""
    if k < 7:
        raise KTooSmallError(f"threshold needs k >= 7, got {k}")
    if n < 1:
        raise ValueError("n must be positive")
    return -((-63 * n) // (32 * k))


# -- odd cycles of the underlying graph --------------------------------------

def _mixed_walk_from_cycle(graph, cycle_vertices):
    """Label a closed vertex sequence with edge orientations."""
    dirs = []
    for i in range(len(cycle_vertices) - 1):
        x, y = cycle_vertices[i], cycle_vertices[i + 1]
        if graph.has_edge(x, y):
            dirs.append(True)
        elif graph.has_edge(y, x):
            dirs.append(False)
        else:
            raise AssertionError(f"({x}, {y}) not an underlying edge")
    return MixedWalk(vertices=tuple(cycle_vertices), dirs=tuple(dirs))


def underlying_odd_girth(graph, cap):
    """Shortest odd cycle of the underlying graph with length < cap.

    Returns the witness as a MixedWalk with orientation labels read off the
    host, or None when no odd cycle shorter than cap exists.  BFS from every
    vertex; a cross edge joining two vertices at equal depth d closes an odd
    walk of length 2d+1, and the global minimum of that quantity is attained
    by a simple cycle.
    """
    if cap < 3:
        raise ValueError("cap must be at least 3")
    best = None  # (length, start, u, w, parent-map)
    max_depth = (cap - 2) // 2
    for s in range(graph.n):
        if best is not None and best[0] == 3:
            break
        parent = {s: None}
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u]
            if du > max_depth:
                break
            for w in graph.underlying_neighbors(u):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    q.append(w)
                elif dist[w] == du and w != u:
                    length = 2 * du + 1
                    if length < cap and (best is None or length < best[0]):
                        best = (length, s, u, w, parent)
        if best is not None and best[0] == 2 * 1 + 1:
            break
    if best is None:
        return None
    length, s, u, w, parent = best
    up = [u]
    while parent[up[-1]] is not None:
        up.append(parent[up[-1]])
    down = [w]
    while parent[down[-1]] is not None:
        down.append(parent[down[-1]])
    down.reverse()
    cycle = up + down[1:] + [u]  # u .. s .. w, then the level edge w-u
    assert len(cycle) - 1 == length
    assert len(set(cycle[:-1])) == length, "minimum odd closed walk must be simple"
    return _mixed_walk_from_cycle(graph, cycle)


def bipartition(graph):
    """2-colouring (V1, V2) of the underlying graph with |V1| >= |V2|.

    Raises NotBipartiteError with a witness odd cycle (as a MixedWalk) when
    the underlying graph is not bipartite.
    """
    color = {}
    parent = {}
    for s in range(graph.n):
        if s in color:
            continue
        color[s] = 0
        parent[s] = None
        q = deque([s])
        while q:
            u = q.popleft()
            for w in graph.underlying_neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    q.append(w)
                elif color[w] == color[u]:
                    raise NotBipartiteError(_odd_cycle_witness(graph, parent, u, w))
    v1 = tuple(sorted(v for v, c in color.items() if c == 0))
    v2 = tuple(sorted(v for v, c in color.items() if c == 1))
    if len(v1) < len(v2):
        v1, v2 = v2, v1
    return v1, v2


def _odd_cycle_witness(graph, parent, u, w):
    """Odd cycle through the conflict edge (u, w) via BFS-tree ancestors."""
    anc_u = [u]
    while parent[anc_u[-1]] is not None:
        anc_u.append(parent[anc_u[-1]])
    index_u = {v: i for i, v in enumerate(anc_u)}
    x = w
    down = [w]
    while x not in index_u:
        x = parent[x]
        down.append(x)
    meet = index_u[x]
    up = anc_u[: meet + 1]  # u .. meet
    down.reverse()  # meet .. w
    cycle = up + down[1:] + [u]
    assert len(cycle) % 2 == 0  # odd number of edges
    return _mixed_walk_from_cycle(graph, cycle)


# -- edge-list file format ----------------------------------------------------

def load_edge_list(path):
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise EdgeListParseError(1, "empty file, expected header 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError(1, f"expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError(1, f"non-integer header {lines[0]!r}") from None
    edges = []
    seen = set()
    lineno = 1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(lineno, f"vertex out of range in {line!r}")
        if u == v:
            raise EdgeListParseError(lineno, f"loop at vertex {u}")
        if (u, v) in seen:
            raise EdgeListParseError(lineno, f"duplicate edge ({u}, {v})")
        if (v, u) in seen:
            raise EdgeListParseError(lineno, f"anti-parallel pair ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(lineno, f"header announced {m} edges, found {len(edges)}")
    return OrientedGraph(n, edges)


def save_edge_list(graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{graph.n} {graph.edge_count}\n")
        for u in range(graph.n):
            for v in graph.out_neighbors(u):
                fh.write(f"{u} {v}\n")
