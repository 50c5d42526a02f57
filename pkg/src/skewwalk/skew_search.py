"""Layered search for closed walks with unequal forward/backward counts.

From a start vertex x, forward layers X_i iterate out-neighbourhoods and
backward layers Y_j iterate in-neighbourhoods.  A vertex appearing in two
forward layers (or two backward layers) of different depths closes a mixed
walk with a != b; a vertex shared by a forward and a backward layer closes
a directed walk.  Layers are vertex sets (walks, not paths), with one
recorded parent per (vertex, layer).
"""

from dataclasses import dataclass

from .errors import DirectedShortWalkError, SkewWalkNotFoundError
from .walks import DirectedWalk, SkewWalk, validate_mixed_walk


@dataclass(frozen=True)
class LayerSystem:
    """Forward/backward layers from one start vertex with parent links."""

    start: int
    x_layers: tuple  # x_layers[i-1] = frozenset X_i, X_1 = N+(start)
    y_layers: tuple
    parent_x: dict  # (vertex, depth) -> predecessor on a forward walk
    parent_y: dict  # (vertex, depth) -> successor towards the start

    def forward_chain(self, v, depth):
        """Directed walk start -> ... -> v of exactly `depth` forward edges."""
        chain = [v]
        for d in range(depth, 1, -1):
            chain.append(self.parent_x[(chain[-1], d)])
        chain.append(self.start)
        chain.reverse()
        return chain

    def backward_chain(self, v, depth):
        """Directed walk v -> ... -> start of exactly `depth` forward edges."""
        chain = [v]
        for d in range(depth, 1, -1):
            chain.append(self.parent_y[(chain[-1], d)])
        chain.append(self.start)
        return chain


@dataclass(frozen=True)
class Collision:
    vertex: int
    kind: str  # "XX", "YY" or "XY"
    i: int
    j: int


def build_layers(graph, start, k):
    """Layers X_1..X_D and Y_1..Y_D with D = ceil(k/2), k >= 4."""
    if k < 4:
        raise ValueError("layer construction needs k >= 4")
    depth = (k + 1) // 2
    parent_x = {}
    parent_y = {}
    x_layers = []
    y_layers = []
    current = {start}
    for d in range(1, depth + 1):
        nxt = set()
        for u in current:
            for w in graph.out_neighbors(u):
                if w not in nxt:
                    nxt.add(w)
                    parent_x[(w, d)] = u
        x_layers.append(frozenset(nxt))
        current = nxt
    current = {start}
    for d in range(1, depth + 1):
        nxt = set()
        for u in current:
            for w in graph.in_neighbors(u):
                if w not in nxt:
                    nxt.add(w)
                    parent_y[(w, d)] = u
        y_layers.append(frozenset(nxt))
        current = nxt
    return LayerSystem(
        start=start,
        x_layers=tuple(x_layers),
        y_layers=tuple(y_layers),
        parent_x=parent_x,
        parent_y=parent_y,
    )


def scan_collisions(layers, k):
    """Collisions in deterministic order: increasing i+j, XX, then YY, then XY.

    XX/YY collisions need i != j; any pair with i + j < k and depths within
    ceil(k/2) qualifies.  Within a class, pairs are ordered by increasing i
    and vertices by id.
    """
    depth = len(layers.x_layers)
    out = []
    for total in range(2, k):
        for kind in ("XX", "YY", "XY"):
            for i in range(1, depth + 1):
                j = total - i
                if j < 1 or j > depth:
                    continue
                if kind in ("XX", "YY"):
                    if i >= j:
                        continue  # i < j once per unordered pair
                    a = layers.x_layers if kind == "XX" else layers.y_layers
                    shared = a[i - 1] & a[j - 1]
                else:
                    shared = layers.x_layers[i - 1] & layers.y_layers[j - 1]
                for v in sorted(shared):
                    out.append(Collision(vertex=v, kind=kind, i=i, j=j))
    return out


def _skew_from_collision(graph, layers, col):
    """Closed mixed walk from an XX or YY collision; a = max(i,j), b = min."""
    i, j = col.i, col.j  # i < j
    if col.kind == "XX":
        long_chain = layers.forward_chain(col.vertex, j)  # start..v, j edges
        short_chain = layers.forward_chain(col.vertex, i)
        vertices = tuple(long_chain) + tuple(reversed(short_chain))[1:]
    else:
        long_chain = layers.backward_chain(col.vertex, j)  # v..start, j edges
        short_chain = layers.backward_chain(col.vertex, i)
        vertices = tuple(long_chain) + tuple(reversed(short_chain))[1:]
    dirs = (True,) * j + (False,) * i
    walk = SkewWalk(vertices=vertices, dirs=dirs)
    bad = validate_mixed_walk(graph, walk)
    assert bad is None, f"reconstructed walk invalid at step {bad}"
    return walk


def _directed_from_collision(graph, layers, col):
    """Closed directed walk start -> v -> start from an XY collision."""
    fwd = layers.forward_chain(col.vertex, col.i)
    back = layers.backward_chain(col.vertex, col.j)
    walk = DirectedWalk(tuple(fwd) + tuple(back)[1:], closed=True)
    return walk


def find_skew_walk(graph, k):
    """Scan all start vertices for a closed walk with a != b, a + b < k.

    Intended regime: bipartite host, minimum semidegree above n/k, k odd or
    divisible by 4, directed girth at least k; the search itself runs on any
    input.  Raises DirectedShortWalkError when only direct (XY) collisions
    exist, and SkewWalkNotFoundError when no start yields any collision.
    """
    xy_witness = None
    layer_diag = {}
    for start in range(graph.n):
        layers = build_layers(graph, start, k)
        if not layer_diag:
            layer_diag = {
                "x_sizes": [len(s) for s in layers.x_layers],
                "y_sizes": [len(s) for s in layers.y_layers],
            }
        for col in scan_collisions(layers, k):
            if col.kind in ("XX", "YY"):
                return _skew_from_collision(graph, layers, col)
            if xy_witness is None:
                xy_witness = _directed_from_collision(graph, layers, col)
    if xy_witness is not None:
        raise DirectedShortWalkError(xy_witness)
    raise SkewWalkNotFoundError({"n": graph.n, "k": k, "first_start": layer_diag})
