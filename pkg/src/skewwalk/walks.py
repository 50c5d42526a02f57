"""Walk data types, validation, winding and length composition.

Walks store vertices only; edges are re-derived against the host graph at
validation time.  All values are immutable.
"""

from dataclasses import dataclass, field

from . import arith
from .errors import (
    CannotReachLengthError,
    ConnectorMismatchError,
    GcdNotDividingError,
    NegativeWindingError,
    NotDivisibleError,
    NotSkewError,
)

FORWARD = True
BACKWARD = False


@dataclass(frozen=True)
class DirectedWalk:
    """Vertex sequence v0..vm where every consecutive pair is a forward edge.

    A closed walk has vm == v0; the single-vertex closed walk (length 0) is
    allowed as a degenerate identity anchor.
    """

    vertices: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("walk needs at least one vertex")
        if self.closed and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed walk must end where it starts")

    @property
    def length(self):
        return len(self.vertices) - 1


def validate_directed_walk(graph, walk):
    """Index of the first step that is not a forward edge, or None if valid."""
    vs = walk.vertices
    for i in range(len(vs) - 1):
        if not graph.has_edge(vs[i], vs[i + 1]):
            return i
    return None


@dataclass(frozen=True)
class MixedWalk:
    """Closed walk whose steps carry forward/backward traversal labels.

    Step i goes from vertices[i] to vertices[i+1]; a forward step uses the
    edge in its own direction, a backward step traverses an edge of the host
    against its orientation.
    """

    vertices: tuple
    dirs: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "dirs", tuple(bool(d) for d in self.dirs))
        if len(self.vertices) != len(self.dirs) + 1:
            raise ValueError("need exactly one more vertex than steps")
        if len(self.dirs) < 1:
            raise ValueError("mixed walk needs at least one step")
        if self.vertices[0] != self.vertices[-1]:
            raise ValueError("mixed walk must be closed")

    @property
    def length(self):
        return len(self.dirs)

    @property
    def forward_count(self):
        return sum(1 for d in self.dirs if d)

    @property
    def backward_count(self):
        return self.length - self.forward_count

    @property
    def is_directed(self):
        return self.backward_count == 0

    def reversed_walk(self):
        """Same closed walk traversed the other way round; labels flip."""
        return type(self)(
            vertices=tuple(reversed(self.vertices)),
            dirs=tuple(not d for d in reversed(self.dirs)),
        )


def validate_mixed_walk(graph, walk):
    """Index of the first step whose labelled edge is absent, or None."""
    vs, ds = walk.vertices, walk.dirs
    for i, d in enumerate(ds):
        if d:
            if not graph.has_edge(vs[i], vs[i + 1]):
                return i
        else:
            if not graph.has_edge(vs[i + 1], vs[i]):
                return i
    return None


class SkewWalk(MixedWalk):
    """Closed mixed walk with unequal forward/backward counts, a > b."""

    def __post_init__(self):
        super().__post_init__()
        a, b = self.forward_count, self.backward_count
        if a == b:
            raise NotSkewError(f"forward and backward counts are equal ({a})")
        if a < b:
            raise NotSkewError(
                "more backward than forward steps; reverse the traversal first"
            )

    @classmethod
    def from_mixed(cls, walk):
        """Normalise a mixed walk into a SkewWalk (reverse if b > a)."""
        if walk.forward_count == walk.backward_count:
            raise NotSkewError("mixed walk has a == b; not skew")
        if walk.forward_count < walk.backward_count:
            walk = walk.reversed_walk()
        return cls(vertices=walk.vertices, dirs=walk.dirs)

    def canonical(self):
        """Rotation starting at the first forward run (after a backward step)."""
        if self.backward_count == 0:
            return self
        m = self.length
        ds = self.dirs
        i = next(t for t in range(m) if ds[t] and not ds[t - 1])
        vs = self.vertices
        return SkewWalk(
            vertices=vs[i:m] + vs[: i + 1],
            dirs=ds[i:] + ds[:i],
        )

    def backward_segments(self):
        """Maximal backward runs of the walk as (start, end) step ranges.

        Only meaningful on the canonical rotation, where no run wraps
        around the start.
        """
        segs = []
        m = self.length
        t = 0
        while t < m:
            if not self.dirs[t]:
                start = t
                while t < m and not self.dirs[t]:
                    t += 1
                segs.append((start, t))
            else:
                t += 1
        return tuple(segs)


@dataclass(frozen=True)
class ConnectorSet:
    """One directed path per maximal backward segment of a skew walk.

    segments[i] = (y, x): the i-th backward run starts at y and ends at x in
    walk order (the run's own edges are all oriented from x towards y), and
    paths[i] runs from y to x.
    """

    segments: tuple
    paths: tuple

    def __post_init__(self):
        if len(self.segments) != len(self.paths):
            raise ConnectorMismatchError(
                f"{len(self.segments)} segments but {len(self.paths)} paths"
            )
        for (y, x), path in zip(self.segments, self.paths):
            if path.vertices[0] != y or path.vertices[-1] != x:
                raise ConnectorMismatchError(
                    f"connector for segment ({y}, {x}) runs "
                    f"{path.vertices[0]} -> {path.vertices[-1]}"
                )

    @property
    def total_length(self):
        return sum(p.length for p in self.paths)


@dataclass(frozen=True)
class WalkExpression:
    """Symbolic closed walk: u windings of base1 plus v windings of base2.

    Both bases are closed directed walks anchored at the same vertex, and
    total_length = u*len(base1) + v*len(base2) as an exact big-int identity.
    """

    base1: DirectedWalk
    base2: DirectedWalk
    anchor: int
    u: int
    v: int
    total_length: int
    certificate: arith.ComposerCertificate | None = field(default=None, compare=False)

    def __post_init__(self):
        if not (self.base1.closed and self.base2.closed):
            raise ValueError("winding bases must be closed walks")
        if self.base1.vertices[0] != self.anchor or self.base2.vertices[0] != self.anchor:
            raise ValueError("both bases must start at the anchor")
        if self.u < 0 or self.v < 0 or self.u + self.v < 1:
            raise ValueError("winding counts must be nonnegative, not both zero")
        if self.u * self.base1.length + self.v * self.base2.length != self.total_length:
            raise ValueError("total_length does not match u*l1 + v*l2")

    def validate(self, graph):
        """First invalid step index in either base, or None if fully valid."""
        bad = validate_directed_walk(graph, self.base1)
        if bad is not None:
            return ("base1", bad)
        bad = validate_directed_walk(graph, self.base2)
        if bad is not None:
            return ("base2", bad)
        return None

    def to_json_dict(self):
        return {
            "base1": list(self.base1.vertices),
            "base2": list(self.base2.vertices),
            "anchor": self.anchor,
            "u": str(self.u),
            "v": str(self.v),
            "total_length": str(self.total_length),
        }

    @classmethod
    def from_json_dict(cls, d):
        return cls(
            base1=DirectedWalk(tuple(d["base1"]), closed=True),
            base2=DirectedWalk(tuple(d["base2"]), closed=True),
            anchor=d["anchor"],
            u=int(d["u"]),
            v=int(d["v"]),
            total_length=int(d["total_length"]),
        )


def wind(cycle, ell):
    """Walk expression of length ell obtained by winding one closed walk."""
    if not cycle.closed or cycle.length < 1:
        raise ValueError("winding base must be a closed walk of positive length")
    if ell < 1:
        raise ValueError("target length must be positive")
    if ell % cycle.length:
        raise NotDivisibleError(f"{cycle.length} does not divide {ell}")
    return WalkExpression(
        base1=cycle,
        base2=cycle,
        anchor=cycle.vertices[0],
        u=ell // cycle.length,
        v=0,
        total_length=ell,
    )


def build_base_walks(graph, walk, connectors):
    """Derive the two closed directed walks used for length composition.

    From a skew walk with a forward and b backward steps plus one connector
    path per backward segment, build:

    * walk 1: the forward edges with each backward segment replaced by its
      connector; length a + l(P).
    * walk 2: every edge of the walk exactly once (backward segments
      traversed in their true direction) and each connector twice; length
      a + b + 2*l(P).

    Then 2*len(walk1) - len(walk2) = a - b.  When b == 0 both walks equal
    the input.  Returns (walk1, walk2, anchor).
    """
    w = walk.canonical()
    segs = w.backward_segments()
    expected = tuple((w.vertices[s], w.vertices[e]) for s, e in segs)
    if expected != connectors.segments:
        raise ConnectorMismatchError(
            f"walk segments {expected} != connector segments {connectors.segments}"
        )
    anchor = w.vertices[0]
    if not segs:
        base = DirectedWalk(w.vertices, closed=True)
        return base, base, anchor

    by_start = {s: (e, path) for (s, e), path in zip(segs, connectors.paths)}
    w1 = [anchor]
    w2 = [anchor]
    t = 0
    m = w.length
    while t < m:
        if w.dirs[t]:
            w1.append(w.vertices[t + 1])
            w2.append(w.vertices[t + 1])
            t += 1
        else:
            e, path = by_start[t]
            # walk 1: the connector replaces the backward run
            w1.extend(path.vertices[1:])
            # walk 2: connector, then the run's edges in true direction, then
            # the connector again
            w2.extend(path.vertices[1:])
            w2.extend(w.vertices[i] for i in range(e - 1, t - 1, -1))
            w2.extend(path.vertices[1:])
            t = e
    walk1 = DirectedWalk(tuple(w1), closed=True)
    walk2 = DirectedWalk(tuple(w2), closed=True)
    return walk1, walk2, anchor


def compose(walk1, walk2, anchor, ell):
    """Walk expression of exact length ell from two anchored closed walks.

    Tries the direct Bezout composition first and falls back to the general
    nonnegative solver; raises CannotReachLengthError when neither yields a
    nonnegative winding pair.
    """
    if not (walk1.closed and walk2.closed):
        raise ValueError("composition needs closed walks")
    if walk1.vertices[0] != anchor or walk2.vertices[0] != anchor:
        raise ValueError("both walks must start at the anchor")
    if ell < 1:
        raise ValueError("target length must be positive")
    l1, l2 = walk1.length, walk2.length
    cert = None
    try:
        cert = arith.bezout_compose(l1, l2, ell)
        u, v = cert.u, cert.v
    except (GcdNotDividingError, NegativeWindingError) as exc:
        pair = arith.solve_nonneg(l1, l2, ell)
        if pair is None:
            cause = (
                "gcd obstruction" if isinstance(exc, GcdNotDividingError)
                else "ell too small"
            )
            raise CannotReachLengthError(l1, l2, ell, cause) from exc
        u, v = pair
    return WalkExpression(
        base1=walk1,
        base2=walk2,
        anchor=anchor,
        u=u,
        v=v,
        total_length=ell,
        certificate=cert,
    )


def expand(expression, limit):
    """Explicit vertex sequence of the expression, or None when too long."""
    if expression.total_length > limit:
        return None
    verts = [expression.anchor]
    for _ in range(expression.u):
        verts.extend(expression.base1.vertices[1:])
    for _ in range(expression.v):
        verts.extend(expression.base2.vertices[1:])
    return DirectedWalk(tuple(verts), closed=True)
