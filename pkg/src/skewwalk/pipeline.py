"""Orchestration: produce a closed-walk expression of exact length ell.

Case analysis, in fixed order:

1. ShortGirth - the directed girth s is below k and divides ell: wind the
   witness cycle.
2. OddCycle - the underlying graph has an odd cycle shorter than k: it is a
   skew walk (odd total forces a != b); connect, derive base walks, compose.
3. Bipartite - the underlying graph must now be bipartite: run the layered
   skew-walk search, then connect and compose as above.

Every returned expression has total_length exactly ell and validates against
the host.
"""

import math
from collections import deque
from dataclasses import dataclass, field

from .arith import minimal_nondivisor
from .errors import (
    CannotReachLengthError,
    DirectedShortWalkError,
    NoPathError,
    NotBipartiteError,
    PipelineNotFoundError,
    SkewWalkNotFoundError,
)
from .graph import bipartition, degree_summary, directed_girth, underlying_odd_girth
from .skew_search import find_skew_walk
from .walks import (
    ConnectorSet,
    DirectedWalk,
    SkewWalk,
    build_base_walks,
    compose,
    wind,
)


def find_short_path(graph, x, y):
    """Shortest directed x -> y path via BFS; raises NoPathError.

    In the regime n >= 64k, delta0 > n/k, girth >= k the result has length
    at most 64k; the pipeline asserts that bound when the regime holds.
    """
    if x == y:
        return DirectedWalk((x,))
    parent = {x: None}
    q = deque([x])
    while q:
        u = q.popleft()
        for w in graph.out_neighbors(u):
            if w not in parent:
                parent[w] = u
                if w == y:
                    path = [y]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return DirectedWalk(tuple(path))
                q.append(w)
    raise NoPathError(f"no directed path from {x} to {y}")


def connectors_for(graph, walk):
    """One shortest directed path per maximal backward segment of the walk.

    Paths run from each segment's start (in walk order) to its end, i.e.
    against the segment's own edge orientation.
    """
    w = walk.canonical()
    segments = []
    paths = []
    for s, e in w.backward_segments():
        y, x = w.vertices[s], w.vertices[e]
        segments.append((y, x))
        paths.append(find_short_path(graph, y, x))
    return ConnectorSet(segments=tuple(segments), paths=tuple(paths))


@dataclass
class PipelineReport:
    k: int
    branch: str  # ShortGirth | OddCycle | Bipartite
    expression: object
    diagnostics: dict = field(default_factory=dict)

    def to_json_dict(self):
        out = {
            "k": self.k,
            "branch": self.branch,
            "expression": self.expression.to_json_dict(),
            "diagnostics": dict(self.diagnostics),
        }
        cert = self.expression.certificate
        if cert is not None:
            out["diagnostics"]["certificate"] = cert.to_json_dict()
        return out


def _extract_simple_cycle(walk):
    """Simple directed cycle inside a closed directed walk.

    Repeatedly cuts out the loop between the first repeated vertex pair.
    """
    verts = list(walk.vertices)
    while True:
        seen = {}
        cut = None
        for idx, v in enumerate(verts):
            if v in seen:
                cut = (seen[v], idx)
                break
            seen[v] = idx
        if cut is None:  # pragma: no cover - closed walk always repeats v0
            raise ValueError("not a closed walk")
        p, q = cut
        if q - p == len(verts) - 1:  # the whole walk is already simple
            return DirectedWalk(tuple(verts[p:q + 1]), closed=True)
        verts = verts[: p + 1] + verts[q + 1:]
        if len(verts) - 1 < 1:  # pragma: no cover
            raise ValueError("walk reduced to nothing")


def _regime_flags(graph, k, summary):
    return {
        "n_at_least_64k": graph.n >= 64 * k,
        "semidegree_above_n_over_k": summary.min_semi * k > graph.n,
    }


def find_closed_walk_of_length(graph, ell, k=None):
    """PipelineReport with a validated expression of total length ell.

    k defaults to the minimal non-divisor of ell.  The operation runs on any
    input; on failure the raised PipelineNotFoundError's diagnostics record
    which regime precondition was violated.
    """
    if ell < 1:
        raise ValueError("target length must be positive")
    if k is None:
        k = minimal_nondivisor(ell)
    summary = degree_summary(graph)
    diag = {
        "n": graph.n,
        "m": graph.edge_count,
        "ell": str(ell),
        "k": k,
        "min_semi": summary.min_semi,
        "regime": _regime_flags(graph, k, summary),
        "large_length_regime": k >= 7 and ell >= 10**7 * k**6,
    }

    # stage 1: short girth
    girth, cycle = directed_girth(graph)
    diag["girth"] = None if girth == math.inf else girth
    diag["regime"]["girth_at_least_k"] = girth >= k
    if girth < k:
        return _wind_stage(cycle, ell, k, diag)

    # stage 2: short odd cycle in the underlying graph
    odd = underlying_odd_girth(graph, cap=k)
    if odd is not None:
        diag["odd_girth_below_k"] = odd.length
        skew = SkewWalk.from_mixed(odd)
        assert (skew.forward_count + skew.backward_count) % 2 == 1
        return _compose_stage(graph, skew, ell, k, diag, branch="OddCycle")

    # stage 3: bipartite case
    try:
        v1, v2 = bipartition(graph)
    except NotBipartiteError as exc:
        diag["odd_witness_length"] = exc.witness.length
        if girth != math.inf and ell % girth:
            reason = "GirthNotDividing"
        else:
            reason = "NotBipartite"
        raise PipelineNotFoundError("bipartition", reason, diag) from exc
    diag["classes"] = [len(v1), len(v2)]
    try:
        skew = find_skew_walk(graph, k)
    except DirectedShortWalkError as exc:
        cycle = _extract_simple_cycle(exc.walk)
        diag["directed_witness_length"] = cycle.length
        return _wind_stage(cycle, ell, k, diag, retried=True)
    except SkewWalkNotFoundError as exc:
        diag["skew_search"] = exc.diagnostics
        raise PipelineNotFoundError("skew-search", "SkewNotFound", diag) from exc
    return _compose_stage(graph, skew, ell, k, diag, branch="Bipartite")


def _wind_stage(cycle, ell, k, diag, retried=False):
    s = cycle.length
    diag["winding_cycle_length"] = s
    if retried:
        diag["girth_precondition_violated"] = True
    if ell % s:
        raise PipelineNotFoundError("short-girth", "GirthNotDividing", diag)
    expr = wind(cycle, ell)
    return PipelineReport(k=k, branch="ShortGirth", expression=expr, diagnostics=diag)


def _compose_stage(graph, skew, ell, k, diag, branch):
    a, b = skew.forward_count, skew.backward_count
    diag["skew_a"] = a
    diag["skew_b"] = b
    stage = "odd-cycle" if branch == "OddCycle" else "bipartite"
    try:
        conn = connectors_for(graph, skew)
    except NoPathError as exc:
        raise PipelineNotFoundError(stage, "NoPath", diag) from exc
    diag["connector_total"] = conn.total_length
    regime = diag["regime"]
    if all(regime.values()):
        # the short-path guarantee of the regime
        assert all(p.length <= 64 * k for p in conn.paths)
        assert conn.total_length < 32 * k * k
    w1, w2, anchor = build_base_walks(graph, skew, conn)
    diag["l1"] = w1.length
    diag["l2"] = w2.length
    assert 2 * w1.length - w2.length == a - b
    try:
        expr = compose(w1, w2, anchor, ell)
    except CannotReachLengthError as exc:
        diag["composition_cause"] = exc.cause
        raise PipelineNotFoundError(stage, "CompositionFailed", diag) from exc
    bad = expr.validate(graph)
    assert bad is None, f"composed expression invalid: {bad}"
    return PipelineReport(k=k, branch=branch, expression=expr, diagnostics=diag)
