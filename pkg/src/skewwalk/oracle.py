"""Independent ground truth for closed-walk existence.

Exact-length walk existence is decided over the boolean semiring: some
diagonal entry of A**ell is 1 iff a closed directed walk of exactly ell
edges exists.  Powers use binary exponentiation, so the multiplication
count is O(log ell) and lengths up to 10**18 are routine.
"""

from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import EnumerationBudgetError


class BoolMatrix:
    """Square bit matrix with rows packed into uint64 words.

    Multiplication is over the boolean semiring (OR of ANDs); results are
    bit-exact regardless of backend or thread count.
    """

    __slots__ = ("n", "packed")

    def __init__(self, n, packed):
        self.n = n
        self.packed = packed

    @classmethod
    def from_graph(cls, graph):
        return cls(graph.n, _kernels.pack_rows(graph.bool_adjacency()))

    @classmethod
    def from_bool(cls, mat):
        mat = np.asarray(mat, dtype=bool)
        return cls(mat.shape[0], _kernels.pack_rows(mat))

    @classmethod
    def identity(cls, n):
        return cls.from_bool(np.eye(n, dtype=bool))

    def to_bool(self):
        return _kernels.unpack_rows(self.packed, self.n)

    def multiply(self, other):
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return BoolMatrix(self.n, _kernels.matmul_packed(self.packed, other.packed, self.n))

    def power(self, exponent):
        """(self**exponent, multiplication count); exponent >= 1."""
        if exponent < 1:
            raise ValueError("exponent must be >= 1")
        result = None
        base = self
        mults = 0
        e = exponent
        while e > 0:
            if e & 1:
                if result is None:
                    result = base
                else:
                    result = result.multiply(base)
                    mults += 1
            e >>= 1
            if e:
                base = base.multiply(base)
                mults += 1
        return result, mults

    def diagonal(self):
        diag = np.zeros(self.n, dtype=bool)
        for i in range(self.n):
            diag[i] = bool(
                (self.packed[i, i >> 6] >> np.uint64(i & 63)) & np.uint64(1)
            )
        return diag

    def __eq__(self, other):
        return (
            isinstance(other, BoolMatrix)
            and self.n == other.n
            and np.array_equal(self.packed, other.packed)
        )

    def __hash__(self):  # pragma: no cover - not used as dict key in practice
        return hash((self.n, self.packed.tobytes()))


class WalkExistence(NamedTuple):
    exists: bool
    witness: object  # smallest diagonal vertex index, or None
    multiplications: int


def has_closed_walk(graph, ell):
    """Does the graph contain a closed directed walk of exactly ell edges?

    Length counts edges.  On True the witness is the smallest vertex lying
    on such a walk; no walk is reconstructed (existence is this module's
    job, construction is the pipeline's).
    """
    if ell < 1:
        raise ValueError("walk length must be positive")
    if graph.n == 0:
        return WalkExistence(False, None, 0)
    power, mults = BoolMatrix.from_graph(graph).power(ell)
    diag = power.diagonal()
    hits = np.flatnonzero(diag)
    if hits.size == 0:
        return WalkExistence(False, None, mults)
    return WalkExistence(True, int(hits[0]), mults)


def has_closed_walk_dp(graph, ell):
    """Naive dynamic-programming reference: iterate reachability ell times.

    Independent of the matrix-power path; practical only for small ell.
    """
    adj = graph.bool_adjacency()
    reach = adj.copy()
    for _ in range(ell - 1):
        reach = (reach.astype(np.float32) @ adj.astype(np.float32)) > 0.5
    return bool(reach.diagonal().any())


def cycle_length_spectrum(graph, cap, node_budget=10**7):
    """Set of lengths <= cap realised by simple directed cycles.

    Recursive enumeration with smallest-vertex canonical root; practical for
    small or sparse structured graphs.  Raises EnumerationBudgetError when the
    search tree exceeds node_budget nodes.
    """
    if cap > graph.n:
        raise ValueError("cap exceeds the maximum simple-cycle length n")
    lengths = set()
    budget = node_budget

    for root in range(graph.n):
        stack = [(root, iter(graph.out_neighbors(root)))]
        on_path = {root}
        path_len = 1
        while stack:
            budget -= 1
            if budget < 0:
                raise EnumerationBudgetError(f"exceeded {node_budget} search nodes")
            vertex, it = stack[-1]
            advanced = False
            for w in it:
                if w == root and path_len >= 2:
                    lengths.add(path_len)
                elif w > root and w not in on_path and path_len < cap:
                    stack.append((w, iter(graph.out_neighbors(w))))
                    on_path.add(w)
                    path_len += 1
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(vertex)
                path_len -= 1
    return frozenset(lengths)
