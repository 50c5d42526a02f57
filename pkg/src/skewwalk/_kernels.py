"""Hot numeric kernels: numba-jitted with a pure-numpy fallback.

The two inner loops that dominate runtime live here:

* boolean matrix multiplication over bit-packed rows (oracle powers), and
* per-vertex BFS for the shortest directed cycle (girth).

Backend selection: numba is used when importable unless the environment
variable ``SKEWWALK_NO_NUMBA`` is set to a non-empty value.  Both backends
are bit-exact; ``benchmarks/bench_kernels.py`` compares them.
``SKEWWALK_THREADS`` caps numba's thread count.
"""

import os

import numpy as np

NO_CYCLE = -1

_force_numpy = bool(os.environ.get("SKEWWALK_NO_NUMBA"))

if not _force_numpy:
    try:
        import numba
        from numba import njit, prange

        NUMBA_ACTIVE = True
    except ImportError:  # pragma: no cover - numba is a soft dependency
        NUMBA_ACTIVE = False
else:
    NUMBA_ACTIVE = False

if NUMBA_ACTIVE:
    _threads = os.environ.get("SKEWWALK_THREADS")
    if _threads:
        try:
            numba.set_num_threads(max(1, min(int(_threads), numba.config.NUMBA_NUM_THREADS)))
        except (ValueError, RuntimeError):
            pass


def backend_name():
    return "numba" if NUMBA_ACTIVE else "numpy"


# ---------------------------------------------------------------------------
# bit packing (endian-independent: bit j of a row lives in word j>>6, bit j&63)
# ---------------------------------------------------------------------------

_SHIFTS = np.arange(64, dtype=np.uint64)


def pack_rows(bool_mat):
    """Pack a boolean (n, n) matrix into (n, ceil(n/64)) uint64 rows."""
    n = bool_mat.shape[0]
    w = max(1, (n + 63) // 64)
    padded = np.zeros((n, w * 64), dtype=np.uint64)
    padded[:, : bool_mat.shape[1]] = bool_mat
    return (padded.reshape(n, w, 64) << _SHIFTS).sum(axis=2, dtype=np.uint64)


def unpack_rows(packed, n):
    """Inverse of pack_rows."""
    bits = (packed[:, :, None] >> _SHIFTS) & np.uint64(1)
    return bits.reshape(packed.shape[0], -1)[:, :n].astype(bool)


# ---------------------------------------------------------------------------
# boolean semiring matrix multiply
# ---------------------------------------------------------------------------

def _matmul_packed_numpy(a_packed, b_packed, n):
    # float32 is exact here: dot-product sums are at most n < 2**24
    a = unpack_rows(a_packed, n).astype(np.float32)
    b = unpack_rows(b_packed, n).astype(np.float32)
    return pack_rows((a @ b) > 0.5)


if NUMBA_ACTIVE:

    @njit(cache=True, parallel=True)
    def _matmul_packed_numba(a_packed, b_packed, out):
        n = a_packed.shape[0]
        w = a_packed.shape[1]
        for i in prange(n):
            for j in range(n):
                if (a_packed[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1):
                    for t in range(w):
                        out[i, t] |= b_packed[j, t]

    def matmul_packed(a_packed, b_packed, n):
        out = np.zeros_like(a_packed)
        _matmul_packed_numba(a_packed, b_packed, out)
        return out

else:

    def matmul_packed(a_packed, b_packed, n):
        return _matmul_packed_numpy(a_packed, b_packed, n)


# ---------------------------------------------------------------------------
# shortest directed cycle through each start vertex (BFS per start)
# ---------------------------------------------------------------------------

def _girth_per_start_numpy(adj_bool):
    n = adj_bool.shape[0]
    best = np.full(n, NO_CYCLE, dtype=np.int64)
    for s in range(n):
        frontier = adj_bool[s].copy()
        visited = frontier.copy()
        visited[s] = False
        d = 1
        while frontier.any():
            if frontier[s]:
                best[s] = d
                break
            nxt = adj_bool[frontier].any(axis=0) & ~visited
            visited |= nxt
            frontier = nxt
            d += 1
    return best


if NUMBA_ACTIVE:

    @njit(cache=True, parallel=True)
    def _girth_per_start_numba(indptr, indices, best):
        n = best.shape[0]
        for s in prange(n):
            dist = np.full(n, -1, np.int32)
            queue = np.empty(n, np.int32)
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            dist[s] = 0
            found = NO_CYCLE
            while head < tail and found == NO_CYCLE:
                u = queue[head]
                head += 1
                du = dist[u]
                for idx in range(indptr[u], indptr[u + 1]):
                    v = indices[idx]
                    if v == s:
                        found = du + 1
                        break
                    if dist[v] < 0:
                        dist[v] = du + 1
                        queue[tail] = v
                        tail += 1
            best[s] = found

    def girth_per_start(indptr, indices, n, adj_bool=None):
        best = np.empty(n, dtype=np.int64)
        _girth_per_start_numba(indptr, indices, best)
        return best

else:

    def girth_per_start(indptr, indices, n, adj_bool=None):
        if adj_bool is None:
            adj_bool = np.zeros((n, n), dtype=bool)
            for u in range(n):
                adj_bool[u, indices[indptr[u]:indptr[u + 1]]] = True
        return _girth_per_start_numpy(adj_bool)
