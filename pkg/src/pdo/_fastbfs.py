"""Batched breadth-first search over CSR adjacency, JIT-compiled.

One queue is reused across sources; each output row is a complete
hop-distance table for its source, with unreachable vertices left at the
``inf`` sentinel.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def bfs_rows_kernel(indptr, indices, sources, n, inf):
    out = np.empty((len(sources), n), dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for si in range(len(sources)):
        dist = out[si]
        dist[:] = inf
        s = sources[si]
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[v] > du:
                    dist[v] = du
                    queue[tail] = v
                    tail += 1
    return out
