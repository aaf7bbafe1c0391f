"""Hot numeric kernels, each in a numba and a pure-numpy flavour.

The public entry points (``apsp``, ``theta_matrix``, ``closure_labels``)
dispatch on :func:`theta_lab._accel.backend`.  Both flavours must return
identical arrays; ``tests/test_kernels.py`` holds them to that.
"""

import numpy as np

from . import _accel
from ._accel import njit, prange

UNREACHABLE = -1


# ---------------------------------------------------------------------------
# all-pairs BFS
# ---------------------------------------------------------------------------

@njit(parallel=True)
def _apsp_numba(n, indptr, indices):
    dist = np.full((n, n), -1, dtype=np.int32)
    for s in prange(n):
        queue = np.empty(n, dtype=np.int64)
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if row[w] < 0:
                    row[w] = du
                    queue[tail] = w
                    tail += 1
    return dist


def _apsp_numpy(n, indptr, indices):
    # level-synchronous BFS from every source at once
    adj = np.zeros((n, n), dtype=np.float32)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1.0
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.float32)
    visited = np.eye(n, dtype=bool)
    level = 0
    while True:
        level += 1
        reach = (frontier @ adj) > 0
        reach &= ~visited
        if not reach.any():
            break
        dist[reach] = level
        visited |= reach
        frontier = reach.astype(np.float32)
    return dist


def apsp(n, indptr, indices):
    """Hop distances between all vertex pairs of a CSR graph (-1 if unreachable)."""
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    if _accel.backend() == "numba":
        return _apsp_numba(n, indptr, indices)
    return _apsp_numpy(n, indptr, indices)


# ---------------------------------------------------------------------------
# Djokovic-Winkler scan
# ---------------------------------------------------------------------------

@njit(parallel=True)
def _theta_numba(dist, a, b):
    m = a.shape[0]
    out = np.zeros((m, m), dtype=np.bool_)
    for i in prange(m):
        x = a[i]
        y = b[i]
        for j in range(m):
            u = a[j]
            v = b[j]
            out[i, j] = dist[x, u] + dist[y, v] != dist[x, v] + dist[y, u]
    return out


def _theta_numpy(dist, a, b):
    dxu = dist[np.ix_(a, a)]
    dyv = dist[np.ix_(b, b)]
    dxv = dist[np.ix_(a, b)]
    dyu = dist[np.ix_(b, a)]
    return (dxu + dyv) != (dxv + dyu)


def theta_matrix(dist, a, b):
    """Boolean m x m matrix of the relation d(x,u)+d(y,v) != d(x,v)+d(y,u).

    Row/column ``i`` is the edge ``{a[i], b[i]}``.  The diagonal comes out
    True by itself (0 + 0 != 1 + 1), matching the reflexive convention.
    """
    dist = np.ascontiguousarray(dist, dtype=np.int32)
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if a.shape[0] == 0:
        return np.zeros((0, 0), dtype=bool)
    if _accel.backend() == "numba":
        return _theta_numba(dist, a, b)
    return _theta_numpy(dist, a, b)


# ---------------------------------------------------------------------------
# transitive closure (union-find)
# ---------------------------------------------------------------------------

@njit
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit
def _closure_numba(size, left, right):
    parent = np.arange(size)
    for k in range(left.shape[0]):
        ra = _find(parent, left[k])
        rb = _find(parent, right[k])
        if ra < rb:
            parent[rb] = ra
        elif rb < ra:
            parent[ra] = rb
    labels = np.empty(size, dtype=np.int64)
    for x in range(size):
        labels[x] = _find(parent, x)
    return labels


def _closure_numpy(size, left, right):
    labels = np.arange(size)
    while True:
        new = labels.copy()
        np.minimum.at(new, left, labels[right])
        np.minimum.at(new, right, labels[left])
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


def closure_labels(size, left, right):
    """Label items 0..size-1 by the smallest item of their closure class.

    ``left[k]`` and ``right[k]`` are related; the result is the reflexive,
    symmetric, transitive closure encoded as a representative per item.
    """
    left = np.ascontiguousarray(left, dtype=np.int64)
    right = np.ascontiguousarray(right, dtype=np.int64)
    if _accel.backend() == "numba":
        return _closure_numba(size, left, right)
    return _closure_numpy(size, left, right)
