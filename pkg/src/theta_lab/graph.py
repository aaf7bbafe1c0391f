"""Immutable simple graphs, hop distances and basic structural predicates."""

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import Disconnected, DuplicateEdge, InputError, LoopEdge


def _frozen(arr):
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` with ``u < v`` and get ids ``0..m-1`` in
    input order.  Instances are never mutated after construction.
    """

    __slots__ = ("n", "edges", "edge_array", "indptr", "indices", "edge_of_slot", "_index", "_dist")

    def __init__(self, n, edges):
        self.n = int(n)
        self.edges = tuple(edges)
        self._index = {e: k for k, e in enumerate(self.edges)}
        arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        self.edge_array = _frozen(arr)

        # CSR adjacency, neighbours sorted, with the edge id of every slot
        ends = np.concatenate([arr[:, 0], arr[:, 1]])
        others = np.concatenate([arr[:, 1], arr[:, 0]])
        eids = np.concatenate([np.arange(len(arr)), np.arange(len(arr))])
        order = np.lexsort((others, ends))
        counts = np.bincount(ends, minlength=self.n) if len(ends) else np.zeros(self.n, dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        self.indptr = _frozen(indptr)
        self.indices = _frozen(others[order].astype(np.int64))
        self.edge_of_slot = _frozen(eids[order].astype(np.int64))
        self._dist = None

    @property
    def m(self):
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def neighbors(self, v):
        return tuple(int(w) for w in self.indices[self.indptr[v]:self.indptr[v + 1]])

    def incident(self, v):
        """``(neighbour, edge id)`` pairs of ``v``, sorted by neighbour."""
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return tuple(zip(self.indices[lo:hi].tolist(), self.edge_of_slot[lo:hi].tolist()))

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self):
        return np.diff(self.indptr)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._index

    def edge_id(self, u, v):
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"no edge {{{u}, {v}}}") from None

    def other_end(self, eid, v):
        a, b = self.edges[eid]
        return b if v == a else a

    def is_connected(self):
        if self.n <= 1:
            return True
        return int(vertex_components(self).max()) == 0

    def induced_subgraph(self, vertices):
        """Subgraph induced on ``vertices``; returns ``(graph, old_ids)``."""
        old = sorted(set(int(v) for v in vertices))
        new_id = {v: i for i, v in enumerate(old)}
        pairs = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return Graph(len(old), pairs), old

    def edge_subgraph(self, edge_ids):
        """Subgraph formed by ``edge_ids`` and their endpoints; returns ``(graph, old_ids)``.

        Edges of the result keep the relative order of ``sorted(edge_ids)``.
        """
        eids = sorted(set(int(e) for e in edge_ids))
        old = sorted({v for e in eids for v in self.edges[e]})
        new_id = {v: i for i, v in enumerate(old)}
        pairs = [(new_id[self.edges[e][0]], new_id[self.edges[e][1]]) for e in eids]
        return Graph(len(old), pairs), old


def build_graph(edge_pairs, n=None, require_connected=True):
    """Validate ``edge_pairs`` and build a :class:`Graph`.

    ``n`` defaults to one more than the largest vertex mentioned.  Loops and
    repeated pairs are rejected, never dropped.
    """
    normalized = []
    seen = set()
    for k, pair in enumerate(edge_pairs):
        u, v = (int(x) for x in pair)
        if u == v:
            raise LoopEdge(f"edge #{k} is a loop at vertex {u}")
        if u < 0 or v < 0:
            raise InputError(f"edge #{k} has a negative vertex")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge #{k} {{{u}, {v}}} appears twice")
        seen.add(e)
        normalized.append(e)
    top = max((v for e in normalized for v in e), default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise InputError(f"edge mentions vertex {top - 1} but n = {n}")
    g = Graph(n, normalized)
    if require_connected and not g.is_connected():
        raise Disconnected(f"graph with n={n}, m={len(normalized)} is not connected")
    return g


def vertex_components(g, edge_ids=None):
    """Component label (0, 1, ... by smallest vertex) of every vertex.

    With ``edge_ids`` only those edges are used.
    """
    arr = g.edge_array if edge_ids is None else g.edge_array[np.asarray(list(edge_ids), dtype=np.int64)]
    if arr.size == 0:
        return np.arange(g.n)
    reps = kernels.closure_labels(g.n, arr[:, 0], arr[:, 1])
    return np.unique(reps, return_inverse=True)[1].reshape(-1)


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

class DistanceMatrix:
    """All-pairs hop distances; ``dm[u, v]`` indexes like the array."""

    __slots__ = ("dist",)

    def __init__(self, dist):
        self.dist = _frozen(np.asarray(dist, dtype=np.int32))

    @property
    def n(self):
        return self.dist.shape[0]

    def __getitem__(self, key):
        return self.dist[key]

    @property
    def diameter(self):
        return int(self.dist.max()) if self.n else 0

    def __repr__(self):
        return f"DistanceMatrix(n={self.n}, diameter={self.diameter})"


def all_pairs_distances(g):
    """BFS hop distances for a connected graph (cached on ``g``)."""
    if g._dist is None:
        dist = kernels.apsp(g.n, g.indptr, g.indices)
        if (dist < 0).any():
            raise Disconnected("distances requested for a disconnected graph")
        g._dist = DistanceMatrix(dist)
    return g._dist


def vertex_edge_distance(dm, x, e):
    y, z = e
    return int(min(dm.dist[x, y], dm.dist[x, z]))


def edge_edge_distance(dm, e, f):
    """Smallest endpoint distance between edges; 0 for adjacent or equal edges."""
    (x, y), (u, v) = e, f
    d = dm.dist
    return int(min(d[x, u], d[x, v], d[y, u], d[y, v]))


def random_shortest_path(g, dm, u, v, rng):
    """Uniform-step random geodesic from ``u`` to ``v`` as a list of edge ids."""
    d = dm.dist
    path = []
    cur = u
    while cur != v:
        steps = [(w, eid) for w, eid in g.incident(cur) if d[w, v] == d[cur, v] - 1]
        w, eid = steps[int(rng.integers(len(steps)))]
        path.append(eid)
        cur = w
    return path


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # tuple of sorted edge-id tuples, ordered by smallest edge id
    cut_vertices: frozenset

    def block_of_edge(self, m):
        out = np.empty(m, dtype=np.int64)
        for k, blk in enumerate(self.blocks):
            out[list(blk)] = k
        return out


def blocks(g):
    """Biconnected components (bridges count as blocks) and cut vertices."""
    disc = [-1] * g.n
    low = [0] * g.n
    found = []
    cuts = set()
    time = 0
    edge_stack = []
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = time
        time += 1
        root_children = 0
        # frames: (vertex, parent edge id, iterator over incident)
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == pe:
                    continue
                if disc[w] < 0:
                    edge_stack.append(eid)
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, eid, iter(g.incident(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = []
                while True:
                    eid = edge_stack.pop()
                    comp.append(eid)
                    if eid == pe:
                        break
                found.append(tuple(sorted(comp)))
        if root_children > 1:
            cuts.add(root)
    found.sort(key=lambda blk: blk[0])
    return BlockDecomposition(tuple(found), frozenset(cuts))


def is_two_connected(g):
    return g.n >= 3 and g.is_connected() and len(blocks(g).blocks) == 1


# ---------------------------------------------------------------------------
# isometry and bipartiteness
# ---------------------------------------------------------------------------

def _subgraph_is_isometric(g, dm, sub, old):
    if not sub.is_connected():
        return False
    if sub.n <= 1:
        return True
    inner = kernels.apsp(sub.n, sub.indptr, sub.indices)
    outer = dm.dist[np.ix_(old, old)]
    return bool(np.array_equal(inner, outer))


def is_isometric_subgraph(g, vertex_subset, dm=None):
    """True iff the subgraph induced on ``vertex_subset`` preserves distances."""
    dm = dm or all_pairs_distances(g)
    sub, old = g.induced_subgraph(vertex_subset)
    return _subgraph_is_isometric(g, dm, sub, old)


def is_isometric_edge_subgraph(g, edge_ids, dm=None):
    """Same test for the (not necessarily induced) subgraph spanned by ``edge_ids``."""
    dm = dm or all_pairs_distances(g)
    sub, old = g.edge_subgraph(edge_ids)
    return _subgraph_is_isometric(g, dm, sub, old)


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    coloring: Optional[tuple] = None    # 0/1 per vertex when bipartite
    odd_cycle: Optional[tuple] = None   # closed vertex sequence otherwise

    def __bool__(self):
        return self.bipartite


def two_coloring(g):
    """BFS 2-colouring, or an odd cycle if none exists."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteCheck(True, coloring=tuple(color))


def _odd_cycle(parent, u, w):
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = chain(u), chain(w)
    on_w = set(pw)
    meet = next(x for x in pu if x in on_w)
    left = pu[:pu.index(meet) + 1]
    right = pw[:pw.index(meet)]
    return tuple(left + right[::-1])


def is_bipartite(g):
    return two_coloring(g).bipartite
