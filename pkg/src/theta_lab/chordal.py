"""Chordal graphs: recognition, cliques, exposed edges and Theta* on S(G)."""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import Not2Connected, NotChordal
from .graph import is_two_connected, vertex_components
from .partition import Comparison, EdgePartition, EdgeRelationPairs, compare_partitions, partition_from_pairs
from .relations import theta_matrix, theta_star
from .reports import CheckReport
from .subdivision import subdivide


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple        # elimination sequence
    later: tuple        # later[v]: neighbours of v eliminated after v

    @property
    def position(self):
        pos = [0] * len(self.order)
        for k, v in enumerate(self.order):
            pos[v] = k
        return pos


@dataclass(frozen=True)
class ChordalCheck:
    chordal: bool
    peo: Optional[EliminationOrder] = None
    hole: Optional[tuple] = None   # chordless cycle of length >= 4

    def __bool__(self):
        return self.chordal


def maximum_cardinality_search(g):
    """Visit order of MCS; ties broken by smallest vertex id."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not visited[w]:
                weight[w] += 1
    return order


def _find_hole(g):
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    for v in range(g.n):
        for a, b in combinations(sorted(adj[v]), 2):
            if b in adj[a]:
                continue
            blocked = (adj[v] | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in sorted(adj[x]):
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return tuple([v] + path[::-1])
    return None


def chordality(g):
    """PEO witness (reverse MCS order) or a chordless cycle."""
    order = maximum_cardinality_search(g)[::-1]
    pos = {v: k for k, v in enumerate(order)}
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    later = []
    ok = True
    for v in range(g.n):
        lat = sorted((w for w in adj[v] if pos[w] > pos[v]), key=pos.get)
        later.append(tuple(lat))
        if lat:
            first = lat[0]
            if not set(lat[1:]) <= adj[first]:
                ok = False
    if ok:
        return ChordalCheck(True, peo=EliminationOrder(tuple(order), tuple(later)))
    hole = _find_hole(g)
    if hole is None:
        raise AssertionError("PEO test failed but no chordless cycle exists")
    return ChordalCheck(False, hole=hole)


def is_chordal(g):
    return chordality(g).chordal


def _require_chordal(g):
    check = chordality(g)
    if not check.chordal:
        raise NotChordal(f"graph has the chordless cycle {list(check.hole)}")
    return check.peo


def maximal_cliques(g):
    """Maximal cliques of a chordal graph read off a perfect elimination order."""
    peo = _require_chordal(g)
    candidates = {frozenset((v,) + peo.later[v]) for v in peo.order}
    maximal = [c for c in candidates if not any(c < d for d in candidates)]
    return sorted((tuple(sorted(c)) for c in maximal), key=lambda c: (c[0], c))


@dataclass(frozen=True)
class ExposedEdgeReport:
    exposed: tuple                # edge ids
    residual_components: tuple    # vertex tuples of G^{-ee}, ordered by smallest vertex
    component_of: tuple           # component index per vertex
    cliques: tuple

    @property
    def component_count(self):
        return len(self.residual_components)


def exposed_edges(g):
    """Edges lying in exactly one maximal clique, that clique being larger than the edge."""
    cliques = maximal_cliques(g)
    containing = np.zeros(g.m, dtype=np.int64)
    biggest = np.zeros(g.m, dtype=np.int64)
    for c in cliques:
        for u, v in combinations(c, 2):
            e = g.edge_id(u, v)
            containing[e] += 1
            biggest[e] = max(biggest[e], len(c))
    exposed = tuple(int(e) for e in np.flatnonzero((containing == 1) & (biggest >= 3)))
    keep = sorted(set(range(g.m)) - set(exposed))
    comp = vertex_components(g, keep)
    groups = [[] for _ in range(int(comp.max()) + 1)]
    for v, c in enumerate(comp.tolist()):
        groups[c].append(v)
    return ExposedEdgeReport(exposed, tuple(tuple(x) for x in groups), tuple(comp.tolist()), tuple(cliques))


def simplicial_vertices(g):
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    return [v for v in range(g.n) if all(b in adj[a] for a, b in combinations(sorted(adj[v]), 2))]


def expected_chordal_partition(g):
    """Colour the half edge of ``ab`` at ``b`` by the G^{-ee} component of ``a``."""
    _require_chordal(g)
    if not is_two_connected(g):
        raise Not2Connected("the colouring is only claimed for 2-connected chordal graphs")
    rep = exposed_edges(g)
    labels = np.empty(2 * g.m, dtype=np.int64)
    for j, (x, y) in enumerate(g.edges):
        labels[2 * j] = rep.component_of[y]      # half at x, opposite endpoint y
        labels[2 * j + 1] = rep.component_of[x]  # half at y, opposite endpoint x
    return EdgePartition(labels)


def verify_theorem_chordal(g):
    expected = expected_chordal_partition(g)
    rep = exposed_edges(g)
    tstar = theta_star(g)
    sg, _ = subdivide(g)
    brute = theta_star(sg)
    single = len(tstar) == 1
    match = brute == expected
    count_ok = len(brute) == rep.component_count
    witness = None
    if not single:
        witness = {"kind": "Theta*_G has several classes", "classes": len(tstar)}
    elif not match:
        witness = {"kind": "colouring differs", "comparison": compare_partitions(brute, expected).value}
    elif not count_ok:
        witness = {"kind": "class count", "classes": len(brute), "components": rep.component_count}
    return CheckReport("chordal-subdivision", single and match and count_ok, witness=witness, details={
        "theta_star_G_classes": len(tstar), "sub_classes": len(brute),
        "components": rep.component_count, "exposed_edges": len(rep.exposed)})


def triangles(g):
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    return [(a, b, c) for a in range(g.n) for b in sorted(adj[a]) if b > a
            for c in sorted(adj[a] & adj[b]) if c > b]


def phi_c6_relation(sg, smap):
    """Opposite half edges of the 6-cycles of S(G), one 6-cycle per triangle of G."""
    g_adj = {}
    for j, (x, y) in enumerate(smap.orig_edges):
        g_adj.setdefault(x, set()).add(y)
        g_adj.setdefault(y, set()).add(x)
    eid = {e: j for j, e in enumerate(smap.orig_edges)}

    def half(a, b, at):
        return smap.half_edge(eid[(min(a, b), max(a, b))], at)

    pairs = []
    for a in sorted(g_adj):
        for b in sorted(g_adj[a]):
            if b <= a:
                continue
            for c in sorted(g_adj[a] & g_adj[b]):
                if c <= b:
                    continue
                # a - ab - b - bc - c - ca - a
                ring = [half(a, b, a), half(a, b, b), half(b, c, b), half(b, c, c), half(c, a, c), half(c, a, a)]
                pairs.extend((ring[k], ring[k + 3]) for k in range(3))
    return EdgeRelationPairs(sg.m, pairs)


def _describe_half(smap, h):
    e, at = smap.half_to_edge(h)
    return {"edge": list(smap.orig_edges[e]), "at": at}


def verify_lemma_chordal_phi(g):
    """Closure of the C6-opposite relation on S(G) equals Theta*_{S(G)}."""
    _require_chordal(g)
    sg, smap = subdivide(g)
    phi_star = partition_from_pairs(sg.m, phi_c6_relation(sg, smap).pairs)
    tmat = theta_matrix(sg)
    brute = theta_star(sg)
    verdict = compare_partitions(phi_star, brute)
    ok = verdict is Comparison.EQUAL
    witness = None
    if not ok:
        hi, hj = np.nonzero(np.triu(tmat, k=1))
        split = phi_star.class_of[hi] != phi_star.class_of[hj]
        witness = {"comparison": verdict.value}
        if split.any():
            k = int(np.argmax(split))
            witness["theta_pair_outside_phi_closure"] = [_describe_half(smap, int(hi[k])),
                                                         _describe_half(smap, int(hj[k]))]
    return CheckReport("chordal-phi-closure", ok, witness=witness,
                       details={"phi_classes": len(phi_star), "theta_star_classes": len(brute),
                                "comparison": verdict.value})
