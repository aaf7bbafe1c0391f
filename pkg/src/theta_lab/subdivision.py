"""Full subdivisions S(G) and the checks relating Theta on G and on S(G).

Numbering of S(G): original vertex ``x`` keeps id ``x``; the midpoint of
edge ``j`` is ``n + j``.  For edge ``j = (x, y)`` with ``x < y`` the half
edge at ``x`` has id ``2j`` and the half edge at ``y`` has id ``2j + 1``.
"""

from dataclasses import dataclass

import numpy as np

from .graph import Graph, all_pairs_distances, is_bipartite
from .partition import Comparison, EdgePartition, compare_partitions
from .relations import theta_matrix, theta_star
from .reports import CheckReport


@dataclass(frozen=True)
class SubdivisionMap:
    n: int
    orig_edges: tuple

    @property
    def m(self):
        return len(self.orig_edges)

    def vertex(self, x):
        """Image of original vertex ``x``."""
        return x

    def midpoint(self, e):
        """Vertex of S(G) subdividing edge ``e``."""
        return self.n + e

    def half_edge(self, e, endpoint):
        """Id of the half edge of ``e`` incident with original vertex ``endpoint``."""
        x, y = self.orig_edges[e]
        if endpoint == x:
            return 2 * e
        if endpoint == y:
            return 2 * e + 1
        raise ValueError(f"{endpoint} is not an endpoint of edge {e} = {self.orig_edges[e]}")

    def half_to_edge(self, h):
        """``(original edge, original endpoint)`` of half edge ``h``."""
        e = h // 2
        return e, self.orig_edges[e][h % 2]

    def siblings(self, e):
        return 2 * e, 2 * e + 1

    @property
    def sub_edge_to_half(self):
        return [self.half_to_edge(h) for h in range(2 * self.m)]


def subdivide(g):
    """Return ``(S(G), SubdivisionMap)``."""
    pairs = []
    for j, (x, y) in enumerate(g.edges):
        pairs.append((x, g.n + j))
        pairs.append((y, g.n + j))
    return Graph(g.n + g.m, pairs), SubdivisionMap(g.n, g.edges)


def lift_partition(g, part, smap):
    """S(Theta*_G): both half edges inherit the class of their edge."""
    if len(part.class_of) != g.m or smap.m != g.m:
        raise ValueError("partition, graph and subdivision map disagree on the edge count")
    return EdgePartition(np.repeat(part.class_of, 2))


def halfedges_merged(sub_part, smap, e):
    h1, h2 = smap.siblings(e)
    return sub_part.same_class(h1, h2)


def check_distance_formulas(g, sg, smap):
    """Exhaustive check of the three distance identities between G and S(G)."""
    n, m = g.n, g.m
    dg = all_pairs_distances(g).dist.astype(np.int64)
    ds = all_pairs_distances(sg).dist.astype(np.int64)
    a, b = g.edge_array[:, 0], g.edge_array[:, 1]
    details = {"vertex_pairs": n * n, "vertex_edge_pairs": n * m, "edge_pairs": m * m}

    bad = np.argwhere(ds[:n, :n] != 2 * dg)
    if bad.size:
        x, y = bad[0].tolist()
        return CheckReport("distance-formulas", False, details=details, witness={
            "formula": "vertex-vertex", "x": x, "y": y,
            "d_sub": int(ds[x, y]), "d_orig": int(dg[x, y])})

    d_ve = np.minimum(dg[:, a], dg[:, b])  # n x m
    bad = np.argwhere(ds[:n, n:] != 2 * d_ve + 1)
    if bad.size:
        x, j = bad[0].tolist()
        return CheckReport("distance-formulas", False, details=details, witness={
            "formula": "vertex-edge", "x": x, "edge": g.edges[j],
            "d_sub": int(ds[x, n + j]), "d_orig": int(d_ve[x, j])})

    d_ee = np.minimum.reduce([dg[np.ix_(a, a)], dg[np.ix_(a, b)], dg[np.ix_(b, a)], dg[np.ix_(b, b)]])
    expected = 2 * d_ee + 2
    np.fill_diagonal(expected, 0)  # the identity applies to distinct edges only
    bad = np.argwhere(ds[n:, n:] != expected)
    if bad.size:
        i, j = bad[0].tolist()
        return CheckReport("distance-formulas", False, details=details, witness={
            "formula": "edge-edge", "e": g.edges[i], "f": g.edges[j],
            "d_sub": int(ds[n + i, n + j]), "d_orig": int(d_ee[i, j])})
    return CheckReport("distance-formulas", True, details=details)


def project_check(g, sg, smap):
    """Theta on S(G) projects into Theta on G, and Theta*_{S(G)} refines S(Theta*_G).

    Also flags any pair of sibling half edges related directly, which the
    triangle-freeness of S(G) forbids.
    """
    tg = theta_matrix(g)
    ts = theta_matrix(sg)
    hi, hj = np.nonzero(np.triu(ts, k=1))
    ei, ej = hi // 2, hj // 2
    sibling = ei == ej
    details = {"sub_theta_pairs": int(len(hi))}
    if sibling.any():
        k = int(np.argmax(sibling))
        return CheckReport("projection", False, details=details, witness={
            "kind": "sibling half edges related", "edge": g.edges[int(ei[k])]})
    missing = ~tg[ei, ej]
    if missing.any():
        k = int(np.argmax(missing))
        h1, h2 = int(hi[k]), int(hj[k])
        return CheckReport("projection", False, details=details, witness={
            "kind": "half edge pair without Theta_G pair",
            "halves": [smap.half_to_edge(h1), smap.half_to_edge(h2)]})
    sub_part = theta_star(sg)
    lifted = lift_partition(g, theta_star(g), smap)
    verdict = compare_partitions(sub_part, lifted)
    details.update(sub_classes=len(sub_part), lifted_classes=len(lifted), comparison=verdict.value)
    ok = verdict in (Comparison.EQUAL, Comparison.P1_REFINES_P2)
    witness = None if ok else {"comparison": verdict.value}
    return CheckReport("projection", ok, details=details, witness=witness)


def converse_pairs_check(g, sg, smap):
    """Every Theta_G pair has a Theta_{S(G)} half edge pair; two disjoint ones if bipartite."""
    tg = theta_matrix(g)
    ts = theta_matrix(sg)
    bip = is_bipartite(g)
    ei, ej = np.nonzero(np.triu(tg, k=1))
    checked = 0
    for e, f in zip(ei.tolist(), ej.tolist()):
        # hit[a][b]: half a of e related to half b of f
        hit = ts[2 * e:2 * e + 2, 2 * f:2 * f + 2]
        checked += 1
        if not hit.any():
            return CheckReport("converse-pairs", False, details={"bipartite": bip}, witness={
                "kind": "no half edge pair", "e": g.edges[e], "f": g.edges[f]})
        if bip and not ((hit[0, 0] and hit[1, 1]) or (hit[0, 1] and hit[1, 0])):
            return CheckReport("converse-pairs", False, details={"bipartite": bip}, witness={
                "kind": "no two disjoint half edge pairs", "e": g.edges[e], "f": g.edges[f]})
    return CheckReport("converse-pairs", True, details={"bipartite": bip, "theta_pairs": checked})


def halfedge_merge_check(g, sg, smap):
    """Both sides of the criterion: all siblings merged iff Theta*_{S(G)} = S(Theta*_G)."""
    sub_part = theta_star(sg)
    lifted = lift_partition(g, theta_star(g), smap)
    merged = [halfedges_merged(sub_part, smap, e) for e in range(g.m)]
    all_merged = all(merged)
    equal = compare_partitions(sub_part, lifted) is Comparison.EQUAL
    details = {"all_merged": all_merged, "equal": equal, "merged_edges": int(sum(merged))}
    witness = None
    if all_merged != equal:
        witness = {"all_merged": all_merged, "equal": equal}
    return CheckReport("halfedge-merge", all_merged == equal, details=details, witness=witness)
