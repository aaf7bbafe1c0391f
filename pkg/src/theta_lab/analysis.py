"""Theorem suites per graph family and the machine-readable analysis report."""

import time

from . import __version__
from .chordal import chordality, exposed_edges, is_two_connected, verify_lemma_chordal_phi, verify_theorem_chordal
from .cycles import DEFAULT_MAX_LEN, touching_cycles_check
from .errors import FamilyMismatch, NotPartialCube
from .partition import compare_partitions
from .planar import (
    phi_bar_refines_theta_star,
    railroads,
    separating_cycle_scan,
    trace_faces,
    validate_fullerene,
    validate_triangulation,
    verify_theorem_fullerene,
    verify_theorem_triangulation,
)
from .relations import is_partial_cube, theta_star, wiener_bfs, wiener_via_cuts
from .reports import CheckReport, jsonable
from .subdivision import (
    check_distance_formulas,
    converse_pairs_check,
    halfedge_merge_check,
    lift_partition,
    project_check,
    subdivide,
)

FAMILIES = ("fullerene", "triangulation", "chordal", "generic")


def partition_listing(g, part):
    """Classes as lists of endpoint pairs, canonical order."""
    return [[list(g.edges[e]) for e in cls] for cls in part.classes]


def theta_summary(g, with_subdivision=False):
    tg = theta_star(g)
    out = {"theta_star_G": {"count": len(tg), "classes": partition_listing(g, tg)}}
    if with_subdivision:
        sg, smap = subdivide(g)
        ts = theta_star(sg)
        lifted = lift_partition(g, tg, smap)
        out["theta_star_SG"] = {"count": len(ts), "classes": partition_listing(sg, ts)}
        out["lifted"] = {"count": len(lifted)}
        out["comparison"] = compare_partitions(ts, lifted).value
    return out


def generic_suite(g, max_len=DEFAULT_MAX_LEN):
    sg, smap = subdivide(g)
    return [
        check_distance_formulas(g, sg, smap),
        project_check(g, sg, smap),
        converse_pairs_check(g, sg, smap),
        halfedge_merge_check(g, sg, smap),
        touching_cycles_check(g, max_len),
    ]


def _embedding(g, rotation, family):
    if rotation is None:
        raise FamilyMismatch(f"--family {family} needs a rotation section in the graph file")
    return trace_faces(g, rotation)


def fullerene_suite(g, rotation, max_len=6):
    emb = _embedding(g, rotation, "fullerene")
    check = validate_fullerene(g, emb)
    if not check.accepted:
        raise FamilyMismatch(f"not a fullerene: {check.to_dict()}")
    rails = railroads(g, emb)
    info = CheckReport("fullerene-structure", True, details=dict(
        check.to_dict(), railroads={"count": len(rails), "cycles": sum(r.shape == "cycle" for r in rails),
                                    "longest": max(len(r) for r in rails)}))
    return [
        info,
        verify_theorem_fullerene(g, emb),
        separating_cycle_scan(g, emb),
        phi_bar_refines_theta_star(g, emb),
        touching_cycles_check(g, max_len),
    ]


def triangulation_suite(g, rotation, max_len=6):
    emb = _embedding(g, rotation, "triangulation")
    if not validate_triangulation(g, emb):
        raise FamilyMismatch("not a plane triangulation: some face is not a triangle")
    return [verify_theorem_triangulation(g, emb), touching_cycles_check(g, max_len)]


def chordal_suite(g):
    check = chordality(g)
    if not check.chordal:
        raise FamilyMismatch(f"not chordal: chordless cycle {list(check.hole)}")
    rep = exposed_edges(g)
    info = CheckReport("exposed-edges", True, details={
        "exposed": [list(g.edges[e]) for e in rep.exposed],
        "components": [list(c) for c in rep.residual_components],
        "component_count": rep.component_count})
    out = [info, verify_lemma_chordal_phi(g)]
    if is_two_connected(g):
        out.append(verify_theorem_chordal(g))
    else:
        out.append(CheckReport.not_applicable(
            "chordal-subdivision", "graph is not 2-connected; no structure is claimed there"))
    return out


def run_family(g, rotation, family, max_len=None):
    if family == "fullerene":
        return fullerene_suite(g, rotation, max_len or 6)
    if family == "triangulation":
        return triangulation_suite(g, rotation, max_len or 6)
    if family == "chordal":
        return chordal_suite(g)
    if family == "generic":
        return generic_suite(g, max_len or DEFAULT_MAX_LEN)
    raise ValueError(f"unknown family {family!r}")


def detect_families(g, rotation):
    found = ["generic"]
    if rotation is not None:
        emb = trace_faces(g, rotation)
        if validate_fullerene(g, emb).accepted:
            found.append("fullerene")
        if validate_triangulation(g, emb):
            found.append("triangulation")
    if chordality(g).chordal:
        found.append("chordal")
    return found


def wiener_values(g, method="both"):
    out = {}
    if method in ("bfs", "both"):
        out["bfs"] = wiener_bfs(g)
    if method in ("cuts", "both"):
        if not is_partial_cube(g):
            if method == "cuts":
                raise NotPartialCube("the cut method needs a partial cube")
            out["cuts"] = None
        else:
            out["cuts"] = wiener_via_cuts(g)
    return out


def build_report(g, rotation, command, source=None, verdicts=(), extra=None, timings=None):
    doc = {
        "tool": "theta-lab",
        "version": __version__,
        "command": command,
        "input": {"source": source, "n": g.n, "m": g.m, "has_rotation": rotation is not None},
        "verdicts": [v.to_dict() for v in verdicts],
        "passed": all(v.passed for v in verdicts),
    }
    if extra:
        doc.update(jsonable(extra))
    if timings is not None:
        doc["timings"] = timings
    return doc


def full_report(g, rotation, source=None, max_len=None, with_timings=False):
    """Everything applicable to the input, for the ``report`` verb."""
    timings = {}
    t0 = time.perf_counter()
    extra = theta_summary(g, with_subdivision=True)
    timings["theta"] = time.perf_counter() - t0
    families = detect_families(g, rotation)
    extra["families"] = families
    extra["partial_cube"] = is_partial_cube(g)
    extra["wiener"] = wiener_values(g, "both")
    verdicts = []
    for fam in families:
        t0 = time.perf_counter()
        verdicts.extend(run_family(g, rotation, fam, max_len))
        timings[fam] = time.perf_counter() - t0
    return build_report(g, rotation, "report", source, verdicts, extra,
                        {k: round(v, 6) for k, v in timings.items()} if with_timings else None)


def phi_bar_gap_search(names=None):
    """Scan bundled fullerenes for a strict gap between the Phi-bar closure and Theta*_G.

    Returns ``{name: (phi_bar_classes, theta_star_classes)}`` for every
    instance checked; a gap shows up as the first count exceeding the second.
    """
    from . import fixtures

    out = {}
    for name in names or fixtures.FULLERENES:
        g, emb = fixtures.load_embedded(name)
        rep = phi_bar_refines_theta_star(g, emb)
        out[name] = (rep.details["phi_bar_classes"], rep.details["theta_star_classes"])
    return out
