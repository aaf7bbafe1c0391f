"""``theta-lab`` command line.

Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 input error.
"""

import argparse
import json
import sys
from pathlib import Path

from .analysis import (
    FAMILIES,
    build_report,
    full_report,
    run_family,
    theta_summary,
    wiener_values,
)
from .errors import InputError, NotPartialCube
from .io import read_graph_file, serialize_graph
from .planar import subdivision_rotation, trace_faces
from .reports import CheckReport
from .subdivision import subdivide

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _load(path):
    return read_graph_file(path)


def _emit(doc, as_json, lines):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _plural(k, word):
    return f"{k} {word}" if k == 1 else f"{k} {word}es"


def cmd_theta(args):
    g, rot = _load(args.file)
    summary = theta_summary(g, with_subdivision=args.subdivide)
    k = summary["theta_star_G"]["count"]
    if k == g.m and g.m > 1:
        head = f"{k} singleton classes (G)"
    else:
        head = f"{_plural(k, 'class')} (G)"
    if args.subdivide:
        ks = summary["theta_star_SG"]["count"]
        verdict = {"Equal": "S(G) equals lift", "P1RefinesP2": "S(G) refines lift",
                   "P2RefinesP1": "lift refines S(G)", "Incomparable": "incomparable"}[summary["comparison"]]
        head += f"; {_plural(ks, 'class')} (S(G)); verdict: {verdict}"
    lines = [head]
    for i, cls in enumerate(summary["theta_star_G"]["classes"]):
        lines.append(f"  G[{i}]: " + " ".join(f"{u}-{v}" for u, v in cls))
    if args.subdivide:
        for i, cls in enumerate(summary["theta_star_SG"]["classes"]):
            lines.append(f"  S[{i}]: " + " ".join(f"{u}-{v}" for u, v in cls))
    _emit(build_report(g, rot, "theta", str(args.file), extra=summary), args.json, lines)
    return EXIT_OK


def cmd_subdivide(args):
    g, rot = _load(args.file)
    sg, _ = subdivide(g)
    srot = subdivision_rotation(g, rot) if rot is not None else None
    if srot is not None:
        trace_faces(sg, srot)
    text = serialize_graph(sg, srot)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    g, rot = _load(args.file)
    verdicts = run_family(g, rot, args.family, args.max_cycle_len)
    doc = build_report(g, rot, f"verify --family {args.family}", str(args.file), verdicts)
    lines = [v.summary() for v in verdicts]
    lines.append("all pass" if doc["passed"] else "FAILED")
    _emit(doc, args.json, lines)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def cmd_wiener(args):
    g, rot = _load(args.file)
    values = wiener_values(g, args.method)
    verdicts = []
    if args.method == "both":
        if values["cuts"] is None:
            verdicts.append(CheckReport.not_applicable("wiener-agreement", "not a partial cube"))
        else:
            verdicts.append(CheckReport("wiener-agreement", values["bfs"] == values["cuts"], details=values))
    doc = build_report(g, rot, f"wiener --method {args.method}", str(args.file), verdicts, {"wiener": values})
    shown = [str(values[k]) if values[k] is not None else "n/a" for k in ("bfs", "cuts") if k in values]
    lines = [" / ".join(shown)] + [v.summary() for v in verdicts]
    _emit(doc, args.json, lines)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def cmd_report(args):
    g, rot = _load(args.file)
    doc = full_report(g, rot, str(args.file), args.max_cycle_len, args.timings)
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="theta-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    t = sub.add_parser("theta", help="Theta* classes of G (and S(G))")
    t.add_argument("file", type=Path)
    t.add_argument("--subdivide", action="store_true", help="also compare with S(G)")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_theta)

    s = sub.add_parser("subdivide", help="write the full subdivision as a graph file")
    s.add_argument("file", type=Path)
    s.add_argument("-o", "--output", type=Path)
    s.set_defaults(func=cmd_subdivide)

    v = sub.add_parser("verify", help="run the theorem checks for a graph family")
    v.add_argument("file", type=Path)
    v.add_argument("--family", choices=FAMILIES, default="generic")
    v.add_argument("--max-cycle-len", type=int, default=None,
                   help="cycle bound for the touching-pair search (default 6 for plane families, 12 otherwise)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("wiener", help="Wiener index by BFS and/or the cut method")
    w.add_argument("file", type=Path)
    w.add_argument("--method", choices=("bfs", "cuts", "both"), default="both")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_wiener)

    r = sub.add_parser("report", help="JSON report with every applicable analysis")
    r.add_argument("file", type=Path)
    r.add_argument("--max-cycle-len", type=int, default=None)
    r.add_argument("--timings", action="store_true", help="include wall-clock timings (non-deterministic)")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotPartialCube, OSError) as exc:
        print(f"theta-lab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
