"""Plain-text graph files.

::

    graph <n> <m>
    u v            (m lines, 0-based)
    rotation       (optional)
    w1 w2 ...      (n lines: cyclic neighbour order of vertex 0, 1, ...)

Blank lines and ``#`` comments are accepted on input and never written.
"""

from pathlib import Path

from .errors import ConsistencyError, GraphSyntaxError
from .graph import build_graph


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line, lineno, what):
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise GraphSyntaxError(f"expected integers in {what}, got {line!r}", lineno) from None


def parse_graph_file(text, require_connected=True):
    """Parse graph-file text into ``(Graph, rotation or None)``."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphSyntaxError("empty graph file", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "graph":
        raise GraphSyntaxError(f"header must be 'graph <n> <m>', got {header!r}", lineno)
    n, m = _ints(" ".join(parts[1:]), lineno, "header")
    if n < 0 or m < 0:
        raise GraphSyntaxError("negative counts in header", lineno)
    body = lines[1:]
    if len(body) < m:
        raise GraphSyntaxError(f"header promises {m} edges, file has {len(body)} lines",
                               body[-1][0] if body else lineno)
    pairs = []
    for lineno, line in body[:m]:
        vals = _ints(line, lineno, "edge line")
        if len(vals) != 2:
            raise GraphSyntaxError(f"edge line needs two vertices, got {line!r}", lineno)
        if not all(0 <= x < n for x in vals):
            raise GraphSyntaxError(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        pairs.append(vals)
    g = build_graph(pairs, n=n, require_connected=require_connected)

    rest = body[m:]
    if not rest:
        return g, None
    lineno, marker = rest[0]
    if marker != "rotation":
        raise GraphSyntaxError(f"expected 'rotation' or end of file, got {marker!r}", lineno)
    rows = rest[1:]
    if len(rows) != n:
        where = rows[-1][0] if rows else lineno
        raise GraphSyntaxError(f"rotation section needs {n} lines, has {len(rows)}", where)
    rotation = []
    for v, (lineno, line) in enumerate(rows):
        row = tuple(_ints(line, lineno, "rotation line"))
        if len(row) != len(set(row)) or set(row) != set(g.neighbors(v)):
            raise ConsistencyError(
                f"line {lineno}: rotation of vertex {v} lists {list(row)}, "
                f"neighbours are {list(g.neighbors(v))}")
        rotation.append(row)
    return g, tuple(rotation)


def serialize_graph(g, rotation=None):
    out = [f"graph {g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    if rotation is not None:
        out.append("rotation")
        out.extend(" ".join(str(w) for w in row) for row in rotation)
    return "\n".join(out) + "\n"


def read_graph_file(path, require_connected=True):
    return parse_graph_file(Path(path).read_text(), require_connected=require_connected)


def write_graph_file(path, g, rotation=None):
    Path(path).write_text(serialize_graph(g, rotation))
