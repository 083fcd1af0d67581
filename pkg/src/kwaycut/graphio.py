"""Line-oriented edge-list format.

::

    # optional comment lines
    n m
    u v w        (m lines; 0-based vertices; w a positive integer or p/q)

The i-th edge line becomes edge id i.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TextIO

from .graph import Edge, Graph, GraphError

_WEIGHT = re.compile(r"^(\d+)(?:/(\d+))?$")


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_weight(token: str, lineno: int) -> Fraction:
    m = _WEIGHT.match(token)
    if not m:
        raise ParseError(lineno, f"weight {token!r} is not an integer or p/q rational")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(lineno, "zero denominator")
    w = Fraction(num, den)
    if w <= 0:
        raise ParseError(lineno, f"weight must be positive, got {token}")
    return w


def parse_graph(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError(1, "missing header 'n m'")

    lineno, header = rows[0]
    if len(header) != 2 or not all(t.isdigit() for t in header):
        raise ParseError(lineno, "header must be two nonnegative integers 'n m'")
    n, m = map(int, header)
    if n < 1:
        raise ParseError(lineno, "graph needs at least one vertex")
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(where, f"header declares {m} edges but file has {len(body)}")

    edges = []
    for eid, (lineno, tokens) in enumerate(body):
        if len(tokens) != 3:
            raise ParseError(lineno, "edge line must be 'u v w'")
        if not (tokens[0].isdigit() and tokens[1].isdigit()):
            raise ParseError(lineno, "vertex indices must be nonnegative integers")
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise ParseError(lineno, f"vertex index out of range for n={n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        edges.append(Edge(eid, u, v, _parse_weight(tokens[2], lineno)))
    return Graph(n, tuple(edges))


def read_graph(fp: TextIO) -> Graph:
    return parse_graph(fp.read())


def serialize_graph(g: Graph, comment: str | None = None) -> str:
    if [e.id for e in g.edges] != list(range(g.m)):
        raise GraphError("only graphs with edge ids 0..m-1 in order can be written")
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{e.u} {e.v} {e.weight}" for e in g.edges)
    return "\n".join(lines) + "\n"
