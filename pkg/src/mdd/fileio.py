"""Text formats for graphs, instances, set systems, and solutions.

Graph file: line `n m`, then m lines `u v` with 0-based ids and u < v.
Instance file: a graph, then `p <id> objective <min|max>`, then optional
`w <id> <weight>` lines (weight is a positive integer or `inf`; default 1).
Set system file: line `r t`, then t lines of space-separated element ids.
Solution file: whitespace-separated vertex ids.

Blank lines and lines starting with `#` are ignored everywhere.  Serializers
emit a canonical form (sorted edges, no comments) so that parse/serialize
round-trips are byte-identical on canonical files.
"""
from __future__ import annotations

import math
from typing import Iterable

from .errors import InputError
from .graph import Graph, Instance, Objective, UNDELETABLE
from .reductions import SetSystem


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_graph_lines(lines) -> Graph:
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InputError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: expected integer 'n m' header") from None
    edges = []
    seen = set()
    for _ in range(m):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise InputError(f"expected {m} edge lines, got {len(edges)}") from None
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected integer endpoints") from None
        if u == v:
            raise InputError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: edge ({u}, {v}) out of range")
        if u > v:
            raise InputError(f"line {lineno}: edges must satisfy u < v")
        if (u, v) in seen:
            raise InputError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    g = _parse_graph_lines(lines)
    for lineno, _ in lines:
        raise InputError(f"line {lineno}: trailing content after edge list")
    return g


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.num_edges}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Instance:
    lines = _content_lines(text)
    g = _parse_graph_lines(lines)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise InputError("missing 'p <id> objective <min|max>' line") from None
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[2] != "objective":
        raise InputError(f"line {lineno}: expected 'p <id> objective <min|max>'")
    try:
        p = int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: p must be an integer") from None
    try:
        objective = Objective(parts[3])
    except ValueError:
        raise InputError(f"line {lineno}: objective must be 'min' or 'max'") from None
    weights = [1] * g.n
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "w":
            raise InputError(f"line {lineno}: expected 'w <id> <weight>'")
        try:
            v = int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: vertex id must be an integer") from None
        if not 0 <= v < g.n:
            raise InputError(f"line {lineno}: vertex {v} out of range")
        if parts[2] == "inf":
            weights[v] = UNDELETABLE
        else:
            try:
                weights[v] = int(parts[2])
            except ValueError:
                raise InputError(
                    f"line {lineno}: weight must be a positive integer or 'inf'"
                ) from None
    return Instance(g, p, tuple(weights), objective)


def serialize_instance(inst: Instance) -> str:
    out = serialize_graph(inst.graph)
    out += f"p {inst.p} objective {inst.objective.value}\n"
    for v, w in enumerate(inst.weights):
        if v == inst.p or w == 1:
            continue
        out += f"w {v} {'inf' if w == math.inf else w}\n"
    return out


def parse_setsystem(text: str) -> SetSystem:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InputError("empty set system file") from None
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected 'r t' header")
    try:
        r, t = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: expected integer 'r t' header") from None
    family = []
    for _ in range(t):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise InputError(f"expected {t} set lines, got {len(family)}") from None
        try:
            members = frozenset(int(x) for x in line.split())
        except ValueError:
            raise InputError(f"line {lineno}: expected integer element ids") from None
        family.append(members)
    for lineno, _ in lines:
        raise InputError(f"line {lineno}: trailing content after set list")
    return SetSystem(r, tuple(family))


def serialize_setsystem(sys: SetSystem) -> str:
    out = [f"{sys.universe_size} {sys.num_sets}"]
    out += [" ".join(str(x) for x in sorted(f)) for f in sys.family]
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> frozenset:
    ids = []
    for lineno, line in _content_lines(text):
        for tok in line.split():
            try:
                ids.append(int(tok))
            except ValueError:
                raise InputError(f"line {lineno}: '{tok}' is not a vertex id") from None
    return frozenset(ids)


def serialize_solution(vertices: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(vertices)) + "\n"
