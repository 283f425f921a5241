"""Good-resolution dual graphs: validation and derived numerical data.

Graphs are user-supplied input (resolution of singularities is out of scope
for this tool).  File format: a JSON object

    {"vertices": [{"id": int, "genus": int, "self_intersection": int}, ...],
     "edges": [[id, id], ...]}

with distinct integer ids, strictly negative self-intersections, and edges
between existing distinct vertices.  Multi-edges are allowed (two components
may meet more than once); self-loops are not, because the components of a
good resolution are smooth and cross normally.  Keys starting with "_" are
ignored, so fixtures can carry commentary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphFormatError


@dataclass(frozen=True)
class Vertex:
    id: int
    genus: int
    self_intersection: int


@dataclass(frozen=True)
class ResolutionGraph:
    vertices: tuple
    edges: tuple  # pairs (id, id) with id_a <= id_b, multiplicity by repetition

    def vertex_ids(self):
        return [v.id for v in self.vertices]


def load_graph(source):
    """Parse and validate a graph from a path, JSON text, or dict."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if not str(source).lstrip().startswith("{"):
            try:
                with open(source, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise GraphFormatError(f"cannot read graph file: {exc}") from exc
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    unknown = [k for k in doc if k not in ("vertices", "edges")
               and not k.startswith("_")]
    if unknown:
        raise GraphFormatError(f"unknown keys: {unknown}")
    raw_vertices = doc.get("vertices")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_vertices, list):
        raise GraphFormatError("'vertices' must be a list")
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list")
    vertices = []
    seen = set()
    for entry in raw_vertices:
        if (not isinstance(entry, dict)
                or not {"id", "genus", "self_intersection"} <= set(entry)):
            raise GraphFormatError(
                "each vertex needs 'id', 'genus' and 'self_intersection'")
        vid = entry["id"]
        genus = entry["genus"]
        self_int = entry["self_intersection"]
        if not all(isinstance(x, int) for x in (vid, genus, self_int)):
            raise GraphFormatError(f"vertex {entry}: fields must be integers")
        if vid in seen:
            raise GraphFormatError(f"duplicate vertex id {vid}")
        if genus < 0:
            raise GraphFormatError(f"vertex {vid}: genus must be >= 0")
        if self_int >= 0:
            raise GraphFormatError(
                f"vertex {vid}: self-intersection must be negative")
        seen.add(vid)
        vertices.append(Vertex(vid, genus, self_int))
    edges = []
    for pair in raw_edges:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) for x in pair)):
            raise GraphFormatError(f"edge {pair!r}: expected [id, id]")
        a, b = pair
        if a == b:
            raise GraphFormatError(
                f"edge [{a}, {b}]: self-loops are not allowed")
        if a not in seen or b not in seen:
            raise GraphFormatError(f"edge [{a}, {b}]: dangling endpoint")
        edges.append((a, b) if a <= b else (b, a))
    vertices.sort(key=lambda v: v.id)
    edges.sort()
    return ResolutionGraph(tuple(vertices), tuple(edges))


def genus_sum(graph):
    """g: the sum of the component genera."""
    return sum(v.genus for v in graph.vertices)


def loop_count(graph):
    """l: first Betti number of the incidence graph (edges - vertices + components)."""
    ids = graph.vertex_ids()
    parent = {i: i for i in ids}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in graph.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    components = len({find(i) for i in ids})
    return len(graph.edges) - len(ids) + components


def intersection_matrix(graph):
    """Symmetric integer matrix: E_i.E_i on the diagonal, edge counts off it.

    Rows follow vertex ids in increasing order.
    """
    ids = graph.vertex_ids()
    index = {vid: i for i, vid in enumerate(ids)}
    n = len(ids)
    mat = [[0] * n for _ in range(n)]
    for i, v in enumerate(graph.vertices):
        mat[i][i] = v.self_intersection
    for a, b in graph.edges:
        i, j = index[a], index[b]
        mat[i][j] += 1
        mat[j][i] += 1
    return mat


def is_negative_definite(matrix):
    """Sylvester test in exact arithmetic: (-1)^k det(M_k) > 0 for all k."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise ValueError("matrix is not symmetric")
    sign = 1
    for k in range(1, n + 1):
        sign = -sign
        det = _det_fraction([row[:k] for row in matrix[:k]])
        if sign * det <= 0:
            return False
    return True


def _det_fraction(rows):
    rows = [[Fraction(x) for x in row] for row in rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = rows[i][c] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return det
