"""Undirected multigraphs with dense integer ids, subgraph views and trails.

Vertex ids are ``0..n-1`` and edge ids ``0..m-1`` in input order. Parallel
edges and self-loops are allowed; a loop adds 2 to the degree of its vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class GraphError(ValueError):
    """Invalid ids, closure violations and malformed text input."""


class Graph:
    """Immutable undirected multigraph.

    ``edges[e]`` is the endpoint pair of edge ``e``. Incidence is held in CSR
    form (``offsets``, ``inc_edge``, ``inc_other``) with each vertex's
    entries in ascending edge id; a self-loop appears twice at its vertex.
    """

    __slots__ = ("n", "edges", "eu", "ev", "offsets", "inc_edge", "inc_other", "_incidence")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        pairs = list(edges)
        arr = np.array(pairs, dtype=np.int64).reshape(len(pairs), 2) if pairs else np.empty((0, 2), np.int64)
        bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
        if bad.size:
            e = int(bad[0])
            raise GraphError(f"edge {e} = {tuple(pairs[e])} out of range for n={n}")
        m = arr.shape[0]
        self.n = n
        self.eu = np.ascontiguousarray(arr[:, 0])
        self.ev = np.ascontiguousarray(arr[:, 1])
        self.edges: tuple[tuple[int, int], ...] = tuple(map(tuple, arr.tolist()))
        ends = np.concatenate((self.eu, self.ev))
        others = np.concatenate((self.ev, self.eu))
        ids = np.concatenate((np.arange(m), np.arange(m)))
        order = np.lexsort((ids, ends))
        self.inc_edge = ids[order]
        self.inc_other = others[order]
        self.offsets = np.zeros(n + 1, np.int64)
        np.cumsum(np.bincount(ends, minlength=n), out=self.offsets[1:])
        self._incidence = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per-vertex ``(edge_id, other_endpoint)`` lists."""
        if self._incidence is None:
            pairs = list(zip(self.inc_edge.tolist(), self.inc_other.tolist()))
            bounds = self.offsets.tolist()
            self._incidence = [pairs[bounds[v] : bounds[v + 1]] for v in range(self.n)]
        return self._incidence

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise GraphError(f"edge id {e} out of range for m={len(self.edges)}")

    def without_edge(self, eid: int) -> Graph:
        """Copy of the graph with edge ``eid`` removed; later edge ids shift down by one."""
        self.check_edge(eid)
        return Graph(self.n, self.edges[:eid] + self.edges[eid + 1 :])


@dataclass(frozen=True)
class Subgraph:
    """Vertex set plus edge-id set of a host graph.

    Build it through :func:`subgraph_from`, which enforces closure.
    """

    host: Graph = field(repr=False)
    vertices: frozenset[int]
    edge_ids: frozenset[int]

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.fromiter(self.edge_ids, np.int64, len(self.edge_ids))

    def edge_mask(self) -> np.ndarray:
        """Fresh uint8 array over host edge ids, 1 on edges of the subgraph."""
        mask = np.zeros(self.host.m, np.uint8)
        mask[self.edge_array] = 1
        return mask


@dataclass(frozen=True)
class Trail:
    """Edge-distinct walk in ``host`` starting at ``start``.

    ``steps`` holds edge ids. Validity is not checked here; see
    :func:`seulerian.algorithm.verify_trail`.
    """

    host: Graph = field(repr=False)
    start: int
    steps: tuple[int, ...]

    def vertex_sequence(self) -> list[int]:
        """Vertices ``v0..vk`` visited by the walk; raises GraphError if it is not a walk."""
        edges = self.host.edges
        seq = [self.start]
        cur = self.start
        for i, e in enumerate(self.steps):
            u, v = edges[e]
            if cur == u:
                cur = v
            elif cur == v:
                cur = u
            else:
                raise GraphError(f"step {i} (edge {e}) does not leave vertex {cur}")
            seq.append(cur)
        return seq

    @property
    def closed(self) -> bool:
        seq = self.vertex_sequence()
        return seq[-1] == seq[0]


def degree(g: Graph, v: int) -> int:
    g.check_vertex(v)
    return int(g.offsets[v + 1] - g.offsets[v])


def degrees(g: Graph, edge_ids: Iterable[int] | np.ndarray | None = None) -> np.ndarray:
    """Degree of every vertex counted over ``edge_ids`` (all edges when None)."""
    if edge_ids is None:
        return np.diff(g.offsets)
    ids = edge_ids if isinstance(edge_ids, np.ndarray) else np.fromiter(edge_ids, np.int64)
    return np.bincount(g.eu[ids], minlength=g.n) + np.bincount(g.ev[ids], minlength=g.n)


def spanning_forest(g: Graph, excluded_mask: np.ndarray | None = None):
    """BFS forest of ``g`` minus the edges flagged in ``excluded_mask``.

    Roots are taken in ascending vertex id and neighbours in ascending edge
    id. Returns ``(labels, order, parent_edge)`` arrays: dense component
    labels, the BFS visiting order, and the tree edge above each vertex
    (``-1`` at roots).
    """
    if excluded_mask is None:
        excluded_mask = np.zeros(g.m, np.uint8)
    return _kernels.bfs_forest(g.n, g.offsets, g.inc_edge, g.inc_other, excluded_mask)


def components(g: Graph, excluded_edges: Iterable[int] = ()) -> list[int]:
    """Component label per vertex of ``g`` after deleting ``excluded_edges``.

    Labels are dense and numbered by smallest member vertex.
    """
    mask = np.zeros(g.m, np.uint8)
    for e in excluded_edges:
        g.check_edge(e)
        mask[e] = 1
    return spanning_forest(g, mask)[0].tolist()


def subgraph_from(host: Graph, vertices: Iterable[int], edge_ids: Iterable[int]) -> Subgraph:
    vs = frozenset(vertices)
    es = frozenset(edge_ids)
    for v in vs:
        host.check_vertex(v)
    for e in es:
        host.check_edge(e)
        u, w = host.edges[e]
        if u not in vs or w not in vs:
            missing = u if u not in vs else w
            raise GraphError(f"closure violation: endpoint {missing} of edge {e} is not in the vertex set")
    return Subgraph(host, vs, es)


def is_connected(h: Subgraph) -> bool:
    """Whether ``(h.vertices, h.edge_ids)`` is connected; the empty subgraph is not."""
    if not h.vertices:
        return False
    g = h.host
    start = min(h.vertices)
    reached = _kernels.reach_count(g.n, g.offsets, g.inc_edge, g.inc_other, h.edge_mask(), start)
    return reached == len(h.vertices)


# ---------------------------------------------------------------------------
# text formats


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(lineno: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count + 1:
        raise GraphError(f"line {lineno}: expected {count} integer(s) after {fields[0]!r}")
    try:
        return [int(x) for x in fields[1:]]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer field in {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by exactly ``m`` lines ``e <u> <v>``."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, fields in _records(text):
        tag = fields[0]
        if tag == "p":
            if header is not None:
                raise GraphError(f"line {lineno}: duplicate 'p' line")
            header = _ints(lineno, fields, 2)
        elif tag == "e":
            if header is None:
                raise GraphError(f"line {lineno}: 'e' line before 'p' line")
            u, v = _ints(lineno, fields, 2)
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unknown record {tag!r}")
    if header is None:
        raise GraphError("missing 'p <n> <m>' line")
    n, m = header
    if m < 0:
        raise GraphError(f"negative edge count {m}")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_subgraph(text: str, host: Graph) -> Subgraph:
    """Parse ``v <vertex>`` / ``s <edge id>`` lines; endpoints of listed edges are added implicitly."""
    vertices: set[int] = set()
    edge_ids: set[int] = set()
    for lineno, fields in _records(text):
        tag = fields[0]
        if tag == "v":
            (v,) = _ints(lineno, fields, 1)
            host.check_vertex(v)
            vertices.add(v)
        elif tag == "s":
            (e,) = _ints(lineno, fields, 1)
            host.check_edge(e)
            edge_ids.add(e)
            vertices.update(host.edges[e])
        else:
            raise GraphError(f"line {lineno}: unknown record {tag!r}")
    return subgraph_from(host, vertices, edge_ids)


def serialize_subgraph(h: Subgraph) -> str:
    lines = [f"v {v}" for v in sorted(h.vertices)]
    lines.extend(f"s {e}" for e in sorted(h.edge_ids))
    return "\n".join(lines) + "\n"


def parse_trail(text: str, host: Graph) -> Trail:
    """Parse ``t <closed|open> <start>`` followed by ``e <edge id>`` lines.

    The closed/open word is informational; shape is checked by the verifier.
    """
    start = None
    steps: list[int] = []
    for lineno, fields in _records(text):
        tag = fields[0]
        if tag == "t":
            if start is not None:
                raise GraphError(f"line {lineno}: duplicate 't' line")
            if len(fields) != 3 or fields[1] not in ("closed", "open"):
                raise GraphError(f"line {lineno}: expected 't <closed|open> <start>'")
            try:
                start = int(fields[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer start vertex") from None
        elif tag == "e":
            if start is None:
                raise GraphError(f"line {lineno}: 'e' line before 't' line")
            (e,) = _ints(lineno, fields, 1)
            steps.append(e)
        else:
            raise GraphError(f"line {lineno}: unknown record {tag!r}")
    if start is None:
        raise GraphError("missing 't <closed|open> <start>' line")
    return Trail(host, start, tuple(steps))


def serialize_trail(t: Trail) -> str:
    try:
        shape = "closed" if t.closed else "open"
    except GraphError:
        shape = "open"
    lines = [f"t {shape} {t.start}"]
    lines.extend(f"e {e}" for e in t.steps)
    return "\n".join(lines) + "\n"
