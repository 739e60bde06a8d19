"""Exhaustive exponential-time solvers used as ground truth on small graphs.

Every solver either answers exactly or raises :class:`BudgetExceeded`; it
never guesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algorithm import MODES, Mode, _euler
from .graphcore import Graph, Subgraph, Trail, subgraph_from


class BudgetExceeded(RuntimeError):
    """The instance is larger than the budget allows or the time limit ran out."""


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_free_edges: int = 24
    time_limit: float = 10_000.0  # milliseconds

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_free_edges <= 0 or self.time_limit <= 0:
            raise ValueError("budget caps must be positive")

    def deadline(self) -> float:
        return time.monotonic() + self.time_limit / 1000.0


DEFAULT_BUDGET = OracleBudget()


def _check_vertices(g: Graph, b: OracleBudget) -> None:
    if g.n > b.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed the cap of {b.max_vertices}")


def _subset_table(masks: list[int]) -> list[int]:
    """XOR of ``masks[i]`` over the set bits i, for every subset of ``masks``."""
    table = [0]
    for mk in masks:
        table += [x ^ mk for x in table]
    return table


def _union_table(masks: list[int]) -> list[int]:
    table = [0]
    for mk in masks:
        table += [x | mk for x in table]
    return table


def _connected(vmask: int, adjacency: list[int]) -> bool:
    if not vmask:
        return False
    reach = vmask & -vmask
    frontier = reach
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adjacency[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~reach
        reach |= frontier
    return reach == vmask


def oracle_s_eulerian(g: Graph, h: Subgraph, mode: Mode, b: OracleBudget = DEFAULT_BUDGET) -> Trail | None:
    """Search every ``D`` of free edges for a (semi) Eulerian ``H + D``.

    Free-edge subsets are tried in ascending bitmask order (bit i = i-th free
    edge by id). Works for disconnected ``h``. Returns the Euler trail of the
    first valid ``H + D`` or None when no subset works.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")
    if h.host is not g and h.host != g:
        raise ValueError("subgraph is not a subgraph of the given graph")
    if not h.vertices:
        raise ValueError("empty subgraph")
    _check_vertices(g, b)
    free = [e for e in range(g.m) if e not in h.edge_ids]
    k = len(free)
    if k > b.max_free_edges:
        raise BudgetExceeded(f"{k} free edges exceed the cap of {b.max_free_edges}")
    deadline = b.deadline()

    edges = g.edges
    hpar = 0
    hverts = 0
    for v in h.vertices:
        hverts |= 1 << v
    hadj = [0] * g.n
    for e in h.edge_ids:
        u, v = edges[e]
        hpar ^= (1 << u) ^ (1 << v)
        hadj[u] |= 1 << v
        hadj[v] |= 1 << u

    lo_bits = k // 2
    lo, hi = free[:lo_bits], free[lo_bits:]

    def flips(ids):
        return [(1 << edges[e][0]) ^ (1 << edges[e][1]) for e in ids]

    def touches(ids):
        return [(1 << edges[e][0]) | (1 << edges[e][1]) for e in ids]

    par_lo, par_hi = _subset_table(flips(lo)), _subset_table(flips(hi))
    end_lo, end_hi = _union_table(touches(lo)), _union_table(touches(hi))
    closed = mode == "closed"

    for hi_mask in range(1 << len(hi)):
        if time.monotonic() > deadline:
            raise BudgetExceeded("time limit reached")
        ph = par_hi[hi_mask] ^ hpar
        eh = end_hi[hi_mask] | hverts
        for lo_mask in range(1 << lo_bits):
            par = ph ^ par_lo[lo_mask]
            if closed:
                if par:
                    continue
            elif par.bit_count() != 2:
                continue
            chosen = [e for i, e in enumerate(lo) if lo_mask >> i & 1]
            chosen += [e for i, e in enumerate(hi) if hi_mask >> i & 1]
            adjacency = list(hadj)
            for e in chosen:
                u, v = edges[e]
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
            vmask = eh | end_lo[lo_mask]
            if not _connected(vmask, adjacency):
                continue
            hp = subgraph_from(g, [v for v in range(g.n) if vmask >> v & 1], h.edge_ids.union(chosen))
            mask = hp.edge_mask()
            return _euler(g, hp.vertices, hp.edge_ids, mask, mode)
    return None


def _simple_adjacency(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _extend_paths(adj, n, path, on_path, end, deadline, ticker):
    """Depth-first extension of ``path`` into a Hamiltonian path, optionally ending at ``end``."""
    if len(path) == n:
        return end is None or path[-1] == end
    ticker[0] += 1
    if ticker[0] & 1023 == 0 and time.monotonic() > deadline:
        raise BudgetExceeded("time limit reached")
    for w in sorted(adj[path[-1]]):
        if on_path[w]:
            continue
        if w == end and len(path) + 1 < n:
            continue
        on_path[w] = True
        path.append(w)
        if _extend_paths(adj, n, path, on_path, end, deadline, ticker):
            return True
        path.pop()
        on_path[w] = False
    return False


def ham_cycle_bruteforce(g: Graph, b: OracleBudget = DEFAULT_BUDGET) -> list[int] | None:
    """Hamiltonian cycle as a vertex list starting at 0, or None.

    Parallel edges and loops are ignored, so a cycle needs at least 3 vertices.
    """
    _check_vertices(g, b)
    n = g.n
    if n < 3:
        return None
    adj = _simple_adjacency(g)
    deadline = b.deadline()
    for last in sorted(adj[0], reverse=True):
        # fix the closing edge (last, 0) and look for a 0 -> last Hamiltonian path
        path = [0]
        on_path = [False] * n
        on_path[0] = True
        if _extend_paths(adj, n, path, on_path, last, deadline, [0]):
            return path
    return None


def ham_path_bruteforce(
    g: Graph, endpoints: tuple[int, int] | None = None, b: OracleBudget = DEFAULT_BUDGET
) -> list[int] | None:
    """Hamiltonian path as a vertex list, or None.

    With ``endpoints=(s, t)`` only paths from ``s`` to ``t`` count.
    """
    _check_vertices(g, b)
    n = g.n
    if endpoints is not None:
        s, t = endpoints
        g.check_vertex(s)
        g.check_vertex(t)
        if s == t:
            raise ValueError("path endpoints must be distinct")
        starts, end = [s], t
    else:
        starts, end = range(n), None
    if n == 0:
        return None
    adj = _simple_adjacency(g)
    deadline = b.deadline()
    ticker = [0]
    for s in starts:
        path = [s]
        on_path = [False] * n
        on_path[s] = True
        if _extend_paths(adj, n, path, on_path, end, deadline, ticker):
            return path
    return None


def spanning_semi_eulerian_bruteforce(g: Graph, b: OracleBudget = DEFAULT_BUDGET) -> Trail | None:
    """Open trail of ``g`` visiting every vertex, or None."""
    if g.n == 0:
        return None
    return oracle_s_eulerian(g, subgraph_from(g, range(g.n), ()), "open", b)
