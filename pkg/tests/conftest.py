from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from seulerian import Graph, subgraph_from

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


# -- small named graphs -----------------------------------------------------


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def k23() -> Graph:
    # parts {u=0, v=1} and {a=2, b=3, c=4}
    return Graph(5, [(u, x) for u in (0, 1) for x in (2, 3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def theta(length: int) -> Graph:
    """Three internally disjoint u-v paths with ``length`` edges each; u=0, v=1."""
    edges = []
    nxt = 2
    for _ in range(3):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def edge_id(g: Graph, u: int, v: int) -> int:
    for e, pair in enumerate(g.edges):
        if set(pair) == {u, v}:
            return e
    raise KeyError((u, v))


def sub(g: Graph, edge_ids, extra_vertices=()):
    vs = set(extra_vertices)
    for e in edge_ids:
        vs.update(g.edges[e])
    return subgraph_from(g, vs, edge_ids)


# -- independent brute force ---------------------------------------------------


def trail_search(g: Graph, h, mode: str) -> bool:
    """DFS over every trail of ``g``; true iff one covers E(H) and V(H) with the right shape.

    Knows nothing about parity or completions, so it checks the oracle's
    subgraph formulation from the trail side.
    """
    inc = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        inc[u].append((e, v))
        if u != v:
            inc[v].append((e, u))
    need_e = set(h.edge_ids)
    need_v = set(h.vertices)

    def ok(start, end, used, visited):
        if mode == "closed" and end != start:
            return False
        if mode == "open" and end == start:
            return False
        return need_e <= used and need_v <= visited

    def dfs(start, cur, used, visited):
        if ok(start, cur, used, visited):
            return True
        for e, w in inc[cur]:
            if e not in used:
                used.add(e)
                added = w not in visited
                visited.add(w)
                if dfs(start, w, used, visited):
                    return True
                used.discard(e)
                if added:
                    visited.discard(w)
        return False

    return any(dfs(s, s, set(), {s}) for s in range(g.n))


def held_karp(g: Graph, closed: bool, ends: tuple[int, int] | None = None) -> bool:
    """Bitmask DP for Hamiltonian cycle / path; independent of the backtracking solvers."""
    n = g.n
    if n == 0:
        return False
    adj = [0] * n
    for u, v in g.edges:
        if u != v:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    if closed and n < 3:
        return False
    full = (1 << n) - 1
    starts = [0] if closed else ([ends[0]] if ends else range(n))
    for s in starts:
        reach = [0] * (1 << n)  # reach[mask] = bitset of possible last vertices
        reach[1 << s] = 1 << s
        for mask in range(1 << n):
            last = reach[mask]
            while last:
                low = last & -last
                v = low.bit_length() - 1
                last ^= low
                nxt = adj[v] & ~mask
                while nxt:
                    lw = nxt & -nxt
                    reach[mask | lw] |= lw
                    nxt ^= lw
        final = reach[full]
        if closed:
            if final & adj[s]:
                return True
        elif ends:
            if final >> ends[1] & 1:
                return True
        elif final:
            return True
    return False


# -- hypothesis strategies ----------------------------------------------------


@st.composite
def multigraphs(draw, max_n=6, max_m=9, loops=True):
    n = draw(st.integers(1, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m)) if n > 1 or loops else []
    return Graph(n, edges)


@st.composite
def graph_with_connected_sub(draw, max_n=6, max_m=9, loops=True):
    """A multigraph plus a connected subgraph grown from a random vertex."""
    g = draw(multigraphs(max_n, max_m, loops))
    root = draw(st.integers(0, g.n - 1))
    vs, es = {root}, set()
    for e in draw(st.permutations(range(g.m))):
        u, v = g.edges[e]
        if (u in vs or v in vs) and draw(st.booleans()):
            es.add(e)
            vs.update((u, v))
    return g, subgraph_from(g, vs, es)
