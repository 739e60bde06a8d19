"""Seeded instance generators and small-graph corpora."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graphcore import Graph, Subgraph, subgraph_from


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Simple graph with ``m`` distinct random edges."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 0 or m > n * (n - 1) // 2:
        raise ValueError(f"a simple graph on {n} vertices has at most {n * (n - 1) // 2} edges")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, sorted(rng.sample(pairs, m)))


def random_subcubic(n: int, m: int, seed: int, attempts: int = 1000) -> Graph:
    """Simple graph with ``m`` edges and maximum degree at most 3."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 0 or m > 3 * n // 2 or m > n * (n - 1) // 2:
        raise ValueError(f"no subcubic simple graph on {n} vertices has {m} edges")
    rng = random.Random(seed)
    for _ in range(attempts):
        deg = [0] * n
        chosen: set[tuple[int, int]] = set()
        while len(chosen) < m:
            options = [
                (u, v)
                for u in range(n)
                if deg[u] < 3
                for v in range(u + 1, n)
                if deg[v] < 3 and (u, v) not in chosen
            ]
            if not options:
                break
            u, v = rng.choice(options)
            chosen.add((u, v))
            deg[u] += 1
            deg[v] += 1
        if len(chosen) == m:
            return Graph(n, sorted(chosen))
    raise ValueError(f"gave up building a subcubic graph with n={n}, m={m}")


def _random_pair(rng: random.Random, n: int) -> tuple[int, int]:
    u = rng.randrange(n)
    v = rng.randrange(n - 1)
    return u, v + (v >= u)


def random_instance(
    n: int,
    m: int,
    seed: int,
    h_vertices: int | None = None,
    h_edges: int | None = None,
    free_connected: bool = False,
) -> tuple[Graph, Subgraph]:
    """Multigraph ``G`` with a connected subgraph ``H``.

    ``H`` is a random recursive tree on ``h_vertices`` random vertices plus
    random extra edges among them, ``h_edges`` in total. The remaining edges
    of ``G`` join random vertex pairs; with ``free_connected`` they include a
    spanning tree of all vertices, which makes ``G - E(H)`` connected.
    Edge ids are shuffled so ``H`` edges are scattered.
    """
    rng = random.Random(seed)
    if n < 1:
        raise ValueError("n must be at least 1")
    k = h_vertices if h_vertices is not None else rng.randint(1, min(n, m + 1))
    if not 1 <= k <= n:
        raise ValueError(f"H needs between 1 and {n} vertices")
    if k - 1 > m:
        raise ValueError(f"m={m} is too small for a tree on {k} vertices")
    need_free = n - 1 if free_connected else 0
    if h_edges is None:
        spare = max(0, m - need_free - (k - 1)) // 2 if k > 1 else 0
        h_edges = k - 1 + rng.randint(0, spare)
    if h_edges < k - 1 or h_edges + need_free > m or (k == 1 and h_edges):
        raise ValueError("infeasible H edge count for the given n, m")

    verts = rng.sample(range(n), k)
    hpairs = [(verts[i], verts[rng.randrange(i)]) for i in range(1, k)]
    while len(hpairs) < h_edges:
        a, b = _random_pair(rng, k)
        hpairs.append((verts[a], verts[b]))
    fpairs = []
    if free_connected:
        order = list(range(n))
        rng.shuffle(order)
        fpairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(hpairs) + len(fpairs) < m:
        fpairs.append(_random_pair(rng, n) if n > 1 else (0, 0))

    tagged = [(p, True) for p in hpairs] + [(p, False) for p in fpairs]
    rng.shuffle(tagged)
    g = Graph(n, (p for p, _ in tagged))
    h = subgraph_from(g, verts, [e for e, (_, in_h) in enumerate(tagged) if in_h])
    return g, h


def bench_instance(m: int, seed: int) -> tuple[Graph, Subgraph]:
    """Closed-feasible benchmark instance: ``n = m/4``, half of the edges in ``H``."""
    n = max(2, m // 4)
    return random_instance(n, m, seed, h_vertices=max(1, n // 2), h_edges=m // 2, free_connected=True)


def from_networkx(nxg: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(nxg.nodes))}
    return Graph(len(index), sorted(tuple(sorted((index[u], index[v]))) for u, v in nxg.edges))


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All connected simple graphs up to isomorphism with ``min_n <= n <= max_n <= 7``."""
    if max_n > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    for nxg in nx.graph_atlas_g():
        k = nxg.number_of_nodes()
        if min_n <= k <= max_n and nx.is_connected(nxg):
            yield from_networkx(nxg)


def connected_subcubic_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All connected simple graphs with maximum degree <= 3, up to isomorphism.

    Grown one vertex at a time: removing a non-cut vertex (a leaf of a
    spanning tree) from a connected subcubic graph leaves a connected
    subcubic graph, so every such graph on ``n`` vertices is an ``n - 1``
    vertex one plus a new vertex joined to 1..3 vertices of degree <= 2.
    """
    level = [nx.empty_graph(1)] if max_n >= 1 else []
    n = 1
    while level:
        if n >= min_n:
            for nxg in level:
                yield from_networkx(nxg)
        if n == max_n:
            return
        buckets: dict[tuple, list[nx.Graph]] = {}
        nxt: list[nx.Graph] = []
        for base in level:
            open_slots = [v for v in sorted(base.nodes) if base.degree(v) < 3]
            for r in (1, 2, 3):
                for nbrs in combinations(open_slots, r):
                    cand = base.copy()
                    cand.add_edges_from((n, v) for v in nbrs)
                    key = (
                        cand.number_of_edges(),
                        tuple(sorted(d for _, d in cand.degree)),
                        nx.weisfeiler_lehman_graph_hash(cand, iterations=3),
                    )
                    seen = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(cand, other) for other in seen):
                        continue
                    seen.append(cand)
                    nxt.append(cand)
        level = nxt
        n += 1
