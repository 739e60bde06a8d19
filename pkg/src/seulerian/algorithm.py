"""Linear-time decision and construction for connected subgraphs.

Pipeline for a connected subgraph ``H`` of ``G``:

1. ``S`` = odd-degree vertices of ``H``.
2. Group ``S`` by connected component of ``G - E(H)``. Two odd vertices can be
   joined by a path avoiding ``E(H)`` exactly when they share a group, so the
   "joinable" relation on ``S`` is a disjoint union of cliques and a perfect
   matching exists iff every group has even size.
3. Pair vertices inside each group and add the mod-2 sum of spanning-tree
   paths between the pairs. The result is an edge-disjoint union of paths
   (a T-join) that flips parity exactly at the paired vertices.
4. Run Hierholzer on ``H`` plus that edge set.

Every step is a single pass over vertices or edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .graphcore import Graph, GraphError, Subgraph, Trail, degrees, is_connected, spanning_forest

Mode = Literal["closed", "open"]
MODES = ("closed", "open")


class InfeasibleError(ValueError):
    """The requested matching or completion does not exist."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (parity, connectivity, host)."""


@dataclass(frozen=True)
class OddPartition:
    """Odd vertices of H grouped by component of G - E(H).

    Groups are ascending internally and ordered by smallest member.
    """

    groups: tuple[tuple[int, ...], ...]

    @property
    def odd_groups(self) -> list[tuple[int, ...]]:
        return [grp for grp in self.groups if len(grp) % 2]

    @property
    def size(self) -> int:
        return sum(len(grp) for grp in self.groups)


@dataclass(frozen=True)
class MatchingPlan:
    pairs: tuple[tuple[int, int], ...]
    leftovers: tuple[int, ...]


@dataclass(frozen=True)
class Completion:
    """Edges ``D`` outside ``E(H)`` such that ``H + D`` is (semi) Eulerian.

    ``vertices`` is the vertex set of ``H + D``.
    """

    edge_ids: frozenset[int]
    vertices: frozenset[int]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")


def _check_host(g: Graph, h: Subgraph) -> None:
    if h.host is not g and h.host != g:
        raise PreconditionError("subgraph is not a subgraph of the given graph")


def odd_vertices(h: Subgraph) -> list[int]:
    # isolated vertices have degree 0, so V(H) never needs scanning
    deg = degrees(h.host, h.edge_array)
    return np.flatnonzero(deg & 1).tolist()


def _group(odd: list[int], labels: np.ndarray) -> OddPartition:
    # odd is ascending, so first appearance order == order by smallest member
    by_label: dict[int, list[int]] = {}
    for v, lab in zip(odd, labels[odd].tolist()):
        by_label.setdefault(lab, []).append(v)
    return OddPartition(tuple(tuple(grp) for grp in by_label.values()))


def build_partition(g: Graph, h: Subgraph) -> OddPartition:
    _check_host(g, h)
    labels = spanning_forest(g, h.edge_mask())[0]
    return _group(odd_vertices(h), labels)


def decide_closed(p: OddPartition) -> bool:
    return all(len(grp) % 2 == 0 for grp in p.groups)


def _augmenting_edge(g: Graph, h: Subgraph, hmask: np.ndarray | None = None) -> int | None:
    """Smallest-id non-loop edge outside E(H) with an endpoint in V(H)."""
    if hmask is None:
        hmask = h.edge_mask()
    in_h = np.zeros(g.n, bool)
    in_h[np.fromiter(h.vertices, np.int64, len(h.vertices))] = True
    hits = np.flatnonzero((g.eu != g.ev) & (hmask == 0) & (in_h[g.eu] | in_h[g.ev]))
    return int(hits[0]) if hits.size else None


def decide_open(g: Graph, h: Subgraph, p: OddPartition) -> bool:
    """Whether a connected ``h`` is covered by some open trail of ``g``.

    With odd vertices present, at most two groups may be odd-sized. Without
    them an extra path has to create two odd ends; a single free non-loop
    edge touching ``V(H)`` does it, and a closed trail alone does not count.
    """
    _check_host(g, h)
    if p.groups:
        return len(p.odd_groups) in (0, 2)
    return _augmenting_edge(g, h) is not None


def plan_matching(p: OddPartition, mode: Mode) -> MatchingPlan:
    _check_mode(mode)
    odd = p.odd_groups
    if mode == "closed" and odd:
        raise InfeasibleError(f"odd-sized group {list(odd[0])} has no perfect matching")
    if mode == "open" and len(odd) not in (0, 2):
        raise InfeasibleError(f"{len(odd)} odd-sized groups; at most 2 vertices may stay unmatched")

    spare: tuple[int, ...] | None = None
    if mode == "open" and not odd and p.groups:
        spare = p.groups[0]  # groups are sorted by smallest member

    pairs: list[tuple[int, int]] = []
    leftovers: list[int] = []
    for grp in p.groups:
        body = grp
        if len(grp) % 2:
            body, rest = grp[:-1], grp[-1:]
            leftovers.extend(rest)
        elif grp is spare:
            body, rest = grp[:-2], grp[-2:]
            leftovers.extend(rest)
        pairs.extend(zip(body[0::2], body[1::2]))
    return MatchingPlan(tuple(pairs), tuple(sorted(leftovers)))


def _tree_join(g: Graph, forest, terminals: list[int]) -> list[int]:
    """Mod-2 sum of forest paths pairing up ``terminals`` inside each tree.

    A tree edge is used iff the subtree below it holds an odd number of
    terminals, which is the same edge set as XOR-ing the pair paths.
    """
    _, order, parent_edge = forest
    parity = np.zeros(g.n, np.uint8)
    np.bitwise_xor.at(parity, np.asarray(terminals, np.int64), 1)
    chosen = _kernels.tree_join(order, parent_edge, g.eu, g.ev, parity)
    if chosen.size and chosen[0] < 0:
        raise InfeasibleError(f"component of vertex {-1 - int(chosen[0])} holds an odd number of terminals")
    return chosen.tolist()


def _completion(g: Graph, h: Subgraph, hmask: np.ndarray, forest, plan: MatchingPlan, mode: Mode) -> Completion:
    if mode == "closed" and plan.leftovers:
        raise InfeasibleError("closed mode plan must not leave vertices unmatched")
    if mode == "open" and len(plan.leftovers) not in (0, 2):
        raise InfeasibleError("open mode plan must leave exactly 0 or 2 vertices unmatched")
    covered = [v for pair in plan.pairs for v in pair] + list(plan.leftovers)
    if sorted(covered) != odd_vertices(h):
        raise InfeasibleError("plan does not cover the odd vertices of H exactly once")
    labels = forest[0]
    for a, b in plan.pairs:
        if labels[a] != labels[b]:
            raise InfeasibleError(f"pair ({a}, {b}) is not joined in G - E(H)")

    if mode == "open" and not plan.leftovers:
        if plan.pairs:
            raise InfeasibleError("open mode plan with odd vertices must leave two unmatched")
        e = _augmenting_edge(g, h, hmask)
        if e is None:
            raise InfeasibleError("no free edge touches V(H); H is not semi S-Eulerian")
        d = [e]
    else:
        d = _tree_join(g, forest, [v for pair in plan.pairs for v in pair])

    ids = np.asarray(d, np.int64)
    touched = np.unique(np.concatenate((g.eu[ids], g.ev[ids])))
    return Completion(frozenset(d), h.vertices.union(touched.tolist()))


def even_completion(g: Graph, h: Subgraph, plan: MatchingPlan, mode: Mode) -> Completion:
    _check_mode(mode)
    _check_host(g, h)
    hmask = h.edge_mask()
    return _completion(g, h, hmask, spanning_forest(g, hmask), plan, mode)


def completed_subgraph(h: Subgraph, d: Completion) -> Subgraph:
    """``H + D`` as a Subgraph of the same host."""
    return Subgraph(h.host, d.vertices, h.edge_ids | d.edge_ids)


def _euler(g: Graph, vertices: frozenset[int], edge_ids: frozenset[int], mask: np.ndarray, mode: Mode) -> Trail:
    if not edge_ids:
        if len(vertices) != 1:
            raise PreconditionError("edgeless graph must have exactly one vertex")
        if mode == "open":
            raise PreconditionError("open mode needs exactly two odd vertices, found none")
        return Trail(g, next(iter(vertices)), ())
    deg = degrees(g, np.fromiter(edge_ids, np.int64, len(edge_ids)))
    odd = np.flatnonzero(deg & 1)
    if mode == "closed":
        if odd.size:
            raise PreconditionError(f"closed mode needs all degrees even; odd at {odd[:4].tolist()}")
        start = int(np.flatnonzero(deg)[0])
    else:
        if odd.size != 2:
            raise PreconditionError(f"open mode needs exactly two odd vertices, found {odd.size}")
        start = int(odd[0])
    steps = _kernels.hierholzer(g.n, g.offsets, g.inc_edge, g.inc_other, mask, start, len(edge_ids))
    if len(steps) != len(edge_ids) or np.count_nonzero(deg) != len(vertices):
        raise PreconditionError("graph is not connected")
    return Trail(g, start, tuple(steps.tolist()))


def euler_trail(hprime: Subgraph, mode: Mode) -> Trail:
    """Hierholzer trail using every edge of ``hprime`` once.

    Closed mode starts at the smallest non-isolated vertex, open mode at the
    smaller odd vertex. Neighbours are taken in ascending edge id.
    """
    _check_mode(mode)
    return _euler(hprime.host, hprime.vertices, hprime.edge_ids, hprime.edge_mask(), mode)


def s_eulerian_trail(g: Graph, h: Subgraph, mode: Mode) -> Trail | None:
    """Closed (open) trail of ``g`` covering every edge and vertex of ``h``, or None.

    ``h`` must be connected; disconnected instances belong to the oracle.
    """
    _check_mode(mode)
    _check_host(g, h)
    if not is_connected(h):
        raise PreconditionError("subgraph is not connected")
    hmask = h.edge_mask()
    forest = spanning_forest(g, hmask)
    part = _group(odd_vertices(h), forest[0])
    feasible = decide_closed(part) if mode == "closed" else decide_open(g, h, part)
    if not feasible:
        return None
    plan = plan_matching(part, mode)
    d = _completion(g, h, hmask, forest, plan, mode)
    hmask[np.fromiter(d.edge_ids, np.int64, len(d.edge_ids))] = 1
    return _euler(g, d.vertices, h.edge_ids | d.edge_ids, hmask, mode)


def verify_trail(g: Graph, h: Subgraph, t: Trail, mode: Mode) -> Verdict:
    """Check that ``t`` is a trail of ``g`` of the right shape covering ``h``.

    Returns a falsy Verdict naming the first violated clause instead of raising.
    """
    if mode not in MODES:
        return Verdict(False, f"unknown mode {mode!r}")
    if h.host is not g and h.host != g:
        return Verdict(False, "subgraph host mismatch")
    if not isinstance(t.start, int) or not 0 <= t.start < g.n:
        return Verdict(False, f"start vertex {t.start} out of range")
    seen = set()
    for e in t.steps:
        if not isinstance(e, int) or not 0 <= e < g.m:
            return Verdict(False, f"edge id {e} out of range")
        if e in seen:
            return Verdict(False, f"edge repeated: {e}")
        seen.add(e)
    try:
        walk = Trail(g, t.start, tuple(t.steps)).vertex_sequence()
    except GraphError as exc:
        return Verdict(False, f"not a walk: {exc}")
    if mode == "closed" and walk[-1] != walk[0]:
        return Verdict(False, "not closed")
    if mode == "open" and walk[-1] == walk[0]:
        return Verdict(False, "not open")
    missing = h.edge_ids - seen
    if missing:
        return Verdict(False, f"uncovered H edge: {min(missing)}")
    unvisited = h.vertices - set(walk)
    if unvisited:
        return Verdict(False, f"unvisited H vertex: {min(unvisited)}")
    return Verdict(True)
