"""Hardness constructions run as oracle-driven Turing reductions.

* Hamiltonian cycle via one fixed-endpoint Hamiltonian path query per edge.
* Hamiltonian path via fixed-endpoint queries over all vertex pairs.
* Spanning Eulerian subgraph as the S-Eulerian question for an edgeless
  spanning ``H``.
* An audit comparing Hamiltonian paths with spanning open trails on
  subcubic graphs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations

from .graphcore import Graph, Subgraph, Trail, serialize_graph, subgraph_from
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    ham_path_bruteforce,
    spanning_semi_eulerian_bruteforce,
)


@dataclass(frozen=True)
class HPQuery:
    """Does ``graph`` have a Hamiltonian path from ``s`` to ``t``?

    ``graph`` is the original with edge ``deleted`` removed; ``s`` and ``t``
    were its endpoints.
    """

    graph: Graph
    s: int
    t: int
    deleted: int


def hc_to_hp_queries(g: Graph) -> list[HPQuery]:
    return [HPQuery(g.without_edge(e), u, v, e) for e, (u, v) in enumerate(g.edges)]


def answer_hp_query(q: HPQuery, b: OracleBudget = DEFAULT_BUDGET) -> list[int] | None:
    # a loop never lies on a Hamiltonian cycle of 3 or more vertices
    if q.s == q.t:
        return None
    return ham_path_bruteforce(q.graph, (q.s, q.t), b)


def hc_via_hp(g: Graph, b: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Hamiltonian cycle decision as the OR of the per-edge path queries (n >= 3)."""
    return any(answer_hp_query(q, b) is not None for q in hc_to_hp_queries(g))


def hp_via_all_pairs(g: Graph) -> list[tuple[int, int]]:
    return list(combinations(range(g.n), 2))


def hp_via_pairs(g: Graph, b: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Hamiltonian path decision as the OR of fixed-endpoint queries (n >= 2)."""
    return any(ham_path_bruteforce(g, pair, b) is not None for pair in hp_via_all_pairs(g))


def is_subcubic(g: Graph) -> bool:
    return all(len(inc) <= 3 for inc in g.incidence)


def edgeless_spanning_instance(g: Graph) -> tuple[Graph, Subgraph]:
    return g, subgraph_from(g, range(g.n), ())


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class AuditResult:
    graph: Graph
    ham_path: list[int] | None
    spanning_trail: Trail | None

    @property
    def consistent(self) -> bool:
        return (self.ham_path is None) == (self.spanning_trail is None)

    def report_line(self) -> str:
        hp = int(self.ham_path is not None)
        st = int(self.spanning_trail is not None)
        verdict = "consistent" if self.consistent else "COUNTEREXAMPLE"
        return f"{graph_hash(self.graph)} hp={hp} set={st} {verdict}"

    def details(self) -> str:
        """Both certificates, for counterexample reports."""
        trail = None if self.spanning_trail is None else (self.spanning_trail.start, self.spanning_trail.steps)
        return f"edges={list(self.graph.edges)} ham_path={self.ham_path} spanning_trail={trail}"


def check_hp_spanning_trail_equivalence(g: Graph, b: OracleBudget = DEFAULT_BUDGET) -> AuditResult:
    """Compare "has a Hamiltonian path" with "has a spanning open trail".

    Both sides are brute-forced independently; a disagreement comes back as
    an inconsistent result rather than an exception.
    """
    if not is_subcubic(g):
        raise ValueError("graph is not subcubic")
    return AuditResult(g, ham_path_bruteforce(g, None, b), spanning_semi_eulerian_bruteforce(g, b))
