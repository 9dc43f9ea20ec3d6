"""Greedy deletion subroutines used by the approximation algorithms:
degree-cap deletion (every remaining vertex v keeps degree <= f(v)),
dominating set, and dissociation deletion (remaining max degree <= 1).

All three are deterministic: ties are broken by lowest vertex id, and
coverage/weight scores are compared as exact rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InfeasibleError, PreconditionError
from .graph import Graph

#: Cap sentinel: the vertex carries no degree constraint at all.
EXEMPT = None


@dataclass(frozen=True)
class FDepProblem:
    """Degree-cap deletion problem.

    cap[v] is an integer bound on the degree v may keep, or EXEMPT.  A
    negative cap means v cannot remain at all (such caps arise from the
    branch subproblems of the subset-enumeration algorithm).  weights[v] is
    a positive integer, or UNDELETABLE for vertices that must survive.
    """

    graph: Graph
    cap: tuple
    weights: tuple

    def __post_init__(self):
        n = self.graph.n
        if len(self.cap) != n or len(self.weights) != n:
            raise PreconditionError("cap/weights length must equal vertex count")
        for c in self.cap:
            if c is not EXEMPT and not isinstance(c, int):
                raise PreconditionError("caps must be integers or EXEMPT")

    @classmethod
    def uniform(cls, graph: Graph, f: int, weights=None) -> "FDepProblem":
        if weights is None:
            weights = tuple(1 for _ in range(graph.n))
        return cls(graph, tuple(f for _ in range(graph.n)), tuple(weights))


def _excess(prob: FDepProblem, v: int, degree: int) -> int:
    c = prob.cap[v]
    if c is EXEMPT:
        return 0
    return max(0, degree - c)


def f_dependent_delete(prob: FDepProblem) -> frozenset:
    """Greedy degree-cap deletion.

    Repeatedly deletes the deletable vertex with the best ratio of total
    cap-excess removed to weight.  Raises InfeasibleError when violations
    remain but no deletable vertex can reduce them (every violated vertex is
    undeletable with only undeletable remaining neighbors).
    """
    g = prob.graph
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    deleted = set()
    while True:
        excess = {v: _excess(prob, v, deg[v]) for v in remaining}
        total = sum(excess.values())
        if total == 0:
            break
        best = None
        best_score = None
        for u in sorted(remaining):
            w = prob.weights[u]
            if w == math.inf:
                continue
            gain = excess[u]
            for v in g.adj[u]:
                if v in remaining and excess[v] > 0:
                    gain += excess[v] - _excess(prob, v, deg[v] - 1)
            if gain <= 0:
                continue
            score = Fraction(gain, w)
            if best_score is None or score > best_score:
                best = u
                best_score = score
        if best is None:
            raise InfeasibleError(
                "degree caps violated but every helpful vertex is undeletable")
        remaining.discard(best)
        deleted.add(best)
        for v in g.adj[best]:
            if v in remaining:
                deg[v] -= 1
    return frozenset(deleted)


def check_degree_caps(prob: FDepProblem, deleted: Iterable[int]) -> bool:
    """Re-verify a candidate against the caps from scratch."""
    deleted = set(deleted)
    remaining = set(range(prob.graph.n)) - deleted
    for v in remaining:
        c = prob.cap[v]
        if c is EXEMPT:
            continue
        if len(prob.graph.adj[v] & remaining) > c:
            return False
    return True


def dominating_set_approx(g: Graph, forbidden: Iterable[int] = (),
                          weights: Optional[tuple] = None) -> frozenset:
    """Greedy weighted dominating set avoiding `forbidden` vertices.

    Picks the allowed vertex covering the most still-undominated vertices
    per unit weight.  Vertices that are forbidden, or carry infinite weight,
    are never selected but still need to be dominated.
    """
    forbidden = set(forbidden)
    if weights is None:
        weights = tuple(1 for _ in range(g.n))
    allowed = [v for v in range(g.n)
               if v not in forbidden and weights[v] != math.inf]
    allowed_set = set(allowed)
    for v in range(g.n):
        if not (g.closed_neighborhood(v) & allowed_set):
            raise InfeasibleError(
                f"vertex {v} cannot be dominated: closed neighborhood forbidden")
    uncovered = set(range(g.n))
    chosen = set()
    while uncovered:
        best = None
        best_score = None
        for u in allowed:
            if u in chosen:
                continue
            covered = len(g.closed_neighborhood(u) & uncovered)
            if covered == 0:
                continue
            score = Fraction(covered, weights[u])
            if best_score is None or score > best_score:
                best = u
                best_score = score
        assert best is not None  # the precheck above guarantees progress
        chosen.add(best)
        uncovered -= g.closed_neighborhood(best)
    return frozenset(chosen)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    vertices = set(vertices)
    covered = set()
    for v in vertices:
        covered |= g.closed_neighborhood(v)
    return len(covered) == g.n


def dissociation_delete(g: Graph, weights: Optional[tuple] = None) -> frozenset:
    """Greedy deletion until the remaining graph has maximum degree 1."""
    return f_dependent_delete(FDepProblem.uniform(g, 1, weights))
