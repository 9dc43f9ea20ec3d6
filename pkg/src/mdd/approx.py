"""Approximation machinery for MDD(max) on general graphs: the L-set
construction, the subset-enumeration algorithm that branches over subsets of
L, the disjoint-neighborhood fast paths, and the regular-graph lower bound.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BudgetError, InfeasibleError, PreconditionError
from .graph import (DeletionSet, Instance, NeighborhoodCase, Objective,
                    UNDELETABLE, classify_neighborhood, is_feasible)
from .subroutines import EXEMPT, FDepProblem, f_dependent_delete


@dataclass(frozen=True)
class LSet:
    """Greedily built subset of N(p), in insertion order.

    Invariant at each insertion of u (L the prefix before u):
    |N(u) \\ L| >= |N(p) \\ L|; at termination no remaining neighbor
    satisfies this.
    """

    members: tuple
    instance: Instance


def build_L(inst: Instance) -> LSet:
    """Fixpoint of the L-construction loop; ties broken by lowest id."""
    if inst.objective is not Objective.MAX:
        raise PreconditionError("L-set construction applies to objective Max")
    g = inst.graph
    np_open = g.adj[inst.p]
    members = []
    chosen = set()
    while True:
        threshold = len(np_open - chosen)
        candidates = [u for u in sorted(np_open - chosen)
                      if len(g.adj[u] - chosen) >= threshold]
        if not candidates:
            break
        u = candidates[0]
        members.append(u)
        chosen.add(u)
    return LSet(tuple(members), inst)


def default_l_cap(n: int) -> int:
    return math.ceil(math.log2(max(n, 2))) + 2


@dataclass(frozen=True)
class BranchingResult:
    solution: DeletionSet
    chosen_k: tuple
    branches_total: int
    branches_feasible: int
    l_set: tuple


def mdd_max_logn_trace(inst: Instance, cap_on_L: Optional[int] = None) -> BranchingResult:
    """Branch over every subset K of L; see mdd_max_logn."""
    if inst.objective is not Objective.MAX:
        raise PreconditionError("branching algorithm applies to objective Max")
    g = inst.graph
    p = inst.p
    if cap_on_L is None:
        cap_on_L = default_l_cap(g.n)
    l_set = build_L(inst)
    if len(l_set.members) > cap_on_L:
        raise BudgetError(
            f"|L| = {len(l_set.members)} exceeds cap {cap_on_L}; "
            f"branch count 2^|L| would be too large")
    np_open = g.adj[p]
    dp = g.degree(p)
    best = None
    best_key = None
    best_k = None
    branches = 0
    feasible_branches = 0
    members = sorted(l_set.members)
    for size in range(len(members) + 1):
        for k_tuple in itertools.combinations(members, size):
            branches += 1
            candidate = _branch_candidate(inst, set(k_tuple), np_open, dp)
            if candidate is None:
                continue
            feasible_branches += 1
            weight = inst.weight_of(candidate)
            key = (weight, len(candidate), tuple(sorted(candidate)))
            if best_key is None or key < best_key:
                best_key = key
                best = candidate
                best_k = k_tuple
    # Deleting everything but p is always feasible; keep it as the fallback
    # candidate so the algorithm cannot come back empty-handed.
    fallback = set(range(g.n)) - {p}
    fb_weight = inst.weight_of(fallback)
    fb_key = (fb_weight, len(fallback), tuple(sorted(fallback)))
    if best_key is None or fb_key < best_key:
        best_key = fb_key
        best = fallback
        best_k = None
    if best_key[0] == math.inf:
        raise InfeasibleError("every candidate requires an undeletable vertex")
    solution = DeletionSet.of(inst, best)
    assert is_feasible(inst, solution)
    return BranchingResult(solution, best_k, branches, feasible_branches,
                           l_set.members)


def _branch_candidate(inst, k_set, np_open, dp):
    """Candidate deletion set for one branch K, or None if infeasible."""
    g = inst.graph
    p = inst.p
    keep = [v for v in range(g.n) if v not in k_set]
    cap_value = dp - len(k_set) - 1
    protected = np_open - k_set
    if cap_value < 0:
        # p would end at degree <= 0, so no other vertex may remain.
        others = [v for v in keep if v != p]
        if any(v in protected or inst.weight(v) == math.inf for v in others):
            return None
        return k_set | set(others)
    sub, remap = g.induced_subgraph(keep)
    caps = []
    weights = []
    for new_id, old in enumerate(remap):
        if old == p:
            caps.append(EXEMPT)
            weights.append(UNDELETABLE)
        else:
            caps.append(cap_value)
            if old in protected:
                weights.append(UNDELETABLE)
            else:
                weights.append(inst.weight(old))
    prob = FDepProblem(sub, tuple(caps), tuple(weights))
    try:
        deleted = f_dependent_delete(prob)
    except InfeasibleError:
        return None
    return k_set | {remap[i] for i in deleted}


def mdd_max_logn(inst: Instance, cap_on_L: Optional[int] = None) -> DeletionSet:
    """Approximate MDD(max) by enumerating subsets K of the L-set.

    Each branch deletes K up front, forbids the rest of N(p), and caps every
    other vertex at d(p) - |K| - 1 via the degree-cap subroutine.  The
    cheapest feasible candidate wins; S = V \\ {p} is the final fallback.
    """
    return mdd_max_logn_trace(inst, cap_on_L).solution


def mdd_max_special(inst: Instance) -> DeletionSet:
    """Fast path when the high-degree region stays clear of N[p].

    A single degree-cap subproblem on G[V \\ N[p]] with caps
    f(v) = d(p) - |N(v) intersect N(p)| - 1 suffices.
    """
    y, d, tag = classify_neighborhood(inst)
    if tag is NeighborhoodCase.GENERAL:
        raise PreconditionError("fast path requires a disjoint neighborhood case")
    g = inst.graph
    p = inst.p
    t = g.degree(p)
    np_open = g.adj[p]
    np_closed = g.closed_neighborhood(p)
    keep = [v for v in range(g.n) if v not in np_closed]
    sub, remap = g.induced_subgraph(keep)
    caps = tuple(t - len(g.adj[old] & np_open) - 1 for old in remap)
    weights = tuple(inst.weight(old) for old in remap)
    deleted = f_dependent_delete(FDepProblem(sub, caps, weights))
    solution = DeletionSet.of(inst, {remap[i] for i in deleted})
    assert is_feasible(inst, solution)
    return solution


def approx_max(inst: Instance, cap_on_L: Optional[int] = None) -> DeletionSet:
    """Dispatch: fast path when a disjoint case applies, else branching."""
    _, _, tag = classify_neighborhood(inst)
    if tag is not NeighborhoodCase.GENERAL:
        return mdd_max_special(inst)
    return mdd_max_logn(inst, cap_on_L)


def kreg_lower_bound(n: int, k: int, f: int) -> Fraction:
    """Lower bound ((k-f+1)n - 1) / (2k-f+1) on any feasible MDD(max) set of
    a k-regular graph, where f is the number of surviving neighbors of p.
    Always at least (n-1)/(k+1)."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if not 0 <= f <= k:
        raise PreconditionError("f must lie in [0, k]")
    return Fraction((k - f + 1) * n - 1, 2 * k - f + 1)
