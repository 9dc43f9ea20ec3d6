"""MDD(max) on 3-regular graphs: case analysis on the final degree of p.

Final degree 3 reduces to dominating set on a proxy graph in which N[p] is
replaced by pendant-pair proxies; final degree 2 reduces to dissociation
deletion after fixing the two surviving neighbors of p; final degree 0 is
S = V \\ {p}.  Final degree 1 is impossible for any feasible solution.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableError, PreconditionError
from .graph import DeletionSet, Graph, Instance, Objective, is_feasible
from .subroutines import dissociation_delete, dominating_set_approx, is_dominating


@dataclass(frozen=True)
class DominationGadget:
    """Proxy graph for the final-degree-3 case.

    gprime is built on (V \\ N[p]) plus proxy vertices: each x in N(p) with
    two neighbors a, b outside N[p] contributes two proxies adjacent to both;
    each x with one outside neighbor contributes one proxy adjacent to it.
    remap[i] is the original id of gprime vertex i, or None for a proxy.
    """

    gprime: Graph
    proxies: frozenset
    origin: dict
    groups: dict
    remap: tuple

    def to_original(self, vertices) -> frozenset:
        out = set()
        for v in vertices:
            orig = self.remap[v]
            if orig is None:
                raise PreconditionError(f"gprime vertex {v} is a proxy")
            out.add(orig)
        return frozenset(out)


def _require_cubic_max_unit(inst: Instance):
    if inst.graph.regular_degree() != 3:
        raise PreconditionError("graph is not 3-regular")
    if inst.objective is not Objective.MAX:
        raise PreconditionError("cubic algorithm handles objective Max only")
    if not inst.unit_weights:
        raise PreconditionError("cubic algorithm requires unit weights")


def build_domination_gadget(inst: Instance) -> DominationGadget:
    _require_cubic_max_unit(inst)
    g = inst.graph
    p = inst.p
    np_closed = g.closed_neighborhood(p)
    outside = sorted(set(range(g.n)) - np_closed)
    outside_set = set(outside)
    per_x = {}
    for x in sorted(g.adj[p]):
        out_x = sorted(g.adj[x] & outside_set)
        if not 1 <= len(out_x) <= 2:
            raise InapplicableError(
                f"neighbor {x} of p has {len(out_x)} neighbors outside N[p]; "
                f"the final-degree-3 case does not apply")
        per_x[x] = out_x
    index = {v: i for i, v in enumerate(outside)}
    edges = [(index[u], index[v]) for u in outside for v in g.adj[u]
             if u < v and v in index]
    remap = [v for v in outside]
    origin = {}
    groups = {}
    proxies = set()
    next_id = len(outside)
    for x in sorted(g.adj[p]):
        out_x = per_x[x]
        count = 2 if len(out_x) == 2 else 1
        ids = []
        for _ in range(count):
            pid = next_id
            next_id += 1
            proxies.add(pid)
            origin[pid] = x
            remap.append(None)
            for a in out_x:
                edges.append((pid, index[a]))
            ids.append(pid)
        groups[x] = tuple(ids)
    gprime = Graph(next_id, edges)
    return DominationGadget(gprime, frozenset(proxies), origin, groups,
                            tuple(remap))


def normalize_dominating_set(gadget: DominationGadget, d_in) -> frozenset:
    """Push proxy vertices out of a dominating set of gprime.

    Each selected proxy is replaced by one of its neighbors (the outside
    neighbors of the source vertex), which dominates the whole proxy group.
    The result is a dominating set of gprime, disjoint from the proxies and
    no larger than the input.
    """
    g = gadget.gprime
    d = set(d_in)
    if not is_dominating(g, d):
        raise PreconditionError("input does not dominate the proxy graph")
    for x, group in gadget.groups.items():
        hits = d & set(group)
        if not hits:
            continue
        d -= hits
        replacements = sorted(g.neighborhood_of_set(group))
        for _ in hits:
            fresh = [v for v in replacements if v not in d]
            if fresh:
                d.add(fresh[0])
            # else: the neighbors are all chosen already and dominate the
            # group; dropping the proxy only shrinks the set.
    assert not (d & gadget.proxies)
    assert is_dominating(g, d)
    return frozenset(d)


def build_gstar(inst: Instance, x: int):
    """Dissociation subproblem for the final-degree-2 case with x deleted.

    Returns (gstar, remap, fixed) where fixed = {x} plus the neighbors of
    the two surviving vertices y, z of N(p) (excluding p, y, z themselves),
    and gstar is the subgraph induced on V minus N[{y,z}] and x.
    """
    _require_cubic_max_unit(inst)
    g = inst.graph
    p = inst.p
    if x not in g.adj[p]:
        raise PreconditionError(f"{x} is not a neighbor of p")
    y, z = sorted(g.adj[p] - {x})
    if z in g.adj[y]:
        raise InapplicableError(
            f"surviving neighbors {y} and {z} are adjacent; branch at x={x} "
            f"does not apply")
    nyz = g.adj[y] | g.adj[z]
    fixed = ({x} | nyz) - {p, y, z}
    vstar = set(range(g.n)) - ({y, z} | nyz | {x})
    gstar, remap = g.induced_subgraph(vstar)
    return gstar, remap, frozenset(fixed)


@dataclass(frozen=True)
class CubicTrace:
    solution: DeletionSet
    case: str
    candidate_sizes: tuple  # (case label, size) per evaluated candidate


# Selection prefers smaller sets; among equal sizes the domination case wins
# over the dissociation branches, which win over the full deletion.
_CASE_RANK = {"domination": 0, "dissociation": 1, "full": 2}


def mdd_max_cubic_trace(inst: Instance) -> CubicTrace:
    _require_cubic_max_unit(inst)
    g = inst.graph
    p = inst.p
    candidates = []
    try:
        gadget = build_domination_gadget(inst)
        dom = dominating_set_approx(gadget.gprime)
        normalized = normalize_dominating_set(gadget, dom)
        candidates.append(("domination", gadget.to_original(normalized)))
    except InapplicableError:
        pass
    for x in sorted(g.adj[p]):
        try:
            gstar, remap, fixed = build_gstar(inst, x)
        except InapplicableError:
            continue
        t = dissociation_delete(gstar)
        candidates.append(("dissociation", set(fixed) | {remap[i] for i in t}))
    candidates.append(("full", set(range(g.n)) - {p}))
    best = None
    best_key = None
    for label, cand in candidates:
        assert is_feasible(inst, cand)
        key = (len(cand), _CASE_RANK[label], tuple(sorted(cand)))
        if best_key is None or key < best_key:
            best_key = key
            best = (label, cand)
    label, cand = best
    return CubicTrace(DeletionSet.of(inst, cand), label,
                      tuple((lbl, len(c)) for lbl, c in candidates))


def mdd_max_cubic(inst: Instance) -> DeletionSet:
    """Best of the three case candidates; always feasible."""
    return mdd_max_cubic_trace(inst).solution
