"""Executable hardness constructions with bidirectional solution mappers.

Four constructions are provided:
  * dominating set -> MDD(min) on general graphs (clique-padded complement),
  * set cover -> MDD(min) on bipartite graphs,
  * set cover -> MDD(max) on bipartite graphs (pendant-padded incidence),
  * cubic dominating set -> cubic MDD(max) (disjoint 6-vertex gadget,
    additive constant 2).

Each forward map sends a source solution to a feasible deletion set, and
each backward map sends a feasible deletion set to a source solution of no
larger size.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InapplicableError, InputError, PreconditionError
from .graph import DeletionSet, Graph, Instance, Objective, is_feasible
from .subroutines import is_dominating


@dataclass(frozen=True)
class SetSystem:
    """A universe {0..r-1} and a family of subsets covering it."""

    universe_size: int
    family: tuple

    def __post_init__(self):
        if self.universe_size < 1:
            raise InputError("universe must be non-empty")
        family = tuple(frozenset(f) for f in self.family)
        object.__setattr__(self, "family", family)
        if not family:
            raise InputError("family must be non-empty")
        union = set()
        for f in family:
            for x in f:
                if not 0 <= x < self.universe_size:
                    raise InputError(f"element {x} outside universe")
            union |= f
        if union != set(range(self.universe_size)):
            raise InputError("family does not cover the universe; no cover exists")

    @property
    def num_sets(self) -> int:
        return len(self.family)

    def occurrences(self, x: int) -> int:
        return sum(1 for f in self.family if x in f)

    def is_cover(self, indices: Iterable[int]) -> bool:
        covered = set()
        for i in indices:
            covered |= self.family[i]
        return covered == set(range(self.universe_size))


@dataclass
class ReductionArtifact:
    """A constructed instance plus the provenance needed to map solutions."""

    kind: str
    instance: Instance
    roles: tuple          # per-vertex role tag
    data: dict = field(default_factory=dict)

    def vertices_with_role(self, role: str) -> list:
        return [v for v, r in enumerate(self.roles) if r == role]


# ---------------------------------------------------------------------------
# dominating set -> MDD(min)
# ---------------------------------------------------------------------------

def mindom_to_mddmin(g: Graph) -> ReductionArtifact:
    """Complement g, attach p to all of V, and pad degrees with a (2n+2)-clique
    so every original vertex ends at degree exactly n.

    Dominating sets of g are exactly the solutions of the produced MDD(min)
    instance that lie inside V, with equal cost.
    """
    n = g.n
    if n < 1:
        raise PreconditionError("source graph must have at least one vertex")
    p = n
    t_start = n + 1
    t_size = 2 * n + 2
    total = 3 * n + 3
    edges = g.complement().edges()
    edges += [(v, p) for v in range(n)]
    edges += [(t_start + i, t_start + j)
              for i in range(t_size) for j in range(i + 1, t_size)]
    # Round-robin padding: vertex v gets d_g(v) edges into the clique.
    next_t = 0
    for v in range(n):
        for _ in range(g.degree(v)):
            edges.append((v, t_start + next_t))
            next_t = (next_t + 1) % t_size
    h = Graph(total, edges)
    roles = tuple(["original"] * n + ["p"] + ["T"] * t_size)
    inst = Instance(h, p, None, Objective.MIN)
    return ReductionArtifact("mindom->mddmin", inst, roles, {"source": g})


def mddmin_solution_to_domset(art: ReductionArtifact, s) -> frozenset:
    """Drop clique vertices from a feasible deletion set; what remains is a
    dominating set of the source of no larger size."""
    if art.kind != "mindom->mddmin":
        raise PreconditionError("artifact is not a mindom->mddmin reduction")
    if not is_feasible(art.instance, s):
        raise PreconditionError("solution is not feasible for the instance")
    source = art.data["source"]
    verts = s.vertices if isinstance(s, DeletionSet) else frozenset(s)
    dom = frozenset(v for v in verts if v < source.n)
    if not is_dominating(source, dom):
        raise PreconditionError(
            "projected set fails domination; the input cannot have been feasible")
    return dom


def domset_to_mddmin_solution(art: ReductionArtifact, domset) -> DeletionSet:
    if art.kind != "mindom->mddmin":
        raise PreconditionError("artifact is not a mindom->mddmin reduction")
    source = art.data["source"]
    if not is_dominating(source, domset):
        raise PreconditionError("input is not a dominating set of the source")
    return DeletionSet.of(art.instance, domset)


# ---------------------------------------------------------------------------
# set cover -> bipartite MDD(min)
# ---------------------------------------------------------------------------

def setcover_to_mddmin_bip(sys: SetSystem) -> ReductionArtifact:
    """Anti-incidence construction: element vertex a_i is adjacent to set
    vertex b_j iff the element is NOT in the set; p hangs off the set side;
    a complete bipartite pad on C and D lifts every degree to exactly t.

    Requires r <= t so that the D-side pad can absorb every set vertex.
    """
    r = sys.universe_size
    t = sys.num_sets
    if r > t:
        raise InapplicableError(
            f"construction needs r <= t (got r={r}, t={t})")
    u_ids = list(range(r))
    f_ids = [r + j for j in range(t)]
    c_ids = [r + t + j for j in range(t)]
    d_ids = [r + 2 * t + j for j in range(t)]
    p = r + 3 * t
    edges = [(c, d) for c in c_ids for d in d_ids]
    edges += [(b, p) for b in f_ids]
    for i in range(r):
        for j in range(t):
            if i not in sys.family[j]:
                edges.append((u_ids[i], f_ids[j]))
    # Pad set vertices toward D and element vertices toward C, round-robin,
    # until each reaches degree t.
    next_d = 0
    for j in range(t):
        have = 1 + (r - len(sys.family[j]))
        for _ in range(max(0, t - have)):
            edges.append((f_ids[j], d_ids[next_d]))
            next_d = (next_d + 1) % t
    next_c = 0
    for i in range(r):
        have = t - sys.occurrences(i)
        for _ in range(max(0, t - have)):
            edges.append((u_ids[i], c_ids[next_c]))
            next_c = (next_c + 1) % t
    h = Graph(r + 3 * t + 1, edges)
    assert h.is_bipartite()
    roles = tuple(["U"] * r + ["F"] * t + ["C"] * t + ["D"] * t + ["p"])
    inst = Instance(h, p, None, Objective.MIN)
    return ReductionArtifact("setcover->mddmin-bip", inst, roles,
                             {"system": sys, "f_ids": tuple(f_ids),
                              "u_ids": tuple(u_ids)})


def _cover_from_deletion(art: ReductionArtifact, verts) -> frozenset:
    sys = art.data["system"]
    f_ids = art.data["f_ids"]
    u_ids = art.data["u_ids"]
    f_pos = {b: j for j, b in enumerate(f_ids)}
    u_pos = {a: i for i, a in enumerate(u_ids)}
    cover = {f_pos[v] for v in verts if v in f_pos}
    for v in verts:
        if v in u_pos:
            x = u_pos[v]
            j = min(j for j, f in enumerate(sys.family) if x in f)
            cover.add(j)
    # Pad/clique/pendant vertices are dropped outright.
    if not sys.is_cover(cover):
        raise PreconditionError(
            "projected indices fail to cover; the input cannot have been feasible")
    return frozenset(cover)


def mddmin_bip_solution_to_cover(art: ReductionArtifact, s) -> frozenset:
    """Set-vertex deletions become sets; deleted element vertices are
    replaced by any set containing their element."""
    if art.kind != "setcover->mddmin-bip":
        raise PreconditionError("artifact is not a setcover->mddmin-bip reduction")
    if not is_feasible(art.instance, s):
        raise PreconditionError("solution is not feasible for the instance")
    verts = s.vertices if isinstance(s, DeletionSet) else frozenset(s)
    return _cover_from_deletion(art, verts)


def cover_to_mddmin_bip_solution(art: ReductionArtifact, cover) -> DeletionSet:
    if art.kind != "setcover->mddmin-bip":
        raise PreconditionError("artifact is not a setcover->mddmin-bip reduction")
    sys = art.data["system"]
    if not sys.is_cover(cover):
        raise PreconditionError("input indices are not a set cover")
    f_ids = art.data["f_ids"]
    return DeletionSet.of(art.instance, {f_ids[j] for j in cover})


# ---------------------------------------------------------------------------
# set cover -> bipartite MDD(max)
# ---------------------------------------------------------------------------

def setcover_to_mddmax_bip(sys: SetSystem) -> ReductionArtifact:
    """Natural incidence construction plus pendant vertices lifting p and
    every element vertex to degree exactly t; all other degrees stay below t.

    Requires occ(x) <= t-1 and |F_j| <= t-1 (else some vertex would tie p)
    and r <= t (else p would start above degree t).
    """
    r = sys.universe_size
    t = sys.num_sets
    if r > t:
        raise InapplicableError(f"construction needs r <= t (got r={r}, t={t})")
    for x in range(r):
        if sys.occurrences(x) > t - 1:
            raise InapplicableError(
                f"element {x} occurs in every set; pendant padding impossible")
    for j, f in enumerate(sys.family):
        if len(f) > t - 1:
            raise InapplicableError(
                f"set {j} has {len(f)} elements; its vertex would tie p at degree t")
    u_ids = list(range(r))
    f_ids = [r + j for j in range(t)]
    p = r + t
    edges = [(u_ids[i], f_ids[j]) for i in range(r) for j in range(t)
             if i in sys.family[j]]
    edges += [(a, p) for a in u_ids]
    roles = ["U"] * r + ["F"] * t + ["p"]
    next_id = r + t + 1
    pendant_owner = {}
    for i in range(r):
        need = t - (sys.occurrences(i) + 1)
        for _ in range(need):
            edges.append((u_ids[i], next_id))
            roles.append("I")
            pendant_owner[next_id] = u_ids[i]
            next_id += 1
    for _ in range(t - r):
        edges.append((p, next_id))
        roles.append("I")
        pendant_owner[next_id] = p
        next_id += 1
    h = Graph(next_id, edges)
    assert h.is_bipartite()
    inst = Instance(h, p, None, Objective.MAX)
    return ReductionArtifact("setcover->mddmax-bip", inst, tuple(roles),
                             {"system": sys, "f_ids": tuple(f_ids),
                              "u_ids": tuple(u_ids),
                              "pendant_owner": pendant_owner})


def mddmax_bip_solution_to_cover(art: ReductionArtifact, s) -> frozenset:
    """Normalization: element vertices and pendants of element vertices are
    replaced by a covering set vertex; pendants of p are dropped."""
    if art.kind != "setcover->mddmax-bip":
        raise PreconditionError("artifact is not a setcover->mddmax-bip reduction")
    if not is_feasible(art.instance, s):
        raise PreconditionError("solution is not feasible for the instance")
    sys = art.data["system"]
    u_ids = art.data["u_ids"]
    f_ids = art.data["f_ids"]
    owner = art.data["pendant_owner"]
    u_pos = {a: i for i, a in enumerate(u_ids)}
    f_pos = {b: j for j, b in enumerate(f_ids)}
    verts = s.vertices if isinstance(s, DeletionSet) else frozenset(s)
    cover = {f_pos[v] for v in verts if v in f_pos}
    for v in verts:
        x = None
        if v in u_pos:
            x = u_pos[v]
        elif v in owner and owner[v] != art.instance.p:
            x = u_pos[owner[v]]
        if x is not None:
            cover.add(min(j for j, f in enumerate(sys.family) if x in f))
    if not sys.is_cover(cover):
        raise PreconditionError(
            "normalized indices fail to cover; the input cannot have been feasible")
    return frozenset(cover)


def cover_to_mddmax_bip_solution(art: ReductionArtifact, cover) -> DeletionSet:
    if art.kind != "setcover->mddmax-bip":
        raise PreconditionError("artifact is not a setcover->mddmax-bip reduction")
    sys = art.data["system"]
    if not sys.is_cover(cover):
        raise PreconditionError("input indices are not a set cover")
    f_ids = art.data["f_ids"]
    return DeletionSet.of(art.instance, {f_ids[j] for j in cover})


# ---------------------------------------------------------------------------
# cubic dominating set -> cubic MDD(max)
# ---------------------------------------------------------------------------

def cubic_gadget():
    """The 6-vertex cubic bipartite gadget and its distinguished vertex.

    K_{3,3} with parts {p, d, e} and {a, b, c}: its unique optimal MDD(max)
    solution is {d, e}, every minimal solution contains {d, e}, and none
    touches {a, b, c}.  Vertex order: p, a, b, c, d, e.
    """
    p, a, b, c, d, e = range(6)
    edges = [(p, a), (p, b), (p, c),
             (d, a), (d, b), (d, c),
             (e, a), (e, b), (e, c)]
    return Graph(6, edges), p


def mindom_cubic_to_mddmax_cubic(g: Graph) -> ReductionArtifact:
    """Disjoint union with the 6-vertex gadget; costs shift by exactly 2."""
    if g.regular_degree() != 3:
        raise PreconditionError("source graph is not 3-regular")
    gadget, gp = cubic_gadget()
    combined = g.disjoint_union(gadget)
    p = g.n + gp
    roles = tuple(["original"] * g.n + ["p", "gadget", "gadget", "gadget",
                                        "gadget", "gadget"])
    inst = Instance(combined, p, None, Objective.MAX)
    d_id, e_id = g.n + 4, g.n + 5
    return ReductionArtifact("mindom-cubic->mddmax-cubic", inst, roles,
                             {"source": g, "de": (d_id, e_id)})


def domset_to_mddmax_cubic_solution(art: ReductionArtifact, domset) -> DeletionSet:
    if art.kind != "mindom-cubic->mddmax-cubic":
        raise PreconditionError("artifact is not a cubic reduction")
    source = art.data["source"]
    if not is_dominating(source, domset):
        raise PreconditionError("input is not a dominating set of the source")
    d_id, e_id = art.data["de"]
    return DeletionSet.of(art.instance, set(domset) | {d_id, e_id})


def mddmax_cubic_solution_to_domset(art: ReductionArtifact, s) -> frozenset:
    if art.kind != "mindom-cubic->mddmax-cubic":
        raise PreconditionError("artifact is not a cubic reduction")
    if not is_feasible(art.instance, s):
        raise PreconditionError("solution is not feasible for the instance")
    source = art.data["source"]
    verts = s.vertices if isinstance(s, DeletionSet) else frozenset(s)
    dom = frozenset(v for v in verts if v < source.n)
    if not is_dominating(source, dom):
        raise PreconditionError(
            "projected set fails domination; the input cannot have been feasible")
    return dom
