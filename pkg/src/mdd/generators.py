"""Deterministic instance generators: pairing-model regular graphs, G(n,p)
random graphs, and random set systems meeting the reduction preconditions.
"""
from __future__ import annotations

import random

from .errors import InputError, PreconditionError
from .graph import Graph
from .reductions import SetSystem


def generate_random_regular(n: int, k: int, seed: int,
                            max_attempts: int = 5000) -> Graph:
    """Random simple k-regular graph via the pairing model.

    Shuffles n*k half-edge stubs and pairs them consecutively; restarts on a
    self-loop or parallel edge.  Deterministic per seed.
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2 != 0:
        raise PreconditionError(
            f"no {k}-regular graph on {n} vertices (need 0 <= k < n, n*k even)")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    for _ in range(max_attempts):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, sorted(edges))
    raise PreconditionError(
        f"pairing model failed to produce a simple {k}-regular graph on "
        f"{n} vertices after {max_attempts} attempts")


def generate_random_cubic(n: int, seed: int) -> Graph:
    return generate_random_regular(n, 3, seed)


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def generate_random_setsystem(r: int, t: int, seed: int,
                              max_attempts: int = 5000) -> SetSystem:
    """Random set system with r elements and t sets satisfying the
    preconditions of both bipartite constructions: r <= t, every element
    missing from at least one set, every set missing at least one element.
    """
    if r < 2 or t < 2 or r > t:
        # r = 1 would force every (non-empty) set to contain the element,
        # violating the occurrence bound.
        raise PreconditionError("need 2 <= r <= t")
    rng = random.Random(seed)
    max_set = min(r, t - 1)
    for _ in range(max_attempts):
        family = [frozenset(rng.sample(range(r), rng.randint(1, max_set)))
                  for _ in range(t)]
        union = set().union(*family)
        if union != set(range(r)):
            continue
        occ = [sum(1 for f in family if x in f) for x in range(r)]
        if max(occ) <= t - 1:
            return SetSystem(r, tuple(family))
    raise PreconditionError(
        f"failed to sample a valid set system with r={r}, t={t}")
