"""Generators for the graph families used to probe the i/gamma <= maxdeg/2 bound.

Vertex-id layouts are fixed and documented per generator so witnesses in
golden tests stay stable.

Random instances use Python's ``random.Random`` (the MT19937 Mersenne
Twister) seeded with an integer. For integer seeds ``random()`` yields the
same double sequence on every platform and Python 3 release, and the draw
order below is part of the format: do not reorder it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from domkit.errors import GraphError
from domkit.graph import Graph, build_graph

FAMILIES = ("complete_bipartite", "double_star", "cycle", "odd_cycle_corona", "random_bipartite")


def complete_bipartite(m: int) -> Graph:
    """K_{m,m}: side A is 0..m-1, side B is m..2m-1."""
    if m < 1:
        raise GraphError(f"complete_bipartite needs m >= 1, got {m}")
    return build_graph(2 * m, [(a, m + b) for a in range(m) for b in range(m)])


def double_star(s: int) -> Graph:
    """Centers 0 and 1 joined by an edge; leaves 2..s+1 hang off 0, s+2..2s+1 off 1."""
    if s < 1:
        raise GraphError(f"double_star needs s >= 1, got {s}")
    edges = [(0, 1)]
    edges += [(0, 2 + j) for j in range(s)]
    edges += [(1, 2 + s + j) for j in range(s)]
    return build_graph(2 * s + 2, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(j, (j + 1) % n) for j in range(n)])


def odd_cycle_corona(k: int, s: int) -> Graph:
    """C_{2k+1} on 0..2k with s pendant leaves per cycle vertex.

    Pendant p (0 <= p < s) of cycle vertex j has id 2k+1 + j*s + p.
    """
    if k < 1 or s < 1:
        raise GraphError(f"odd_cycle_corona needs k >= 1 and s >= 1, got k={k}, s={s}")
    c = 2 * k + 1
    edges = [(j, (j + 1) % c) for j in range(c)]
    edges += [(j, c + j * s + p) for j in range(c) for p in range(s)]
    return build_graph(c * (s + 1), edges)


def random_bipartite(na: int, nb: int, p: float, seed: int) -> Graph:
    """Side A is 0..na-1, side B is na..na+nb-1.

    Cross pairs are visited a-major, b-minor; pair (a, b) is an edge iff the
    next ``random()`` draw is < p.
    """
    if na < 1 or nb < 1:
        raise GraphError(f"random_bipartite needs na, nb >= 1, got {na}, {nb}")
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(a, na + b) for a in range(na) for b in range(nb) if rng.random() < p]
    return build_graph(na + nb, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with pairs visited in lexicographic order, same generator as above."""
    if n < 0:
        raise GraphError(f"random_graph needs n >= 0, got {n}")
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    m: int = 0
    s: int = 0
    k: int = 0
    n: int = 0
    na: int = 0
    nb: int = 0
    p: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        bad = {
            "complete_bipartite": self.m < 1,
            "double_star": self.s < 1,
            "cycle": self.n < 3,
            "odd_cycle_corona": self.k < 1 or self.s < 1,
            "random_bipartite": self.na < 1 or self.nb < 1 or not 0 <= self.p <= 1,
        }[self.family]
        if bad:
            raise GraphError(f"invalid parameters for {self.family}: {self}")

    def build(self) -> Graph:
        if self.family == "complete_bipartite":
            return complete_bipartite(self.m)
        if self.family == "double_star":
            return double_star(self.s)
        if self.family == "cycle":
            return cycle(self.n)
        if self.family == "odd_cycle_corona":
            return odd_cycle_corona(self.k, self.s)
        return random_bipartite(self.na, self.nb, self.p, self.seed)


def family_closed_forms(params: FamilyParams) -> tuple[int, int, int] | None:
    """Predicted (gamma, i, maxdeg) where a closed form is known, else None."""
    if params.family == "odd_cycle_corona":
        k, s = params.k, params.s
        return 2 * k + 1, k + (k + 1) * s, s + 2
    if params.family == "complete_bipartite" and params.m >= 2:
        return 2, params.m, params.m
    if params.family == "double_star":
        return 2, params.s + 1, params.s + 1
    return None
