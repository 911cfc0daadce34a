"""Turn a dominating set of a bipartite graph into an independent dominating set.

Given parts (A, B) and a dominating set D:

1. I0 = vertices of D with no neighbor in D.
2. A0 = A & I0, B0 = B & I0, A1 = (D & A) - A0, B1 = (D & B) - B0.
3. If |A1| < |B1|, exchange the roles of A and B.
4. A2 = A - (A0 | A1 | N(B0)).
5. I = A0 | A1 | A2 | B0.

I is independent and dominating with |I| <= |D| + (maxdeg - 2)|B1| and
|B1| <= |D|/2, hence 2|I| <= |D| * maxdeg. Applied to a minimum D this gives
i(G)/gamma(G) <= maxdeg/2 for bipartite G. Minimality of D is never used,
so any dominating set is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from domkit.errors import GraphError, NotBipartiteError, NotDominatingError
from domkit.graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition,
    is_dominating,
    is_independent,
    max_degree,
    open_neighborhood,
    undominated_vertex,
)
from domkit.solvers import BNB, solve_gamma, solve_i


@dataclass(frozen=True)
class TransformTrace:
    """Every intermediate set of the construction; sides are post-swap."""

    d: frozenset[int]
    part_a: frozenset[int]
    part_b: frozenset[int]
    i0: frozenset[int]
    a0: frozenset[int]
    a1: frozenset[int]
    b0: frozenset[int]
    b1: frozenset[int]
    swapped: bool
    a2: frozenset[int]
    result: frozenset[int]
    delta: int

    @property
    def size_bound(self) -> int:
        """|D| + (maxdeg - 2)|B1|, the intermediate bound on |I|."""
        return len(self.d) + (self.delta - 2) * len(self.b1)


def independent_dominating_from(
    g: Graph, parts: Bipartition, d: Iterable[int]
) -> TransformTrace:
    d = frozenset(d)
    if not parts.is_valid_for(g):
        raise GraphError("parts are not a valid bipartition of the graph")
    delta = max_degree(g)
    if delta < 2:
        raise GraphError(f"maximum degree must be at least 2, got {delta}")
    missed = undominated_vertex(g, d)
    if missed is not None:
        raise NotDominatingError(missed)

    part_a, part_b = parts.part_a, parts.part_b
    i0 = frozenset(v for v in d if not any(w in d for w in g.neighbors(v)))
    a0, b0 = part_a & i0, part_b & i0
    a1, b1 = (d & part_a) - a0, (d & part_b) - b0
    swapped = len(a1) < len(b1)
    if swapped:
        part_a, part_b = part_b, part_a
        a0, b0 = b0, a0
        a1, b1 = b1, a1
    a2 = part_a - (a0 | a1 | open_neighborhood(g, b0))
    result = a0 | a1 | a2 | b0
    return TransformTrace(
        d=d,
        part_a=part_a,
        part_b=part_b,
        i0=i0,
        a0=a0,
        a1=a1,
        b0=b0,
        b1=b1,
        swapped=swapped,
        a2=a2,
        result=result,
        delta=delta,
    )


def proof_violations(g: Graph, t: TransformTrace) -> list[str]:
    """Check every structural claim and inequality of the construction on a trace.

    Returns the names of the failed checks; an empty list means the trace is
    consistent with the argument step by step.
    """
    failed = []

    def need(ok, name):
        if not ok:
            failed.append(name)

    d, delta = t.d, t.delta
    pieces = (t.a0, t.a1, t.b0, t.b1)
    need(t.a0 | t.a1 | t.b0 | t.b1 == d, "A0|A1|B0|B1 == D")
    need(sum(map(len, pieces)) == len(d), "A0, A1, B0, B1 pairwise disjoint")
    need(len(t.a1) >= len(t.b1), "|A1| >= |B1|")
    need(2 * len(t.b1) <= len(d) - len(t.a0) - len(t.b0), "|B1| <= (|D|-|A0|-|B0|)/2")
    need(len(t.b1) <= len(d) // 2, "|B1| <= floor(|D|/2)")

    b1_nbrs = open_neighborhood(g, t.b1)
    a1_nbrs = open_neighborhood(g, t.a1)
    need(t.a1 <= b1_nbrs, "every A1 vertex has a neighbor in B1")
    need(t.b1 <= a1_nbrs, "every B1 vertex has a neighbor in A1")
    need(not (t.a2 & (t.a0 | t.a1 | open_neighborhood(g, t.b0))), "A2 disjoint from A0|A1|N(B0)")
    need(t.a2 <= b1_nbrs, "A2 subset of N(B1)")
    need(len(t.a2) <= (delta - 1) * len(t.b1), "|A2| <= (maxdeg-1)|B1|")
    need(t.result == t.a0 | t.a1 | t.a2 | t.b0, "I == A0|A1|A2|B0")

    need(is_independent(g, t.result), "I independent")
    need(is_dominating(g, t.result), "I dominating")
    # The three domination cases for vertices outside I.
    b0_nbrs = open_neighborhood(g, t.b0)
    a12_nbrs = open_neighborhood(g, t.a1 | t.a2)
    a01_nbrs = open_neighborhood(g, t.a0 | t.a1)
    need(all(v in b0_nbrs for v in t.part_a - t.result), "A - I dominated by B0")
    need(all(v in a12_nbrs for v in t.b1 - t.result), "B1 - I dominated by A1|A2")
    rest_b = t.part_b - t.result - t.b1
    need(all(v in a01_nbrs for v in rest_b), "B - (B0|B1) - I dominated by A0|A1")

    size = len(t.result)
    need(size == len(d) - len(t.b1) + len(t.a2), "|I| == |D| - |B1| + |A2|")
    need(size <= t.size_bound, "|I| <= |D| + (maxdeg-2)|B1|")
    need(2 * t.size_bound <= len(d) * delta, "2(|D| + (maxdeg-2)|B1|) <= |D| maxdeg")
    need(2 * size <= len(d) * delta, "2|I| <= |D| maxdeg")
    return failed


@dataclass(frozen=True)
class Theorem3Report:
    gamma: int
    i: int
    delta: int
    bound: int
    holds: bool
    transform_size: int
    trace: TransformTrace
    violations: tuple[str, ...]


def verify_theorem3(
    g: Graph, method: str = BNB, parts: Bipartition | None = None
) -> Theorem3Report:
    """Solve gamma and i exactly, run the construction on a minimum dominating
    set, and check i <= |I| <= floor(gamma * maxdeg / 2)."""
    if parts is None:
        found = bipartition(g)
        if isinstance(found, OddCycle):
            raise NotBipartiteError(found.cycle)
        parts = found
    delta = max_degree(g)
    if delta < 2:
        raise GraphError(f"maximum degree must be at least 2, got {delta}")
    gamma = solve_gamma(g, method)
    indep = solve_i(g, method)
    trace = independent_dominating_from(g, parts, gamma.witness)
    violations = proof_violations(g, trace)
    bound = gamma.value * delta // 2
    size = len(trace.result)
    if not indep.value <= size <= bound:
        violations.append("i <= |I| <= floor(gamma maxdeg / 2)")
    return Theorem3Report(
        gamma=gamma.value,
        i=indep.value,
        delta=delta,
        bound=bound,
        holds=2 * indep.value <= gamma.value * delta,
        transform_size=size,
        trace=trace,
        violations=tuple(violations),
    )
