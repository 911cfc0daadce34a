"""Exact solvers for the domination number and the independent domination number.

Two independent routes are provided for each parameter:

* ``*_oracle``: enumerate vertex subsets by cardinality, then in
  lexicographic order, and return the first one that qualifies. Simple
  enough to trust, exponential in n, so guarded by a size cap.
* ``*_bnb``: depth-first branch and bound over bitmasks. Used for everything
  beyond toy sizes, and cross-checked against the oracle in the test suite.

Both parameters are additive over connected components, so the
branch-and-bound solvers split the graph first and sum the optima.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

from domkit.errors import OracleCapExceeded
from domkit.graph import Graph, from_mask, is_dominating, is_independent, max_degree

DOMINATION = "domination"
INDEPENDENT_DOMINATION = "independent-domination"
ORACLE = "oracle"
BNB = "branch-and-bound"

DEFAULT_ORACLE_CAP = 24


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    target: str
    method: str
    nodes_explored: int

    def check(self, g: Graph) -> bool:
        """True iff the witness certifies ``value`` for ``target`` on ``g``."""
        if len(self.witness) != self.value or not is_dominating(g, self.witness):
            return False
        if self.target == INDEPENDENT_DOMINATION:
            return is_independent(g, self.witness)
        return True


def oracle_cap() -> int:
    env = os.environ.get("DOMKIT_ORACLE_CAP")
    return int(env) if env else DEFAULT_ORACLE_CAP


# -- brute-force oracle ------------------------------------------------------


def _enumerate(g: Graph, independent: bool, cap: int | None) -> tuple[int, int, int]:
    cap = oracle_cap() if cap is None else cap
    if g.n > cap:
        raise OracleCapExceeded(
            f"n={g.n} exceeds the oracle cap {cap}; use branch-and-bound"
        )
    n = g.n
    full = g.full_mask
    closed = [g.closed_mask(v) for v in range(n)]
    nbr = g.masks
    tested = 0

    # Lexicographic k-subsets with the coverage mask carried along. For the
    # independent variant a prefix that is already non-independent has no
    # qualifying extension, so its subtree is skipped outright.
    def first(start, left, chosen, covered, blocked):
        nonlocal tested
        if left == 0:
            tested += 1
            return chosen if covered == full else None
        for v in range(start, n - left + 1):
            if independent and (blocked >> v) & 1:
                continue
            hit = first(v + 1, left - 1, chosen | (1 << v), covered | closed[v],
                        blocked | nbr[v])
            if hit is not None:
                return hit
        return None

    for k in range(n + 1):
        hit = first(0, k, 0, 0, 0)
        if hit is not None:
            return k, hit, tested
    raise AssertionError("the full vertex set always dominates")  # pragma: no cover


def gamma_oracle(g: Graph, cap: int | None = None) -> SolveResult:
    """Exact gamma(G) by exhaustive enumeration; witness is the lex-least optimum."""
    k, mask, tested = _enumerate(g, independent=False, cap=cap)
    return SolveResult(k, from_mask(mask), DOMINATION, ORACLE, tested)


def i_oracle(g: Graph, cap: int | None = None) -> SolveResult:
    """Exact i(G) by exhaustive enumeration of independent subsets."""
    k, mask, tested = _enumerate(g, independent=True, cap=cap)
    return SolveResult(k, from_mask(mask), INDEPENDENT_DOMINATION, ORACLE, tested)


# -- branch and bound --------------------------------------------------------


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _greedy_dominating(closed: list[int], full: int) -> int:
    chosen = 0
    covered = 0
    while covered != full:
        best_v, best_gain = -1, -1
        for v, cm in enumerate(closed):
            gain = (cm & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        covered |= closed[best_v]
    return chosen


def _greedy_independent_dominating(closed: list[int], full: int) -> int:
    # Only undominated vertices are non-adjacent to the chosen set, so picking
    # among them builds a maximal independent set.
    chosen = 0
    covered = 0
    while covered != full:
        best_v, best_gain = -1, -1
        for v in _bits(full & ~covered):
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen |= 1 << best_v
        covered |= closed[best_v]
    return chosen


def _gamma_component(g: Graph) -> tuple[int, int]:
    n = g.n
    full = g.full_mask
    closed = [g.closed_mask(v) for v in range(n)]
    reach = max_degree(g) + 1
    best_mask = _greedy_dominating(closed, full)
    best = best_mask.bit_count()
    nodes = 0

    def search(count, chosen, dominated, forbidden):
        nonlocal best, best_mask, nodes
        nodes += 1
        undom = full & ~dominated
        if not undom:
            if count < best:
                best, best_mask = count, chosen
            return
        if count + -(-undom.bit_count() // reach) >= best:
            return
        # Branch on the undominated vertex with the fewest remaining
        # candidate dominators; lowest id wins ties.
        pick, options = -1, 0
        fewest = n + 2
        for v in _bits(undom):
            opts = closed[v] & ~forbidden
            c = opts.bit_count()
            if c < fewest:
                pick, options, fewest = v, opts, c
                if c <= 1:
                    break
        if fewest == 0:
            return
        # Child j takes the j-th candidate and excludes the earlier ones, so
        # no dominating set is visited twice.
        for u in _bits(options):
            search(count + 1, chosen | (1 << u), dominated | closed[u], forbidden)
            forbidden |= 1 << u

    search(0, 0, 0, 0)
    return best_mask, nodes


def _i_component(g: Graph) -> tuple[int, int]:
    full = g.full_mask
    closed = [g.closed_mask(v) for v in range(g.n)]
    nbr = g.masks
    reach = max_degree(g) + 1
    best_mask = _greedy_independent_dominating(closed, full)
    best = best_mask.bit_count()
    nodes = 0

    def search(count, chosen, dominated, blocked):
        nonlocal best, best_mask, nodes
        nodes += 1
        undom = full & ~dominated
        if not undom:
            if count < best:
                best, best_mask = count, chosen
            return
        if count + -(-undom.bit_count() // reach) >= best:
            return
        v = (undom & -undom).bit_length() - 1
        # blocked = N(chosen) plus candidates already tried at an ancestor.
        for u in _bits(closed[v] & ~blocked):
            search(count + 1, chosen | (1 << u), dominated | closed[u], blocked | nbr[u])
            blocked |= 1 << u

    search(0, 0, 0, 0)
    return best_mask, nodes


def _by_components(g: Graph, solve_one: Callable[[Graph], tuple[int, int]]):
    witness: list[int] = []
    nodes = 0
    for comp in g.induced_components():
        if len(comp) == 1:
            witness.append(comp[0])
            nodes += 1
            continue
        sub, back = g.subgraph(comp)
        mask, k = solve_one(sub)
        witness.extend(back[v] for v in _bits(mask))
        nodes += k
    return frozenset(witness), nodes


def gamma_bnb(g: Graph) -> SolveResult:
    """Exact gamma(G) by branch and bound."""
    witness, nodes = _by_components(g, _gamma_component)
    return SolveResult(len(witness), witness, DOMINATION, BNB, nodes)


def i_bnb(g: Graph) -> SolveResult:
    """Exact i(G) by branch and bound."""
    witness, nodes = _by_components(g, _i_component)
    return SolveResult(len(witness), witness, INDEPENDENT_DOMINATION, BNB, nodes)


def solve_gamma(g: Graph, method: str = BNB) -> SolveResult:
    return gamma_oracle(g) if method == ORACLE else gamma_bnb(g)


def solve_i(g: Graph, method: str = BNB) -> SolveResult:
    return i_oracle(g) if method == ORACLE else i_bnb(g)
