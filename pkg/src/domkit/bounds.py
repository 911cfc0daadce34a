"""Upper bounds on i(G)/gamma(G) in terms of the maximum degree, decided exactly.

Ratios and bounds are ``fractions.Fraction`` values; every comparison is
integer cross-multiplication. Floats only appear in rendered output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from domkit.errors import GraphError
from domkit.graph import Graph, max_degree
from domkit.solvers import BNB, solve_gamma, solve_i

CSV_HEADER = (
    "n", "m", "delta", "gamma", "i",
    "ratio_num", "ratio_den", "conj_bound_num", "conj_bound_den",
    "within_conjecture", "within_rv", "ratio_decimal",
)


def rad_volkmann_bound(delta: int) -> Fraction:
    """delta/2 for 3 <= delta <= 5, delta - 3 + 2/(delta - 1) from 6 on."""
    if delta < 3:
        raise ValueError(f"bound is defined for delta >= 3, got {delta}")
    if delta <= 5:
        return Fraction(delta, 2)
    return delta - 3 + Fraction(2, delta - 1)


def conjecture_bound(delta: int) -> Fraction:
    if delta < 2:
        raise ValueError(f"bound is defined for delta >= 2, got {delta}")
    return Fraction(delta, 2)


def furuya_exceeds_half_delta(delta: int) -> bool:
    """Whether delta - 2*sqrt(delta) + 2 > delta/2.

    Rearranged to (delta + 4)/4 > sqrt(delta); both sides are positive, so
    squaring gives (delta + 4)^2 > 16*delta, i.e. (delta - 4)^2 > 0.
    """
    if delta < 3:
        raise ValueError(f"comparison is defined for delta >= 3, got {delta}")
    return (delta + 4) ** 2 > 16 * delta


@dataclass(frozen=True)
class RatioReport:
    n: int
    m: int
    gamma: int
    i: int
    delta: int
    ratio: Fraction
    conjecture_bound: Fraction
    rv_bound: Fraction | None
    furuya_bound_sq_check: bool | None
    within_conjecture: bool
    within_rv: bool | None

    def csv_row(self) -> list[str]:
        return [
            str(self.n), str(self.m), str(self.delta), str(self.gamma), str(self.i),
            str(self.ratio.numerator), str(self.ratio.denominator),
            str(self.conjecture_bound.numerator), str(self.conjecture_bound.denominator),
            _flag(self.within_conjecture), _flag(self.within_rv),
            f"{float(self.ratio):.6f}",
        ]


def _flag(b: bool | None) -> str:
    return "" if b is None else ("true" if b else "false")


def report_from_values(n: int, m: int, gamma: int, i: int, delta: int) -> RatioReport:
    if delta < 2:
        raise GraphError(f"ratio report needs maximum degree >= 2, got {delta}")
    ratio = Fraction(i, gamma)
    conj = conjecture_bound(delta)
    rv = rad_volkmann_bound(delta) if delta >= 3 else None
    return RatioReport(
        n=n,
        m=m,
        gamma=gamma,
        i=i,
        delta=delta,
        ratio=ratio,
        conjecture_bound=conj,
        rv_bound=rv,
        furuya_bound_sq_check=furuya_exceeds_half_delta(delta) if delta >= 3 else None,
        within_conjecture=ratio <= conj,
        within_rv=None if rv is None else ratio <= rv,
    )


def ratio_report(g: Graph, method: str = BNB) -> RatioReport:
    """Solve gamma and i exactly and evaluate both bounds on the instance."""
    delta = max_degree(g)
    if delta < 2:
        raise GraphError(f"ratio report needs maximum degree >= 2, got {delta}")
    gamma = solve_gamma(g, method).value
    i = solve_i(g, method).value
    return report_from_values(g.n, g.edge_count, gamma, i, delta)
