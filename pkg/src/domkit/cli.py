"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 graph not bipartite, 4 set not
dominating, 5 bound violation (a defect alarm, never expected).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from domkit.bounds import CSV_HEADER, furuya_exceeds_half_delta, rad_volkmann_bound, report_from_values
from domkit.errors import DomkitError, GraphError, NotBipartiteError, NotDominatingError, ParseError
from domkit.families import (
    FamilyParams,
    complete_bipartite,
    cycle,
    double_star,
    family_closed_forms,
    odd_cycle_corona,
    random_bipartite,
)
from domkit.graph import (
    OddCycle,
    bipartition,
    format_edge_list,
    max_degree,
    parse_vertex_set,
    read_edge_list,
    undominated_vertex,
)
from domkit.solvers import BNB, ORACLE, gamma_oracle, i_oracle, oracle_cap, solve_gamma, solve_i
from domkit.transform import independent_dominating_from, proof_violations, verify_theorem3

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_BIPARTITE = 3
EXIT_NOT_DOMINATING = 4
EXIT_VIOLATION = 5

MAX_CONNECT_ATTEMPTS = 100_000


def fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _csv_writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _err(msg):
    print(f"domkit: {msg}", file=sys.stderr)


# -- solve -------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = read_edge_list(args.input)
    gamma = solve_gamma(g, args.method)
    indep = solve_i(g, args.method)
    delta = max_degree(g)
    with _output(args.output) as out:
        print(f"n={g.n} m={g.edge_count} delta={delta}", file=out)
        ratio = Fraction(indep.value, gamma.value) if gamma.value else None
        ratio_s = fmt_frac(ratio) if ratio is not None else "n/a"
        print(f"gamma={gamma.value} i={indep.value} delta={delta} ratio={ratio_s}", file=out)
        print(f"gamma_witness={fmt_set(gamma.witness)}", file=out)
        print(f"i_witness={fmt_set(indep.witness)}", file=out)
        print(f"method={gamma.method} nodes={gamma.nodes_explored}+{indep.nodes_explored}", file=out)
        if delta >= 2 and ratio is not None:
            conj = Fraction(delta, 2)
            print(f"conjecture_bound={fmt_frac(conj)} within_conjecture={_tf(ratio <= conj)}", file=out)
        else:
            print("conjecture_bound=n/a within_conjecture=n/a", file=out)
        if delta >= 3 and ratio is not None:
            rv = rad_volkmann_bound(delta)
            print(f"rv_bound={fmt_frac(rv)} within_rv={_tf(ratio <= rv)}", file=out)
            print(f"furuya_exceeds_half_delta={_tf(furuya_exceeds_half_delta(delta))}", file=out)
        else:
            print("rv_bound=n/a within_rv=n/a", file=out)
    return EXIT_OK


def _tf(b: bool) -> str:
    return "true" if b else "false"


# -- transform ---------------------------------------------------------------


def cmd_transform(args) -> int:
    g = read_edge_list(args.input)
    parts = bipartition(g)
    if isinstance(parts, OddCycle):
        raise NotBipartiteError(parts.cycle)
    with open(args.dominating_set, encoding="utf-8") as fh:
        d = parse_vertex_set(fh.read(), g)
    missed = undominated_vertex(g, d)
    if missed is not None:
        raise NotDominatingError(missed)
    t = independent_dominating_from(g, parts, d)
    failed = proof_violations(g, t)
    with _output(args.output) as out:
        print(f"n={g.n} m={g.edge_count} delta={t.delta}", file=out)
        print(f"D = {fmt_set(t.d)}", file=out)
        print(f"A = {fmt_set(t.part_a)}", file=out)
        print(f"B = {fmt_set(t.part_b)}", file=out)
        print(f"swapped = {_tf(t.swapped)}", file=out)
        for name, s in (("I0", t.i0), ("A0", t.a0), ("A1", t.a1), ("B0", t.b0),
                        ("B1", t.b1), ("A2", t.a2), ("I", t.result)):
            print(f"{name} = {fmt_set(s)}", file=out)
        print(
            f"chain: |I|={len(t.result)} <= |D|+(delta-2)|B1|={t.size_bound}"
            f" <= floor(|D|*delta/2)={len(t.d) * t.delta // 2}",
            file=out,
        )
        print(f"|A2|={len(t.a2)} <= (delta-1)|B1|={(t.delta - 1) * len(t.b1)}", file=out)
        print(f"|B1|={len(t.b1)} <= floor(|D|/2)={len(t.d) // 2}", file=out)
        print("checks: " + ("ok" if not failed else "FAILED " + "; ".join(failed)), file=out)
    if failed:
        _err("construction check failed: " + "; ".join(failed))
        return EXIT_VIOLATION
    return EXIT_OK


# -- generate ----------------------------------------------------------------


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "complete-bipartite":
        g = complete_bipartite(args.m)
    elif fam == "double-star":
        g = double_star(args.s)
    elif fam == "corona":
        g = odd_cycle_corona(args.k, args.s)
    elif fam == "cycle":
        g = cycle(args.n)
    else:
        g = random_bipartite(args.na, args.nb, args.edge_prob, args.seed)
    with _output(args.output) as out:
        out.write(format_edge_list(g))
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def draw_instances(count, min_n, max_n, probs, seed, connected):
    """Deterministic instance parameters (n, na, nb, p, graph_seed) for ``verify``."""
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        p = probs[idx % len(probs)]
        for _ in range(MAX_CONNECT_ATTEMPTS):
            n = rng.randint(min_n, max_n)
            na = rng.randint(1, n - 1)
            gseed = rng.getrandbits(64)
            if not connected:
                break
            if len(random_bipartite(na, n - na, p, gseed).induced_components()) == 1:
                break
        else:
            raise GraphError(f"no connected instance found for p={p} after {MAX_CONNECT_ATTEMPTS} draws")
        out.append((n, na, n - na, p, gseed))
    return out


def _evaluate(job):
    idx, (n, na, nb, p, gseed), method = job
    g = random_bipartite(na, nb, p, gseed)
    delta = max_degree(g)
    if delta < 2:
        return idx, None, None, g
    rep = verify_theorem3(g, method)
    ratio = report_from_values(g.n, g.edge_count, rep.gamma, rep.i, rep.delta)
    return idx, rep, ratio, g


def cmd_verify(args) -> int:
    if args.min_n < 2 or args.max_n < args.min_n:
        raise GraphError("--min-n must be >= 2 and <= --max-n")
    if args.method == ORACLE and args.max_n > oracle_cap():
        raise GraphError(f"--max-n {args.max_n} exceeds the oracle cap {oracle_cap()}")
    probs = args.edge_prob or [0.3]
    for p in probs:
        if not 0 <= p <= 1:
            raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    params = draw_instances(args.count, args.min_n, args.max_n, probs, args.seed, args.connected)
    jobs = [(idx, prm, args.method) for idx, prm in enumerate(params)]
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=16))
    else:
        results = [_evaluate(job) for job in jobs]

    skipped = violations = tight = 0
    with _output(args.output) as out:
        w = _csv_writer(out)
        w.writerow(("instance", "graph_seed", "na", "nb", "edge_prob") + CSV_HEADER + ("transform_size",))
        for (idx, rep, ratio, g), (n, na, nb, p, gseed) in zip(results, params):
            if rep is None:
                skipped += 1
                continue
            w.writerow([idx, gseed, na, nb, p] + ratio.csv_row() + [rep.transform_size])
            if 2 * rep.i == rep.gamma * rep.delta:
                tight += 1
            if not rep.holds or rep.violations:
                violations += 1
                _err(f"violation on instance {idx} (na={na} nb={nb} p={p} seed={gseed}): "
                     f"gamma={rep.gamma} i={rep.i} delta={rep.delta} "
                     f"failed={'; '.join(rep.violations) or 'none'}")
                sys.stderr.write(format_edge_list(g))
    print(
        f"instances={len(params)} evaluated={len(params) - skipped} skipped_delta_lt_2={skipped} "
        f"tight={tight} violations={violations}",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if violations else EXIT_OK


# -- sweep -------------------------------------------------------------------


def cmd_sweep(args) -> int:
    cap = oracle_cap()
    mismatches = 0
    with _output(args.output) as out:
        w = _csv_writer(out)
        w.writerow(("k", "s", "n", "gamma", "i", "delta", "ratio_num", "ratio_den",
                    "half_delta_num", "half_delta_den", "ratio_decimal", "exceeds",
                    "oracle_gamma", "oracle_i"))
        for k in range(args.k_min, args.k_max + 1):
            for s in range(args.s_min, args.s_max + 1):
                gamma, i, delta = family_closed_forms(FamilyParams("odd_cycle_corona", k=k, s=s))
                n = (2 * k + 1) * (s + 1)
                ratio, half = Fraction(i, gamma), Fraction(delta, 2)
                og = oi = ""
                if n <= cap:
                    g = odd_cycle_corona(k, s)
                    og, oi = gamma_oracle(g).value, i_oracle(g).value
                    if (og, oi) != (gamma, i):
                        mismatches += 1
                        _err(f"oracle disagrees with closed form at k={k} s={s}: "
                             f"({og}, {oi}) vs ({gamma}, {i})")
                w.writerow([k, s, n, gamma, i, delta, ratio.numerator, ratio.denominator,
                            half.numerator, half.denominator, f"{float(ratio):.6f}",
                            _tf(2 * i > gamma * delta), og, oi])
    return EXIT_VIOLATION if mismatches else EXIT_OK


# -- argument parsing --------------------------------------------------------


def _prob_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a probability list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domkit",
        description="Exact domination / independent domination numbers and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute gamma and i of a graph")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--method", choices=(BNB, ORACLE), default=BNB)
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("transform", help="independent dominating set from a dominating set")
    p.add_argument("--input", required=True, help="edge-list file of a bipartite graph")
    p.add_argument("--dominating-set", required=True, help="file of whitespace-separated ids")
    p.add_argument("--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("generate", help="emit a family instance as an edge list")
    p.add_argument("family", choices=("complete-bipartite", "double-star", "corona", "cycle",
                                      "random-bipartite"))
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--na", type=int, default=0)
    p.add_argument("--nb", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="batch-check 2i <= gamma*delta on random bipartite graphs")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-n", type=int, default=6)
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--edge-prob", type=_prob_list, action="extend",
                   help="probability, or comma list cycled across instances (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="redraw until connected")
    p.add_argument("--method", choices=(BNB, ORACLE), default=BNB)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="ratio table for the odd-cycle corona family")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--s-min", type=int, default=1)
    p.add_argument("--s-max", type=int, default=10)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep" and (args.k_min < 1 or args.s_min < 1):
        _err("--k-min and --s-min must be >= 1")
        return EXIT_INPUT
    try:
        return args.func(args)
    except NotBipartiteError as e:
        _err(str(e))
        return EXIT_NOT_BIPARTITE
    except NotDominatingError as e:
        _err(str(e))
        return EXIT_NOT_DOMINATING
    except (ParseError, DomkitError, OSError) as e:
        _err(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
