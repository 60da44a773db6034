"""Command-line front end.

JSON goes to stdout, human-readable tables and notes to stderr.
Exit codes: 0 ok/free, 1 contains or mismatch, 2 domain or parse error,
3 search limit fired, 64 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .constructions import (
    ConstructionError,
    Family,
    build_h2,
    build_h3,
    build_h_general,
    cliques_plus_remainder,
    extremal_construction,
    near_regular,
)
from .detect import DoubleStarPattern, contains_double_star
from .formats import GraphParseError, read_graph, to_graph6, write_graph
from .formulas import (
    FormulaDomainError,
    FormulaResult,
    decompose,
    ex_dispatch,
    ex_general_small_q,
    ex_generalized_clique,
    ex_s1b,
    ex_s2b,
    ex_s3b,
)
from .graph import Graph
from .oracle import SearchConfig, max_edges_free

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_DOMAIN = 2
EXIT_UNPROVEN = 3
EXIT_USAGE = 64


class UsageExit(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {v}")
    return v


def int_range(text: str) -> tuple[int, int]:
    """Inclusive ``lo..hi``, or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            v = int(lo)
            return v, v
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi or an integer, got {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _domain_error(err: FormulaDomainError | ConstructionError | ValueError) -> int:
    violated = getattr(err, "violated", None) or str(err)
    _emit({"error": str(err), "violated_bound": violated})
    print(f"error: {err}", file=sys.stderr)
    return EXIT_DOMAIN


def formula_value(n: int, a: int, b: int) -> FormulaResult:
    """Like ex_dispatch, but raises with the violated bound instead of
    returning None."""
    found = ex_dispatch(n, a, b)
    if found is not None:
        return found
    a, b = min(a, b), max(a, b)
    if a < 1:
        raise FormulaDomainError("a, b >= 1", f"a = {a}, b = {b}")
    if a == b:
        raise FormulaDomainError("a < b", "no closed form for a = b")
    specific = {1: ex_s1b, 2: ex_s2b, 3: ex_s3b}.get(a)
    if specific is not None:
        specific(n, b)  # raises with its own bound
    ex_general_small_q(n, a, b)
    raise FormulaDomainError("q in {0, 1, a+b}", f"q = {decompose(n, a + b + 1).q}")


# --- formula -----------------------------------------------------------

def cmd_formula(args) -> int:
    try:
        if args.k is not None:
            res = ex_generalized_clique(args.n, args.a, args.b, args.k)
        else:
            res = formula_value(args.n, args.a, args.b)
    except FormulaDomainError as err:
        return _domain_error(err)
    _emit(res.as_dict())
    return EXIT_OK


# --- construct ---------------------------------------------------------

def _need_n(args) -> int:
    if args.n is None:
        raise FormulaDomainError("--n given", f"family {args.family} needs n")
    return args.n


def build_family(args) -> Graph:
    fam = args.family
    a, b = min(args.a, args.b), max(args.a, args.b)
    if a < 1:
        raise FormulaDomainError("a, b >= 1", f"a = {a}, b = {b}")
    if fam == "auto":
        n = _need_n(args)
        found = extremal_construction(n, a, b)
        if found is None:
            formula_value(n, a, b)
            raise FormulaDomainError("a closed form applies", f"(n, a, b) = ({n}, {a}, {b})")
        return found[1]
    if fam == Family.CLIQUES_PLUS_REMAINDER.value:
        d = decompose(_need_n(args), a + b + 1)
        return cliques_plus_remainder(d.p, d.modulus, d.q)
    if fam == Family.NEAR_REGULAR.value:
        n = _need_n(args)
        if n <= b:
            raise FormulaDomainError("n > b", f"n = {n}, b = {b}")
        return near_regular(n, b)
    if fam in (Family.H2.value, Family.H3.value):
        if a != 3:
            raise FormulaDomainError("a = 3", f"a = {a}")
        size = 2 * b + 1 if fam == Family.H2.value else 2 * b + 2
        if args.n is not None and args.n != size:
            raise FormulaDomainError(f"n = {size}", f"n = {args.n}")
        return build_h2(b) if fam == Family.H2.value else build_h3(b)
    # h-general
    if args.q is not None:
        q = args.q
    else:
        q = _need_n(args) - (a + b + 1)
    return build_h_general(a, b, q)


def cmd_construct(args) -> int:
    try:
        g = build_family(args)
    except (FormulaDomainError, ConstructionError) as err:
        return _domain_error(err)
    data = write_graph(g, args.format)
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    delta = g.max_degree() if g.n else 0
    print(f"vertices={g.n} edges={g.edge_count()} max_degree={delta}", file=sys.stderr)
    return EXIT_OK


# --- check -------------------------------------------------------------

def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def cmd_check(args) -> int:
    try:
        pat = DoubleStarPattern(args.a, args.b)
    except ValueError as err:
        return _domain_error(err)
    try:
        g = read_graph(_read_input(args.input), args.format)
    except GraphParseError as err:
        _emit({"error": str(err), "offset": err.offset})
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as err:
        _emit({"error": str(err), "offset": None})
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    w = contains_double_star(g, pat)
    out = {"free": w is None, "edges": g.edge_count(), "max_degree": g.max_degree() if g.n else 0}
    if w is not None:
        out["witness"] = w.as_dict()
    _emit(out)
    return EXIT_OK if w is None else EXIT_FOUND


# --- oracle ------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.n < 1:
        return _domain_error(ValueError("oracle needs n >= 1"))
    try:
        DoubleStarPattern(args.a, args.b)
    except ValueError as err:
        return _domain_error(err)
    cfg = SearchConfig(
        degree_cap_enabled=not args.no_degree_cap,
        warm_start=not args.no_warm_start,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        enumerate_all=args.enumerate,
        jobs=args.jobs,
    )
    res = max_edges_free(args.n, min(args.a, args.b), max(args.a, args.b), cfg)
    _emit({
        "value": res.value,
        "proven_optimal": res.proven_optimal,
        "nodes": res.nodes_explored,
        "witnesses": [to_graph6(f.to_graph()).decode("ascii") for f in res.witnesses],
    })
    return EXIT_OK if res.proven_optimal else EXIT_UNPROVEN


# --- verify ------------------------------------------------------------

def verify_rows(a_range, b_range, n_range, oracle_max: Optional[int],
                node_limit: Optional[int] = None) -> list[dict]:
    rows = []
    for a in range(max(1, a_range[0]), a_range[1] + 1):
        for b in range(max(a + 1, b_range[0]), b_range[1] + 1):
            for n in range(max(1, n_range[0]), n_range[1] + 1):
                res = ex_dispatch(n, a, b)
                if res is None:
                    continue
                row = {"n": n, "a": a, "b": b, "formula_value": res.value,
                       "regime": res.regime.value}
                g = extremal_construction(n, a, b)[1]
                row["construction_edges"] = g.edge_count()
                ok = g.edge_count() == res.value and contains_double_star(g, DoubleStarPattern(a, b)) is None
                status = "ok" if ok else "mismatch"
                if oracle_max is not None and n <= oracle_max:
                    sr = max_edges_free(n, a, b, SearchConfig(node_limit=node_limit))
                    if sr.proven_optimal:
                        row["oracle_value"] = sr.value
                        if sr.value != res.value:
                            status = "mismatch"
                    elif status == "ok":
                        status = "skipped"
                row["status"] = status
                rows.append(row)
    return rows


def cmd_verify(args) -> int:
    b_range = args.b if args.b is not None else (1, args.b_max)
    n_range = args.n if args.n is not None else (1, args.n_max)
    rows = verify_rows(args.a, b_range, n_range, args.oracle_max, args.node_limit)
    summary = {s: sum(r["status"] == s for r in rows) for s in ("ok", "mismatch", "skipped")}
    summary["rows"] = len(rows)
    _emit({"rows": rows, "summary": summary})
    print(f"{'n':>4} {'a':>2} {'b':>3} {'formula':>8} {'constr':>8} {'oracle':>7}  regime / status",
          file=sys.stderr)
    for r in rows:
        oracle = r.get("oracle_value", "-")
        print(f"{r['n']:>4} {r['a']:>2} {r['b']:>3} {r['formula_value']:>8} "
              f"{r['construction_edges']:>8} {oracle:>7}  {r['regime']} / {r['status']}",
              file=sys.stderr)
    print(f"rows={len(rows)} ok={summary['ok']} mismatch={summary['mismatch']} "
          f"skipped={summary['skipped']}", file=sys.stderr)
    return EXIT_FOUND if summary["mismatch"] else EXIT_OK


# --- parser ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = UsageExit(prog="doublestar", description="Turán numbers of double stars S_{a,b}.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=UsageExit)

    f = sub.add_parser("formula", help="evaluate the closed form")
    f.add_argument("--n", type=nonneg_int, required=True)
    f.add_argument("--a", type=nonneg_int, required=True)
    f.add_argument("--b", type=nonneg_int, required=True)
    f.add_argument("--k", type=nonneg_int, help="count K_k copies instead of edges")
    f.set_defaults(func=cmd_formula)

    c = sub.add_parser("construct", help="build an extremal or named graph")
    c.add_argument("--n", type=nonneg_int)
    c.add_argument("--a", type=nonneg_int, required=True)
    c.add_argument("--b", type=nonneg_int, required=True)
    c.add_argument("--q", type=nonneg_int, help="remainder for h-general (default n-a-b-1)")
    c.add_argument("--family", default="auto",
                   choices=["auto"] + [fam.value for fam in Family if fam is not Family.COMPOSITE])
    c.add_argument("--format", default="g6", choices=["g6", "edges", "dot"])
    c.add_argument("--out", help="output file (default stdout)")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", help="test a graph for S_{a,b}")
    k.add_argument("--a", type=nonneg_int, required=True)
    k.add_argument("--b", type=nonneg_int, required=True)
    k.add_argument("--format", default="g6", choices=["g6", "edges"])
    k.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    k.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="exact maximum by branch and bound")
    o.add_argument("--n", type=nonneg_int, required=True)
    o.add_argument("--a", type=nonneg_int, required=True)
    o.add_argument("--b", type=nonneg_int, required=True)
    o.add_argument("--node-limit", type=nonneg_int)
    o.add_argument("--time-limit", type=float, help="seconds")
    o.add_argument("--enumerate", action="store_true", help="list every extremal class")
    o.add_argument("--no-degree-cap", action="store_true")
    o.add_argument("--no-warm-start", action="store_true")
    o.add_argument("--jobs", type=int, default=1)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="formula vs construction vs oracle sweep")
    v.add_argument("--a", type=int_range, default=(1, 3))
    v.add_argument("--b", type=int_range)
    v.add_argument("--b-max", type=nonneg_int, default=8)
    v.add_argument("--n", type=int_range)
    v.add_argument("--n-max", type=nonneg_int, default=10)
    v.add_argument("--oracle-max", type=nonneg_int, help="run the oracle for n up to this")
    v.add_argument("--node-limit", type=nonneg_int, help="per-tuple oracle node budget")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
