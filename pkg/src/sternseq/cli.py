"""Deterministic command line interface.

Every subcommand accepts --format tsv|json (tsv default) and produces
byte-identical output for identical invocations.  JSON results arrive
in a versioned envelope and serialise unbounded integers as decimal
strings.  Exit codes: 0 success, 1 usage error (or failed verify
suite), 2 domain error, 3 resource cap, 4 numerical non-convergence.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .core import (DEFAULT_ROW_CAP, ResourceLimitError, diatomic_row,
                   stern, stern_pair, stern_ratio)
from .enumeration import (INFINITY, brocot_row, index_of_rational,
                          minkowski_q, rational_of_index)
from .moddist import (DEFAULT_MATRIX_CAP, NonConvergenceError, dist_table,
                      graph, graph_export, index_I, minimal_polynomial,
                      spectral, walk_counts)
from .smalld import (a3_enumerate, a3_row_count, delta3, delta3_trace,
                     hyperbinary, t3_zero_closed)
from .sums import DEFAULT_EXACT_CAP, alpha_estimate, prefix_row_sum, \
    row_sum, t_prefix_sum

FORMAT_VERSION = "1"

#: Where each library operation is exercised from (one subcommand each;
#: operations without their own subcommand are covered by the named
#: verify suites, which call them directly).
OPERATION_COVERAGE = {
    "core.stern": "stern",
    "core.stern_pair": "pair",
    "core.stern_ratio": "ratio",
    "core.diatomic_row": "row",
    "core.stern_block": "verify",
    "core.block_decompose": "verify",
    "enumeration.rational_of_index": "rational",
    "enumeration.to_odd_cfrac": "verify",
    "enumeration.index_of_rational": "index",
    "enumeration.reverse_bits": "verify",
    "enumeration.brocot_row": "brocot",
    "enumeration.minkowski_q": "minkowski",
    "moddist.feasible_pairs": "graph",
    "moddist.pair_counts": "verify",
    "moddist.s_mod_pair": "verify",
    "moddist.graph": "graph",
    "moddist.graph_export": "graph",
    "moddist.adjacency": "walks",
    "moddist.walk_counts": "walks",
    "moddist.count_block": "verify",
    "moddist.count_T": "dist",
    "moddist.density": "dist",
    "moddist.index_I": "dist",
    "moddist.minimal_polynomial": "minpoly",
    "moddist.spectral": "spectral",
    "smalld.even_stern_index": "verify",
    "smalld.a3_member": "verify",
    "smalld.a3_enumerate": "a3",
    "smalld.a3_row_count": "a3row",
    "smalld.t3_zero_closed": "t3zero",
    "smalld.delta3": "delta3",
    "smalld.delta3_classify": "verify",
    "smalld.hyperbinary": "hyperbinary",
    "sums.row_sum": "rowsum",
    "sums.prefix_row_sum": "rowsum",
    "sums.t_prefix_sum": "sum",
    "sums.alpha_estimate": "alpha",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--threads", type=int, default=1, metavar="K")
    common.add_argument("--max-row-bits", type=int, default=22)
    common.add_argument("--max-matrix-order", type=int,
                        default=DEFAULT_MATRIX_CAP)
    common.add_argument("--max-exact-N", type=int, dest="max_exact_n",
                        default=DEFAULT_EXACT_CAP)
    p = _Parser(prog="sternseq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, *args_spec, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        for spec in args_spec:
            sp.add_argument(*spec[0], **spec[1])
        return sp

    add("stern", (("n",), {"type": int}))
    add("pair", (("n",), {"type": int}))
    add("ratio", (("n",), {"type": int}))
    add("index", (("p",), {"type": int}), (("q",), {"type": int}))
    add("rational", (("n",), {"type": int}))
    add("row", (("r",), {"type": int}),
        (("a",), {"type": int, "nargs": "?", "default": 0}),
        (("b",), {"type": int, "nargs": "?", "default": 1}))
    add("brocot", (("r",), {"type": int}))
    add("minkowski", (("p",), {"type": int}), (("q",), {"type": int}))
    add("dist", (("--d",), {"type": int, "required": True}),
        (("--N",), {"type": int, "required": True}),
        (("--method",), {"choices": ("auto", "scan", "blocks"),
                         "default": "auto"}),
        (("--pairs",), {"action": "store_true"}))
    add("graph", (("--d",), {"type": int, "required": True}),
        (("--dot",), {"action": "store_true"}))
    add("minpoly", (("--d",), {"type": int, "required": True}))
    add("spectral", (("--d",), {"type": int, "required": True}))
    add("walks", (("--d",), {"type": int, "required": True}),
        (("--r",), {"type": int, "required": True}))
    add("a3", (("--limit",), {"type": int, "required": True}))
    add("a3row", (("r",), {"type": int}))
    add("t3zero", (("r",), {"type": int}))
    add("delta3", (("--N",), {"type": int, "required": True}),
        (("--trace",), {"action": "store_true"}))
    add("hyperbinary", (("--d",), {"type": int, "required": True}),
        (("--n",), {"type": int, "required": True}))
    add("rowsum", (("r",), {"type": int}),
        (("--prefix",), {"action": "store_true"}))
    add("sum", (("--N",), {"type": int, "required": True}),
        (("--exact",), {"action": "store_true"}))
    add("alpha", (("--t",), {"type": int, "required": True}),
        (("--N",), {"type": int, "required": True}))
    add("verify", (("--suite",), {"required": True}))
    return p


# each handler returns (params, payload, tsv lines)

def _h_stern(a):
    return {"n": str(a.n)}, {"value": str(stern(a.n))}, [str(stern(a.n))]


def _h_pair(a):
    left, right = stern_pair(a.n)
    return ({"n": str(a.n)}, {"left": str(left), "right": str(right)},
            [f"{left}\t{right}"])


def _h_ratio(a):
    x = stern_ratio(a.n)
    return ({"n": str(a.n)},
            {"num": str(x.numerator), "den": str(x.denominator)}, [_frac(x)])


def _h_index(a):
    n = index_of_rational(Fraction(a.p, a.q))
    return ({"p": str(a.p), "q": str(a.q)}, {"index": str(n)}, [str(n)])


def _h_rational(a):
    x = rational_of_index(a.n)
    return ({"n": str(a.n)},
            {"num": str(x.numerator), "den": str(x.denominator)}, [_frac(x)])


def _h_row(a):
    values = diatomic_row(a.r, a.a, a.b, max_entries=1 << a.max_row_bits)
    return ({"r": a.r, "a": str(a.a), "b": str(a.b)},
            {"values": [str(v) for v in values]}, [str(v) for v in values])


def _h_brocot(a):
    row = brocot_row(a.r, max_entries=1 << a.max_row_bits)
    strs = [_frac(x) if x is not INFINITY else "1/0" for x in row]
    return {"r": a.r}, {"entries": strs}, strs


def _h_minkowski(a):
    y = minkowski_q(Fraction(a.p, a.q))
    return ({"p": str(a.p), "q": str(a.q)},
            {"numerator": str(y.numerator), "exponent": y.exponent},
            [f"{y.numerator}/{1 << y.exponent}"])


def _h_dist(a):
    t = dist_table(a.N, a.d, method=a.method, include_pairs=a.pairs)
    dev = t.deviations()
    payload = {"d": a.d, "N": str(a.N), "method": a.method,
               "counts": [str(c) for c in t.counts],
               "densities": [_frac(x) for x in t.densities],
               "deviations": dev, "index_I": str(index_I(a.d))}
    lines = ["# residue\tcount\tdensity\tabs_deviation"]
    for i in range(a.d):
        lines.append(f"{i}\t{t.counts[i]}\t{_frac(t.densities[i])}"
                     f"\t{dev[i]!r}")
    lines.append(f"# index_I\t{index_I(a.d)}")
    if t.pair_counts is not None:
        payload["pair_counts"] = {f"{i},{j}": str(c)
                                  for (i, j), c in t.pair_counts.items()}
        for (i, j), c in t.pair_counts.items():
            lines.append(f"pair\t{i},{j}\t{c}")
    return {"d": a.d, "N": str(a.N), "method": a.method}, payload, lines


def _h_graph(a):
    if a.dot:
        dot = graph_export(a.d, max_order=a.max_matrix_order)
        return ({"d": a.d, "dot": True}, {"dot": dot},
                dot.rstrip("\n").split("\n"))
    g = graph(a.d)
    edges = []
    for pos, (i, j) in enumerate(g.vertices):
        for tag, nxt in (("L", g.left[pos]), ("R", g.right[pos])):
            vi, vj = g.vertices[nxt]
            edges.append((i, j, tag, vi, vj))
    payload = {"d": a.d,
               "vertices": [[i, j] for i, j in g.vertices],
               "edges": [[i, j, tag, vi, vj] for i, j, tag, vi, vj in edges]}
    lines = [f"{i}\t{j}\t{tag}\t{vi}\t{vj}" for i, j, tag, vi, vj in edges]
    return {"d": a.d, "dot": False}, payload, lines


def _h_minpoly(a):
    f = minimal_polynomial(a.d, max_order=a.max_matrix_order)
    return ({"d": a.d}, {"coefficients": [str(c) for c in f]},
            ["\t".join(str(c) for c in f)])


def _h_spectral(a):
    rep = spectral(a.d, max_order=a.max_matrix_order)
    roots = [{"re": rv.value.real, "im": rv.value.imag,
              "multiplicity": rv.multiplicity, "residual": rv.residual,
              "exact": rv.exact} for rv in rep.roots]
    payload = {"d": a.d, "rho": rep.rho, "tau": rep.tau,
               "sigma": rep.sigma, "multiplicity": rep.multiplicity,
               "minimal_polynomial": [str(c) for c in rep.minimal_poly],
               "roots": roots}
    lines = [f"rho\t{rep.rho!r}", f"tau\t{rep.tau!r}",
             f"sigma\t{rep.sigma}", f"multiplicity\t{rep.multiplicity}"]
    for rv in rep.roots:
        lines.append(f"root\t{rv.value.real!r}\t{rv.value.imag!r}"
                     f"\t{rv.multiplicity}\t{rv.residual!r}"
                     f"\t{int(rv.exact)}")
    return {"d": a.d}, payload, lines


def _h_walks(a):
    M = walk_counts(a.d, a.r, max_order=a.max_matrix_order)
    return ({"d": a.d, "r": a.r},
            {"matrix": [[str(e) for e in row] for row in M]},
            ["\t".join(str(e) for e in row) for row in M])


def _h_a3(a):
    members = a3_enumerate(a.limit)
    return ({"limit": str(a.limit)},
            {"members": [str(m) for m in members]},
            [str(m) for m in members])


def _h_a3row(a):
    v = a3_row_count(a.r)
    return {"r": a.r}, {"value": str(v)}, [str(v)]


def _h_t3zero(a):
    v = t3_zero_closed(a.r)
    return {"r": a.r}, {"value": str(v)}, [str(v)]


def _h_delta3(a):
    if a.trace:
        tr = delta3_trace(a.N)
        payload = {"N": str(a.N), "delta": str(tr[-1]),
                   "trace": [str(v) for v in tr]}
        lines = [f"{n}\t{v}" for n, v in enumerate(tr)]
    else:
        v = delta3(a.N)
        payload = {"N": str(a.N), "delta": str(v)}
        lines = [str(v)]
    return {"N": str(a.N), "trace": a.trace}, payload, lines


def _h_hyperbinary(a):
    v = hyperbinary(a.d, a.n)
    return ({"d": a.d, "n": str(a.n)}, {"value": str(v)}, [str(v)])


def _h_rowsum(a):
    x = prefix_row_sum(a.r) if a.prefix else row_sum(a.r)
    return ({"r": a.r, "prefix": a.prefix},
            {"num": str(x.numerator), "den": str(x.denominator)}, [_frac(x)])


def _h_sum(a):
    mode = "exact" if a.exact else "float"
    rep = t_prefix_sum(a.N, mode=mode, exact_cap=a.max_exact_n,
                       threads=a.threads)
    payload = {"N": str(a.N), "mode": mode, "float_sum": rep.float_sum,
               "error_bound": rep.float_error_bound,
               "lower": _frac(rep.lower), "upper": _frac(rep.upper)}
    lines = [f"N\t{a.N}", f"float_sum\t{rep.float_sum!r}",
             f"error_bound\t{rep.float_error_bound!r}",
             f"lower\t{_frac(rep.lower)}", f"upper\t{_frac(rep.upper)}"]
    if rep.exact_sum is not None:
        payload["exact"] = _frac(rep.exact_sum)
        lines.append(f"exact\t{_frac(rep.exact_sum)}")
    return {"N": str(a.N), "mode": mode}, payload, lines


def _h_alpha(a):
    v = alpha_estimate(a.t, a.N, threads=a.threads)
    return ({"t": a.t, "N": str(a.N)},
            {"empirical_alpha": v}, [f"empirical_alpha\t{v!r}"])


def _h_verify(a):
    results = checks.run_suite(a.suite)
    passed = sum(1 for _, ok, _ in results if ok)
    failed = len(results) - passed
    payload = {"suite": a.suite, "passed": passed, "failed": failed,
               "checks": [{"name": n, "ok": ok, "detail": det}
                          for n, ok, det in results]}
    lines = []
    for n, ok, det in results:
        mark = "ok" if ok else "FAIL"
        lines.append(f"{mark}\t{n}" + (f"\t{det}" if det else ""))
    lines.append(f"passed\t{passed}\tfailed\t{failed}")
    return {"suite": a.suite}, payload, lines


_HANDLERS = {
    "stern": _h_stern, "pair": _h_pair, "ratio": _h_ratio,
    "index": _h_index, "rational": _h_rational, "row": _h_row,
    "brocot": _h_brocot, "minkowski": _h_minkowski, "dist": _h_dist,
    "graph": _h_graph, "minpoly": _h_minpoly, "spectral": _h_spectral,
    "walks": _h_walks, "a3": _h_a3, "a3row": _h_a3row,
    "t3zero": _h_t3zero, "delta3": _h_delta3,
    "hyperbinary": _h_hyperbinary, "rowsum": _h_rowsum, "sum": _h_sum,
    "alpha": _h_alpha, "verify": _h_verify,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse argv, run one subcommand, write to the given streams.

    Returns the process exit code instead of raising, so tests can call
    it in-process.
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        params, payload, lines = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"domain error: {exc}", file=err)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=err)
        return 3
    except NonConvergenceError as exc:
        print(f"numerical error: {exc}", file=err)
        return 4
    if args.format == "json":
        envelope = {"format_version": FORMAT_VERSION,
                    "command": args.command, "params": params,
                    "result": payload}
        print(json.dumps(envelope, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)
    if args.command == "verify" and payload["failed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
