"""Command-line interface.

Exit codes: 0 success, 2 invalid parameters, 3 input of the wrong length,
4 inconsistent curve samples, 5 failed numerical check.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
import warnings
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import __version__
from .analysis import GridSpec, UNIT_SQUARE, error_table, lebesgue_fit_padua, lebesgue_fit_xu, lebesgue_sweep
from .chebyshev import cheb_matrix
from .index_sets import gamma_Q
from .interpolation import (
    CoefficientMatrix,
    InconsistentSamplesError,
    LengthMismatchError,
    evaluate_grid,
    interpolate,
    reduce_curve_samples,
)
from .nodes import LissajousParams, ParameterError, build_node_set, padua_points, xu_points_odd
from .quadrature import quadrature_rule, reference_integral

log = logging.getLogger("lissa")

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_SHAPE = 3
EXIT_INCONSISTENT = 4
EXIT_CHECK = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def fmt(value: float) -> str:
    """17 significant digits: lossless for doubles."""
    return format(float(value), ".17g")


# -- writers ---------------------------------------------------------------


@contextlib.contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def write_table(
    path: str | None,
    fmt_name: str,
    header: dict,
    columns: Sequence[str],
    rows: Iterable[Sequence],
) -> None:
    """Write ``rows`` as CSV (``#``-prefixed JSON header line) or as JSON."""
    rows = list(rows)
    with _open_output(path) as fh:
        if fmt_name == "json":
            records = [dict(zip(columns, row)) for row in rows]
            json.dump({"header": header, "columns": list(columns), "records": records}, fh, indent=1)
            fh.write("\n")
            return
        fh.write("# " + json.dumps(header, sort_keys=True) + "\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_csv_cell(v) for v in row) + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    return str(v)


def write_coefficients(path: str | None, fmt_name: str, coeffs: CoefficientMatrix, header: dict) -> None:
    """Dense coefficient matrix: one CSV line per x-degree ``i``, columns ``j = 0..2n``."""
    entries = coeffs.entries
    with _open_output(path) as fh:
        if fmt_name == "json":
            json.dump({"header": header, "coefficients": entries.tolist()}, fh, indent=1)
            fh.write("\n")
            return
        fh.write("# " + json.dumps(header, sort_keys=True) + "\n")
        for row in entries:
            fh.write(",".join(fmt(v) for v in row) + "\n")


def read_coefficients(path: str | Path) -> CoefficientMatrix:
    """Read a coefficient file written by ``interpolate`` (CSV or JSON)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        header, entries = doc["header"], np.array(doc["coefficients"], dtype=float)
    else:
        lines = text.splitlines()
        header = json.loads(lines[0][1:])
        entries = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:] if ln.strip()])
    params = LissajousParams(header["n"], header["p"])
    return CoefficientMatrix(params, entries)


def read_values(path: str) -> np.ndarray:
    """Read one value per line; ``#`` lines and a non-numeric header are skipped.

    For comma-separated lines the last field is the value, so a ``nodes``
    CSV with an appended column is accepted as is.
    """
    fh = sys.stdin if path == "-" else open(path)
    values = []
    with fh if path != "-" else contextlib.nullcontext(fh):
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            field = line.split(",")[-1].strip()
            try:
                values.append(float(field))
            except ValueError:
                if values:
                    raise CliError(f"non-numeric value {field!r} in {path}", EXIT_SHAPE) from None
    return np.array(values)


# -- subcommands -----------------------------------------------------------


def _params(args) -> LissajousParams:
    return LissajousParams(args.n, args.p)


def cmd_nodes(args) -> int:
    params = _params(args)
    nodes = build_node_set(params)
    header = {"kind": "nodes", "n": params.n, "p": params.p, "counts": nodes.counts(), "order": "black then white, lexicographic (i', j')"}
    columns = ["index", "x", "y", "color", "location", "weight", "sample_indices"]
    rows = [
        (a, nd.x, nd.y, nd.color.value, nd.location.value, nd.weight, list(nd.sample_indices))
        for a, nd in enumerate(nodes)
    ]
    write_table(args.output, args.format, header, columns, rows)
    return EXIT_OK


def _point_cmd(args, kind: str, points: np.ndarray) -> int:
    header = {"kind": kind, "n": args.n, "count": int(len(points))}
    write_table(args.output, args.format, header, ["x", "y"], [(float(x), float(y)) for x, y in points])
    return EXIT_OK


def cmd_padua(args) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1", EXIT_PARAMS)
    return _point_cmd(args, "padua", padua_points(args.n))


def cmd_xu(args) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1", EXIT_PARAMS)
    return _point_cmd(args, "xu", xu_points_odd(args.n))


def cmd_interpolate(args) -> int:
    params = _params(args)
    nodes = build_node_set(params)
    values = read_values(args.input)
    ordering = "curve" if args.curve_ordered else "node"
    try:
        if args.curve_ordered:
            with warnings.catch_warnings():
                warnings.simplefilter("always")
                values = reduce_curve_samples(nodes, values, slack=args.slack)
        coeffs = interpolate(nodes, values)
    except LengthMismatchError as exc:
        raise CliError(str(exc), EXIT_SHAPE) from None
    except InconsistentSamplesError as exc:
        raise CliError(str(exc), EXIT_INCONSISTENT) from None
    header = {
        "kind": "coefficients",
        "n": params.n,
        "p": params.p,
        "shape": list(coeffs.entries.shape),
        "input_ordering": ordering,
        "basis": "normalized Chebyshev, row i = x-degree, column j = y-degree",
    }
    write_coefficients(args.output, args.format, coeffs, header)
    if args.eval_output:
        grid = GridSpec(*(args.grid or (100, 100)))
        xs, ys = grid.axes()
        vals = evaluate_grid(coeffs, xs, ys)
        rows = [(float(xs[a]), float(ys[b]), float(vals[a, b])) for a in range(xs.size) for b in range(ys.size)]
        eheader = {"kind": "grid_values", "n": params.n, "p": params.p, "grid": [grid.nx, grid.ny]}
        write_table(args.eval_output, args.format, eheader, ["x", "y", "value"], rows)
    return EXIT_OK


def cmd_quadcheck(args) -> int:
    params = _params(args)
    rule = quadrature_rule(params)
    gq = gamma_Q(params)
    n, p = params.n, params.p
    deg_x, deg_y = 4 * (n + p), 4 * n
    tx = cheb_matrix(deg_x, rule.nodes.x, normalized=False)
    ty = cheb_matrix(deg_y, rule.nodes.y, normalized=False)
    vals = (tx[gq.i] * ty[gq.j]) @ rule.weights
    ref = np.array([reference_integral(i, j) for i, j in gq])
    dev = np.abs(vals - ref)
    worst = int(np.argmax(dev))
    ok = bool(dev[worst] <= args.tolerance)
    report = {
        "kind": "quadcheck",
        "n": n,
        "p": p,
        "indices_checked": len(gq),
        "max_deviation": float(dev[worst]),
        "worst_index": list(gq.pairs[worst]),
        "tolerance": args.tolerance,
        "passed": ok,
    }
    if args.include_excluded:
        ex_i, ex_j = 2 * (n + p), 2 * n
        value = float((tx[ex_i] * ty[ex_j]) @ rule.weights)
        report["excluded_index"] = {
            "index": [ex_i, ex_j],
            "value": value,
            "deviation": abs(value - reference_integral(ex_i, ex_j)),
            "expected_nonzero": True,
        }
    rows = [(i, j, float(v), float(d)) for (i, j), v, d in zip(gq.pairs, vals, dev)]
    write_table(args.output, args.format, report, ["i", "j", "rule_value", "deviation"], rows)
    if not ok:
        raise CliError(f"quadrature deviation {dev[worst]:.3e} at {gq.pairs[worst]} exceeds {args.tolerance:.1e}", EXIT_CHECK)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_lebesgue(args) -> int:
    if args.n is not None:
        ns = args.n
    else:
        ns = list(range(args.n_min, args.n_max + 1))
    ps = args.p if args.p is not None else [1]
    grid = GridSpec(*(args.grid or (500, 500)))
    records, skipped = lebesgue_sweep(ns, ps, grid)
    for n, p in skipped:
        log.warning("note: skipped n=%d p=%d (n and n+p not coprime or p even)", n, p)
    header = {
        "kind": "lebesgue",
        "grid": [grid.nx, grid.ny],
        "domain": list(grid.domain),
        "skipped": [list(s) for s in skipped],
        "fits": {"padua": "((2/pi) ln(2n+1) + 1.1)^2", "xu": "((2/pi) ln(2n+2))^2"},
    }
    columns = ["n", "p", "lebesgue", "argmax_x", "argmax_y", "fit_padua", "fit_xu"]
    rows = [
        (r.n, r.p, r.value, r.argmax[0], r.argmax[1], lebesgue_fit_padua(r.n), lebesgue_fit_xu(r.n))
        for r in records
    ]
    write_table(args.output, args.format, header, columns, rows)
    return EXIT_OK


def cmd_table2(args) -> int:
    ns = args.n if args.n is not None else [5, 10, 20, 30]
    p = args.p if args.p is not None else 1
    grid = GridSpec(*(args.grid or (100, 100)), domain=UNIT_SQUARE)
    table = error_table(ns, p, grid)
    header = {"kind": "error_table", "p": p, "grid": [grid.nx, grid.ny], "domain": list(UNIT_SQUARE)}
    columns = ["n", "nodes"] + [f"F{k}" for k in table.function_ids]
    rows = [(n, cnt, *errs) for n, cnt, errs in zip(table.ns, table.node_counts, table.errors)]
    write_table(args.output, args.format, header, columns, rows)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lissa", description="Interpolation and quadrature on Lissajous node points.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, need_n=True, need_p=True):
        if need_n:
            sp.add_argument("--n", type=int, required=True)
        if need_p:
            sp.add_argument("--p", type=int, default=1)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", metavar="PATH", default=None, help="default: stdout")

    sp = sub.add_parser("nodes", help="dump the node set")
    common(sp)
    sp.set_defaults(func=cmd_nodes)

    sp = sub.add_parser("padua-nodes", help="dump even Padua points PD_2n")
    common(sp, need_p=False)
    sp.set_defaults(func=cmd_padua)

    sp = sub.add_parser("xu-nodes", help="dump odd Xu points XU_2n+1")
    common(sp, need_p=False)
    sp.set_defaults(func=cmd_xu)

    sp = sub.add_parser("interpolate", help="coefficient matrix from sampled data")
    common(sp)
    sp.add_argument("--input", metavar="PATH", required=True, help="one value per line, '-' for stdin")
    sp.add_argument("--curve-ordered", action="store_true", help="input has 4n(n+p) values in sample order")
    sp.add_argument("--slack", type=float, default=1e-9, help="allowed spread of duplicate curve samples")
    sp.add_argument("--grid", type=int, nargs=2, metavar=("NX", "NY"), default=None)
    sp.add_argument("--eval-output", metavar="PATH", default=None, help="also write interpolant values on --grid")
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("quadcheck", help="exactness sweep of the node quadrature")
    common(sp)
    sp.add_argument("--tolerance", type=float, default=1e-11)
    sp.add_argument("--include-excluded", action="store_true", help="also report the index (2(n+p), 2n)")
    sp.add_argument("--seed", type=int, default=0, help="accepted for interface uniformity; the sweep is deterministic")
    sp.set_defaults(func=cmd_quadcheck)

    sp = sub.add_parser("lebesgue", help="Lebesgue constants over a degree range")
    sp.add_argument("--n", type=_int_list, default=None, help="comma-separated degrees (overrides --n-min/--n-max)")
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--p", type=_int_list, default=None, help="comma-separated offsets, default 1")
    sp.add_argument("--grid", type=int, nargs=2, metavar=("NX", "NY"), default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", metavar="PATH", default=None)
    sp.set_defaults(func=cmd_lebesgue)

    sp = sub.add_parser("table2", help="maximum errors for the ten Franke-Renka-Brown functions")
    sp.add_argument("--n", type=_int_list, default=None, help="degrees, default 5,10,20,30")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--grid", type=int, nargs=2, metavar=("NX", "NY"), default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", metavar="PATH", default=None)
    sp.set_defaults(func=cmd_table2)
    return parser


def _thread_limit():
    value = os.environ.get("LISSA_THREADS")
    if not value:
        return contextlib.nullcontext()
    from threadpoolctl import threadpool_limits

    return threadpool_limits(limits=max(1, int(value)))


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        with _thread_limit():
            return args.func(args)
    except ParameterError as exc:
        print(f"lissa: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except CliError as exc:
        print(f"lissa: error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"lissa: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
