"""Command line surface: bounds, exact sizes, rates, gaps, thresholds, figures.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap
exceeded, 4 search budget exhausted.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, asymptotic
from .errors import BudgetExceededError, ParameterError, ResourceCapError
from .exact_oracle import NODES_PER_SECOND, solve
from .finite_bounds import best_bounds, candidate_bounds
from .spaces import DEFAULT_SPACE_CAP, CodeParams, word_to_str
from .verification import run_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_BUDGET = 4

FIGURE_PAIRS = {
    "fig1": "cwc-cscc",
    "fig2": "cwc-cscc",
    "fig3": "cwc-cscc",
    "fig4": "hwc-secc",
    "fig5": "hwc-secc",
    "fig6": "hwc-secc",
    "fig7": "secc-cscc",
    "fig8": "secc-cscc",
    "fig9": "secc-cscc",
}
DEFAULT_FIGURE_DELTAS = (0.001, 0.01, 0.05)

_SWEEPS = {
    "cwc-cscc": asymptotic.gap_cwc_cscc_sweep,
    "hwc-secc": asymptotic.gap_hwc_secc_sweep,
    "secc-cscc": asymptotic.gap_secc_cscc_sweep,
}


def _fmt(x) -> str:
    """Cell text: shortest round-trip float form; empty for missing."""
    if x is None:
        return ""
    if isinstance(x, float):
        if math.isnan(x):
            return ""
        return repr(x)
    return str(x)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _csv(meta: str, header: list[str], rows: list[list]) -> str:
    lines = ["# " + meta, ",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(c) for c in row))
    return "\n".join(lines) + "\n"


def _json_table(meta: str, header: list[str], rows: list[list]) -> str:
    clean = [[None if isinstance(c, float) and math.isnan(c) else c for c in row] for row in rows]
    return json.dumps({"meta": meta, "columns": header, "rows": clean}, sort_keys=True) + "\n"


def _svg(path: str, header: list[str], rows: list[list]) -> None:
    """Minimal polyline rendering: first column is x, one line per y column."""
    width, height, pad = 640, 420, 60
    xs = [row[0] for row in rows]
    series = []
    for col in range(1, len(header)):
        pts = [(x, row[col]) for x, row in zip(xs, rows)
               if isinstance(row[col], (int, float)) and not (isinstance(row[col], float) and math.isnan(row[col]))]
        if pts:
            series.append((header[col], pts))
    ys = [y for _, pts in series for _, y in pts]
    if not ys:
        raise ParameterError("no plottable values")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def sx(x):
        return pad + (x - x_lo) / x_span * (width - 2 * pad)

    def sy(y):
        return height - pad - (y - y_lo) / y_span * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{pad}" y="{height - pad + 16}" font-size="10">{_fmt(x_lo)}</text>',
        f'<text x="{width - pad}" y="{height - pad + 16}" font-size="10" text-anchor="end">{_fmt(x_hi)}</text>',
        f'<text x="{pad - 4}" y="{height - pad}" font-size="10" text-anchor="end">{_fmt(y_lo)}</text>',
        f'<text x="{pad - 4}" y="{pad}" font-size="10" text-anchor="end">{_fmt(y_hi)}</text>',
    ]
    for idx, (name, pts) in enumerate(series):
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(f'<polyline fill="none" stroke="black" stroke-dasharray="{idx * 3},{idx}" points="{coords}"/>')
        lx, ly = pts[-1]
        parts.append(f'<text x="{sx(lx) + 4:.2f}" y="{sy(ly):.2f}" font-size="10">{name}</text>')
    parts.append("</svg>")
    with open(path, "w") as f:
        f.write("\n".join(parts) + "\n")


def _parse_deltas(text: str) -> list[float]:
    """Comma list ("0.01,0.05") or start:stop:step range, both inclusive."""
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise ParameterError(f"delta range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in pieces)
        if step <= 0:
            raise ParameterError("delta step must be positive")
        count = int(round((stop - start) / step))
        grid = [start + i * step for i in range(count + 1)]
        return [round(x, 12) for x in grid if x <= stop + 1e-12]
    try:
        return [float(p) for p in text.split(",") if p]
    except ValueError as exc:
        raise ParameterError(f"bad delta list {text!r}") from exc


def _params(args) -> CodeParams:
    return CodeParams(args.m, args.L, args.d, args.w)


def _meta(args, detail: str) -> str:
    return f"subblock-codes {__version__} {detail}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_bound(args) -> int:
    params = _params(args)
    kind = args.kind.upper()
    cands = candidate_bounds(params, kind)
    if args.method:
        cands = [b for b in cands if args.method in b.method]
        if not cands:
            raise ParameterError(f"no bound method matches {args.method!r}")
    lo, up = best_bounds(params, kind)
    if args.json:
        payload = {
            "params": {"m": params.m, "L": params.L, "d": params.d, "w_s": params.w_s},
            "kind": args.kind,
            "bounds": [{"value": b.value, "direction": b.direction, "method": b.method} for b in cands],
            "best_lower": {"value": lo.value, "direction": lo.direction, "method": lo.method},
            "best_upper": {"value": up.value, "direction": up.direction, "method": up.method},
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    lines = [f"{args.kind} m={params.m} L={params.L} d={params.d} w_s={params.w_s}"]
    for b in cands:
        lines.append(f"  {b.direction:<5}  {b.value:<10}  {b.method}")
    lines.append(f"best lower {lo.value} ({lo.method})")
    lines.append(f"best upper {up.value} ({up.method})")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    params = _params(args)
    res = solve(params, args.kind, cap=args.cap, node_budget=args.node_budget)
    if res.status != "exact":
        sys.stderr.write(
            f"search budget exhausted: proven bracket [{res.lower}, {res.upper}] "
            f"after {res.nodes} nodes\n"
        )
        return EXIT_BUDGET
    witness = [word_to_str(x, params.m, params.L) for x in res.witness or ()]
    if args.json:
        payload = {
            "params": {"m": params.m, "L": params.L, "d": params.d, "w_s": params.w_s},
            "kind": args.kind,
            "size": res.size,
            "method": res.method,
            "witness": witness,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    lines = [f"{args.kind} m={params.m} L={params.L} d={params.d} w_s={params.w_s}: size {res.size}"]
    lines.extend(witness)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _rate_row(family: str, L: int, w_s: int, delta: float):
    """(delta, gv, sp, flag) with empty cells outside each form's validity."""
    if family == "cscc":
        limit = asymptotic.delta_star(w_s / L)
        if delta == 0.0:
            v = asymptotic.composition_rate(L, w_s)
            return [delta, v, v, asymptotic.OK]
        if delta >= limit:
            return [delta, 0.0, 0.0, asymptotic.PROVEN_ZERO]
        return [delta, asymptotic.gamma_gv(L, delta, w_s).bits_per_use,
                asymptotic.gamma_sp(L, delta, w_s).bits_per_use, asymptotic.OK]
    sp_limit = min(asymptotic.delta_star(w_s / L), 4 / L)
    zero_from = asymptotic.gap_zero_boundary("hwc-secc", L, w_s)
    if delta == 0.0:
        v = asymptotic.tail_rate(L, w_s)
        return [delta, v, v, asymptotic.OK]
    if delta >= zero_from:
        return [delta, 0.0, 0.0, asymptotic.PROVEN_ZERO]
    gv = asymptotic.sigma_gv(L, delta, w_s).bits_per_use
    if delta < sp_limit:
        return [delta, gv, asymptotic.sigma_sp(L, delta, w_s).bits_per_use, asymptotic.OK]
    return [delta, gv, None, asymptotic.UNDEFINED]


def cmd_rate(args) -> int:
    if args.family == "cscc" and not 1 <= args.w <= args.L - 1:
        raise ParameterError(f"need 1 <= w_s <= L-1 for cscc rates, got w_s={args.w}, L={args.L}")
    if args.family == "secc" and not 1 <= args.w <= args.L:
        raise ParameterError(f"need 1 <= w_s <= L for secc rates, got w_s={args.w}, L={args.L}")
    deltas = _parse_deltas(args.deltas)
    rows = [_rate_row(args.family, args.L, args.w, delta) for delta in deltas]
    header = ["delta", "gv_lower", "sp_upper", "flag"]
    meta = _meta(args, f"rate family={args.family} L={args.L} w_s={args.w} deltas={args.deltas}")
    _emit(_json_table(meta, header, rows) if args.json else _csv(meta, header, rows), args.out)
    return EXIT_OK


def cmd_gap(args) -> int:
    sweep = _SWEEPS[args.pair]
    deltas = _parse_deltas(args.deltas)
    rows = []
    for delta in deltas:
        value, flag = sweep(args.L, delta, args.w)
        rows.append([delta, None if math.isnan(value) else value, flag])
    header = ["delta", "gap_lb", "flag"]
    meta = _meta(args, f"gap pair={args.pair} L={args.L} w_s={args.w} deltas={args.deltas}")
    _emit(_json_table(meta, header, rows) if args.json else _csv(meta, header, rows), args.out)
    return EXIT_OK


def cmd_threshold(args) -> int:
    root = asymptotic.threshold_root(args.pair, args.L)
    if args.json:
        _emit(json.dumps({"pair": args.pair, "L": args.L, "root": root}, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{args.pair} L={args.L}: positive-gap threshold delta = {root!r}\n", args.out)
    return EXIT_OK


def _figure_table(fig: str, deltas: list[float], L_fixed: int, L_max: int, threads: int):
    pair = FIGURE_PAIRS[fig]
    sweep = _SWEEPS[pair]
    num = int(fig[3:])
    kind = ("length", "weight", "region")[(num - 1) % 3]
    if kind == "length":
        header = ["L"] + [f"delta={_fmt(d)}" for d in deltas]
        if fig == "fig1":
            header.append("rate_penalty_half")
        L_values = [L for L in range(2, L_max + 1, 2)]

        def row(L):
            out = [L]
            for delta in deltas:
                value, flag = sweep(L, delta, L // 2)
                out.append(None if math.isnan(value) else value)
            if fig == "fig1":
                out.append(asymptotic.rate_penalty_r(L, L // 2))
            return out

        items = L_values
    elif kind == "weight":
        L = L_fixed
        header = ["w_s"] + [f"delta={_fmt(d)}" for d in deltas]

        def row(w_s):
            out = [w_s]
            for delta in deltas:
                value, flag = sweep(L, delta, w_s)
                out.append(None if math.isnan(value) else value)
            return out

        items = list(range(L // 2, L))
    else:
        header = ["L", "threshold", "proven_zero_from"]

        def row(L):
            return [L, asymptotic.threshold_root(pair, L),
                    asymptotic.gap_zero_boundary(pair, L, L // 2)]

        items = [L for L in range(2, L_max + 1, 2)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, items))
    else:
        rows = [row(item) for item in items]
    return header, rows


def cmd_figure(args) -> int:
    deltas = _parse_deltas(args.deltas)
    header, rows = _figure_table(args.figure, deltas, args.L, args.L_max, args.threads)
    meta = _meta(args, f"figure id={args.figure} pair={FIGURE_PAIRS[args.figure]} "
                       f"deltas={args.deltas} L={args.L} L_max={args.L_max}")
    _emit(_json_table(meta, header, rows) if args.json else _csv(meta, header, rows), args.out)
    if args.svg:
        _svg(args.svg, header, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_checks(args.level, cap=args.cap, node_budget=args.node_budget)
    width = max(len(c.name) for c in checks)
    lines = []
    failed = 0
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        failed += 0 if c.passed else 1
        lines.append(f"{status}  {c.name:<{width}}  {c.detail}")
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    if args.json:
        payload = {
            "level": args.level,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            "passed": failed == 0,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser


def _add_params(sub, kinds, include_d=True):
    sub.add_argument("kind", choices=kinds)
    sub.add_argument("-m", type=int, required=True, help="number of subblocks")
    sub.add_argument("-L", type=int, required=True, help="subblock length")
    if include_d:
        sub.add_argument("-d", type=int, required=True, help="minimum distance")
    sub.add_argument("-w", type=int, required=True, help="subblock weight parameter w_s")


def _global_flags(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    # registered on the root parser and again on every subparser (with
    # SUPPRESS defaults) so the flags work on either side of the subcommand
    dflt = argparse.SUPPRESS if suppress else None

    def d(value):
        return dflt if suppress else value

    parser.add_argument("--json", action="store_true", default=d(False),
                        help="machine-readable output")
    parser.add_argument("--threads", type=int, default=d(1),
                        help="worker threads for grid commands")
    parser.add_argument("--cap", type=int, default=d(DEFAULT_SPACE_CAP),
                        help="largest space size the oracle may enumerate")
    parser.add_argument("--budget", type=float, default=d(60.0),
                        help="search budget in seconds (deterministic node-count equivalent)")
    parser.add_argument("--out", default=d(None),
                        help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subblock-codes",
        description="Bounds, exact sizes, rates, and gap curves for subblock-constrained codes.",
    )
    parser.add_argument("--version", action="version", version=f"subblock-codes {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)

    b = subs.add_parser("bound", parents=[common], help="formula bounds with method labels")
    _add_params(b, ("cscc", "secc"))
    b.add_argument("--method", help="only bounds whose method label contains this text")
    b.set_defaults(func=cmd_bound)

    e = subs.add_parser("exact", parents=[common], help="exact optimal size and witness code")
    _add_params(e, ("cscc", "secc", "cwc", "hwc", "all"))
    e.set_defaults(func=cmd_exact)

    r = subs.add_parser("rate", parents=[common], help="asymptotic rate bounds on a delta grid")
    r.add_argument("family", choices=("cscc", "secc"))
    r.add_argument("-L", type=int, required=True)
    r.add_argument("-w", type=int, required=True)
    r.add_argument("--deltas", default="0:0.5:0.01",
                   help="comma list or start:stop:step (default 0:0.5:0.01)")
    r.set_defaults(func=cmd_rate)

    g = subs.add_parser("gap", parents=[common], help="gap lower bound between two rate regions")
    g.add_argument("pair", choices=sorted(_SWEEPS))
    g.add_argument("-L", type=int, required=True)
    g.add_argument("-w", type=int, required=True)
    g.add_argument("--deltas", default="0:0.5:0.01")
    g.set_defaults(func=cmd_gap)

    t = subs.add_parser("threshold", parents=[common], help="largest delta with a provably positive gap")
    t.add_argument("pair", choices=sorted(_SWEEPS))
    t.add_argument("-L", type=int, required=True)
    t.set_defaults(func=cmd_threshold)

    f = subs.add_parser("figure", parents=[common], help="reference figure data as CSV (optional SVG)")
    f.add_argument("figure", choices=sorted(FIGURE_PAIRS))
    f.add_argument("--deltas", default=",".join(_fmt(d) for d in DEFAULT_FIGURE_DELTAS))
    f.add_argument("-L", type=int, default=16, help="subblock length for weight-sweep figures")
    f.add_argument("--L-max", type=int, default=64, dest="L_max",
                   help="largest subblock length for length-sweep figures")
    f.add_argument("--svg", help="also render a minimal SVG to this path")
    f.set_defaults(func=cmd_figure)

    v = subs.add_parser("verify", parents=[common], help="run the cross-module verification suite")
    v.add_argument("level", choices=("fast", "full"))
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.node_budget = max(1, int(args.budget * NODES_PER_SECOND))
    try:
        return args.func(args)
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except ParameterError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
