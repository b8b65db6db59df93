"""Command line: ``jacobi-asym {coeffs,eval,bounds,certify}``.

Exit codes: 0 success, 1 certification failure, 2 invalid input, 3 ``|x| = 1``.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import bounds
from .certify import GridSpec, sweep
from .coeffs import PoleError, coefficients_at
from .expand import Convention, evaluate, evaluate_general
from .params import (DomainError, EndpointError, Parameters, Region, RegionPoint,
                     validate)

ACCEPTANCE_PAIRS = ((0.0, 0.0), (0.0, -0.5), (-0.25, -0.5), (-0.5, -0.5))
ACCEPTANCE_N = (10, 20, 50, 100, 200, 500)
ACCEPTANCE_P = (1, 2, 3)
PRESETS = {
    "acceptance-outer": dict(region="outer", gamma=(0.25, 0.5, 1.0, 2.0),
                             pairs=ACCEPTANCE_PAIRS, n=ACCEPTANCE_N, p=ACCEPTANCE_P),
    "acceptance-osc": dict(region="osc", gamma=(0.3, 0.7, 1.2, math.pi / 2),
                           pairs=ACCEPTANCE_PAIRS, n=ACCEPTANCE_N, p=ACCEPTANCE_P),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _g(v: float) -> str:
    return f"{v:.17g}"


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _point(args) -> RegionPoint:
    if args.gamma is None:
        args.parser.error("--gamma is required" if args.command != "eval"
                          else "one of --x or --gamma is required")
    return RegionPoint(Region(args.region), args.gamma)


def _checked(point: RegionPoint, params: Parameters):
    report = validate(point, params)
    if not report.valid:
        raise DomainError(report.reason())


def _emit(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        return
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
        return
    writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def cmd_coeffs(args, out) -> int:
    point = _point(args)
    params = Parameters(args.alpha, args.beta)
    _checked(point, params)
    table = coefficients_at(point, params, args.max_j)
    rows = []
    for j, v in enumerate(table.A):
        row = {"j": str(j)}
        if point.kind is Region.OUTER:
            row["A"] = _g(v.real)
        else:
            row["A_re"], row["A_im"] = _g(v.real), _g(v.imag)
        rows.append(row)
    _emit(rows, args.format, out)
    if args.audit:
        audit = []
        for k, v in enumerate(table.a):
            audit.append({"kind": "a", "index": str(k), "re": _g(v.real), "im": _g(v.imag)})
        for m, v in enumerate(table.b, start=3):
            audit.append({"kind": "b", "index": str(m), "re": _g(v.real), "im": _g(v.imag)})
        for j, poly in enumerate(table.q):
            for m, v in enumerate(poly.coefficients):
                audit.append({"kind": f"Q{j}", "index": str(m), "re": _g(complex(v).real),
                              "im": _g(complex(v).imag)})
        _emit(audit, args.format, out)
    return 0


def cmd_eval(args, out) -> int:
    params = Parameters(args.alpha, args.beta)
    conv = Convention(args.convention)
    if args.x is not None:
        res = evaluate_general(args.n, params, args.x, args.p, conv)
        leaf = res.leaves[0][1] if len(res.leaves) == 1 else None
        out.write(f"value={res.value.decimal()} mantissa={_g(res.value.mantissa)} "
                  f"exp2={res.value.exponent}\n")
        out.write(f"abs_bound={res.absolute_bound.decimal()}\n")
        if leaf is not None:
            out.write(f"bound={_g(leaf.bundle.certified_bound)}\n")
        out.write(f"leaves={len(res.leaves)} flags={','.join(res.flags) or '-'}\n")
        return 0
    point = _point(args)
    _checked(point, params)
    res = evaluate(point, args.n, params, args.p, conv)
    out.write(f"value={res.value.decimal()} mantissa={_g(res.value.mantissa)} "
              f"exp2={res.value.exponent}\n")
    out.write(f"abs_bound={res.absolute_bound.decimal()}\n")
    out.write(f"bound={_g(res.bundle.certified_bound)}\n")
    out.write(f"flags={','.join(res.flags) or '-'}\n")
    return 0


def cmd_bounds(args, out) -> int:
    point = _point(args)
    params = Parameters(args.alpha, args.beta)
    _checked(point, params)
    table = coefficients_at(point, params, args.p)
    if point.kind is Region.OUTER:
        b = bounds.c_hat_outer(args.p, args.n, point.gamma, params, table.A[args.p].real)
        out.write(f"delta={_g(b.delta)}\n")
    else:
        b = bounds.c_hat_osc(args.p, args.n, point.gamma, params, table.A[args.p])
    out.write(f"c_p={_g(b.c_p)}\n")
    out.write(f"c_p+1={_g(b.c_next)}\n")
    out.write(f"c_hat_p={_g(b.c_hat_p)}\n")
    out.write(f"bound={_g(b.certified_bound)}\n")
    out.write(f"n_threshold={b.n_threshold}\n")
    return 0


def _grid_from_args(args) -> GridSpec:
    if args.grid:
        spec = json.loads(Path(args.grid).read_text())
    elif args.preset:
        spec = dict(PRESETS[args.preset])
    else:
        missing = [f for f in ("region", "gamma", "n") if getattr(args, f"g_{f}") is None]
        if missing:
            args.parser.error("certify needs --grid, --preset or --region/--gamma/--n")
        spec = {"region": args.g_region, "gamma": _floats(args.g_gamma),
                "n": _ints(args.g_n), "alpha": _floats(args.g_alpha or "0"),
                "beta": _floats(args.g_beta or "0"), "p": _ints(args.g_p or "1")}
    spec["oracle"] = args.oracle
    spec.setdefault("convention", args.convention)
    return GridSpec.from_dict(spec)


def cmd_certify(args, out) -> int:
    report = sweep(_grid_from_args(args), threads=args.threads)
    text = report.json_text() + "\n" if args.format == "json" else report.csv_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    sys.stderr.write(json.dumps({k: report.summary[k] for k in
                                 ("pass_rate", "worst_ratio", "n_points", "wall_ms")}) + "\n")
    return 0 if report.summary["pass_rate_above_threshold"] == 1.0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacobi-asym",
                     description="Large-degree Jacobi polynomials with certified error bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, need_p=True):
        p.add_argument("--region", choices=["outer", "osc"], default="outer")
        p.add_argument("--gamma", type=float)
        p.add_argument("--alpha", type=float, default=0.0)
        p.add_argument("--beta", type=float, default=0.0)
        if need_p:
            p.add_argument("--p", type=int, default=1)

    pc = sub.add_parser("coeffs", help="expansion coefficients A_0..A_J")
    common(pc, need_p=False)
    pc.add_argument("--max-j", type=int, default=2)
    pc.add_argument("--format", choices=["csv", "json"], default="csv")
    pc.add_argument("--audit", action="store_true")

    pe = sub.add_parser("eval", help="value with certified bound")
    common(pe)
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--x", type=float)
    pe.add_argument("--convention", choices=["thm", "conj"], default="conj")

    pb = sub.add_parser("bounds", help="certificate constants")
    common(pb)
    pb.add_argument("--n", type=int, default=100)

    ps = sub.add_parser("certify", help="grid certification sweep")
    ps.add_argument("--grid", help="JSON grid file")
    ps.add_argument("--preset", choices=sorted(PRESETS))
    ps.add_argument("--region", dest="g_region", choices=["outer", "osc"])
    ps.add_argument("--gamma", dest="g_gamma", help="comma-separated list")
    ps.add_argument("--alpha", dest="g_alpha")
    ps.add_argument("--beta", dest="g_beta")
    ps.add_argument("--n", dest="g_n")
    ps.add_argument("--p", dest="g_p")
    ps.add_argument("--out")
    ps.add_argument("--format", choices=["csv", "json"], default="csv")
    ps.add_argument("--oracle", choices=["scaled", "rational"], default="scaled")
    ps.add_argument("--convention", choices=["thm", "conj"], default="conj")
    ps.add_argument("--threads", type=int, default=1)
    for sp in (pc, pe, pb, ps):
        sp.set_defaults(parser=sp)
    return parser


COMMANDS = {"coeffs": cmd_coeffs, "eval": cmd_eval, "bounds": cmd_bounds,
            "certify": cmd_certify}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except EndpointError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (DomainError, PoleError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
