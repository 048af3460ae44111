"""Command-line surface: expansions, tower polynomials, valuation tables,
congruence verification and scanning, with plain/json/csv output."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .congruence import (
    CongruenceReport,
    CongruenceSpec,
    main_family_spec,
    scan,
    verify,
    verify_ramanujan,
)
from .etaq import NAMED_SPECS, EtaQuotientSpec, expand, pdo_series
from .padic import INFINITY, check_f_profile
from .xipoly import XiPoly, lambda_poly, phi_poly, zeta


@dataclass(frozen=True)
class RunConfig:
    command: str
    output_format: str  # plain | json | csv
    out_path: str | None
    order: int | None
    params: dict


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--out", default=None, help="write output to a file instead of stdout")
    common.add_argument("--order", type=int, default=None, help="truncation order override")

    parser = argparse.ArgumentParser(
        prog="pdocong",
        description="Exact PDO series expansions, xi-polynomial towers, "
        "2-adic valuation profiles and congruence verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pdo", parents=[common], help="print PDO(0..max)")
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = sub.add_parser("expand", parents=[common], help="expand an eta quotient")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", choices=sorted(NAMED_SPECS))
    group.add_argument("--spec", help="semicolon factors, e.g. 4^1;6^2;1^-1;3^-1;12^-1")

    p = sub.add_parser("zeta", parents=[common], help="zeta_{i,j} = U(kappa^i xi^j) in Z[xi]")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("lambda", parents=[common], help="dissection-slice polynomial")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("phi", parents=[common], help="internal-difference polynomial")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("valuations", parents=[common], help="2-adic valuation table of phi coefficients")
    p.add_argument("--k", type=int, nargs="*", default=[], help="odd levels, e.g. --k 3 5")

    p = sub.add_parser("verify", parents=[common], help="verify a congruence family over a window")
    p.add_argument(
        "--family",
        choices=("main", "corollary", "strengthened", "ramanujan", "pair"),
        required=True,
    )
    p.add_argument("--k", type=int, default=0, help="family level (main/corollary)")
    p.add_argument("--nmax", type=int, required=True, help="check all n with 0 <= n < nmax")
    p.add_argument("--alpha-max", type=int, default=0, dest="alpha_max")
    p.add_argument("--lhs", type=int, help="lhs stride (family=pair)")
    p.add_argument("--rhs", type=int, help="rhs stride (family=pair)")
    p.add_argument("--mod-exp", type=int, dest="mod_exp", help="modulus exponent (family=pair)")

    p = sub.add_parser("scan", parents=[common], help="largest surviving 2-power modulus per stride pair")
    p.add_argument("--pairs", required=True, help="comma list of a:b pairs, e.g. 8:2,32:8")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--max-exp", type=int, default=12, dest="max_exp")

    return parser


def parse_config(argv) -> RunConfig:
    args = _build_parser().parse_args(argv)
    params = dict(vars(args))
    command = params.pop("command")
    output_format = params.pop("format")
    out_path = params.pop("out")
    order = params.pop("order")
    if order is not None and order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return RunConfig(command, output_format, out_path, order, params)


def _poly_text(p: XiPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_records())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["degree", "coefficient"])
        for deg, coeff in p.terms():
            writer.writerow([deg, str(coeff)])
        return buf.getvalue().rstrip("\n")
    return str(p)


def _values_text(values, fmt: str, order: int) -> str:
    if fmt == "json":
        return json.dumps({"order": order, "values": [str(v) for v in values]})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "value"])
        for n, v in enumerate(values):
            writer.writerow([n, str(v)])
        return buf.getvalue().rstrip("\n")
    return "\n".join(str(v) for v in values)


def _report_line(report: CongruenceReport) -> str:
    start, stop = report.spec.n_range
    line = (
        f"{report.verdict.upper()}  {report.spec.describe()}  "
        f"n in [{start}, {stop})  checked={report.checked_count}  "
        f"order={report.truncation_order}"
    )
    if report.counterexample is not None:
        n, lhs, rhs = report.counterexample
        line += f"  counterexample n={n}: lhs={lhs}, rhs={rhs}"
    return line


def _reports_text(reports: list[CongruenceReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_record() for r in reports])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["description", "modulus", "n_start", "n_stop", "verdict", "counterexample_n"]
        )
        for r in reports:
            ce = r.counterexample[0] if r.counterexample else ""
            writer.writerow(
                [r.spec.describe(), r.spec.modulus, r.spec.n_range[0], r.spec.n_range[1], r.verdict, ce]
            )
        return buf.getvalue().rstrip("\n")
    return "\n".join(_report_line(r) for r in reports)


def emit_valuation_table(k_list, fmt: str = "plain", max_k: int = 5) -> tuple[int, str]:
    """Rows nu(F_k(tau_k + M)) for each requested odd k; exit 1 on any fail."""
    reports = [check_f_profile(k, max_k=max_k) for k in k_list]
    code = 0 if all(r.passed for r in reports) else 1
    if fmt == "json":
        return code, json.dumps([r.to_record() for r in reports])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "tau", "offset", "valuation"])
        for r in reports:
            for m, v in enumerate(r.vals):
                writer.writerow([r.k, r.base_degree, m, "inf" if v == INFINITY else v])
        return code, buf.getvalue().rstrip("\n")
    lines = []
    for r in reports:
        vals = ", ".join("inf" if v == INFINITY else str(v) for v in r.vals)
        lines.append(f"F_{r.k}  tau={r.base_degree}  nu=[{vals}]  verdict={r.verdict}")
    return code, "\n".join(lines)


def _required_order(config: RunConfig, minimum: int) -> int:
    return max(minimum, config.order or 1)


def _cmd_pdo(config: RunConfig) -> tuple[int, str]:
    max_n = config.params["max_n"]
    if max_n < 0:
        raise ValueError(f"--max must be >= 0, got {max_n}")
    order = _required_order(config, max_n + 1)
    table = pdo_series(order)
    return 0, _values_text(table.values[: max_n + 1], config.output_format, order)


def _cmd_expand(config: RunConfig) -> tuple[int, str]:
    if config.params["name"]:
        spec = NAMED_SPECS[config.params["name"]]
    else:
        spec = EtaQuotientSpec.parse(config.params["spec"])
    order = config.order if config.order is not None else 10
    series = expand(spec, order)
    return 0, _values_text(series.coeffs, config.output_format, order)


def _cmd_zeta(config: RunConfig) -> tuple[int, str]:
    return 0, _poly_text(zeta(config.params["i"], config.params["j"]), config.output_format)


def _cmd_lambda(config: RunConfig) -> tuple[int, str]:
    return 0, _poly_text(lambda_poly(config.params["k"]), config.output_format)


def _cmd_phi(config: RunConfig) -> tuple[int, str]:
    return 0, _poly_text(phi_poly(config.params["k"]), config.output_format)


def _cmd_valuations(config: RunConfig) -> tuple[int, str]:
    return emit_valuation_table(config.params["k"], config.output_format)


def _cmd_verify(config: RunConfig) -> tuple[int, str]:
    family = config.params["family"]
    nmax = config.params["nmax"]
    if nmax < 1:
        raise ValueError(f"--nmax must be >= 1, got {nmax}")
    k = config.params["k"]
    window = (0, nmax)
    top = nmax - 1
    if family == "main":
        specs = [main_family_spec(k, nmax)]
    elif family == "corollary":
        m = 2 ** (2 * k + 3)
        specs = [CongruenceSpec(2 ** (2 * k + 4), 2 ** (2 * k + 2), m, window)]
    elif family == "strengthened":
        specs = [CongruenceSpec(32, 8, 64, window), CongruenceSpec(128, 32, 128, window)]
    elif family == "pair":
        lhs, rhs, mod_exp = (config.params[key] for key in ("lhs", "rhs", "mod_exp"))
        if lhs is None or rhs is None or mod_exp is None:
            raise ValueError("family=pair needs --lhs, --rhs and --mod-exp")
        specs = [CongruenceSpec(lhs, rhs, 2**mod_exp, window)]
    else:  # ramanujan
        alpha_max = config.params["alpha_max"]
        needed = 2**alpha_max * (8 * top + 7) + 1
        table = pdo_series(_required_order(config, needed))
        reports = verify_ramanujan(alpha_max, nmax, table)
        code = 0 if all(r.passed for r in reports) else 1
        return code, _reports_text(reports, config.output_format)
    needed = max(spec.max_index(top) for spec in specs) + 1
    table = pdo_series(_required_order(config, needed))
    reports = [verify(spec, table) for spec in specs]
    code = 0 if all(r.passed for r in reports) else 1
    return code, _reports_text(reports, config.output_format)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a_text, b_text = chunk.split(":")
            pairs.append((int(a_text), int(b_text)))
        except ValueError:
            raise ValueError(f"malformed stride pair {chunk!r}; expected a:b") from None
    if not pairs:
        raise ValueError(f"no stride pairs in {text!r}")
    return pairs


def _cmd_scan(config: RunConfig) -> tuple[int, str]:
    pairs = _parse_pairs(config.params["pairs"])
    nmax = config.params["nmax"]
    if nmax < 1:
        raise ValueError(f"--nmax must be >= 1, got {nmax}")
    biggest = max(max(a, b) for a, b in pairs)
    table = pdo_series(_required_order(config, biggest * (nmax - 1) + 1))
    results = scan(table, pairs, config.params["max_exp"])
    fmt = config.output_format
    if fmt == "json":
        return 0, json.dumps([r.to_record() for r in results])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["lhs_stride", "rhs_stride", "max_exponent", "n_stop"])
        for r in results:
            writer.writerow([r.pair[0], r.pair[1], r.exponent, r.n_range[1]])
        return 0, buf.getvalue().rstrip("\n")
    lines = [
        f"PDO({r.pair[0]}*n) == PDO({r.pair[1]}*n) holds mod 2^{r.exponent} "
        f"for n in [0, {r.n_range[1]})"
        for r in results
    ]
    return 0, "\n".join(lines)


_HANDLERS = {
    "pdo": _cmd_pdo,
    "expand": _cmd_expand,
    "zeta": _cmd_zeta,
    "lambda": _cmd_lambda,
    "phi": _cmd_phi,
    "valuations": _cmd_valuations,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered report)."""
    return _HANDLERS[config.command](config)


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
        code, text = run(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
