"""Command-line interface: reference tables, sweeps, limit studies, oracle runs.

Commands

    table1     six-row polarizability table, gamma0 = 0.39 pi .. 0.49 pi
    table2     three shallow-well rows, gamma0 = 0.19 pi, 0.17 pi, 0.15 pi
    solve      one well, selected by --gamma or --R
    sweep      breakdown rows over a gamma0 range
    limits     delta-potential or hard-wall limit study (JSON report)
    oracle     grid-diagonalization cross-check (JSON report)
    calibrate  hard-wall C' calibration round trip (JSON report)

Angles accept either radians or multiples of pi ("0.39pi").  Tables and
sweeps emit CSV (paper-style fixed/scientific formatting) or JSON (full-
precision floats); report commands always emit JSON with a `checks` block
and exit nonzero when a check band fails.  Output is byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import conventional_sum, dalgarno_lewis, grid_oracle, limits
from .errors import DomainError, NumericalError
from .well_spectrum import ground_state_from_R, ground_state_from_gamma

TABLE1_GAMMAS_PI = (0.39, 0.41, 0.43, 0.45, 0.47, 0.49)
TABLE2_GAMMAS_PI = (0.19, 0.17, 0.15)

TABLE1_COLUMNS = (
    "gamma0_over_pi",
    "beta0",
    "R",
    "alpha1_prime",
    "alpha2_prime",
    "alpha_prime",
    "alpha_apr_prime",
)
TABLE2_COLUMNS = TABLE1_COLUMNS[:-1]
SWEEP_COLUMNS = (
    "gamma0_over_pi",
    "beta0",
    "R",
    "alpha1_prime",
    "alpha2_prime",
    "alpha2_t_prime",
    "alpha_prime",
    "alpha_apr_prime",
    "t_ratio",
)

# Columns formatted with the mixed fixed/scientific rule of the printed
# tables; the state columns stay fixed-point at any magnitude.
_MIXED_COLUMNS = frozenset(
    {"alpha1_prime", "alpha2_prime", "alpha2_t_prime", "alpha_prime",
     "alpha_apr_prime", "t_ratio"}
)


def parse_angle(text: str) -> float:
    """Angle in radians from '0.39pi'-style multiples of pi or a raw float."""
    cleaned = text.strip().lower()
    for suffix in ("pi", "π"):
        if cleaned.endswith(suffix):
            try:
                return float(cleaned[: -len(suffix)].rstrip(" *")) * math.pi
            except ValueError as exc:
                raise DomainError(f"cannot parse angle {text!r}") from exc
    try:
        return float(cleaned)
    except ValueError as exc:
        raise DomainError(f"cannot parse angle {text!r}") from exc


def format_fixed(value: float, precision: int = 6) -> str:
    return f"{value:.{precision}f}"


def format_scientific(value: float) -> str:
    mantissa, exponent = f"{value:.2E}".split("E")
    return f"{mantissa}E{int(exponent):+d}"


def format_mixed(value: float, precision: int = 6) -> str:
    """Fixed six decimals, except scientific for |v| >= 10 or 0 < |v| < 1e-4."""
    if value != 0.0 and (abs(value) >= 10.0 or abs(value) < 1e-4):
        return format_scientific(value)
    return format_fixed(value, precision)


def _format_cell(column: str, value: float, precision: int) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    if column in _MIXED_COLUMNS:
        return format_mixed(value, precision)
    return format_fixed(value, precision)


def _breakdown_row(gamma0: float) -> dict:
    state = ground_state_from_gamma(gamma0)
    bd = dalgarno_lewis.breakdown(state)
    return {
        "gamma0_over_pi": gamma0 / math.pi,
        "beta0": state.beta0,
        "R": state.R,
        "alpha1_prime": bd.alpha1_prime,
        "alpha2_prime": bd.alpha2_prime,
        "alpha2_t_prime": bd.alpha2_t_prime,
        "alpha_prime": bd.alpha_prime,
        "alpha_apr_prime": bd.alpha_apr_prime,
        "t_ratio": bd.t_ratio,
    }


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_table(rows: list[dict], columns: Sequence[str], args) -> None:
    if args.format == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(
                ",".join(_format_cell(col, row[col], args.precision) for col in columns)
            )
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "meta": {"command": args.command, "columns": list(columns)},
            "rows": [{col: row[col] for col in columns} for row in rows],
            "diagnostics": {},
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)


def _emit_report(args, inputs: dict, rows: list[dict], diagnostics: dict,
                 checks: list[dict]) -> int:
    payload = {
        "meta": {"command": args.command, "inputs": inputs},
        "rows": rows,
        "diagnostics": {**diagnostics, "checks": checks},
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0 if all(c["passed"] for c in checks) else 1


def _check(name: str, value: float, target: float, band: float) -> dict:
    deviation = value - target
    return {
        "name": name,
        "value": value,
        "target": target,
        "band": band,
        "deviation": deviation,
        "passed": bool(abs(deviation) <= band),
    }


def cmd_table1(args) -> int:
    rows = [_breakdown_row(g * math.pi) for g in TABLE1_GAMMAS_PI]
    _emit_table(rows, TABLE1_COLUMNS, args)
    return 0


def cmd_table2(args) -> int:
    rows = [_breakdown_row(g * math.pi) for g in TABLE2_GAMMAS_PI]
    _emit_table(rows, TABLE2_COLUMNS, args)
    return 0


def cmd_solve(args) -> int:
    if (args.gamma is None) == (args.R is None):
        raise DomainError("solve needs exactly one of --gamma or --R")
    if args.gamma is not None:
        state = ground_state_from_gamma(parse_angle(args.gamma))
    else:
        state = ground_state_from_R(args.R)
    row = _breakdown_row(state.gamma0)
    if args.format == "csv":
        _emit_table([row], SWEEP_COLUMNS, args)
        return 0
    phi = dalgarno_lewis.phi_reduced(state)
    diagnostics = {
        "n_prime_sq": state.n_prime_sq,
        "energy_dimless": state.energy_dimless,
        "phi_jump_at_edge": dalgarno_lewis.phi_jump(phi),
        "orthogonality": dalgarno_lewis.orthogonality(state),
        "alpha_via_quadrature": dalgarno_lewis.alpha_via_quadrature(state),
    }
    payload = {
        "meta": {
            "command": "solve",
            "inputs": {"gamma": args.gamma, "R": args.R},
            "columns": list(SWEEP_COLUMNS),
        },
        "rows": [{col: row[col] for col in SWEEP_COLUMNS}],
        "diagnostics": diagnostics,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def cmd_sweep(args) -> int:
    lo = parse_angle(args.min)
    hi = parse_angle(args.max)
    step = parse_angle(args.step)
    if step <= 0.0:
        raise DomainError(f"sweep step must be positive, got {args.step!r}")
    for name, value in (("min", lo), ("max", hi)):
        if not 0.0 < value < 0.5 * math.pi:
            raise DomainError(f"sweep {name} must lie in (0, pi/2), got {value!r}")
    rows = []
    k = 0
    while True:
        gamma = lo + k * step
        if gamma > hi + 1e-9 * step:
            break
        rows.append(_breakdown_row(gamma))
        k += 1
    _emit_table(rows, SWEEP_COLUMNS, args)
    return 0


def cmd_limits(args) -> int:
    if args.mode == "delta":
        seq = limits.delta_limit(steps=args.steps)
        rows = [
            {
                "half_width": a,
                "depth": v,
                "alpha1_scaled": s1,
                "alpha2_scaled": s2,
            }
            for a, v, s1, s2 in zip(
                seq.a_values, seq.v0_values, seq.alpha1_scaled, seq.alpha2_scaled
            )
        ]
        checks = [
            _check("delta_alpha1_scaled", seq.alpha1_extrapolated, 1.25, 1e-3),
            _check("delta_alpha2_scaled", seq.alpha2_extrapolated, 0.0, 1e-3),
        ]
        diagnostics = {
            "alpha1_extrapolated": seq.alpha1_extrapolated,
            "alpha2_extrapolated": seq.alpha2_extrapolated,
        }
        return _emit_report(args, {"mode": "delta", "steps": args.steps}, rows,
                            diagnostics, checks)
    report = limits.infinite_well_limit()
    rows = [
        {
            "epsilon": e,
            "alpha1_prime": a1,
            "alpha2_prime": a2,
            "alpha2_t_prime": a2t,
        }
        for e, a1, a2, a2t in zip(
            report.epsilons,
            report.alpha1_values,
            report.alpha2_values,
            report.alpha2_t_values,
        )
    ]
    checks = [
        _check("hard_wall_alpha1", report.alpha1_limit, 0.0, 1e-7),
        _check("hard_wall_alpha2", report.alpha2_limit, 0.0702247, 1e-6),
        _check("hard_wall_alpha2_t", report.alpha2_t_limit, -0.1324176, 1e-6),
    ]
    diagnostics = {
        "alpha1_limit": report.alpha1_limit,
        "alpha2_limit": report.alpha2_limit,
        "alpha2_t_limit": report.alpha2_t_limit,
    }
    return _emit_report(args, {"mode": "infinite"}, rows, diagnostics, checks)


def cmd_oracle(args) -> int:
    if (args.R is None) == (not args.hard_wall):
        raise DomainError("oracle needs exactly one of --R or --hard-wall")
    if args.hard_wall:
        config = grid_oracle.GridOracleConfig.hard_wall(
            num_points=args.num_points, num_states=args.num_states
        )
    else:
        config = grid_oracle.GridOracleConfig(
            well_R=args.R,
            box_half_width=args.box_half_width,
            num_points=args.num_points,
            num_states=args.num_states,
        )
    result = grid_oracle.oracle_study(config, levels=args.levels)
    route_gap = abs(result.alpha_sum - result.alpha_curvature) / result.alpha_sum
    checks = [
        {
            "name": "sum_vs_curvature_rel",
            "value": route_gap,
            "target": 0.0,
            "band": 5e-3,
            "deviation": route_gap,
            "passed": bool(route_gap <= 5e-3),
        }
    ]
    rows = [
        {
            "alpha_sum": result.alpha_sum,
            "alpha_curvature": result.alpha_curvature,
            "richardson_alpha": result.richardson_alpha,
            "ground_energy_dimless": result.ground_energy_dimless,
        }
    ]
    diagnostics = dict(result.diagnostics)
    if args.hard_wall:
        reference = conventional_sum.infinite_well_alpha(50).partial_alpha_prime
        gap = abs(result.richardson_alpha - reference) / reference
        diagnostics["conventional_sum_reference"] = reference
        checks.append(
            {
                "name": "hard_wall_vs_conventional_rel",
                "value": gap,
                "target": 0.0,
                "band": 2e-3,
                "deviation": gap,
                "passed": bool(gap <= 2e-3),
            }
        )
    else:
        closed = dalgarno_lewis.breakdown(ground_state_from_R(args.R)).alpha_prime
        deviation = (result.richardson_alpha - closed) / closed
        rows[0]["closed_form_alpha_prime"] = closed
        rows[0]["relative_deviation_from_closed_form"] = deviation
        checks.append(
            {
                "name": "oracle_vs_closed_form_rel",
                "value": abs(deviation),
                "target": 0.0,
                "band": 5e-2,
                "deviation": deviation,
                "passed": bool(abs(deviation) <= 5e-2),
            }
        )
    inputs = {
        "R": args.R,
        "hard_wall": args.hard_wall,
        "num_points": args.num_points,
        "num_states": args.num_states,
        "levels": args.levels,
    }
    return _emit_report(args, inputs, rows, diagnostics, checks)


def cmd_calibrate(args) -> int:
    one_term = conventional_sum.infinite_well_term(2)
    converged = conventional_sum.infinite_well_alpha(args.num_terms)
    hard_wall_value = dalgarno_lewis.alpha2_prime_hard_wall(-1.0)
    c_round_trip = conventional_sum.calibrate_C(hard_wall_value)
    c_from_one_term = conventional_sum.calibrate_C(one_term)
    rows = [
        {"name": "one_term_alpha_prime", "value": one_term},
        {"name": f"converged_alpha_prime_{args.num_terms}_terms",
         "value": converged.partial_alpha_prime},
        {"name": "hard_wall_alpha_prime_c_minus_1", "value": hard_wall_value},
        {"name": "c_prime_from_hard_wall_value", "value": c_round_trip},
        {"name": "c_prime_from_one_term", "value": c_from_one_term},
    ]
    checks = [
        _check("c_round_trip", c_round_trip, -1.0, 1e-9),
        {
            "name": "one_term_in_band",
            "value": one_term,
            "target": 0.070135,
            "band": "[0.07012, 0.07015]",
            "deviation": 0.0,
            "passed": bool(0.07012 <= one_term <= 0.07015),
        },
        _check("hard_wall_vs_one_term", hard_wall_value - one_term, 0.0, 2e-4),
    ]
    diagnostics = {"num_terms": args.num_terms}
    return _emit_report(args, {"num_terms": args.num_terms}, rows, diagnostics, checks)


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", default=None, help="output path (default stdout)")
    parser.add_argument("--precision", type=int, default=6,
                        help="decimal places for fixed-point columns")


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellpol",
        description="Static polarizability of a particle in a 1-D finite square well",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("table1", "table2"):
        p = sub.add_parser(name, help=f"reproduce reference {name}")
        _add_output_options(p)

    p = sub.add_parser("solve", help="solve one well")
    p.add_argument("--gamma", default=None, help="inside phase, e.g. 0.39pi")
    p.add_argument("--R", type=float, default=None, help="well strength")
    _add_output_options(p)

    p = sub.add_parser("sweep", help="breakdown rows over a gamma0 range")
    p.add_argument("--min", required=True, help="lower gamma0, e.g. 0.39pi")
    p.add_argument("--max", required=True, help="upper gamma0, e.g. 0.49pi")
    p.add_argument("--step", required=True, help="gamma0 step, e.g. 0.02pi")
    _add_output_options(p)

    p = sub.add_parser("limits", help="delta or hard-wall limit study")
    p.add_argument("--mode", choices=("delta", "infinite"), required=True)
    p.add_argument("--steps", type=int, default=12, help="delta-limit halvings")
    _add_report_options(p)

    p = sub.add_parser("oracle", help="grid-diagonalization cross-check")
    p.add_argument("--R", type=float, default=None, help="well strength")
    p.add_argument("--hard-wall", action="store_true", help="hard-wall box instead")
    p.add_argument("--num-points", type=int, default=2000)
    p.add_argument("--num-states", type=int, default=200)
    p.add_argument("--levels", type=int, default=2, help="grid doublings for refinement")
    p.add_argument("--box-half-width", type=int, default=None)
    _add_report_options(p)

    p = sub.add_parser("calibrate", help="hard-wall C' calibration report")
    p.add_argument("--num-terms", type=int, default=50)
    _add_report_options(p)

    return parser


_DISPATCH = {
    "table1": cmd_table1,
    "table2": cmd_table2,
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "limits": cmd_limits,
    "oracle": cmd_oracle,
    "calibrate": cmd_calibrate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
