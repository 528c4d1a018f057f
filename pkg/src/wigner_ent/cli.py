"""Command-line front end: ``wigner-ent {point,sweep,figure,state,wigner,selftest}``."""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from pathlib import Path

from . import __version__
from .entanglement import frame_reports
from .kinematics import (
    ELECTRON_MUON_MASS_RATIO,
    matched_speed,
    matching_coefficient,
    wigner_angle_perpendicular,
)
from .qcore import ContractViolation, RejectedInput
from .states import (
    BASIS_ORDER,
    ScenarioKind,
    ScenarioSpec,
    boost_scenario,
    momentum_density,
    reduced_momentum,
    reduced_spin,
    spin_density,
)
from .sweeps import (
    DEFAULT_PRECISION,
    DERIVATIVE_OUTPUTS,
    OUTPUTS,
    SweepConfig,
    figure_recipe,
    figure_tables,
    format_number,
    rounded,
    sweep,
    to_csv,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CONTRACT = 3
PRECISION_ENV = "WIGNER_ENT_PRECISION"
SELFTEST_TOL = 1e-9


def precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or raw == "":
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise RejectedInput(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if not 1 <= value <= 17:
        raise RejectedInput(f"{PRECISION_ENV} must lie in 1..17, got {value}")
    return value


def _angle(value: float, deg: bool) -> float:
    return math.radians(value) if deg else value


def resolve_phi(args) -> float:
    """Wigner angle from --phi, or from a perpendicular (--beta, --speed) pair."""
    have_pair = args.beta is not None or args.speed is not None
    if args.phi is not None and have_pair:
        raise RejectedInput("give either --phi or --beta/--speed, not both")
    if args.phi is not None:
        phi = _angle(args.phi, args.deg)
    elif args.beta is not None and args.speed is not None:
        phi = wigner_angle_perpendicular(args.beta, args.speed)
    elif have_pair:
        raise RejectedInput("--beta and --speed must be given together")
    else:
        phi = 0.0
    if not math.isfinite(phi):
        raise RejectedInput("phi must be finite")
    return phi


def _spec(args) -> ScenarioSpec:
    if args.param is None:
        raise RejectedInput("--param is required")
    return ScenarioSpec(args.scenario, args.param, args.sign)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _complex_list(values, prec):
    return [[rounded(complex(z).real, prec), rounded(complex(z).imag, prec)] for z in values]


def _matrix(m, prec):
    return [_complex_list(row, prec) for row in m]


def cmd_point(args) -> int:
    prec = precision()
    spec = _spec(args)
    phi = resolve_phi(args)
    reports = frame_reports(spec, phi)
    c = {k: r.concurrence for k, r in reports.items()}
    record = {
        "scenario": spec.kind.value,
        "parameter": spec.parameter,
        "sign": spec.sign,
        "phi": phi,
        "c_spin_rest": c["spin_rest"],
        "c_mom_rest": c["mom_rest"],
        "c_spin_boosted": c["spin_boosted"],
        "c_mom_boosted": c["mom_boosted"],
        "delta_spin": c["spin_rest"] - c["spin_boosted"],
        "delta_mom": c["mom_rest"] - c["mom_boosted"],
    }
    record = {k: rounded(v, prec) if isinstance(v, float) else v for k, v in record.items()}
    record["lambdas"] = {k: [rounded(x, prec) for x in r.lambdas] for k, r in reports.items()}
    record["closed_form_residual"] = {k: rounded(r.residual, prec) for k, r in reports.items()}
    if args.format == "json":
        _emit(json.dumps(record, indent=2) + "\n", args.out)
        return EXIT_OK
    f = lambda v: format_number(v, prec)  # noqa: E731
    lines = [f"scenario  {record['scenario']}  parameter={f(spec.parameter)}  "
             f"sign={spec.sign}  phi={f(phi)}"]
    for key in ("c_spin_rest", "c_mom_rest", "c_spin_boosted", "c_mom_boosted",
                "delta_spin", "delta_mom"):
        lines.append(f"{key:<16}{f(record[key])}")
    for key, r in reports.items():
        lam = " ".join(f(x) for x in r.lambdas)
        lines.append(f"lambda {key:<14}{lam}  residual={f(r.residual)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    prec = precision()
    outputs = tuple(o.strip() for o in args.outputs.split(",")) if args.outputs else OUTPUTS
    if args.vary == "param":
        fixed = resolve_phi(args)
        start = args.start if args.start is not None else 0.0
        end = args.end if args.end is not None else 1.0
    else:
        if args.param is None:
            raise RejectedInput("--param is required when sweeping phi")
        fixed = args.param
        start = _angle(args.start, args.deg) if args.start is not None else 0.0
        end = _angle(args.end, args.deg) if args.end is not None else 1.0
    config = SweepConfig(kind=args.scenario, vary=args.vary, fixed=fixed, start=start,
                         end=end, steps=args.steps, outputs=outputs, sign=args.sign)
    rows = sweep(config)
    header = (config.x_name,) + tuple(outputs)
    if args.format == "json":
        payload = {
            "scenario": config.kind.value,
            "sign": config.sign,
            "vary": config.vary,
            "fixed": rounded(fixed, prec),
            "columns": list(header),
            "rows": [[rounded(v, prec) for v in row] for row in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(to_csv(header, rows, prec), args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    prec = precision()
    figure_recipe(args.figure_id)
    out_dir = Path(args.out) if args.out else Path.cwd()
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, text in figure_tables(args.figure_id, prec).items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8", newline="\n")
        print(path)
    return EXIT_OK


def cmd_state(args) -> int:
    prec = precision()
    spec = _spec(args)
    phi = resolve_phi(args)
    pair = boost_scenario(spec, phi)
    payload = {
        "basis_order": list(BASIS_ORDER),
        "scenario": spec.kind.value,
        "parameter": spec.parameter,
        "sign": spec.sign,
        "phi": phi,
        "rest_state": _complex_list(pair.rest_state, prec),
        "boosted_state": _complex_list(pair.boosted_state, prec),
        "rho_spin_rest": _matrix(spin_density(pair.rest_state), prec),
        "rho_mom_rest": _matrix(momentum_density(pair.rest_state), prec),
        "rho_spin_boosted": _matrix(reduced_spin(pair), prec),
        "rho_mom_boosted": _matrix(reduced_momentum(pair), prec),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_wigner(args) -> int:
    prec = precision()
    f = lambda v: format_number(v, prec)  # noqa: E731
    if args.speed is None:
        raise RejectedInput("--speed is required")
    beta = 0.0 if args.beta is None else args.beta
    phi = wigner_angle_perpendicular(beta, args.speed)
    lines = [f"phi_rad {f(phi)}", f"phi_deg {f(math.degrees(phi))}"]
    if args.me is not None or args.mmu is not None:
        # a single mass fills in the other from the standard electron/muon ratio
        m_e = args.me if args.me is not None else args.mmu * ELECTRON_MUON_MASS_RATIO
        m_mu = args.mmu if args.mmu is not None else args.me / ELECTRON_MUON_MASS_RATIO
        a = matching_coefficient(m_e, m_mu)
        v_a = matched_speed(a, m_e, m_mu, args.speed)
        lines += [
            f"a {f(a)}",
            f"v_A1 {f(v_a)}",
            f"v_B2 {f(args.speed)}",
            f"phi_A1_rad {f(wigner_angle_perpendicular(beta, v_a))}",
            f"phi_B2_rad {f(phi)}",
        ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    if args.rows < 1:
        raise RejectedInput("--rows must be positive")
    rng = random.Random(args.seed)
    kinds = list(ScenarioKind)
    worst = 0.0
    for _ in range(args.rows):
        kind = rng.choice(kinds)
        lo = 0.0 if kind is ScenarioKind.ETA else 1e-3
        hi = 1.0 if kind is ScenarioKind.ETA else 1.0 - 1e-3
        spec = ScenarioSpec(kind, rng.uniform(lo, hi), rng.choice(("plus", "minus")))
        phi = rng.uniform(0.0, 1.0)
        for key, r in frame_reports(spec, phi).items():
            worst = max(worst, r.residual)
            if r.residual > SELFTEST_TOL:
                print(f"FAIL {spec} phi={phi!r} {key}: residual {r.residual:.3e}",
                      file=sys.stderr)
                return EXIT_CONTRACT
    print(f"selftest ok: {args.rows} rows, worst residual {worst:.3e}")
    return EXIT_OK


def _scenario_flags(p):
    p.add_argument("--scenario", choices=[k.value for k in ScenarioKind], default="xi")
    p.add_argument("--param", type=float, help="eta or xi")
    p.add_argument("--sign", choices=("plus", "minus"), default="plus")


def _phi_flags(p):
    p.add_argument("--phi", type=float, help="Wigner angle (radians unless --deg)")
    p.add_argument("--deg", action="store_true", help="angles are given in degrees")
    p.add_argument("--beta", type=float, help="boost speed (with --speed, replaces --phi)")
    p.add_argument("--speed", type=float, help="particle speed perpendicular to the boost")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wigner-ent",
        description="Spin and momentum entanglement of massive fermion pairs under boosts.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate one (scenario, parameter, phi) point")
    _scenario_flags(p)
    _phi_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="sweep the parameter or phi")
    _scenario_flags(p)
    _phi_flags(p)
    p.add_argument("--vary", choices=("param", "phi"), default="param")
    p.add_argument("--start", type=float)
    p.add_argument("--end", type=float)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--outputs", help="comma-separated subset of: "
                   + ",".join(OUTPUTS + DERIVATIVE_OUTPUTS))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="write the CSV curves for one figure")
    p.add_argument("figure_id", type=int)
    p.add_argument("--out", help="output directory (default: current directory)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("state", help="dump states and reduced matrices as JSON")
    _scenario_flags(p)
    _phi_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("wigner", help="Wigner angle for a perpendicular boost")
    p.add_argument("--beta", type=float, help="boost speed")
    p.add_argument("--speed", type=float, help="particle speed (v_B2 when masses are given)")
    p.add_argument("--me", type=float, help="electron mass")
    p.add_argument("--mmu", type=float, help="muon mass")
    p.add_argument("--out")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("selftest", help="re-verify random rows against the closed forms")
    p.add_argument("--rows", type=int, default=100)
    p.add_argument("--seed", type=int, default=20240611)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RejectedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
