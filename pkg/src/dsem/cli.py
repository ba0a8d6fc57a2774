"""Command-line front end: mode catalogs, field sampling, residual verification.

Commands: spectrum | radial | field | potentials | verify.  Tables go to
stdout (or --out) as JSON or CSV; complex values are written as paired
re/im entries so they reparse losslessly.  Exit codes: 0 success,
1 residual failure, 2 usage/config error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .errors import (DsemError, InvalidQuantumNumbersError, OutOfRangeError,
                     SingularPointError, StepExitsDomainError, WrongParityError)
from .geometry import SpacetimePoint, conformal_time
from .modes import (ModeIndex, Parity, dkp_profiles, electric_potentials_landau,
                    electric_potentials_lorentz, gradient_solution, mo_field,
                    radial_profile, spectrum)
from .verify import (DEFAULT_TOLERANCES, GridSpec, residual_dkp, residual_ffg,
                     residual_full_maxwell, residual_lorentz,
                     residual_mo_reduced, residual_mo_unscaled,
                     residual_conformal_kfg, residual_potential_system,
                     residual_radial_ode, residual_wave_G)

SCHEMA_TABLE = "dsem.table/1"
SCHEMA_VERIFY = "dsem.verify/1"


class UsageError(ValueError):
    pass


def _f17(x: float) -> str:
    return "%.17g" % float(x)


def _parse_range(text: str) -> tuple:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad integer range {text!r} (use N or LO..HI)") from exc
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _parse_interval(text: str) -> tuple:
    try:
        a, b = (float(v) for v in text.split(":", 1))
    except ValueError as exc:
        raise UsageError(f"bad interval {text!r} (use A:B)") from exc
    return a, b


def _parse_complex(text: str) -> complex:
    try:
        if "," in text:
            re_s, im_s = text.split(",", 1)
            return complex(float(re_s), float(im_s))
        return complex(text)
    except ValueError as exc:
        raise UsageError(f"bad complex literal {text!r} (use RE or RE,IM)") from exc


def _parity(text: str) -> Parity:
    try:
        return Parity(text)
    except ValueError as exc:
        raise UsageError(f"parity must be 'magnetic' or 'electric', got {text!r}") from exc


def _grid_from_args(args) -> GridSpec:
    return GridSpec(t_range=args.t_range, r_range=args.r_range,
                    theta_range=args.theta_range, n_t=args.n_t, n_r=args.n_r,
                    n_theta=args.n_theta, n_phi=args.n_phi, fd_step=args.fd_step)


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t-range", type=_parse_interval, default=(-2.0, 2.0))
    p.add_argument("--r-range", type=_parse_interval,
                   default=(0.05, math.pi - 0.05))
    p.add_argument("--theta-range", type=_parse_interval,
                   default=(0.05, math.pi - 0.05))
    p.add_argument("--n-t", type=int, default=3)
    p.add_argument("--n-r", type=int, default=3)
    p.add_argument("--n-theta", type=int, default=1)
    p.add_argument("--n-phi", type=int, default=1)
    p.add_argument("--fd-step", type=float, default=1e-4)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write to file instead of stdout")


def _emit_table(args, command: str, config: dict, columns: list, rows: list) -> None:
    """rows entries are floats or complex; complex becomes re/im pairs."""
    if args.output == "csv":
        header, csv_rows = [], []
        for name, sample in zip(columns, rows[0] if rows else [0.0] * len(columns)):
            if isinstance(sample, complex):
                header += [f"Re_{name}", f"Im_{name}"]
            else:
                header.append(name)
        for row in rows:
            out = []
            for v in row:
                if isinstance(v, complex):
                    out += [_f17(v.real), _f17(v.imag)]
                else:
                    out.append(_f17(v))
            csv_rows.append(out)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(csv_rows)
        text = buf.getvalue()
    else:
        doc_rows = []
        for row in rows:
            doc_rows.append([{"re": v.real, "im": v.imag} if isinstance(v, complex)
                             else v for v in row])
        doc = {"schema": SCHEMA_TABLE, "version": __version__, "command": command,
               "config": config, "columns": columns, "rows": doc_rows}
        text = json.dumps(doc, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ---------------------------------------------------------------


def cmd_spectrum(args) -> int:
    j_lo, j_hi = args.j
    n_lo, n_hi = args.n
    if args.unit_scale <= 0:
        raise UsageError("--unit-scale must be positive")
    rows = []
    for j in range(j_lo, j_hi + 1):
        for n in range(n_lo, n_hi + 1):
            om = spectrum(j, n)
            rows.append([float(j), float(n), float(om), om * args.unit_scale])
    _emit_table(args, "spectrum",
                {"j": list(args.j), "n": list(args.n), "unit_scale": args.unit_scale},
                ["j", "n", "omega", "omega_scaled"], rows)
    return 0


def cmd_radial(args) -> int:
    j, n = args.j[0], args.n[0]
    mode = ModeIndex(j=j, m=0, n=n, parity=Parity.MAGNETIC)
    sol = radial_profile(mode)
    r0, r1 = args.r_range
    rs = np.linspace(r0, r1, args.n_r)
    rows = [[float(r), complex(sol.value(r)), complex(sol.derivative(r))] for r in rs]
    _emit_table(args, "radial", {"j": j, "n": n, "omega": mode.omega},
                ["r", "R", "dR_dr"], rows)
    return 0


def _field_grid_points(grid: GridSpec):
    for t in grid.t_nodes():
        for r in grid.r_nodes():
            for theta in grid.theta_nodes():
                for phi in grid.phi_nodes():
                    yield SpacetimePoint(t=t, r=r, theta=theta, phi=phi)


def cmd_field(args) -> int:
    mode = ModeIndex(j=args.j[0], m=args.m, n=args.n[0], parity=_parity(args.parity))
    grid = _grid_from_args(args)
    amp = args.amplitude
    rows = []
    if args.kind == "mo":
        columns = ["t", "r", "theta", "phi", "psi0", "psi1", "psi2", "psi3"]
        for p in _field_grid_points(grid):
            sample = mo_field(mode, p)
            rows.append([p.t, p.r, p.theta, p.phi] + [amp * v for v in sample.psi])
    else:
        potentials = None
        if mode.parity is Parity.ELECTRIC:
            potentials = (electric_potentials_lorentz(mode, args.gauge_amplitude)
                          if args.gauge == "lorentz"
                          else electric_potentials_landau(mode))
        prof = dkp_profiles(mode, potentials)
        columns = ["t", "r", "theta", "phi"] + [f"f{i}" for i in range(1, 11)]
        for p in _field_grid_points(grid):
            fs = [amp * complex(prof[f"f{i}"](p.t, p.r)) for i in range(1, 11)]
            rows.append([p.t, p.r, p.theta, p.phi] + fs)
    _emit_table(args, "field",
                {"j": mode.j, "m": mode.m, "n": mode.n, "parity": mode.parity.value,
                 "kind": args.kind, "amplitude": {"re": amp.real, "im": amp.imag}},
                columns, rows)
    return 0


def cmd_potentials(args) -> int:
    mode = ModeIndex(j=args.j[0], m=args.m, n=args.n[0], parity=Parity.ELECTRIC)
    if args.gauge == "landau":
        pot = electric_potentials_landau(mode)
    elif args.gauge == "lorentz":
        pot = electric_potentials_lorentz(mode, args.gauge_amplitude)
    else:
        omega_g = args.omega_g if args.omega_g is not None else mode.omega
        pot = gradient_solution(mode, omega_g)
    grid = _grid_from_args(args)
    rows = []
    for t in grid.t_nodes():
        tau = conformal_time(t)
        for r in grid.r_nodes():
            rows.append([float(t), float(r)] +
                        [complex(g(tau, r)) for g in (pot.g1, pot.g2, pot.g3)])
    _emit_table(args, "potentials",
                {"j": mode.j, "m": mode.m, "n": mode.n, "gauge": args.gauge,
                 "omega_g": pot.omega_hom},
                ["t", "r", "g1", "g2", "g3"], rows)
    return 0


def _verify_suites_for_mode(args, mode: ModeIndex, grid: GridSpec, tol):
    """Yield (suite_name, [ResidualReport...]) for one mode."""
    def T(key):
        return tol if tol is not None else DEFAULT_TOLERANCES[key]

    suites = []
    want = args.suite
    if want in ("mo", "all"):
        reports = [residual_radial_ode(mode, rel_tolerance=T("radial_ode"))]
        reports += residual_mo_unscaled(mode, grid, tolerance=T("mo_phi"))
        reports += residual_mo_reduced(mode, grid, tolerance=T("mo_reduced"))
        reports += residual_ffg(mode, grid, tolerance=T("ffg"))
        reports.append(residual_wave_G(mode, grid, tolerance=T("wave_g")))
        suites.append(("mo", reports))
    if want in ("dkp", "all"):
        potentials = None
        if mode.parity is Parity.ELECTRIC and args.gauge == "lorentz":
            potentials = electric_potentials_lorentz(mode, args.gauge_amplitude)
        suites.append(("dkp", residual_dkp(mode, grid, potentials=potentials,
                                           tolerance=T("dkp"))))
    if want in ("maxwell", "all"):
        points = grid.sample_interior(args.points, seed=args.seed)
        suites.append(("maxwell", [residual_full_maxwell(
            mode, points, fd_step=grid.fd_step, tolerance=T("maxwell_matrix"))]))
    if want in ("gauge", "all") and mode.parity is Parity.ELECTRIC:
        landau = electric_potentials_landau(mode)
        lorentz = electric_potentials_lorentz(mode, args.gauge_amplitude or 1.0)
        omega_g = args.omega_g if args.omega_g is not None else mode.omega
        grad = gradient_solution(mode, omega_g)
        reports = []
        reports += residual_potential_system(landau, grid, tolerance=T("potential_system"))
        reports += residual_potential_system(lorentz, grid, tolerance=T("potential_system"))
        reports.append(residual_lorentz(lorentz, grid=grid, tolerance=T("lorentz_condition")))
        reports.append(residual_conformal_kfg(
            lambda t, r: lorentz.g_tr(1, t, r), mode, grid, tolerance=T("conformal_kfg")))
        reports += residual_potential_system(grad, grid, tolerance=T("gradient_system"))
        reports.append(residual_lorentz(grad, grid=grid, tolerance=T("lorentz_condition")))
        reports.append(residual_conformal_kfg(
            lambda t, r: grad.g_tr(1, t, r), mode, grid, tolerance=T("conformal_kfg")))
        suites.append(("gauge", reports))
    return suites


def cmd_verify(args) -> int:
    j_lo, j_hi = args.j
    n_lo, n_hi = args.n
    if args.parity == "both":
        parities = (Parity.MAGNETIC, Parity.ELECTRIC)
    else:
        parities = (_parity(args.parity),)
    if args.suite == "gauge" and Parity.ELECTRIC not in parities:
        raise UsageError("gauge suites are defined for electric parity only")
    grid = _grid_from_args(args)
    tol = args.tol

    suite_docs, all_pass = [], True
    for j in range(j_lo, j_hi + 1):
        for n in range(n_lo, n_hi + 1):
            for parity in parities:
                m = max(-j, min(args.m, j))
                mode = ModeIndex(j=j, m=m, n=n, parity=parity)
                for name, reports in _verify_suites_for_mode(args, mode, grid, tol):
                    ok = all(r.passed for r in reports)
                    all_pass = all_pass and ok
                    suite_docs.append({
                        "suite": name,
                        "mode": {"j": j, "m": mode.m, "n": n, "parity": parity.value},
                        "pass": ok,
                        "reports": [r.to_dict() for r in reports],
                    })

    doc = {
        "schema": SCHEMA_VERIFY,
        "version": __version__,
        "config": {
            "suite": args.suite, "j": list(args.j), "n": list(args.n),
            "m": args.m, "parity": args.parity, "tolerance_override": tol,
            "grid": {"t_range": list(grid.t_range), "r_range": list(grid.r_range),
                     "theta_range": list(grid.theta_range), "n_t": grid.n_t,
                     "n_r": grid.n_r, "fd_step": grid.fd_step},
            "points": args.points, "seed": args.seed,
        },
        "conventions": {
            "divergence_condition_g2_coefficient": "2*sqrt(j*(j+1)/2)",
            "radial_coupling": "sqrt(j*(j+1)/2)",
        },
        "suites": suite_docs,
        "all_pass": all_pass,
    }
    text = json.dumps(doc, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all_pass else 1


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsem",
        description="Electromagnetic modes of the expanding de Sitter universe")
    parser.add_argument("--version", action="version", version=f"dsem {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="quantised frequencies omega = n + 1 + j")
    p.add_argument("--j", type=_parse_range, required=True)
    p.add_argument("--n", type=_parse_range, required=True)
    p.add_argument("--unit-scale", type=float, default=1.0,
                   help="multiply omega by c/rho for dimensional output")
    _add_output_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("radial", help="radial factor R(r) and its derivative")
    p.add_argument("--j", type=_parse_range, required=True)
    p.add_argument("--n", type=_parse_range, required=True)
    _add_grid_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_radial)

    p = sub.add_parser("field", help="sample a mode on a coordinate grid")
    p.add_argument("--j", type=_parse_range, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=_parse_range, required=True)
    p.add_argument("--parity", required=True)
    p.add_argument("--kind", choices=("mo", "dkp"), default="mo")
    p.add_argument("--gauge", choices=("landau", "lorentz"), default="landau")
    p.add_argument("--amplitude", type=_parse_complex, default=complex(1.0),
                   help="overall complex multiplier")
    p.add_argument("--gauge-amplitude", type=_parse_complex, default=complex(1.0),
                   help="homogeneous amplitude of the Lorentz-gauge potentials")
    _add_grid_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("potentials", help="gauge potentials of an electric-type mode")
    p.add_argument("--j", type=_parse_range, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=_parse_range, required=True)
    p.add_argument("--gauge", choices=("landau", "lorentz", "gradient"),
                   default="landau")
    p.add_argument("--gauge-amplitude", type=_parse_complex, default=complex(1.0))
    p.add_argument("--omega-g", type=int, default=None,
                   help="gradient frequency (>= j+1), default n+1+j")
    _add_grid_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_potentials)

    p = sub.add_parser("verify", help="run residual suites; exit 0 iff all pass")
    p.add_argument("--suite", choices=("mo", "dkp", "maxwell", "gauge", "all"),
                   default="all")
    p.add_argument("--j", type=_parse_range, default=(1, 2))
    p.add_argument("--n", type=_parse_range, default=(0, 1))
    p.add_argument("--m", type=int, default=0,
                   help="azimuthal index for the 4D operator suite (clamped to [-j, j])")
    p.add_argument("--parity", choices=("both", "magnetic", "electric"),
                   default="both")
    p.add_argument("--tol", type=float, default=None,
                   help="override every suite tolerance")
    p.add_argument("--gauge", choices=("landau", "lorentz"), default="landau")
    p.add_argument("--gauge-amplitude", type=_parse_complex, default=complex(1.0))
    p.add_argument("--omega-g", type=int, default=None)
    p.add_argument("--points", type=int, default=50,
                   help="random 4D points for the matrix-operator suite")
    p.add_argument("--seed", type=int, default=0)
    _add_grid_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (UsageError, InvalidQuantumNumbersError, WrongParityError) as exc:
        print(f"dsem: error: {exc}", file=sys.stderr)
        return 2
    except (SingularPointError, OutOfRangeError, StepExitsDomainError) as exc:
        print(f"dsem: domain error: {exc}", file=sys.stderr)
        return 3
    except DsemError as exc:
        print(f"dsem: domain error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"dsem: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
