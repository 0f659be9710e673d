"""Command-line interface.

Every subcommand prints a JSON summary.  With ``--out PREFIX`` it also writes
``PREFIX.csv`` (data) and ``PREFIX.json`` (metadata or report).  The JSON
carries a ``command`` entry that regenerates the same files.

Exit status: 0 on success, 2 on invalid values, 64 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .field import FieldParams, axial_effective_potential
from .grids import (GridSpec, render_density_grid, render_field_contour, write_json,
                    write_matrix_csv, write_rows_csv, _jsonable)
from .ionization import IonizationInputs, ionization_report
from .perturbation import (DEFAULT_N_MAX, HamiltonianSpec, degenerate_block,
                           expansion_coefficients, preferred_state)
from .units import DEFAULT_CONTEXT, eps_from_si

EX_USAGE = 64
EX_INVALID = 2

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--out", metavar="PREFIX", help="write PREFIX.csv and PREFIX.json")
    common.add_argument("--config", metavar="FILE", help="key = value file presetting any flag")

    accel = _Parser(add_help=False)
    g = accel.add_mutually_exclusive_group()
    g.add_argument("--epsilon", type=float, help="dimensionless acceleration a*a0/c^2")
    g.add_argument("--accel-si", type=float, help="acceleration in m/s^2")

    ham = _Parser(add_help=False)
    ham.add_argument("--variant", choices=["gravity", "comoving"], default="gravity")
    ham.add_argument("--mode", choices=["effective", "full"], default="effective")
    ham.add_argument("--dz-sign", choices=["printed", "cancelling"], default="printed")

    gridp = _Parser(add_help=False)
    gridp.add_argument("--window", type=float, help="half-width of the square window in a0")
    gridp.add_argument("--resolution", type=_positive_int, default=256)

    parser = _Parser(prog="rindler-atom", description="Hydrogen atom in a uniformly accelerated frame")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    sub.add_parser("constants", parents=[common], help="dump physical constants")
    p = sub.add_parser("field-contour", parents=[common, accel, gridp], help="A_t on the x-z plane")
    p.add_argument("--q", type=float, default=1.0, help="source charge in proton charges")
    sub.add_parser("potential-profile", parents=[common, accel, gridp], help="on-axis effective potential")
    p = sub.add_parser("ground-state", parents=[common, accel, ham, gridp], help="ground-state density grid")
    p.add_argument("--n-max", type=_positive_int, default=DEFAULT_N_MAX)
    p.add_argument("--allow-nonperturbative", action="store_true")
    p = sub.add_parser("excited-state", parents=[common, accel, ham, gridp], help="n=2 mixed-state density grid")
    p.add_argument("--state", choices=["plus", "minus"], help="defaults to the lower-energy state")
    p = sub.add_parser("coefficients", parents=[common, accel, ham], help="ground-state expansion coefficients")
    p.add_argument("--n-max", type=_positive_int, default=DEFAULT_N_MAX)
    p.add_argument("--allow-nonperturbative", action="store_true")
    sub.add_parser("splitting", parents=[common, accel, ham], help="n=2 degenerate block and splitting")
    p = sub.add_parser("ionization", parents=[common], help="tunneling estimate and critical acceleration")
    p.add_argument("--accel-si", type=float, help="acceleration in m/s^2 (default: critical)")
    p.add_argument("--v0", type=float, default=IonizationInputs().v0_eV, help="binding energy in eV")
    p.add_argument("--w", type=float, default=IonizationInputs().w_a0, help="well half-width in a0")
    return parser


def _subparsers(parser):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices
    return {}


def _read_config(path) -> dict:
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(sub: argparse.ArgumentParser, cfg: dict):
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, value in cfg.items():
        if key not in actions or key in ("out", "config", "help"):
            raise ValueError(f"config key {key!r} is not an option of this command")
        action = actions[key]
        if isinstance(action, argparse._StoreTrueAction):
            defaults[key] = value.lower() in ("1", "true", "yes", "on")
        else:
            defaults[key] = action.type(value) if action.type else value
            if action.choices is not None and defaults[key] not in action.choices:
                raise ValueError(f"config {key} = {value!r}: choose from {list(action.choices)}")
    sub.set_defaults(**defaults)


def _canonical_command(sub: argparse.ArgumentParser, args) -> list[str]:
    cmd = [args.command]
    for action in sub._actions:
        dest = action.dest
        if dest in ("help", "out", "config") or not action.option_strings:
            continue
        value = getattr(args, dest, None)
        if value is None:
            continue
        flag = action.option_strings[-1]
        if isinstance(action, argparse._StoreTrueAction):
            if value:
                cmd.append(flag)
        else:
            cmd += [flag, repr(value) if isinstance(value, float) else str(value)]
    return cmd


def _epsilon(args) -> float:
    if getattr(args, "accel_si", None) is not None:
        return eps_from_si(args.accel_si, DEFAULT_CONTEXT).epsilon
    return args.epsilon if getattr(args, "epsilon", None) is not None else 0.0


def _spec(args) -> HamiltonianSpec:
    return HamiltonianSpec(args.variant, args.mode, args.dz_sign)


def _run(args) -> tuple[dict, object]:
    """Return (json report, csv writer callable or None)."""
    ctx = DEFAULT_CONTEXT
    name = args.command
    if name == "constants":
        consts = ctx.as_dict()
        return consts, lambda p: write_rows_csv(p, ["key", "value"], sorted(consts.items()))

    if name == "ionization":
        report = ionization_report(args.accel_si, IonizationInputs(args.v0, args.w), ctx).as_dict()
        return report, lambda p: write_rows_csv(p, ["key", "value"], sorted(report.items()))

    eps = _epsilon(args)
    if name == "field-contour":
        grid = render_field_contour(FieldParams(eps, args.q), GridSpec(args.window or 2.0, args.resolution))
        return grid.sidecar(), lambda p: write_matrix_csv(p, grid.values)

    if name == "potential-profile":
        window = (-args.window, args.window) if args.window else None
        prof = axial_effective_potential(eps, ctx, window, args.resolution)
        rows = list(zip(prof.z_samples.tolist(), prof.v_samples.tolist()))
        report = {**prof.sidecar(), "rest_energy_eV": prof.rest_energy_eV,
                  "ground_state_eV": -ctx.hartree_eV / 2, "checks": prof.checks}
        return report, lambda p: write_rows_csv(p, ["z_a0", "V_eV"], rows)

    spec = _spec(args)
    if name == "ground-state":
        grid = render_density_grid("ground", spec, eps, GridSpec(args.window or 4.0, args.resolution),
                                   args.n_max, args.allow_nonperturbative, ctx)
        cx, cz = grid.centroid()
        report = {**grid.sidecar(), "centroid_a0": [cx, cz]}
        return report, lambda p: write_matrix_csv(p, grid.values)

    if name == "excited-state":
        label = args.state or preferred_state(spec.variant)
        grid = render_density_grid(f"excited-{label}", spec, eps,
                                   GridSpec(args.window or 8.0, args.resolution), ctx=ctx)
        cx, cz = grid.centroid()
        report = {**grid.sidecar(), "centroid_a0": [cx, cz]}
        return report, lambda p: write_matrix_csv(p, grid.values)

    if name == "coefficients":
        exp = expansion_coefficients(spec, args.n_max, ctx).with_epsilon(eps, args.allow_nonperturbative)
        report = exp.to_json_dict()
        return report, lambda p: write_rows_csv(p, ["n", "coefficient"], exp.to_json_dict()["coefficients"])

    if name == "splitting":
        block = degenerate_block(spec, 2, ctx)
        report = block.to_json_dict(ctx)
        report["epsilon"] = eps
        report["energies_eV"] = block.energies(eps, ctx)
        return report, lambda p: write_matrix_csv(p, block.matrix)

    raise UsageError(f"unknown command {name!r}")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        sub = _subparsers(parser)[args.command]
        if args.config:
            # config values become defaults, so explicit flags still win
            _apply_config(sub, _read_config(args.config))
            args = parser.parse_args(argv)
        command = _canonical_command(sub, args)
        report, write_csv = _run(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INVALID

    report = {**report, "command": command}
    if args.out:
        write_json(f"{args.out}.json", report)
        if write_csv is not None:
            write_csv(f"{args.out}.csv")
    summary = {k: v for k, v in report.items() if k not in ("x_a0", "z_a0", "matrix_eV_per_eps")}
    print(json.dumps(_jsonable(summary), indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
