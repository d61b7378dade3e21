"""Command-line front end: figure data as CSV/JSON, plus quick self-checks.

Exit codes: 0 ok, 2 bad flags, 3 physically inadmissible input, 4 index
out of range. Output paths that are relative are resolved against
$DIRACGUIDE_OUTPUT_DIR when it is set.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .classical import RegimeTag, regime_grid, trace_ray
from .errors import LevelOutOfRange, RegimeError
from .model import QuantumNumbers, WellConfig, WellKind
from .qbound import (
    find_bound_states,
    join_resonance_bound_plot_data,
    level_order,
    sample_wavefunction,
    spectral_curves,
    to_arrays,
)
from .qscatter import transmission_vs_angle, transmission_vs_energy

UNITS_NOTE = "hbar = v_F = 1; lengths in well half-widths; E, k, v0, a0 in inverse half-widths"
OUTPUT_DIR_ENV = "DIRACGUIDE_OUTPUT_DIR"


class UsageError(Exception):
    pass


def _fmt(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _jsonable(value):
    if isinstance(value, (np.floating, float)):
        v = float(value)
        return v if math.isfinite(v) else None
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


def write_table(args, columns, rows, meta=None):
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    else:
        flags = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "output")}
        envelope = {
            "command": args.command,
            "version": __version__,
            "units": UNITS_NOTE,
            "flags": flags,
            "metadata": meta or {},
            "columns": columns,
            "rows": [[_jsonable(v) for v in row] for row in rows],
        }
        text = json.dumps(envelope, indent=1, sort_keys=True) + "\n"
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return
    path = args.output
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _grid(spec, name):
    lo, hi, n = spec
    n = int(n)
    if n < 1:
        raise UsageError(f"{name} grid is empty")
    if n > 1 and not hi > lo:
        raise UsageError(f"{name} grid needs max > min")
    return np.linspace(lo, hi, n)


def _strength(args):
    value = args.v0 if args.kind == "electric" else args.a0
    if value is None:
        raise UsageError(f"--{'v0' if args.kind == 'electric' else 'a0'} is required for a {args.kind} well")
    return value


def _well(args):
    return WellConfig(WellKind(args.kind), _strength(args), args.half_width)


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required")
    return value


# --------------------------------------------------------------------------


def cmd_classical_regions(args):
    strength_name = "v0" if args.kind == "electric" else "a0"
    if args.plane == "E-k":
        fixed = ("strength", _strength(args))
        pname = "k"
    else:
        if args.plane != f"E-{strength_name}":
            raise UsageError(f"plane must be E-k or E-{strength_name} for a {args.kind} well")
        fixed = ("k", _need(args, "k"))
        pname = strength_name
    E = _grid(args.e_grid, "E")
    P = _grid(args.p_grid, pname)
    tags = regime_grid(args.kind, fixed, E, P)
    rows = []
    for i, e in enumerate(E):
        for j, p in enumerate(P):
            tag = tags[i, j]
            rows.append((e, p, "boundary" if tag is None else tag.value, tag is RegimeTag.BOUND))
    write_table(args, ["E", pname, "regime", "bound"], rows, {"fixed": list(fixed)})


def cmd_trajectory(args):
    well = _well(args)
    qn = QuantumNumbers(_need(args, "E"), _need(args, "k"))
    start = args.start
    if start is None:
        from .classical import classify

        inside = classify(qn, well).tag is RegimeTag.BOUND
        start = (0.0, 0.0) if inside else (-2.0 * well.half_width, 0.0)
    path = trace_ray(qn, well, start, args.max_length, args.direction)
    labels = path.segment_regimes + path.segment_regimes[-1:]
    rows = [(x, y, r) for (x, y), r in zip(path.vertices, labels)]
    write_table(args, ["x", "y", "region"], rows, {"terminated": path.terminated.value})


def cmd_transmission(args):
    well = _well(args)
    k = _need(args, "k")
    if args.sweep == "alpha":
        grid = _grid(args.grid or (0.01, math.pi / 2, 400), "alpha")
        curve = transmission_vs_angle(k, well, grid)
    else:
        grid = _grid(args.grid or (abs(k) + 1e-3, abs(k) + 10, 1000), "E")
        curve = transmission_vs_energy(k, well, grid)
    rows = []
    for a, e, T, R, P in zip(curve.alpha, curve.energy, curve.T, curve.R, curve.probability):
        if np.isnan(T):
            continue
        allowed = curve.classical_limit is None or abs(math.sin(a)) <= abs(curve.classical_limit)
        rows.append((a, e, T, R, P, allowed))
    meta = {"classical_limit_sin_alpha": curve.classical_limit}
    write_table(args, ["alpha", "E", "T", "R", "unitarity", "classically_transmitted"], rows, meta)


def cmd_bound_spectrum(args):
    kind = WellKind(args.kind)
    strength = _strength(args)
    if args.join_resonances:
        grid = _grid(args.grid or (-8.0, 8.0, 161), "k")
        data = join_resonance_bound_plot_data(
            kind, strength, grid, args.n_max, args.half_width, args.grid_points, args.jobs
        )
        rows = []
        for c in data.bound:
            for p, e, ch in zip(c.parameter, c.energy, c.characters):
                rows.append(("bound", c.branch_id, ch.value, p, e))
        for i, r in enumerate(data.resonances):
            for kv, e in zip(r.k, r.energy):
                if not np.isnan(e):
                    rows.append(("resonance", i, f"n={r.n}", kv, e))
        write_table(args, ["curve", "branch", "character", "k", "E"], rows)
        return
    if args.curves:
        fixed = strength if args.curves == "k" else _need(args, "k")
        default = (-8.0, 8.0, 161) if args.curves == "k" else (0.0, 10.0, 201)
        grid = _grid(args.grid or default, args.curves)
        curves = spectral_curves(args.curves, fixed, grid, kind, args.half_width, args.grid_points, args.jobs)
        rows = [
            (c.branch_id, c.character.value, p, e, ch.value)
            for c in curves
            for p, e, ch in zip(c.parameter, c.energy, c.characters)
        ]
        write_table(args, ["branch", "branch_character", args.curves, "E", "character"], rows)
        return
    k = _need(args, "k")
    states = level_order(find_bound_states(k, _well(args), grid_points=args.grid_points))
    rows = [
        (i, s.energy, s.character.value, s.exterior_decay, s.interior.value, s.interior.character.value)
        for i, s in enumerate(states)
    ]
    write_table(args, ["level", "E", "character", "exterior_decay", "interior_momentum", "interior"], rows)


def cmd_wavefunction(args):
    k = _need(args, "k")
    states = level_order(find_bound_states(k, _well(args), grid_points=args.grid_points))
    if not 0 <= args.level < len(states):
        raise LevelOutOfRange(f"level {args.level} out of range: {len(states)} bound states")
    state = states[args.level]
    h = args.half_width
    grid = _grid(args.x_grid or (-3 * h, 3 * h, 601), "x")
    x, p1, p2 = to_arrays(sample_wavefunction(state, grid))
    rows = list(zip(x, p1.real, p1.imag, p2.real, p2.imag))
    meta = {"E": state.energy, "character": state.character.value}
    write_table(args, ["x", "re_psi1", "im_psi1", "re_psi2", "im_psi2"], rows, meta)


def cmd_verify(args):
    from .checks import run_checks

    results = run_checks()
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  {detail}")
    if not all(ok for _, ok, _ in results):
        raise SystemExit(1)


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diracguide", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, physics=True):
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if physics:
            p.add_argument("--kind", choices=("electric", "magnetic"), required=True)
            p.add_argument("--v0", type=float, help="electric well depth")
            p.add_argument("--a0", type=float, help="magnetic well strength")
            p.add_argument("--half-width", type=float, default=1.0)
            p.add_argument("--k", type=float, help="conserved y-momentum")

    grid3 = dict(nargs=3, type=float, metavar=("MIN", "MAX", "N"))

    p = sub.add_parser("classical-regions", help="classical regime map over an energy-parameter plane")
    common(p)
    p.add_argument("--plane", required=True, help="E-k, E-v0 or E-a0")
    p.add_argument("--e-grid", default=(-4.0, 4.0, 161), **grid3)
    p.add_argument("--p-grid", default=(-4.0, 4.0, 161), **grid3)
    p.set_defaults(func=cmd_classical_regions)

    p = sub.add_parser("trajectory", help="classical ray polyline")
    common(p)
    p.add_argument("--E", type=float)
    p.add_argument("--start", nargs=2, type=float, metavar=("X", "Y"))
    p.add_argument("--direction", type=int, choices=(-1, 1), default=1)
    p.add_argument("--max-length", type=float, default=20.0)
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("transmission", help="T, R and unitarity against alpha or E")
    common(p)
    p.add_argument("--sweep", choices=("alpha", "E"), default="alpha")
    p.add_argument("--grid", **grid3)
    p.set_defaults(func=cmd_transmission)

    p = sub.add_parser("bound-spectrum", help="bound energies, spectral curves, resonance join")
    common(p)
    p.add_argument("--curves", choices=("k", "strength"))
    p.add_argument("--join-resonances", action="store_true")
    p.add_argument("--grid", **grid3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--grid-points", type=int, default=2000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bound_spectrum)

    p = sub.add_parser("wavefunction", help="normalised bound spinor on an x grid")
    common(p)
    p.add_argument("--level", type=int, default=0, help="0 = ground; same index as bound-spectrum")
    p.add_argument("--x-grid", **grid3)
    p.add_argument("--grid-points", type=int, default=2000)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("verify", help="run the built-in physics checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, LevelOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4 if isinstance(exc, LevelOutOfRange) else 2
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
