"""
dynamics commands: orbit tables, the periodic orbit and trajectories
"""

import argparse

import numpy as np
from loguru import logger

from cli.common import (
    add_model_args,
    emit_document,
    emit_table,
    grid_size,
    make_run,
    model_from,
    positive_float,
)
from config import get_settings
from dynamics import find_kstar, integrate_trajectory, orbit_start, orbit_table, period
from schemas import OutputFormat
from utils.writers import render_svg, write_text


def _momentum(text: str):
    """A float, or 'kstar' for the periodic orbit"""
    if text == "kstar":
        return text
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number or 'kstar', got {text!r}") from exc


def orbit_table_command(args: argparse.Namespace) -> int:
    sym = model_from(args)
    k_values = np.linspace(args.k_min, args.k_max, args.n) if args.k is None else args.k
    run = make_run(args, OutputFormat.CSV, nu=args.nu, parity=args.parity, n=len(k_values))
    rows = orbit_table(sym, [float(k) for k in k_values], workers=run.workers)
    emit_table(run, ["k", "b1", "b2", "T", "I", "v"],
               [(o.k, o.b1, o.b2, o.T, o.I, o.v) for o in rows])
    return 0


def kstar_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity)
    crit = find_kstar(model_from(args))
    emit_document(run, {"nu": args.nu, "parity": args.parity, **crit.model_dump()})
    return 0


def trajectory_command(args: argparse.Namespace) -> int:
    sym = model_from(args)
    k = find_kstar(sym).kstar if args.k == "kstar" else args.k
    run = make_run(args, OutputFormat.CSV, nu=args.nu, parity=args.parity, k=k, periods=args.periods)
    T = period(sym, k)
    steps = args.steps_per_period or get_settings().integrator.steps_per_period
    traj = integrate_trajectory(sym, orbit_start(sym, k), args.periods * T, T / steps, scheme=args.scheme)
    logger.info(f"✅ Trajectory k={k:.10g}: {len(traj.t)} samples, energy drift {traj.energy_drift:.2e}")

    if args.svg:
        write_text(render_svg(traj.x1, traj.x2), args.svg)
    if run.format is OutputFormat.SVG:
        write_text(render_svg(traj.x1, traj.x2), run.output_path)
        return 0

    index = np.arange(0, len(traj.t), args.stride)
    if index[-1] != len(traj.t) - 1:
        index = np.append(index, len(traj.t) - 1)
    emit_table(run, ["t", "x1", "x2", "xi1", "xi2", "energy"],
               [(traj.t[i], *traj.points[i], traj.energies[i]) for i in index])
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the dynamics command group"""
    parser = subparsers.add_parser("dynamics", help="Classical orbits of the pilot model")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    table = commands.add_parser("orbit-table", help="Turning points, period, drift over a k grid")
    add_model_args(table)
    table.add_argument("--k-min", type=float, default=-0.9)
    table.add_argument("--k-max", type=float, default=0.9)
    table.add_argument("--n", type=grid_size, default=19, help="Grid size between --k-min and --k-max")
    table.add_argument("--k", type=float, nargs="+", default=None, help="Explicit momenta (overrides the grid)")
    table.set_defaults(handler=orbit_table_command)

    kstar = commands.add_parser("kstar", help="Periodic orbit and its constants")
    add_model_args(kstar)
    kstar.set_defaults(handler=kstar_command)

    traj = commands.add_parser("trajectory", help="Integrate the Hamiltonian flow")
    add_model_args(traj)
    traj.add_argument("--k", type=_momentum, required=True, help="Conserved xi2, or 'kstar'")
    traj.add_argument("--periods", type=positive_float, default=3.0)
    traj.add_argument("--steps-per-period", type=int, default=None)
    traj.add_argument("--scheme", choices=["yoshida4", "verlet"], default=None)
    traj.add_argument("--stride", type=int, default=1, help="Write every stride-th sample")
    traj.add_argument("--svg", default=None, metavar="PATH", help="Also draw (x1, x2) to an SVG file")
    traj.set_defaults(handler=trajectory_command)
