"""
spectrum commands: eigenvalues, counting, eigenvalue curves and spacings
"""

import argparse
from typing import List

import numpy as np

from cli.common import (
    add_model_args,
    emit_document,
    emit_table,
    float_list,
    make_run,
    model_from,
    pair_spectra,
    positive_float,
)
from dynamics import find_kstar
from schemas import OutputFormat, Parity, ReducedSymbol
from spectrum1d import (
    bohr_sommerfeld,
    build_operator,
    eigenvalues_in,
    eigenvalues_richardson,
    gap_stats,
    lambda_curve,
    level_near,
    locate_kstar_hbar,
    n0,
)


def _symbol(args: argparse.Namespace, xi2: float = 0.0) -> ReducedSymbol:
    return ReducedSymbol(model=model_from(args), xi2=xi2, hbar=args.hbar, W=args.w)


def eigs_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.CSV, nu=args.nu, parity=args.parity, xi2=args.xi2,
                   hbar=args.hbar, W=args.w, lo=args.lo, hi=args.hi, method=args.method)
    sym = _symbol(args, args.xi2)
    pad = 0.5 * (args.hi - args.lo)
    fd: List[float] = []
    bs: List[float] = []
    if args.method in ("fd", "both"):
        lo, hi = (args.lo - pad, args.hi + pad) if args.method == "both" else (args.lo, args.hi)
        if args.richardson:
            fd = eigenvalues_richardson(sym, lo, hi).values
        else:
            fd = eigenvalues_in(build_operator(sym, hi), lo, hi).values
    if args.method in ("bs", "both"):
        bs = bohr_sommerfeld(sym, args.lo, args.hi).values
    emit_table(run, ["n", "lambda_fd", "lambda_bs", "delta"], pair_spectra(fd, bs, args.lo, args.hi))
    return 0


def n0_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity, xi2=args.xi2, hbar=args.hbar)
    result = n0(_symbol(args, args.xi2))
    emit_document(run, {"nu": args.nu, "parity": args.parity, **result.model_dump()})
    return 0


def curves_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.CSV, nu=args.nu, parity=args.parity, hbar=args.hbar,
                   levels=args.levels, parity_class=args.parity_class)
    grid = np.linspace(args.xi2_min, args.xi2_max, args.n_points)
    classes = [None] if args.parity_class == "all" else [Parity(args.parity_class)]
    rows = []
    for cls in classes:
        for level in range(args.levels):
            curve = lambda_curve(_symbol(args), grid, level, parity=cls, window_top=args.window_top,
                                 workers=run.workers)
            d1 = [None, *curve.d1, None]
            d2 = [None, *curve.d2, None]
            for i, (k, value) in enumerate(zip(curve.xi2, curve.values)):
                rows.append((k, level, curve.parity or "", value, d1[i], d2[i]))
    emit_table(run, ["xi2", "n", "parity", "lambda", "d1", "d2"], rows)
    return 0


def kstar_hbar_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity, hbar=args.hbar, n=args.n)
    kstar = find_kstar(model_from(args)).kstar
    bounds = (kstar - args.radius, kstar + args.radius)
    cls = None if args.parity_class == "all" else Parity(args.parity_class)
    n = level_near(_symbol(args, kstar), parity=cls) if args.n is None else args.n
    located = locate_kstar_hbar(_symbol(args), n, bounds, parity=cls)
    emit_document(run, {"nu": args.nu, "parity": args.parity, "hbar": args.hbar, "n": n,
                        "kstar": kstar, "kstar_hbar": located, "shift": located - kstar})
    return 0


def gaps_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity, xi2=args.xi2,
                   hbar_list=args.hbar_list)
    template = ReducedSymbol(model=model_from(args), xi2=0.0, hbar=args.hbar_list[0], W=args.w)
    report = gap_stats(template, args.xi2, args.hbar_list, level_width=args.level_width,
                       bottom_levels=args.bottom_levels, z_values=args.z_list)
    emit_document(run, {"nu": args.nu, "parity": args.parity, "hbar_list": args.hbar_list,
                        **report.model_dump(mode="json")})
    return 0


def _reduced_args(parser: argparse.ArgumentParser, hbar: bool = True) -> None:
    add_model_args(parser, integer_nu=True)
    if hbar:
        parser.add_argument("--hbar", type=positive_float, required=True)
    parser.add_argument("--w", type=float, default=1.0, help="Potential value W (default 1)")


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the spectrum command group"""
    parser = subparsers.add_parser("spectrum", help="Spectrum of the reduced 1D operator")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    eigs = commands.add_parser("eigs", help="Finite-difference and Bohr-Sommerfeld eigenvalues")
    _reduced_args(eigs)
    eigs.add_argument("--xi2", type=float, required=True)
    eigs.add_argument("--lo", type=float, default=-0.2)
    eigs.add_argument("--hi", type=float, default=0.2)
    eigs.add_argument("--method", choices=["both", "fd", "bs"], default="both")
    eigs.add_argument("--richardson", action="store_true", help="Extrapolate FD values in the grid step")
    eigs.set_defaults(handler=eigs_command)

    count = commands.add_parser("n0", help="Negative eigenvalues and their Weyl approximation")
    _reduced_args(count)
    count.add_argument("--xi2", type=float, required=True)
    count.set_defaults(handler=n0_command)

    curves = commands.add_parser("curves", help="Eigenvalue curves lambda_n(xi2)")
    _reduced_args(curves)
    curves.add_argument("--xi2-min", type=float, required=True)
    curves.add_argument("--xi2-max", type=float, required=True)
    curves.add_argument("--n-points", type=int, default=21)
    curves.add_argument("--levels", type=int, default=3, help="Eigenvalue indices 0..levels-1")
    curves.add_argument("--parity-class", choices=["all", "even", "odd"], default="all")
    curves.add_argument("--window-top", type=float, default=None)
    curves.set_defaults(handler=curves_command)

    locate = commands.add_parser("kstar-hbar", help="Stationary point of lambda_n(xi2) near k*")
    _reduced_args(locate)
    locate.add_argument("--n", type=int, default=None, help="Eigenvalue index (default: the level closest to 0 at k*)")
    locate.add_argument("--radius", type=positive_float, default=0.4)
    locate.add_argument("--parity-class", choices=["all", "even", "odd"], default="all")
    locate.set_defaults(handler=kstar_hbar_command)

    gaps = commands.add_parser("gaps", help="Spacing statistics and power laws")
    _reduced_args(gaps, hbar=False)
    gaps.add_argument("--xi2", type=float_list, default=[0.0], help="Momenta, comma-separated")
    gaps.add_argument("--hbar-list", type=float_list, required=True)
    gaps.add_argument("--level-width", type=positive_float, default=0.1)
    gaps.add_argument("--bottom-levels", type=int, default=4)
    gaps.add_argument("--z-list", type=float_list, default=None, help="Momenta of the W = 0 scaling ratios")
    gaps.set_defaults(handler=gaps_command)
