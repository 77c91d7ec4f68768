"""
asympt commands: correction terms, sawtooth functions, scaling and counting
"""

import argparse
import math

import numpy as np
from scipy.integrate import quad

from cli.common import (
    add_model_args,
    emit_document,
    emit_table,
    float_list,
    make_run,
    positive_float,
)
from dynamics import find_kstar
from schemas import FieldParams, ModelSymbol, OutputFormat, Parity, PotentialProfile, ScalingRow
from asymptotics import (
    corr_exact,
    counting_density,
    emw0_strip_integral,
    fit_kappa1,
    sawtooth_G,
    sawtooth_G1,
    scaling_experiment,
)
from utils.writers import render_json, write_text


def _field(args: argparse.Namespace, hbar: float) -> FieldParams:
    return FieldParams.from_hbar(args.nu, Parity(args.parity), hbar, args.gamma_bar)


def _extrapolate(args: argparse.Namespace):
    return False if args.no_extrapolate else None


def correction_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity, hbar=args.hbar,
                   gamma_bar=args.gamma_bar, W=args.w)
    fp = _field(args, args.hbar)
    report = corr_exact(fp, args.w, kappa1=args.kappa1, extrapolate=_extrapolate(args))
    if args.fit_kappa1 and args.w > 0:
        crit = find_kstar(ModelSymbol(nu=args.nu, parity=Parity(args.parity)))
        kappa1 = fit_kappa1(fp, args.w, crit, report.corr_exact)
        report = corr_exact(fp, args.w, crit=crit, kappa1=kappa1, extrapolate=_extrapolate(args))
    emit_document(run, report.model_dump(mode="json"))
    return 0


def gfun_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.CSV, n=args.n, t_min=args.t_min, t_max=args.t_max)
    t_values = np.linspace(args.t_min, args.t_max, args.n)
    emit_table(run, ["t", "G", "G1"], [(t, sawtooth_G(float(t)), sawtooth_G1(float(t))) for t in t_values])
    return 0


def scaling_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.CSV, nu=args.nu, parity=args.parity, hbar_list=args.hbar_list,
                   gamma_bar=args.gamma_bar, W=args.w)
    table = scaling_experiment(args.nu, Parity(args.parity), args.hbar_list, args.gamma_bar, W=args.w,
                               kappa1=args.kappa1, calibrate=not args.no_calibrate,
                               extrapolate=_extrapolate(args), workers=run.workers)
    if run.format is OutputFormat.JSON:
        write_text(render_json(table.model_dump(mode="json")), run.output_path)
        return 0
    columns = list(ScalingRow.model_fields)
    emit_table(run, columns, [[getattr(row, name) for name in columns] for row in table.rows])
    return 0


def counting_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, nu=args.nu, parity=args.parity, hbar=args.hbar,
                   gamma_bar=args.gamma_bar, W=args.w, amplitude=args.amplitude)
    fp = _field(args, args.hbar)
    if len(args.support) != 2:
        raise ValueError(f"--support needs two numbers, got {args.support}")
    support = tuple(args.support)
    if args.amplitude == 0.0:
        prof = PotentialProfile.constant(args.w, support=support)
    else:
        base, amplitude = args.w, args.amplitude
        prof = PotentialProfile(W=lambda x2: base + amplitude * math.sin(x2), support=support)

    value = counting_density(fp, prof, extrapolate=_extrapolate(args))
    emw0, _ = quad(lambda x2: prof.psi(x2) * emw0_strip_integral(fp, prof, x2), *support, limit=200)
    emit_document(run, {"nu": args.nu, "parity": args.parity, "hbar": fp.hbar, "mu": fp.mu, "h": fp.h,
                        "W": args.w, "amplitude": args.amplitude, "support": list(support),
                        "counting_density": value, "emw0_density": emw0, "difference": value - emw0})
    return 0


def _field_args(parser: argparse.ArgumentParser) -> None:
    add_model_args(parser, integer_nu=True)
    parser.add_argument("--gamma-bar", type=positive_float, required=True, help="Inner-zone width")
    parser.add_argument("--w", type=float, default=1.0, help="Potential value W (default 1)")
    parser.add_argument("--no-extrapolate", action="store_true", help="Skip Richardson in the grid step")


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the asympt command group"""
    parser = subparsers.add_parser("asympt", help="Magnetic Weyl asymptotics and the correction term")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    correction = commands.add_parser("correction", help="Exact and leading correction terms")
    _field_args(correction)
    correction.add_argument("--hbar", type=positive_float, required=True)
    correction.add_argument("--kappa1", type=float, default=None)
    correction.add_argument("--fit-kappa1", action="store_true", help="Fit kappa1 to this corr_exact")
    correction.set_defaults(handler=correction_command)

    gfun = commands.add_parser("gfun", help="Sample the sawtooth functions G and G1")
    gfun.add_argument("--n", type=int, default=201)
    gfun.add_argument("--t-min", type=float, default=0.0)
    gfun.add_argument("--t-max", type=float, default=1.0)
    gfun.set_defaults(handler=gfun_command)

    scaling = commands.add_parser("scaling", help="Correction terms over a list of hbar")
    _field_args(scaling)
    scaling.add_argument("--hbar-list", type=float_list, required=True)
    scaling.add_argument("--kappa1", type=float, default=None)
    scaling.add_argument("--no-calibrate", action="store_true", help="Do not fit kappa1")
    scaling.set_defaults(handler=scaling_command)

    counting = commands.add_parser("counting", help="Counting density against Magnetic Weyl")
    _field_args(counting)
    counting.add_argument("--hbar", type=positive_float, required=True)
    counting.add_argument("--amplitude", type=float, default=0.0, help="W(x2) = w + amplitude sin(x2)")
    counting.add_argument("--support", type=float_list, default=[-1.0, 1.0], help="Support of psi, 'a,b'")
    counting.set_defaults(handler=counting_command)
