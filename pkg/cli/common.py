"""
Shared CLI plumbing: argument types, run configuration and output
"""

import argparse
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from schemas import ModelSymbol, OutputFormat, Parity, RunConfig
from utils.writers import render_csv, render_json, write_text


def float_list(text: str) -> List[float]:
    """Comma-separated floats, e.g. '0.2,0.1,0.05'"""
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def grid_size(text: str) -> int:
    """Integer number of grid points, at least 2"""
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"expected at least 2 points, got {text!r}")
    return value


def add_model_args(parser: argparse.ArgumentParser, integer_nu: bool = False) -> None:
    """--nu and --parity"""
    parser.add_argument("--nu", type=int if integer_nu else float, required=True,
                        help="Degeneration exponent (>= 2)")
    parser.add_argument("--parity", choices=[p.value for p in Parity], default=Parity.EVEN.value,
                        help="Even or odd model (default: even)")


def model_from(args: argparse.Namespace) -> ModelSymbol:
    return ModelSymbol(nu=args.nu, parity=Parity(args.parity))


def make_run(args: argparse.Namespace, default_format: OutputFormat, **params: Any) -> RunConfig:
    """RunConfig of the current invocation; --format falls back to the command's own format"""
    fmt = OutputFormat(args.format) if getattr(args, "format", None) else default_format
    run = RunConfig(command=args.command, subcommand=getattr(args, "subcommand", None),
                    output_path=getattr(args, "output", None), format=fmt,
                    workers=getattr(args, "workers", 1), params=params)
    logger.debug(f"Run: {run.model_dump()}")
    return run


def emit_table(run: RunConfig, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    """Write a table as CSV, or as JSON records when --format json"""
    if run.format is OutputFormat.JSON:
        records = [dict(zip(header, row)) for row in rows]
        write_text(render_json({"command": f"{run.command} {run.subcommand}", "rows": records}),
                   run.output_path)
    else:
        write_text(render_csv(header, rows), run.output_path)


def emit_document(run: RunConfig, payload: Dict[str, Any]) -> None:
    """Write a JSON document, or key,value CSV when --format csv"""
    if run.format is OutputFormat.CSV:
        rows = [(key, value) for key, value in payload.items() if not isinstance(value, (list, dict))]
        write_text(render_csv(["key", "value"], rows), run.output_path)
    else:
        write_text(render_json(payload), run.output_path)


def optional(value: Optional[float]) -> Optional[float]:
    return None if value is None else float(value)


SpectrumRow = Tuple[int, Optional[float], Optional[float], Optional[float]]


def pair_spectra(fd: Sequence[float], bs: Sequence[float], lo: float, hi: float) -> List[SpectrumRow]:
    """
    Match Bohr-Sommerfeld values to the nearest unused finite-difference value.

    fd may extend past [lo, hi) so that levels near the window edges still
    find their partner; unmatched FD values inside the window get their own row.

    Returns:
        Rows (n, lambda_fd, lambda_bs, delta) ordered by value
    """
    used = set()
    pairs = []
    for value in sorted(bs):
        free = [i for i in range(len(fd)) if i not in used]
        if not free:
            pairs.append((None, value))
            continue
        best = min(free, key=lambda i: abs(fd[i] - value))
        used.add(best)
        pairs.append((fd[best], value))
    pairs.extend((fd[i], None) for i in range(len(fd)) if i not in used and lo <= fd[i] < hi)
    pairs.sort(key=lambda p: p[1] if p[1] is not None else p[0])

    rows: List[SpectrumRow] = []
    for n, (a, b) in enumerate(pairs):
        delta = a - b if a is not None and b is not None else None
        rows.append((n, a, b, delta))
    return rows
