"""
verify command: run the acceptance catalogue
"""

import argparse

from cli.common import make_run
from cli.services import AcceptanceSuite
from config import load_acceptance
from schemas import OutputFormat
from utils.writers import render_json, write_text


def verify_command(args: argparse.Namespace) -> int:
    run = make_run(args, OutputFormat.JSON, quick=args.quick)
    suite = AcceptanceSuite(load_acceptance(args.catalogue), workers=run.workers)
    results = suite.run(quick=args.quick)
    passed = all(result.passed for result in results)
    payload = {
        "quick": args.quick,
        "passed": passed,
        "results": [result.model_dump(by_alias=True) for result in results],
    }
    write_text(render_json(payload), run.output_path)
    return 0 if passed else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the verify command"""
    parser = subparsers.add_parser("verify", help="Run the acceptance suite")
    parser.add_argument("--quick", action="store_true", help="Only the sub-minute subset")
    parser.add_argument("--catalogue", default=None, metavar="PATH", help="Alternative acceptance YAML")
    parser.set_defaults(handler=verify_command, subcommand=None)
