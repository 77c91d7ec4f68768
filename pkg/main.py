"""
magnetic-weyl - command-line entry point
Classical dynamics, reduced spectra and Magnetic Weyl asymptotics
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).parent))

import yaml
from loguru import logger
from pydantic import ValidationError

from cli.commands import register_asympt, register_dynamics, register_spectrum, register_verify
from config import IsolatedSettings, reset_settings, use_settings
from schemas import OutputFormat
from utils.errors import SpectralError
from utils.logging import setup_logging

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _fail(code: int, payload: dict) -> int:
    sys.stderr.write(json.dumps({**payload, "code": code}, default=str) + "\n")
    return code


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors also end with the JSON error line"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(EXIT_USAGE, {"error": "usage_error", "message": message}))


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with the global flags and every command group"""
    parser = CliParser(
        prog="magnetic-weyl",
        description="Spectral asymptotics for magnetic fields degenerating on a line",
    )
    parser.add_argument("--log-level", default="WARNING",
                        choices=["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--output", "-o", default=None, metavar="PATH", help="Output file (stdout by default)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="Override the command's output format")
    parser.add_argument("--workers", type=int, default=1, help="Threads for parameter sweeps")
    parser.add_argument("--settings", default=None, metavar="PATH",
                        help="YAML file with numerical settings (defaults otherwise)")

    commands = parser.add_subparsers(dest="command", required=True)
    register_dynamics(commands)
    register_spectrum(commands)
    register_asympt(commands)
    register_verify(commands)
    return parser


def _load_settings(path: Optional[str], workers: int, level: str) -> IsolatedSettings:
    values = {}
    if path:
        with open(path, 'r', encoding='utf-8') as f:
            values = yaml.safe_load(f) or {}
    values.setdefault("asymptotics", {})["workers"] = workers
    values.setdefault("logging", {})["level"] = level
    return IsolatedSettings(**values)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Returns:
        0 ok, 1 verification failure, 2 usage error, 3 domain error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging(args.log_level)
    try:
        use_settings(_load_settings(args.settings, args.workers, args.log_level))
        logger.info(f"🚀 {args.command} {getattr(args, 'subcommand', None) or ''}".rstrip())
        return args.handler(args)
    except ValidationError as e:
        logger.error(f"❌ Invalid parameters: {e.error_count()} error(s)")
        return _fail(EXIT_USAGE, {"error": "invalid_parameters",
                                  "details": json.loads(e.json(include_url=False))})
    except SpectralError as e:
        logger.error(f"❌ {e}")
        return _fail(EXIT_DOMAIN, e.to_dict())
    except (ValueError, OSError) as e:
        logger.error(f"❌ {e}")
        return _fail(EXIT_USAGE, {"error": "usage_error", "message": str(e)})
    finally:
        reset_settings()


if __name__ == "__main__":
    sys.exit(main())
