"""
Shared fixtures: isolated settings per test and a CLI runner
"""

import json

import pytest
from loguru import logger

from config import IsolatedSettings, reset_settings, use_settings
from dynamics import find_kstar
from main import main
from schemas import ModelSymbol, Parity


@pytest.fixture(autouse=True)
def isolated_settings():
    """Every test starts from default settings, whatever the environment holds"""
    settings = use_settings(IsolatedSettings())
    yield settings
    reset_settings()


@pytest.fixture
def quadratic() -> ModelSymbol:
    return ModelSymbol(nu=2, parity=Parity.EVEN)


@pytest.fixture
def cubic_odd() -> ModelSymbol:
    return ModelSymbol(nu=3, parity=Parity.ODD)


@pytest.fixture
def quadratic_crit(quadratic):
    return find_kstar(quadratic)


class CliResult:
    def __init__(self, code: int, out: str, err: str):
        self.code = code
        self.out = out
        self.err = err

    def json(self) -> dict:
        return json.loads(self.out)

    def error_json(self) -> dict:
        lines = [line for line in self.err.splitlines() if line.strip()]
        return json.loads(lines[-1])

    def rows(self):
        header, *body = [line.split(",") for line in self.out.strip().splitlines()]
        return header, body


@pytest.fixture
def run_cli(capsys):
    """Run main() with argv and capture its exit code and streams"""
    def run(*argv: str) -> CliResult:
        code = main(list(argv))
        captured = capsys.readouterr()
        logger.remove()
        use_settings(IsolatedSettings())
        return CliResult(code, captured.out, captured.err)
    return run
