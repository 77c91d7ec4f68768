"""
Tests for config.settings and the acceptance catalogue
"""

import pytest
from pydantic import ValidationError

from cli.services import AcceptanceSuite
from config import (
    GridSettings,
    IsolatedSettings,
    LoggingSettings,
    QuadratureSettings,
    get_settings,
    load_acceptance,
    reset_settings,
    use_settings,
)


def test_defaults():
    settings = IsolatedSettings()
    assert settings.quadrature.rel_tol == 1e-10
    assert settings.roots.root_tolerance == 1e-8
    assert settings.roots.fd_step == 1e-4
    assert settings.grid.points_per_hbar == 10.0
    assert settings.integrator.scheme == 'yoshida4'
    assert settings.asymptotics.extrapolate is True


def test_environment_overrides_nested_values(monkeypatch):
    monkeypatch.setenv("MAGWEYL_GRID__MAX_POINTS", "5000")
    monkeypatch.setenv("MAGWEYL_INTEGRATOR__SCHEME", "verlet")
    reset_settings()
    settings = get_settings()
    assert settings.grid.max_points == 5000
    assert settings.integrator.scheme == "verlet"


def test_isolated_settings_ignore_environment(monkeypatch):
    monkeypatch.setenv("MAGWEYL_GRID__MAX_POINTS", "5000")
    assert IsolatedSettings().grid.max_points == 2_000_000


def test_use_settings_installs_singleton():
    custom = IsolatedSettings(grid={"points_per_hbar": 20})
    use_settings(custom)
    assert get_settings() is custom
    assert get_settings().grid.points_per_hbar == 20


def test_loose_quadrature_tolerance_warns():
    with pytest.warns(UserWarning, match="looser than 1e-6"):
        QuadratureSettings(rel_tol=1e-3)


def test_invalid_log_level_falls_back():
    with pytest.warns(UserWarning):
        settings = LoggingSettings(level="chatty")
    assert settings.level == "WARNING"
    assert LoggingSettings(level="debug").level == "DEBUG"


def test_out_of_range_values_rejected():
    with pytest.raises(ValidationError):
        GridSettings(points_per_hbar=1)
    with pytest.raises(ValidationError):
        IsolatedSettings(integrator={"scheme": "euler"})


def test_acceptance_catalogue_is_complete():
    criteria = load_acceptance()
    ids = [c.id for c in criteria]
    assert len(ids) == 16
    assert ids[0] == "c01_kstar" and ids[-1] == "c16_eigen_scaling"
    assert len(set(ids)) == 16
    assert any(c.quick for c in criteria)
    for criterion in criteria:
        assert callable(getattr(AcceptanceSuite, f"check_{criterion.id}", None)), criterion.id
