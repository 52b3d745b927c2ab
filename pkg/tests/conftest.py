"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path

import pytest
from click.testing import CliRunner

from kuramoto_bessel.core.config import reload_config


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def restore_config():
    """Reload packaged defaults after a test swaps the global config."""
    yield
    reload_config()


@pytest.fixture
def sample_config(temp_dir):
    """Create a sample configuration file."""
    config_content = """
[solver]
tolerance = 1e-10

[grid]
x_min = 0.01
x_max = 10.0
points = 50
spacing = "linear"

[table]
k_values = [2.0, 5.0]
"""
    config_file = temp_dir / "kuramoto-bessel.toml"
    config_file.write_text(config_content)
    return config_file
