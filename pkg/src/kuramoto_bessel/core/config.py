"""Configuration loading and management."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from kuramoto_bessel.core.exceptions import ConfigError, ConfigNotFoundError
from kuramoto_bessel.core.grid import EvaluationGrid, Spacing
from kuramoto_bessel.core.types import PathLike

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

SECTIONS = ("solver", "grid", "table", "threshold", "figure", "output")

# Key under [tool] when settings live in pyproject.toml
PYPROJECT_TABLE = "kuramoto-bessel"


@dataclass
class NumericsConfig:
    """Loaded configuration."""

    solver: dict[str, Any] = field(default_factory=dict)
    grid: dict[str, Any] = field(default_factory=dict)
    table: dict[str, Any] = field(default_factory=dict)
    threshold: dict[str, Any] = field(default_factory=dict)
    figure: dict[str, Any] = field(default_factory=dict)
    output: dict[str, Any] = field(default_factory=dict)

    _source_path: Path | None = field(default=None, repr=False)

    def get_section(self, name: str) -> dict[str, Any]:
        """Get a copy of one configuration section."""
        if name not in SECTIONS:
            raise ConfigError(f"Unknown config section: {name}. Available: {list(SECTIONS)}")
        section: dict[str, Any] = getattr(self, name)
        return section.copy()

    def get_value(self, section: str, key: str) -> Any:
        """Get a single setting, raising ConfigError when it is missing."""
        values = self.get_section(section)
        if key not in values:
            raise ConfigError(f"Missing setting [{section}].{key}")
        return values[key]

    def default_grid(self) -> EvaluationGrid:
        """The x-grid used when a sweep is not given one."""
        return EvaluationGrid(
            float(self.get_value("grid", "x_min")),
            float(self.get_value("grid", "x_max")),
            int(self.get_value("grid", "points")),
            Spacing(self.get_value("grid", "spacing")),
        )


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Deep merge with override taking precedence; lists are replaced whole."""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _merge(result[key], value)
        else:
            result[key] = value
    return result


def _read_toml(path: Path) -> dict[str, Any]:
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"Malformed TOML in {path}: {exc}") from exc


def _package_defaults() -> dict[str, Any]:
    source = resources.files("kuramoto_bessel").joinpath("defaults", "config.toml")
    return tomllib.loads(source.read_text(encoding="utf-8"))


def load_config(path: PathLike | None = None) -> NumericsConfig:
    """Load configuration.

    Package defaults are always loaded first; an explicit file is merged
    over them.

    Args:
        path: Optional TOML file, or a pyproject.toml with a
            [tool.kuramoto-bessel] table
    """
    data = _package_defaults()
    source: Path | None = None

    if path is not None:
        source = Path(path)
        if not source.exists():
            raise ConfigNotFoundError(f"Config file not found: {source}")
        user = _read_toml(source)

        # Handle pyproject.toml
        if source.name == "pyproject.toml":
            user = user.get("tool", {}).get(PYPROJECT_TABLE, {})

        unknown = sorted(set(user) - set(SECTIONS))
        if unknown:
            raise ConfigError(f"Unknown config sections in {source}: {unknown}")
        data = _merge(data, user)

    config = NumericsConfig(**{name: data.get(name, {}) for name in SECTIONS})
    config._source_path = source

    return config


# Global config cache
_cached_config: NumericsConfig | None = None


def get_config() -> NumericsConfig:
    """Get the global configuration (cached)."""
    global _cached_config
    if _cached_config is None:
        _cached_config = load_config()
    return _cached_config


def reload_config(path: PathLike | None = None) -> NumericsConfig:
    """Reload configuration (clears cache)."""
    global _cached_config
    _cached_config = load_config(path)
    return _cached_config
