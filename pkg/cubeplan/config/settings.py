"""
Planner settings: JSON defaults overridden by environment variables.
"""
import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv

from .constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_CUBE_DIMENSION,
    DEFAULT_MAX_ENUMERATION,
    DEFAULT_MAX_IDEALS,
    DEFAULT_MAX_SERIES_ORDER,
    DEFAULT_MAX_STATES,
    ENV_OVERRIDES,
    PLANNER_CONFIG_PATH,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlannerSettings:
    """Size caps and logging switches shared by every module."""

    max_ideals: int = DEFAULT_MAX_IDEALS
    max_states: int = DEFAULT_MAX_STATES
    max_enumeration: int = DEFAULT_MAX_ENUMERATION
    max_cube_dimension: int = DEFAULT_MAX_CUBE_DIMENSION
    max_series_order: int = DEFAULT_MAX_SERIES_ORDER
    log_level: str = DEFAULT_LOG_LEVEL
    log_to_file: bool = False

    def override(self, **values: Any) -> 'PlannerSettings':
        """Return a copy with the non-None values replaced."""
        changes = {key: value for key, value in values.items() if value is not None}
        return replace(self, **changes) if changes else self


def _coerce(name: str, raw: Any) -> Any:
    if name == 'log_to_file':
        if isinstance(raw, bool):
            return raw
        return str(raw).strip().lower() in ('1', 'true', 'yes', 'on')
    if name == 'log_level':
        return str(raw).upper()
    return int(raw)


def _load_config(config_path: Path) -> Dict[str, Any]:
    """Load the JSON config, falling back to defaults on any problem."""
    try:
        with open(config_path, 'r') as f:
            return json.load(f)
    except FileNotFoundError:
        logger.warning(f"Config file not found at {config_path}, using defaults")
    except json.JSONDecodeError as e:
        logger.warning(f"Could not parse config file {config_path}: {e}, using defaults")
    return {}


def load_settings(config_path: Optional[Union[str, Path]] = None) -> PlannerSettings:
    """
    Build the planner settings.

    Values come from the JSON config file first, then from environment
    variables (a local .env file is honoured).

    Args:
        config_path: Optional path to a JSON config (default: the packaged one)

    Returns:
        The resolved settings
    """
    load_dotenv()
    path = Path(config_path) if config_path else PLANNER_CONFIG_PATH
    raw = _load_config(path)

    known = {f.name for f in fields(PlannerSettings)}
    values: Dict[str, Any] = {}
    for name, value in raw.items():
        if name not in known:
            logger.warning(f"Ignoring unknown config key '{name}'")
            continue
        values[name] = _coerce(name, value)

    for name, env_var in ENV_OVERRIDES.items():
        env_value = os.getenv(env_var)
        if env_value is None or env_value == '':
            continue
        try:
            values[name] = _coerce(name, env_value)
        except ValueError:
            logger.warning(f"Ignoring invalid value for {env_var}: {env_value!r}")

    return PlannerSettings(**values)
