"""Constants for the cube complex planner."""
import os
from pathlib import Path
from typing import Dict, Tuple

# Base paths
PROJECT_ROOT = Path(os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))
PACKAGE_DIR = PROJECT_ROOT / 'cubeplan'
CONFIG_DIR = PACKAGE_DIR / 'config'
LOGS_DIR = PROJECT_ROOT / 'logs'

# Config file
PLANNER_CONFIG_PATH = CONFIG_DIR / 'planner_config.json'

# Default caps
DEFAULT_MAX_IDEALS: int = 2 ** 20
DEFAULT_MAX_STATES: int = 2 ** 20
DEFAULT_MAX_ENUMERATION: int = 100_000
DEFAULT_MAX_CUBE_DIMENSION: int = 16
DEFAULT_MAX_SERIES_ORDER: int = 64

# Logging
DEFAULT_LOG_LEVEL: str = 'WARNING'
LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE_MAX_BYTES: int = 10 * 1024 * 1024  # 10MB
LOG_FILE_BACKUP_COUNT: int = 5
LOG_LEVELS: Tuple[str, ...] = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

# Environment overrides
ENV_OVERRIDES: Dict[str, str] = {
    'max_ideals': 'CUBEPLAN_MAX_IDEALS',
    'max_states': 'CUBEPLAN_MAX_STATES',
    'max_enumeration': 'CUBEPLAN_MAX_ENUMERATION',
    'max_cube_dimension': 'CUBEPLAN_MAX_CUBE_DIMENSION',
    'max_series_order': 'CUBEPLAN_MAX_SERIES_ORDER',
    'log_level': 'LOG_LEVEL',
    'log_to_file': 'CUBEPLAN_LOG_TO_FILE',
}

# Exit codes
EXIT_OK: int = 0
EXIT_VALIDATION: int = 2
EXIT_CAP_EXCEEDED: int = 3
EXIT_NOT_CAT0: int = 4
EXIT_INTERRUPTED: int = 130

# Robot symbols
HORIZONTAL: str = 'E'
VERTICAL: str = 'N'
DOWNWARD: str = 'S'
OCCUPIED: str = '1'
EMPTY: str = '0'

# Partial path symbols
SYMBOL_NORTH: str = 'N'
SYMBOL_EAST: str = 'E'
SYMBOL_SQUARE: str = 'Q'
SYMBOL_HALF_SQUARE: str = 'H'

# Robot kinds
QUADRANT: str = 'quadrant'
STRIP: str = 'strip'
SNAKE: str = 'snake'
ROBOT_KINDS: Tuple[str, ...] = (QUADRANT, STRIP)

# Metrics
METRIC_MOVES: str = 'moves'
METRIC_STEPS: str = 'steps'
METRIC_TIME: str = 'time'
METRIC_EUCLIDEAN: str = 'euclidean'
METRICS: Tuple[str, ...] = (METRIC_MOVES, METRIC_STEPS, METRIC_TIME)
