"""
File system utilities for PIP, complex, system and plan files and count tables.
"""
import json
import os
from pathlib import Path
from typing import Any, Union

import pandas as pd

from ..arms.systems import STATE_CONSTRAINTS
from ..complexes import CubeComplex
from ..pips import Pip
from ..planner import Plan
from ..reconfig import ReconfigSystem
from .exceptions import ValidationError
from .logger import PlannerLogger

PathLike = Union[str, os.PathLike]


def dumps(data: Any) -> str:
    """Deterministic JSON text (two-space indent, trailing newline)."""
    return json.dumps(data, indent=2) + "\n"


class FileManager:
    """Handles reading and writing planner files."""

    def __init__(self):
        self.logger = PlannerLogger.get_logger(self.__class__.__name__)

    def create_directory(self, directory_path: PathLike) -> None:
        """Create directory if it doesn't exist.

        Args:
            directory_path: Full path to the directory to create
        """
        Path(directory_path).mkdir(parents=True, exist_ok=True)
        self.logger.debug(f"Ensured directory exists: {directory_path}")

    # -- JSON -----------------------------------------------------------

    def load_json(self, file_path: PathLike) -> Any:
        """Load a JSON document.

        Args:
            file_path: Full path to the file

        Returns:
            The decoded document

        Raises:
            FileNotFoundError: If the file does not exist
            ValidationError: If the file is not valid JSON
        """
        path = Path(file_path)
        if not path.exists():
            self.logger.error(f"File not found: {path}")
            raise FileNotFoundError(f"File not found: {path}")
        try:
            with path.open(encoding="utf-8") as handle:
                data = json.load(handle)
        except json.JSONDecodeError as e:
            self.logger.error(f"Invalid JSON in {path}: {e}")
            raise ValidationError(f"{path} is not valid JSON: {e}") from e
        self.logger.debug(f"Loaded {path}")
        return data

    def save_json(self, data: Any, file_path: PathLike) -> Path:
        """Save a JSON document, creating parent directories.

        Returns:
            The path written
        """
        path = Path(file_path)
        if path.parent != Path(""):
            self.create_directory(path.parent)
        path.write_text(dumps(data), encoding="utf-8")
        self.logger.info(f"Saved {path}")
        return path

    # -- typed documents ------------------------------------------------

    def load_pip(self, file_path: PathLike) -> Pip:
        return Pip.from_dict(self.load_json(file_path))

    def save_pip(self, pip: Pip, file_path: PathLike) -> Path:
        return self.save_json(pip.to_dict(), file_path)

    def load_complex(self, file_path: PathLike) -> CubeComplex:
        return CubeComplex.from_dict(self.load_json(file_path))

    def save_complex(self, complex_: CubeComplex, file_path: PathLike) -> Path:
        return self.save_json(complex_.to_dict(), file_path)

    def load_system(self, file_path: PathLike) -> ReconfigSystem:
        data = self.load_json(file_path)
        if not isinstance(data, dict):
            raise ValidationError(f"{file_path} does not describe a system")
        return ReconfigSystem.from_dict(data, name=Path(file_path).stem, constraints=STATE_CONSTRAINTS)

    def save_system(self, system: ReconfigSystem, file_path: PathLike) -> Path:
        return self.save_json(system.to_dict(), file_path)

    def load_plan(self, file_path: PathLike) -> Plan:
        data = self.load_json(file_path)
        if not isinstance(data, dict):
            raise ValidationError(f"{file_path} does not describe a plan")
        return Plan.from_dict(data)

    def save_plan(self, plan: Plan, file_path: PathLike) -> Path:
        return self.save_json(plan.to_dict(), file_path)

    # -- tables ---------------------------------------------------------

    def save_dataframe(self, df: pd.DataFrame, file_path: PathLike) -> Path:
        """Save DataFrame to CSV file without the index.

        Args:
            df: DataFrame to save
            file_path: Full path where to save the file

        Returns:
            The path written
        """
        path = Path(file_path)
        if path.parent != Path(""):
            self.create_directory(path.parent)
        df.to_csv(path, index=False)
        self.logger.info(f"Saved table to: {path}")
        return path

    def load_dataframe(self, file_path: PathLike) -> pd.DataFrame:
        """Load DataFrame from CSV file.

        Raises:
            FileNotFoundError: If the file does not exist
        """
        path = Path(file_path)
        if not path.exists():
            self.logger.error(f"File not found: {path}")
            raise FileNotFoundError(f"File not found: {path}")
        df = pd.read_csv(path)
        self.logger.debug(f"Loaded table from: {path}")
        return df
