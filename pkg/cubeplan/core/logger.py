"""
Logger configuration for the planner.
"""
import logging
from logging.handlers import RotatingFileHandler
from typing import Union

from ..config.constants import LOG_FILE_BACKUP_COUNT, LOG_FILE_MAX_BYTES, LOG_FORMAT, LOGS_DIR


class PlannerLogger:
    """Helper class for managing planner logging."""

    log_to_file: bool = False

    @staticmethod
    def get_logger(name: str, log_level: Union[int, str, None] = None) -> logging.Logger:
        """
        Get a logger with the specified name.

        Args:
            name: Logger name (typically the class name)
            log_level: Logging level; inherits the package level when omitted

        Returns:
            The configured logger
        """
        logger = logging.getLogger(f"cubeplan.{name}")

        # Only configure logger if it hasn't been configured already
        if not logger.handlers:
            if log_level is not None:
                logger.setLevel(log_level)

            # Prevent propagation to avoid duplicate messages
            logger.propagate = False

            formatter = logging.Formatter(LOG_FORMAT)

            # Console handler (stderr)
            console = logging.StreamHandler()
            console.setFormatter(formatter)
            logger.addHandler(console)

            if PlannerLogger.log_to_file:
                LOGS_DIR.mkdir(parents=True, exist_ok=True)
                file_handler = RotatingFileHandler(
                    LOGS_DIR / f"{name}.log",
                    maxBytes=LOG_FILE_MAX_BYTES,
                    backupCount=LOG_FILE_BACKUP_COUNT,
                )
                file_handler.setFormatter(formatter)
                logger.addHandler(file_handler)

        return logger


def configure_logging(log_level: str = 'WARNING', log_to_file: bool = False) -> int:
    """
    Configure the package-wide log level.

    Args:
        log_level: Name of the log level (e.g., 'INFO', 'DEBUG')
        log_to_file: Whether newly created loggers also write to logs/

    Returns:
        The numeric logging level
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)
    PlannerLogger.log_to_file = log_to_file

    package_logger = logging.getLogger("cubeplan")
    package_logger.setLevel(level)
    for existing in list(logging.Logger.manager.loggerDict.values()):
        if isinstance(existing, logging.Logger) and existing.name.startswith("cubeplan."):
            existing.setLevel(level)

    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
    return level
