import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union


def setup_logging(
    log_level: Union[int, str] = logging.WARNING,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configure application-wide logging with a console handler and an
    optional rotating file handler.

    The console handler writes to stderr so that result documents on stdout
    stay machine-readable.

    Args:
        log_level: The logging level to use (default: logging.WARNING)
        log_file: Path to the log file (default: no file)

    Returns:
        logging.Logger: Configured logger instance
    """
    if log_file:
        log_dir = Path(log_file).parent
        log_dir.mkdir(parents=True, exist_ok=True)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove existing handlers to avoid duplicates
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    if log_file:
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10485760,  # 10MB
            backupCount=5
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    logger = logging.getLogger("sectio")
    logger.setLevel(log_level)

    return logger


def get_logger(name: str = "sectio") -> logging.Logger:
    """
    Get a logger instance with the specified name.

    Args:
        name: The name for the logger (default: sectio)

    Returns:
        logging.Logger: Logger instance
    """
    return logging.getLogger(name)
