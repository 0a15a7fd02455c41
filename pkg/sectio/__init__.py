"""
sectio - covering numbers and sectional numbers of finite group homomorphisms.
"""

__version__ = "0.1.0"

from sectio.config import settings
from sectio.monitoring.logging import setup_logging

# Initialize logging
logger = setup_logging(
    log_level=settings.LOG_LEVEL,
    log_file=settings.LOG_FILE
)
