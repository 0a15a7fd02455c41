"""
Configuration module for sectio.
"""

from sectio.config.constants import (EXIT_COMPUTATION_ERROR, EXIT_OK,
                                     EXIT_USAGE_ERROR, MAX_PERMUTATION_DEGREE,
                                     SCHEMA_VERSION, ActionName, Environment,
                                     GroupFamily, HomKind, InfinityReason,
                                     LogLevel, Verdict)
from sectio.config.settings import (ORDER_CAP_LIMIT, Settings, configure,
                                    settings)

__all__ = [
    # Classes
    "Settings",
    "ActionName",
    "Environment",
    "GroupFamily",
    "HomKind",
    "InfinityReason",
    "LogLevel",
    "Verdict",
    # Constants
    "EXIT_COMPUTATION_ERROR",
    "EXIT_OK",
    "EXIT_USAGE_ERROR",
    "MAX_PERMUTATION_DEGREE",
    "ORDER_CAP_LIMIT",
    "SCHEMA_VERSION",
    # Instances
    "configure",
    "settings",
]
