"""sectio command-line entry point."""
import sys

from sectio import __version__
from sectio.cli.main import main
from sectio.monitoring.logging import get_logger

if __name__ == "__main__":
    logger = get_logger()
    logger.info(f"Starting sectio {__version__}...")
    logger.debug(f"Arguments: {sys.argv[1:]}")

    sys.exit(main(sys.argv[1:]))
