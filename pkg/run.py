"""
Command-line entry point for budgetnet.
"""
import logging
import sys

from app.cli import configure_logging, run


def main():
    """Main entry point for the command line."""
    # Setup basic logging
    configure_logging()
    logger = logging.getLogger("budgetnet.cli")
    logger.debug(f"arguments: {sys.argv[1:]}")

    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
