import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = 'orekit'


def configure_logging(level: str | int = logging.WARNING, console: Optional[Console] = None) -> logging.Logger:
    """
    Attach a rich handler to the `orekit` logger.

    Library modules only call `logging.getLogger(__name__)`; handlers are
    installed here, once, by the command-line driver.

    Args:
        level: Logging level name or number
        console: Console to log to (defaults to stderr)

    Returns:
        The configured `orekit` logger
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level)

    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=False,
    )
    handler.setFormatter(logging.Formatter('%(name)s: %(message)s'))
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def verbosity_to_level(verbosity: int) -> int:
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return logging.WARNING
