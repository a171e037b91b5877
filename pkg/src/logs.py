import logging
import sys

LOGGER_NAME = "glorder"
BANNER = "=" * 60


def setup_logging(verbose: bool = False) -> logging.Logger:
    logger = logging.getLogger(LOGGER_NAME)
    for old in list(logger.handlers):
        logger.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s:%(levelname)s:%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return logger


def get_logger(name: str) -> logging.Logger:
    # src.tilting.bundle -> glorder.tilting.bundle
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


def banner(logger: logging.Logger, title: str):
    logger.info(BANNER)
    logger.info(title)
    logger.info(BANNER)
