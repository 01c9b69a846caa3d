"""Logger factory. Stdout is reserved for the structured report."""

import logging
import sys

ROOT = "quadsphere"
FORMAT = "%(message)s"


def get_logger(name: str) -> logging.Logger:
    """Child of the package logger; silent until configure_logging is called."""
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"{ROOT}.{name}")


def configure_logging(verbose: bool = False) -> logging.Logger:
    """Attach one stderr handler at INFO (verbose) or WARNING."""
    root = logging.getLogger(ROOT)
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT))
    root.addHandler(handler)
    root.setLevel(logging.INFO if verbose else logging.WARNING)
    return root


logging.getLogger(ROOT).addHandler(logging.NullHandler())
