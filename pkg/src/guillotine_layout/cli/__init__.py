"""Command-line entry point (``guillotine-layout`` / ``python -m guillotine_layout``)."""

from guillotine_layout.cli._main import (
    EXIT_INFEASIBLE,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_TIME_LIMIT,
    EXIT_USAGE,
    METHODS,
    build_parser,
    main,
)

__all__ = [
    "EXIT_INFEASIBLE",
    "EXIT_INPUT",
    "EXIT_OK",
    "EXIT_TIME_LIMIT",
    "EXIT_USAGE",
    "METHODS",
    "build_parser",
    "main",
]
