"""Configuration module for guillotine-layout."""

from __future__ import annotations

from guillotine_layout.config._config import (
    SolverConfig,
    configure,
    get_global_config,
    resolve_config,
)

__all__ = ["SolverConfig", "configure", "get_global_config", "resolve_config"]
