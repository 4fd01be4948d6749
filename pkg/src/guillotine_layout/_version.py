"""Installed distribution version."""

from importlib.metadata import PackageNotFoundError, version

__all__ = ["__version__"]

try:
    __version__ = version("guillotine-layout")
except PackageNotFoundError:
    __version__ = "dev"
