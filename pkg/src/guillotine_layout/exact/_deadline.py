"""Polling wall-clock deadline for the search loops."""

from __future__ import annotations

import time

__all__ = ["Deadline", "SearchTimeout"]


class SearchTimeout(Exception):
    """Unwinds a search once its deadline has passed."""


class Deadline:
    """Counts search nodes and checks the clock every ``poll_interval`` nodes.

    Example::

        deadline = Deadline(limit=5.0, poll_interval=1024)
        deadline.tick()  # raises SearchTimeout once 5 seconds have elapsed
    """

    __slots__ = ("_countdown", "limit", "nodes", "poll_interval", "started")

    def __init__(self, limit: float | None, poll_interval: int) -> None:
        self.limit = limit
        self.poll_interval = poll_interval
        self.started = time.perf_counter()
        self.nodes = 0
        self._countdown = poll_interval

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def expired(self) -> bool:
        return self.limit is not None and self.elapsed >= self.limit

    def tick(self) -> None:
        """Count one node; raise ``SearchTimeout`` when the limit is hit."""
        self.nodes += 1
        self._countdown -= 1
        if self._countdown <= 0:
            self._countdown = self.poll_interval
            if self.expired():
                raise SearchTimeout
