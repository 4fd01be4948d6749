"""Least-weight subsequence solvers: quadratic reference and O(n log n) owner stack."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Generic, TypeVar

__all__ = [
    "CLWS_CALL_FACTOR",
    "Breakpoints",
    "CountingOracle",
    "breakpoints_to_layers",
    "solve_clws_fast",
    "solve_clws_prefix_weight",
    "solve_clws_quadratic",
]

# Upper bound c in: weight calls of solve_clws_fast <= c * n * log2(n), n >= 2.
# One call per position, at most two per pop and per rejected pop, and at
# most 2*log2(n) + 2 steps of two calls in the galloping search.
CLWS_CALL_FACTOR = 13


W = TypeVar("W", Fraction, int, float)


@dataclass(frozen=True, slots=True)
class Breakpoints:
    """Strictly increasing positions ``0 = l_0 < ... < l_k = n``."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.positions) < 2 or self.positions[0] != 0:
            raise ValueError(f"Breakpoints must start at 0 and end at n: {self.positions}")
        for a, b in zip(self.positions, self.positions[1:]):
            if a >= b:
                raise ValueError(f"Breakpoints must strictly increase: {self.positions}")

    @property
    def n(self) -> int:
        return self.positions[-1]

    def segments(self) -> list[tuple[int, int]]:
        return list(zip(self.positions, self.positions[1:]))


class CountingOracle(Generic[W]):
    """Wrap a weight function and count its evaluations.

    Example::

        oracle = CountingOracle(lambda i, j: Fraction((j - i) ** 2))
        solve_clws_fast(100, oracle)
        print(oracle.calls)
    """

    def __init__(self, fn: Callable[[int, int], W]) -> None:
        self._fn = fn
        self.calls = 0

    def __call__(self, i: int, j: int) -> W:
        self.calls += 1
        return self._fn(i, j)


def _trace_back(pred: Sequence[int], n: int) -> Breakpoints:
    positions = [n]
    while positions[-1] != 0:
        positions.append(pred[positions[-1]])
    positions.reverse()
    return Breakpoints(tuple(positions))


def solve_clws_quadratic(n: int, weight: Callable[[int, int], W]) -> tuple[Breakpoints, W]:
    """Reference ``O(n^2)`` recurrence ``f(j) = min_{i<j} f(i) + w(i, j)``.

    Valid for arbitrary weights. Ties go to the smallest predecessor.

    Raises:
        ValueError: If ``n < 1``.

    Example::

        bp, value = solve_clws_quadratic(3, lambda i, j: Fraction(1))
        assert bp.positions == (0, 3) and value == 1
    """
    if n < 1:
        raise ValueError(f"CLWS needs n >= 1, got {n}")
    f: dict[int, W] = {}
    pred = [0] * (n + 1)
    for j in range(1, n + 1):
        best = weight(0, j)
        best_i = 0
        for i in range(1, j):
            candidate = f[i] + weight(i, j)
            if candidate < best:
                best = candidate
                best_i = i
        f[j] = best
        pred[j] = best_i
    return _trace_back(pred, n), f[n]


def solve_clws_fast(n: int, weight: Callable[[int, int], W]) -> tuple[Breakpoints, W]:
    """Concave least-weight subsequence in ``O(n log n)`` weight evaluations.

    Keeps a stack of candidate predecessors, each owning the range of
    positions it currently wins. A newer candidate strictly beating an
    older one at position ``p`` keeps beating it at every later position
    when the weight is concave, so the takeover point is found by galloping
    search. Ties stay with the older (smaller) candidate, which reproduces
    the breakpoints of ``solve_clws_quadratic``.

    The weight must be concave: ``w(i0,j0) + w(i1,j1) <= w(i0,j1) + w(i1,j0)``
    for ``i0 < i1 < j0 < j1``. This is not checked.

    Raises:
        ValueError: If ``n < 1``.

    Example::

        prefix = PrefixAreas.from_areas(inst.areas)
        bp, value = solve_clws_fast(inst.n, lambda i, j: weight(prefix, inst.L1, i, j))
    """
    if n < 1:
        raise ValueError(f"CLWS needs n >= 1, got {n}")
    w = weight
    # f[0] = 0 is the additive identity of every supported weight type
    f: list[Any] = [0] * (n + 1)
    pred = [0] * (n + 1)
    # owner stack: candidate cand[t] wins from position start[t]; entries below head are spent
    cand = [0]
    start = [1]
    head = 0

    for j in range(1, n + 1):
        while head + 1 < len(cand) and start[head + 1] <= j:
            head += 1
        c = cand[head]
        fj = f[c] + w(c, j)
        f[j] = fj
        pred[j] = c
        if j == n:
            break

        while len(cand) > head:
            old = cand[-1]
            p = start[-1] if start[-1] > j else j + 1
            if fj + w(j, p) < f[old] + w(old, p):
                cand.pop()
                start.pop()
            else:
                break
        if len(cand) == head:
            cand.append(j)
            start.append(j + 1)
            continue

        old = cand[-1]
        f_old = f[old]
        lo = start[-1] if start[-1] > j else j + 1  # j does not beat old at lo
        if lo == n or not fj + w(j, n) < f_old + w(old, n):
            continue
        step = 1
        hi = min(lo + step, n)
        while not fj + w(j, hi) < f_old + w(old, hi):
            lo = hi
            step *= 2
            hi = min(lo + step, n)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if fj + w(j, mid) < f_old + w(old, mid):
                hi = mid
            else:
                lo = mid
        cand.append(j)
        start.append(hi)

    return _trace_back(pred, n), f[n]


def solve_clws_prefix_weight(base: int, q: Sequence[int]) -> tuple[Breakpoints, int]:
    """``solve_clws_fast`` specialized to ``w(i, j) = base + (j - i) * (q[j] - q[i])``.

    ``q`` must be non-decreasing integers with ``q[0] = 0``; ``n = len(q) - 1``.
    The weight is evaluated inline and ``base`` cancels in every comparison,
    so each step is a few integer operations. Breakpoints and value equal
    those of ``solve_clws_fast`` on the same weight.

    Raises:
        ValueError: If ``q`` has fewer than two entries.

    Example::

        bp, value = solve_clws_prefix_weight(4, [0, 1, 2, 4])
        assert bp.positions == (0, 2, 3) and value == 14
    """
    n = len(q) - 1
    if n < 1:
        raise ValueError(f"CLWS needs n >= 1, got {n}")
    f = [0] * (n + 1)
    pred = [0] * (n + 1)
    cand = [0]
    start = [1]
    head = 0

    for j in range(1, n + 1):
        while head + 1 < len(cand) and start[head + 1] <= j:
            head += 1
        c = cand[head]
        qj = q[j]
        fj = f[c] + base + (j - c) * (qj - q[c])
        f[j] = fj
        pred[j] = c
        if j == n:
            break

        while len(cand) > head:
            old = cand[-1]
            p = start[-1] if start[-1] > j else j + 1
            qp = q[p]
            if fj + (p - j) * (qp - qj) < f[old] + (p - old) * (qp - q[old]):
                cand.pop()
                start.pop()
            else:
                break
        if len(cand) == head:
            cand.append(j)
            start.append(j + 1)
            continue

        old = cand[-1]
        f_old = f[old]
        q_old = q[old]
        lo = start[-1] if start[-1] > j else j + 1
        qn = q[n]
        if lo == n or not fj + (n - j) * (qn - qj) < f_old + (n - old) * (qn - q_old):
            continue
        step = 1
        hi = min(lo + step, n)
        while not fj + (hi - j) * (q[hi] - qj) < f_old + (hi - old) * (q[hi] - q_old):
            lo = hi
            step *= 2
            hi = min(lo + step, n)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if fj + (mid - j) * (q[mid] - qj) < f_old + (mid - old) * (q[mid] - q_old):
                hi = mid
            else:
                lo = mid
        cand.append(j)
        start.append(hi)

    return _trace_back(pred, n), f[n]


def breakpoints_to_layers(breakpoints: Breakpoints, perm: Sequence[int]) -> list[list[int]]:
    """Turn sorted runs ``(l_t, l_{t+1}]`` into layers of original indices."""
    return [[perm[p] for p in range(lo, hi)] for lo, hi in breakpoints.segments()]
