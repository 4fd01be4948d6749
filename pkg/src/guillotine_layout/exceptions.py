"""Exception hierarchy for guillotine-layout."""

from __future__ import annotations

__all__ = [
    "GuillotineError",
    "IncompatibleMethodError",
    "InstanceFormatError",
    "InstanceValidationError",
    "ModelBuildError",
    "PartitionValidationError",
    "ProblemSizeError",
    "SameLayerSwapError",
    "UnknownVariableError",
]


class GuillotineError(Exception):
    """Base exception for all guillotine-layout errors."""


class InstanceValidationError(GuillotineError):
    """Instance violates its invariants (empty, non-positive area, area sum).

    Example::

        try:
            Instance.create(L1=2, L2=2, areas=[1, 1])
        except InstanceValidationError as exc:
            print(exc)
    """


class PartitionValidationError(GuillotineError):
    """Partition is not a valid set partition of the rectangle indices.

    Attributes:
        index: The offending 0-based rectangle index, or ``None`` when the
            problem is not tied to a single index (e.g. an empty layer).
        reason: Short machine-readable reason: ``"duplicate"``,
            ``"missing"``, ``"out-of-range"`` or ``"empty-layer"``.

    Example::

        try:
            Partition.from_one_based([[1, 2], [2, 3]]).validate(3)
        except PartitionValidationError as exc:
            assert exc.reason == "duplicate"
    """

    def __init__(self, *, index: int | None, reason: str, message: str | None = None) -> None:
        self.index = index
        self.reason = reason
        if message is None:
            if index is None:
                message = f"Invalid partition: {reason}"
            else:
                message = f"Invalid partition: rectangle {index + 1} is {reason}"
        super().__init__(message)


class InstanceFormatError(GuillotineError):
    """Instance file could not be parsed or failed validation.

    Attributes:
        code: Distinct error code (``"malformed-json"``, ``"missing-field"``,
            ``"unsupported-version"``, ``"bad-number"``,
            ``"zero-denominator"``, ``"non-positive-area"``,
            ``"area-sum-mismatch"``).
        detail: Human-readable detail.
    """

    def __init__(self, *, code: str, detail: str = "") -> None:
        self.code = code
        self.detail = detail
        message = code if not detail else f"{code}: {detail}"
        super().__init__(message)


class SameLayerSwapError(GuillotineError):
    """Swap requested between two rectangles of the same layer.

    Attributes:
        i: First 0-based rectangle index.
        j: Second 0-based rectangle index.
    """

    def __init__(self, *, i: int, j: int) -> None:
        self.i = i
        self.j = j
        super().__init__(f"Rectangles {i + 1} and {j + 1} lie in the same layer")


class ProblemSizeError(GuillotineError):
    """Input exceeds a configured size guard.

    Raised by the brute-force enumerator (``brute_force_max_n``) and the
    subset-sum oracle (``dp_max_sum``).

    Attributes:
        what: Which guard was hit.
        size: The offending size.
        limit: The configured limit.

    Example::

        configure(brute_force_max_n=8)
        # brute_force() on a 9-rectangle instance now raises ProblemSizeError
    """

    def __init__(self, *, what: str, size: int, limit: int) -> None:
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} size {size} exceeds the configured limit {limit}")


class ModelBuildError(GuillotineError):
    """Linear model is malformed (bad or duplicate name, undeclared variable)."""


class UnknownVariableError(GuillotineError):
    """Assignment names a variable the model does not declare.

    Attributes:
        name: The unknown variable name.
    """

    def __init__(self, *, name: str) -> None:
        self.name = name
        super().__init__(f"Unknown variable {name!r} in assignment")


class IncompatibleMethodError(GuillotineError):
    """Solution method cannot optimize the requested objective.

    Attributes:
        objective: The objective name (``"peri-sum"``, ...).
        method: The method name (``"clws"``, ...).
        supported: Methods valid for this objective.
    """

    def __init__(self, *, objective: str, method: str, supported: list[str]) -> None:
        self.objective = objective
        self.method = method
        self.supported = supported
        super().__init__(
            f"Method {method!r} cannot solve objective {objective!r}; "
            f"supported methods: {supported}"
        )
