"""Exception types shared across the package."""


class PmLabError(Exception):
    """Base class for all pm-lab errors."""


class ShapeMismatch(PmLabError):
    """Loss and feedback matrices disagree in shape, or a shape is invalid."""


class DuplicateLossRows(PmLabError):
    """Two actions have identical loss rows.

    Carries the 0-based indices of the offending pair as ``.actions``.
    """

    def __init__(self, i, j):
        self.actions = (i, j)
        super().__init__(f"actions {i} and {j} have identical loss rows")


class NumericalFailure(PmLabError):
    """An LP solve did not converge or returned an unusable status."""


class NotGloballyObservable(PmLabError):
    """No observer set can express a required loss difference."""


class InvalidPlan(PmLabError):
    """An observer plan is missing or inconsistent with the game."""


class EmptyChoiceSet(PmLabError):
    """The policy's candidate action set came up empty."""


class DimensionMismatch(PmLabError):
    """An observation vector does not match the action's symbol count."""


class MixedSchedules(PmLabError):
    """Batch configs disagree on horizon or checkpoint schedule."""
