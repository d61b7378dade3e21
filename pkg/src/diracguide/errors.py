"""Exception hierarchy.

``RegimeError`` covers inputs that are well formed but physically
inadmissible (wrong side of a regime inequality, a separatrix, a branch
point). Plain ``ValueError`` is used for malformed inputs such as empty
grids.
"""


class DiracGuideError(Exception):
    pass


class RegimeError(DiracGuideError, ValueError):
    """The requested quantity does not exist in this physical regime."""


class BoundaryCase(RegimeError):
    """Parameters sit exactly on a regime separatrix (measure-zero set)."""


class ForbiddenRegime(RegimeError):
    pass


class NoRefraction(RegimeError):
    """The refracted angle would have |sin| > 1 (total reflection)."""


class NoLimit(RegimeError):
    """The limiting-angle ratio exceeds 1, so every angle is allowed."""


class BranchPoint(RegimeError):
    """Energy sits where the interior momentum changes character."""


class SingularMatching(RegimeError):
    def __init__(self, message, condition=float("inf")):
        super().__init__(f"{message} (condition number ~ {condition:.3g})")
        self.condition = condition


class LevelOutOfRange(DiracGuideError, IndexError):
    pass
