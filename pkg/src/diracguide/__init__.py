"""Classical and quantum massless Dirac particles in square electric and magnetic waveguides."""

from .errors import (
    BoundaryCase,
    BranchPoint,
    DiracGuideError,
    ForbiddenRegime,
    LevelOutOfRange,
    NoLimit,
    NoRefraction,
    RegimeError,
    SingularMatching,
)
from .model import (
    UNITS,
    Character,
    QuantumNumbers,
    Region,
    TransverseMomentum,
    UnitSystem,
    WellConfig,
    WellKind,
    electric,
    inner_momentum,
    magnetic,
    outer_momentum,
)

__version__ = "0.1.0"
