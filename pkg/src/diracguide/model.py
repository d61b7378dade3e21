"""Units, well geometry and transverse-momentum kinematics.

Everything is in natural units with hbar = v_F = 1 and the well half-width
as the length scale. The reduced Hamiltonian acting on the x-dependent
spinor is

    H = sigma_x (-i d/dx) + sigma_y (k - A(x)) + V(x)

with A = -a0 (magnetic) or V = -v0 (electric) for |x| < half_width and
both zero outside.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class UnitSystem:
    """Natural units used throughout the package.

    hbar = v_F = 1. Lengths are measured in well half-widths, so energies and
    momenta are inverse half-widths. The physical potentials map as
    A(x) = -e A~(x) / hbar, V(x) = V~(x) / (hbar v_F) and E = eps / (hbar v_F).
    """

    hbar: float = 1.0
    fermi_velocity: float = 1.0


UNITS = UnitSystem()


class WellKind(str, Enum):
    ELECTRIC = "electric"
    MAGNETIC = "magnetic"


class Character(str, Enum):
    PROPAGATING = "propagating"
    EVANESCENT = "evanescent"


class Region(str, Enum):
    OUTER = "outer"
    INNER = "inner"


@dataclass(frozen=True)
class WellConfig:
    """Square well |x| < half_width of strength v0 (electric) or a0 (magnetic).

    Positive strength is a well, negative a barrier.
    """

    kind: WellKind
    strength: float
    half_width: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", WellKind(self.kind))
        object.__setattr__(self, "strength", float(self.strength))
        object.__setattr__(self, "half_width", float(self.half_width))
        if not (self.half_width > 0 and math.isfinite(self.half_width)):
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        if not math.isfinite(self.strength):
            raise ValueError("strength must be finite")

    @property
    def is_electric(self) -> bool:
        return self.kind is WellKind.ELECTRIC

    def inner_energy(self, E):
        """Effective energy E - V inside the well."""
        return E + self.strength if self.is_electric else E

    def inner_ky(self, k):
        """Kinetic y-momentum k - A inside the well."""
        return k if self.is_electric else k + self.strength

    def with_strength(self, strength: float) -> "WellConfig":
        return WellConfig(self.kind, strength, self.half_width)

    def region_of(self, x: float) -> str:
        if x < -self.half_width:
            return "I"
        if x > self.half_width:
            return "III"
        return "II"


def electric(v0: float, half_width: float = 1.0) -> WellConfig:
    return WellConfig(WellKind.ELECTRIC, v0, half_width)


def magnetic(a0: float, half_width: float = 1.0) -> WellConfig:
    return WellConfig(WellKind.MAGNETIC, a0, half_width)


@dataclass(frozen=True)
class QuantumNumbers:
    E: float
    k: float


@dataclass(frozen=True)
class TransverseMomentum:
    """|p_x| in one region; the branch is carried by ``character``."""

    value: float
    character: Character
    region: Region

    @property
    def propagating(self) -> bool:
        return self.character is Character.PROPAGATING

    @property
    def exponent(self):
        """Exponent lambda of the e^{+lambda x} basis wave (complex if propagating)."""
        return 1j * self.value if self.propagating else float(self.value)


def _transverse(eps: float, q: float, region: Region) -> TransverseMomentum:
    # (eps - q)(eps + q) keeps precision near the light cone
    d2 = (eps - q) * (eps + q)
    if abs(eps) >= abs(q):
        return TransverseMomentum(math.sqrt(max(d2, 0.0)), Character.PROPAGATING, region)
    return TransverseMomentum(math.sqrt(-d2), Character.EVANESCENT, region)


def outer_momentum(qn: QuantumNumbers) -> TransverseMomentum:
    """Transverse momentum outside the well (regions I and III).

    |E| = |k| is returned as propagating with value 0.
    """
    return _transverse(qn.E, qn.k, Region.OUTER)


def inner_momentum(qn: QuantumNumbers, well: WellConfig) -> TransverseMomentum:
    return _transverse(well.inner_energy(qn.E), well.inner_ky(qn.k), Region.INNER)
