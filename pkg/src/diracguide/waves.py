"""Plane-wave basis spinors and piecewise spinor assembly.

In a region with effective energy ``eps`` and kinetic y-momentum ``q`` the
wave e^{lam x} (phi1, phi2) solves the reduced equation iff
eps^2 = q^2 - lam^2, with phi2 / phi1 = i (q - lam) / eps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class BasisSpinor:
    """e^{momentum_phase * x} (1, lower_component)."""

    momentum_phase: complex
    lower_component: complex

    @property
    def column(self) -> np.ndarray:
        return np.array([1.0, self.lower_component], dtype=complex)


def lower_component(eps, q, lam):
    """phi2 / phi1 = i (q - lam) / eps for the wave e^{lam x}."""
    return 1j * (q - lam) / eps


def stable_column(eps, q, lam):
    """Column proportional to (1, i(q - lam)/eps) that never vanishes or blows up.

    Uses (q - lam)(q + lam) = eps^2. The returned vector differs from the
    phi1 = 1 normalisation by a real factor, which keeps the real structure
    of evanescent problems (real upper, imaginary lower component).
    Works elementwise on arrays.
    """
    eps = np.asarray(eps, dtype=float)
    q = np.asarray(q, dtype=float)
    lam = np.asarray(lam)
    if np.iscomplexobj(lam):
        # propagating: |eps| >= |q| so eps != 0 away from the branch point
        return np.ones_like(lam, dtype=complex), 1j * (q - lam) / eps
    small = np.abs(q - lam) <= np.abs(q + lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        upper = np.where(small, 1.0, eps).astype(complex)
        lower = np.where(small, 1j * eps / (q + lam), 1j * (q - lam))
    return upper, lower


@dataclass(frozen=True)
class Wave:
    coefficient: complex
    exponent: complex
    anchor: float
    column: tuple  # (upper, lower)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        f = self.coefficient * np.exp(self.exponent * (x - self.anchor))
        return f * self.column[0], f * self.column[1]


@dataclass
class PiecewiseSpinor:
    """Spinor defined region by region on (-inf, -h), (-h, h), (h, inf)."""

    half_width: float
    regions: list = field(default_factory=lambda: [[], [], []])

    def region_value(self, index: int, x):
        x = np.asarray(x, dtype=float)
        psi1 = np.zeros(x.shape, dtype=complex)
        psi2 = np.zeros(x.shape, dtype=complex)
        for wave in self.regions[index]:
            a, b = wave(x)
            psi1 = psi1 + a
            psi2 = psi2 + b
        return psi1, psi2

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        h = self.half_width
        psi1 = np.zeros(x.shape, dtype=complex)
        psi2 = np.zeros(x.shape, dtype=complex)
        masks = (x < -h, (x >= -h) & (x <= h), x > h)
        for index, mask in enumerate(masks):
            if np.any(mask):
                a, b = self.region_value(index, x[mask])
                psi1[mask] = a
                psi2[mask] = b
        return psi1, psi2

    def scaled(self, factor: complex) -> "PiecewiseSpinor":
        regions = [
            [Wave(w.coefficient * factor, w.exponent, w.anchor, w.column) for w in waves]
            for waves in self.regions
        ]
        return PiecewiseSpinor(self.half_width, regions)

    def wall_mismatch(self) -> float:
        """Largest jump of either component across x = -h or x = +h."""
        h = self.half_width
        worst = 0.0
        for left, right, x in ((0, 1, -h), (1, 2, h)):
            a = np.array(self.region_value(left, x))
            b = np.array(self.region_value(right, x))
            worst = max(worst, float(np.max(np.abs(a - b))))
        return worst
