"""Quantum scattering off a square electric or magnetic well.

The engine is the direct 4x4 matching solve; the closed-form amplitudes
are kept as independent validators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import RegimeError, SingularMatching
from .model import (
    QuantumNumbers,
    WellConfig,
    WellKind,
    inner_momentum,
    outer_momentum,
)
from .waves import BasisSpinor, PiecewiseSpinor, Wave, lower_component, stable_column

SINGULAR_CONDITION = 1e13


@dataclass(frozen=True)
class ScatteringResult:
    r: complex
    t: complex
    wavefunction: PiecewiseSpinor = field(repr=False, compare=False, default=None)

    @property
    def R(self) -> float:
        return abs(self.r)

    @property
    def T(self) -> float:
        return abs(self.t)

    @property
    def probability_check(self) -> float:
        return abs(self.r) ** 2 + abs(self.t) ** 2


def outer_basis(qn: QuantumNumbers, sign: int) -> BasisSpinor:
    """Plane wave e^{+-i k_x x} (1, (+-k_x + i k)/E) outside the well."""
    kx = outer_momentum(qn).value
    lam = sign * 1j * kx
    return BasisSpinor(lam, lower_component(qn.E, qn.k, lam))


def inner_basis(qn: QuantumNumbers, well: WellConfig, sign: int) -> BasisSpinor:
    """Interior basis wave with phi1 = 1; oscillating or growing/decaying."""
    p = inner_momentum(qn, well)
    lam = sign * p.exponent
    return BasisSpinor(lam, lower_component(well.inner_energy(qn.E), well.inner_ky(qn.k), lam))


def _require_scattering(qn: QuantumNumbers):
    if not abs(qn.E) > abs(qn.k):
        raise RegimeError(
            f"no asymptotic plane waves for |E| <= |k| (E={qn.E}, k={qn.k})"
        )


def solve_scattering(qn: QuantumNumbers, well: WellConfig) -> ScatteringResult:
    """Reflection and transmission amplitudes from the matching conditions.

    Ansatz: psi_I = e^{i kx x} u+ + r e^{-i kx x} u-, psi_II = A, B waves,
    psi_III = t e^{i kx x} u+, with continuity of both components at x = +-h.
    """
    _require_scattering(qn)
    E, k, h = qn.E, qn.k, well.half_width
    kx = outer_momentum(qn).value
    lam_in = inner_momentum(qn, well).exponent
    eps, q = well.inner_energy(E), well.inner_ky(k)

    up = np.array([1.0, lower_component(E, k, 1j * kx)])
    um = np.array([1.0, lower_component(E, k, -1j * kx)])
    cp = np.array(stable_column(eps, q, lam_in)).ravel()
    cm = np.array(stable_column(eps, q, -lam_in)).ravel()
    # interior waves anchored so that |e^{lam (x - anchor)}| <= 1 inside
    g = np.exp(-2 * lam_in * h)

    M = np.zeros((4, 4), dtype=complex)
    b = np.zeros(4, dtype=complex)
    M[0:2, 0] = np.exp(1j * kx * h) * um
    M[0:2, 1] = -g * cp
    M[0:2, 2] = -cm
    b[0:2] = -np.exp(-1j * kx * h) * up
    M[2:4, 1] = cp
    M[2:4, 2] = g * cm
    M[2:4, 3] = -np.exp(1j * kx * h) * up

    cond = np.linalg.cond(M)
    if not cond < SINGULAR_CONDITION:
        raise SingularMatching(f"matching matrix is singular at E={E}, k={k}", cond)
    r, A, B, t = np.linalg.solve(M, b)

    psi = PiecewiseSpinor(h)
    psi.regions[0] = [Wave(1.0, 1j * kx, 0.0, tuple(up)), Wave(r, -1j * kx, 0.0, tuple(um))]
    psi.regions[1] = [Wave(A, lam_in, h, tuple(cp)), Wave(B, -lam_in, -h, tuple(cm))]
    psi.regions[2] = [Wave(t, 1j * kx, 0.0, tuple(up))]
    return ScatteringResult(complex(r), complex(t), psi)


def _closed_form(E, k, kx, eps, q, h, coupling):
    d2 = (eps - q) * (eps + q)
    phase = np.exp(-2j * kx * h)
    if d2 >= 0:
        kp = math.sqrt(d2)
        # sin(2 kp h) / kp, finite at kp = 0
        s = 2 * h * np.sinc(2 * kp * h / math.pi)
        c = math.cos(2 * kp * h)
    else:
        kappa = math.sqrt(-d2)
        s = math.sinh(2 * kappa * h) / kappa
        c = math.cosh(2 * kappa * h)
    return complex(phase * kx / (kx * c - 1j * coupling * s))


def closed_form_t_magnetic(qn: QuantumNumbers, a0: float, half_width: float = 1.0) -> complex:
    """t = e^{-2i kx h} kx k'x / (kx k'x cos 2k'x h - i (E^2 - k(k+a0)) sin 2k'x h).

    For |E| < |k + a0| the cos/sin become cosh/sinh of 2 kappa h with
    kappa = sqrt((k+a0)^2 - E^2).
    """
    _require_scattering(qn)
    E, k = qn.E, qn.k
    kx = outer_momentum(qn).value
    return _closed_form(E, k, kx, E, k + a0, half_width, E * E - k * (k + a0))


def closed_form_t_electric(qn: QuantumNumbers, v0: float, half_width: float = 1.0) -> complex:
    """Electric analogue with coupling E (E + v0) - k^2 and k'x^2 = (E+v0)^2 - k^2."""
    _require_scattering(qn)
    E, k = qn.E, qn.k
    kx = outer_momentum(qn).value
    return _closed_form(E, k, kx, E + v0, k, half_width, E * (E + v0) - k * k)


def closed_form_t(qn: QuantumNumbers, well: WellConfig) -> complex:
    if well.is_electric:
        return closed_form_t_electric(qn, well.strength, well.half_width)
    return closed_form_t_magnetic(qn, well.strength, well.half_width)


@dataclass
class TransmissionCurve:
    k: float
    well: WellConfig
    alpha: np.ndarray
    energy: np.ndarray
    T: np.ndarray
    R: np.ndarray
    probability: np.ndarray
    classical_limit: float | None  # sin(alpha_max), None if every angle transmits


def _classical_limit_sine(k: float, well: WellConfig):
    if well.is_electric:
        return None
    denom = k + well.strength
    if denom == 0:
        return None
    ratio = k / denom
    return ratio if abs(ratio) <= 1 else None


def _sweep(k, well, energies, alphas):
    T = np.full(len(energies), np.nan)
    R = np.full(len(energies), np.nan)
    P = np.full(len(energies), np.nan)
    for i, E in enumerate(energies):
        try:
            res = solve_scattering(QuantumNumbers(float(E), k), well)
        except RegimeError:
            continue
        T[i], R[i], P[i] = res.T, res.R, res.probability_check
    return TransmissionCurve(k, well, np.asarray(alphas, float), np.asarray(energies, float),
                             T, R, P, _classical_limit_sine(k, well))


def transmission_vs_angle(k: float, well: WellConfig, alpha_grid) -> TransmissionCurve:
    """T = |t| against incidence angle, with |E| = |k| / sin(alpha) > 0.

    Points where the matching is singular come back as NaN.
    """
    if k == 0:
        raise ValueError("k must be nonzero for an angle sweep")
    alpha = np.asarray(alpha_grid, dtype=float)
    if alpha.size == 0:
        raise ValueError("empty alpha grid")
    if np.any(alpha <= 0) or np.any(alpha > math.pi / 2):
        raise ValueError("alpha must lie in (0, pi/2]")
    energies = abs(k) / np.sin(alpha)
    return _sweep(k, well, energies, alpha)


def transmission_vs_energy(k: float, well: WellConfig, energy_grid) -> TransmissionCurve:
    """T against energy; entries with |E| <= |k| or singular matching are NaN."""
    energies = np.asarray(energy_grid, dtype=float)
    if energies.size == 0:
        raise ValueError("empty energy grid")
    with np.errstate(divide="ignore", invalid="ignore"):
        alpha = np.where(np.abs(energies) > abs(k), np.arcsin(np.clip(k / np.abs(energies), -1, 1)), np.nan)
    return _sweep(k, well, energies, alpha)


def resonance_branch(n: int, sign: int, k, well: WellConfig):
    """Energy with 2 k'x h = n pi on the sign branch; vectorised in k, unfiltered."""
    kp = n * math.pi / (2 * well.half_width)
    if well.kind is WellKind.MAGNETIC:
        return sign * np.hypot(kp, np.add(k, well.strength))
    return -well.strength + sign * np.hypot(kp, k)


def resonance_energies(k: float, well: WellConfig, n_max: int) -> list[float]:
    """Energies with 2 k'x h = n pi, n = 1..n_max, that lie in the scattering band."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        for sign in (-1, 1):
            E = float(resonance_branch(n, sign, k, well))
            if abs(E) > abs(k):
                out.append(E)
    return sorted(out)
