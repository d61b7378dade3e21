"""Bound and edge states of square electric and magnetic wells.

Bound energies are zeros of the determinant of the homogeneous 4x4 matching
system (decaying exterior waves, two interior waves). The determinant is
multiplied by a known phase so it is real, scanned for sign changes on
windows that avoid branch points, and bisected.
"""
from __future__ import annotations

import cmath
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import BranchPoint, RegimeError
from .model import (
    QuantumNumbers,
    TransverseMomentum,
    WellConfig,
    WellKind,
    inner_momentum,
    outer_momentum,
)
from .qscatter import resonance_branch
from .waves import PiecewiseSpinor, Wave, stable_column

log = logging.getLogger(__name__)

DEFAULT_GRID_POINTS = 2000
ROOT_TOL = 1e-12
# relative size of |eps^2 - q^2| treated as sitting on a branch point
BRANCH_EPS = 1e-13


class StateCharacter(str, Enum):
    STANDARD = "standard"
    EDGE = "edge"


@dataclass(frozen=True)
class BoundState:
    energy: float
    k: float
    well: WellConfig
    character: StateCharacter
    exterior_decay: float
    interior: TransverseMomentum

    @property
    def is_edge(self) -> bool:
        return self.character is StateCharacter.EDGE


class SpinorSample(tuple):
    """(x, psi1, psi2) at one grid point."""

    __slots__ = ()

    def __new__(cls, x, psi1, psi2):
        return super().__new__(cls, (float(x), complex(psi1), complex(psi2)))

    x = property(lambda self: self[0])
    psi1 = property(lambda self: self[1])
    psi2 = property(lambda self: self[2])


def to_arrays(samples):
    """Split a list of SpinorSample into (x, psi1, psi2) arrays."""
    if not samples:
        return np.empty(0), np.empty(0, complex), np.empty(0, complex)
    x, p1, p2 = zip(*samples)
    return np.array(x, float), np.array(p1, complex), np.array(p2, complex)


def from_arrays(x, psi1, psi2):
    return [SpinorSample(a, b, c) for a, b, c in zip(x, psi1, psi2)]


# --------------------------------------------------------------------------
# determinant


def _branch_points(k: float, well: WellConfig):
    s = well.strength
    if well.kind is WellKind.MAGNETIC:
        return (-abs(k + s), abs(k + s))
    return (-s - abs(k), -s + abs(k))


def _check_point(E: float, k: float, well: WellConfig):
    if not abs(E) < abs(k):
        raise RegimeError(f"bound states need |E| < |k| (E={E}, k={k})")
    if E == 0:
        raise RegimeError("E = 0 is excluded (lower components carry 1/E)")
    eps, q = well.inner_energy(E), well.inner_ky(k)
    if abs((eps - q) * (eps + q)) <= BRANCH_EPS * max(eps * eps, q * q, 1.0):
        raise BranchPoint(f"interior momentum vanishes at E={E}, k={k}")


def _layout(E, k, well: WellConfig, propagating: bool):
    """Columns and anchoring factor of the matching matrix (vectorised in E)."""
    E = np.asarray(E, dtype=float)
    h = well.half_width
    qx = np.sqrt((abs(k) - np.abs(E)) * (abs(k) + np.abs(E)))
    eps, q = well.inner_energy(E), well.inner_ky(k)
    d2 = (eps - q) * (eps + q)
    if propagating:
        lam = 1j * np.sqrt(np.maximum(d2, 0.0))
    else:
        lam = np.sqrt(np.maximum(-d2, 0.0))
    a = stable_column(E, k, qx)
    d = stable_column(E, k, -qx)
    p = stable_column(eps, q, lam)
    m = stable_column(eps, q, -lam)
    g = np.exp(-2 * lam * h)
    return qx, lam, a, d, p, m, g


def _wronskian(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _det_array(E, k, well: WellConfig, propagating: bool):
    """Realified, Hadamard-normalised matching determinant on one window."""
    qx, lam, a, d, p, m, g = _layout(E, k, well, propagating)
    det = g * g * _wronskian(a, p) * _wronskian(m, d) + _wronskian(a, m) * _wronskian(d, p)
    norm = (
        np.hypot(np.abs(a[0]), np.abs(a[1]))
        * np.hypot(np.abs(d[0]), np.abs(d[1]))
        * np.hypot(np.abs(p[0]), np.abs(p[1]))
        * np.hypot(np.abs(m[0]), np.abs(m[1]))
        * (1 + np.abs(g) ** 2)
    )
    if propagating:
        # det = -2i e^{-2ik'h} Im(...), so i e^{2ik'h} det is real
        det = 1j * det / g
    return det.real / norm


def _scalar_det(E: float, k: float, well: WellConfig, propagating: bool) -> float:
    """Pure-python twin of _det_array, used inside bisection loops."""
    h = well.half_width
    qx = math.sqrt((abs(k) - abs(E)) * (abs(k) + abs(E)))
    eps, q = well.inner_energy(E), well.inner_ky(k)
    d2 = (eps - q) * (eps + q)

    def col(e, qq, lam):
        if isinstance(lam, complex):
            return 1.0, 1j * (qq - lam) / e
        if abs(qq - lam) <= abs(qq + lam):
            return 1.0, 1j * e / (qq + lam)
        return e, 1j * (qq - lam)

    lam = 1j * math.sqrt(max(d2, 0.0)) if propagating else math.sqrt(max(-d2, 0.0))
    a, d = col(E, k, qx), col(E, k, -qx)
    p, m = col(eps, q, lam), col(eps, q, -lam)
    g = cmath.exp(-2 * lam * h) if propagating else math.exp(-2 * lam * h)
    det = g * g * _wronskian(a, p) * _wronskian(m, d) + _wronskian(a, m) * _wronskian(d, p)
    norm = (math.hypot(abs(a[0]), abs(a[1])) * math.hypot(abs(d[0]), abs(d[1]))
            * math.hypot(abs(p[0]), abs(p[1])) * math.hypot(abs(m[0]), abs(m[1]))
            * (1 + abs(g) ** 2))
    if propagating:
        det = 1j * det / g
    return complex(det).real / norm


def _interior_propagating(E: float, k: float, well: WellConfig) -> bool:
    return inner_momentum(QuantumNumbers(E, k), well).propagating


def bound_determinant(E: float, k: float, well: WellConfig) -> float:
    """Real, normalised determinant of the bound-state matching system.

    Zero exactly at bound energies, and it changes sign across simple ones.
    The value is divided by the product of the column norms, so it lies in
    [-1, 1].
    """
    _check_point(E, k, well)
    return _scalar_det(float(E), float(k), well, _interior_propagating(E, k, well))


def matching_matrix(E: float, k: float, well: WellConfig) -> np.ndarray:
    """The 4x4 matrix acting on (A, B, C, D) for the bound-state ansatz.

    psi_I = A e^{qx (x+h)} a, psi_II = B e^{lam (x-h)} p + C e^{-lam (x+h)} m,
    psi_III = D e^{-qx (x-h)} d.
    """
    _check_point(E, k, well)
    _, _, a, d, p, m, g = _layout(E, k, well, _interior_propagating(E, k, well))
    a, d, p, m = (np.array(c, dtype=complex).ravel() for c in (a, d, p, m))
    g = complex(g)
    M = np.zeros((4, 4), dtype=complex)
    M[0:2, 0] = a
    M[0:2, 1] = -g * p
    M[0:2, 2] = -m
    M[2:4, 1] = p
    M[2:4, 2] = g * m
    M[2:4, 3] = -d
    return M


# --------------------------------------------------------------------------
# root finding


def admissible_windows(k: float, well: WellConfig, E_window=None):
    """Split (-|k|, |k|) (or a sub-window) at E = 0 and the branch points."""
    band = abs(k)
    if E_window is None:
        lo, hi = -band, band
    else:
        lo, hi = map(float, E_window)
        if not (-band <= lo < hi <= band):
            raise RegimeError(f"window {E_window} is outside the bound band (-{band}, {band})")
    if hi <= lo:
        return []
    cuts = {lo, hi, 0.0, *_branch_points(k, well)}
    edges = sorted(c for c in cuts if lo <= c <= hi)
    return [(a, b) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def _scan_points(lo: float, hi: float, n: int) -> np.ndarray:
    width = hi - lo
    uniform = np.linspace(lo, hi, n + 2)[1:-1]
    # geometric refinement towards both ends catches states that hug a boundary
    offsets = width * np.logspace(math.log10(1.0 / (n + 1)), -10, 30)
    pts = np.concatenate([uniform, lo + offsets, hi - offsets])
    pts = pts[(pts > lo) & (pts < hi)]
    return np.unique(pts)


def _bisect(f, lo, hi, flo, tol):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _make_state(E: float, k: float, well: WellConfig) -> BoundState:
    qn = QuantumNumbers(E, k)
    interior = inner_momentum(qn, well)
    character = StateCharacter.STANDARD if interior.propagating else StateCharacter.EDGE
    return BoundState(float(E), float(k), well, character, outer_momentum(qn).value, interior)


def find_bound_states(
    k: float,
    well: WellConfig,
    E_window=None,
    grid_points: int = DEFAULT_GRID_POINTS,
    tol: float = ROOT_TOL,
) -> list[BoundState]:
    """All bound states with energy in E_window (default (-|k|, |k|)), ascending."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    k = float(k)
    states = []
    for lo, hi in admissible_windows(k, well, E_window):
        mid = 0.5 * (lo + hi)
        propagating = _interior_propagating(mid, k, well)
        grid = _scan_points(lo, hi, grid_points)
        values = _det_array(grid, k, well, propagating)
        sign = np.sign(values)
        for i in np.nonzero(sign[:-1] * sign[1:] < 0)[0]:
            f = lambda E: _scalar_det(E, k, well, propagating)  # noqa: E731
            root = _bisect(f, grid[i], grid[i + 1], values[i], tol)
            residual = abs(f(root))
            if residual > 1e-6 * max(abs(values[i]), abs(values[i + 1]), 1e-300) and residual > 1e-8:
                log.debug("discarding non-root sign change near E=%g (|det|=%g)", root, residual)
                continue
            states.append(_make_state(root, k, well))
        for i in np.nonzero(sign == 0)[0]:
            states.append(_make_state(float(grid[i]), k, well))
    states.sort(key=lambda s: s.energy)
    return states


def level_order(states) -> list[BoundState]:
    """States indexed ground first: by interior kinetic energy |E - V|, then by E.

    For a magnetic well this is |E|, so the symmetric pair closest to zero
    (edge states when present) comes first; for an electric well it is
    |E + v0|, which for a well (v0 > 0) is ascending energy.
    """
    return sorted(states, key=lambda s: (round(abs(s.well.inner_energy(s.energy)), 12), s.energy))


# --------------------------------------------------------------------------
# spectral curves


@dataclass
class SpectralCurve:
    sweep_parameter: str  # "k" or "strength"
    branch_id: int
    parameter: np.ndarray
    energy: np.ndarray
    characters: list = field(default_factory=list)

    @property
    def character(self) -> StateCharacter:
        edges = sum(c is StateCharacter.EDGE for c in self.characters)
        return StateCharacter.EDGE if edges > len(self.characters) / 2 else StateCharacter.STANDARD

    @property
    def samples(self):
        return list(zip(self.parameter.tolist(), self.energy.tolist()))


def _slice(args):
    k, well, grid_points = args
    return find_bound_states(k, well, grid_points=grid_points)


def _link(sweep: str, params, slices) -> list[SpectralCurve]:
    """Nearest-energy continuation of roots across ordered slices."""
    branches = []  # lists of (param, energy, character)
    active = []
    for p, states in zip(params, slices):
        candidates = []
        for b in active:
            pts = branches[b]
            p1, e1, _ = pts[-1]
            slope = (e1 - pts[-2][1]) / (p1 - pts[-2][0]) if len(pts) > 1 else 1.0
            pred = e1 + slope * (p - p1)
            thresh = 5 * abs(p - p1) * max(abs(slope), 1.0)
            for j, s in enumerate(states):
                dist = abs(s.energy - pred)
                if dist < thresh:
                    candidates.append((dist, b, j))
        candidates.sort()
        used_b, used_j, next_active = set(), set(), []
        for _, b, j in candidates:
            if b in used_b or j in used_j:
                continue
            used_b.add(b)
            used_j.add(j)
            branches[b].append((p, states[j].energy, states[j].character))
            next_active.append(b)
        for j, s in enumerate(states):
            if j not in used_j:
                branches.append([(p, s.energy, s.character)])
                next_active.append(len(branches) - 1)
        active = next_active
    curves = []
    for i, pts in enumerate(branches):
        ps, es, cs = zip(*pts)
        curves.append(SpectralCurve(sweep, i, np.array(ps), np.array(es), list(cs)))
    return curves


def spectral_curves(
    sweep: str,
    fixed_value: float,
    sweep_grid,
    well_kind,
    half_width: float = 1.0,
    grid_points: int = 400,
    jobs: int = 1,
) -> list[SpectralCurve]:
    """Bound energies along a k- or strength-sweep, linked into branches.

    sweep="k": strength is fixed_value; sweep="strength": k is fixed_value.
    """
    if sweep not in ("k", "strength"):
        raise ValueError("sweep must be 'k' or 'strength'")
    params = np.asarray(sweep_grid, dtype=float)
    if params.size > 1 and not (np.all(np.diff(params) > 0) or np.all(np.diff(params) < 0)):
        raise ValueError("sweep grid must be monotone")
    kind = WellKind(well_kind)
    if sweep == "k":
        tasks = [(p, WellConfig(kind, fixed_value, half_width), grid_points) for p in params]
    else:
        tasks = [(fixed_value, WellConfig(kind, p, half_width), grid_points) for p in params]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            slices = list(pool.map(_slice, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        slices = [_slice(t) for t in tasks]
    return _link(sweep, params, slices)


@dataclass
class ResonanceCurve:
    n: int
    sign: int  # which square-root branch
    k: np.ndarray
    energy: np.ndarray  # NaN where |E| <= |k|

    def endpoints(self):
        """(k, E) samples at the ends of each contiguous run of valid points."""
        valid = ~np.isnan(self.energy)
        out = []
        for i in np.nonzero(valid)[0]:
            left_open = i == 0 or not valid[i - 1]
            right_open = i == len(valid) - 1 or not valid[i + 1]
            if (left_open and i > 0) or (right_open and i < len(valid) - 1):
                out.append((float(self.k[i]), float(self.energy[i])))
        return out


@dataclass
class JoinDataset:
    well_kind: WellKind
    strength: float
    k_grid: np.ndarray
    bound: list
    resonances: list

    @property
    def empty(self) -> bool:
        return not self.bound and not any(np.any(~np.isnan(r.energy)) for r in self.resonances)

    def crossings(self):
        """Bound-branch ends at the |E| = |k| line, each with its nearest resonance end.

        A branch end counts when it is within one k step of the line or its
        linear extrapolation to the next k sample leaves the bound band,
        provided it is not at the edge of the k grid and not heading into the
        E = 0, k = 0 corner (no resonance locus reaches it). Returns a list of
        (branch_id, (k, E) bound end, (k, E) resonance end or None).
        """
        if self.k_grid.size < 2:
            return []
        dk = float(np.min(np.abs(np.diff(self.k_grid))))
        kmin, kmax = float(self.k_grid.min()), float(self.k_grid.max())
        res_ends = [e for r in self.resonances for e in r.endpoints()]
        out = []
        for c in self.bound:
            n = len(c.parameter)
            for i, j in [(0, 1), (n - 1, n - 2)] if n > 1 else [(0, 0)]:
                k, E = float(c.parameter[i]), float(c.energy[i])
                if k in (kmin, kmax) or abs(E) <= dk:
                    continue
                leaves = False
                if i != j:
                    step = k - float(c.parameter[j])
                    slope = (E - float(c.energy[j])) / step
                    leaves = abs(E + slope * step) >= abs(k + step)
                if abs(k) - abs(E) > dk and not leaves:
                    continue
                # chebyshev distance: one grid step in each direction
                near = min(res_ends, key=lambda p: max(abs(p[0] - k), abs(p[1] - E)), default=None)
                out.append((c.branch_id, (k, E), near))
        return out


def resonance_curve(n: int, sign: int, k_grid, well: WellConfig) -> ResonanceCurve:
    k = np.asarray(k_grid, dtype=float)
    E = resonance_branch(n, sign, k, well)
    E = np.where(np.abs(E) > np.abs(k), E, np.nan)
    return ResonanceCurve(n, sign, k, E)


def join_resonance_bound_plot_data(
    well_kind,
    strength: float,
    k_grid,
    n_max: int = 6,
    half_width: float = 1.0,
    grid_points: int = 400,
    jobs: int = 1,
) -> JoinDataset:
    """Bound branches (|E| < |k|) and T = 1 resonance loci (|E| > |k|) on one k grid."""
    kind = WellKind(well_kind)
    k_grid = np.asarray(k_grid, dtype=float)
    if strength == 0:
        return JoinDataset(kind, strength, k_grid, [], [])
    well = WellConfig(kind, strength, half_width)
    bound = spectral_curves("k", strength, k_grid, kind, half_width, grid_points, jobs)
    resonances = [
        resonance_curve(n, sign, k_grid, well) for n in range(1, n_max + 1) for sign in (-1, 1)
    ]
    return JoinDataset(kind, strength, k_grid, bound, resonances)


# --------------------------------------------------------------------------
# wavefunctions


def bound_wavefunction(state: BoundState) -> PiecewiseSpinor:
    """Piecewise spinor from the null vector of the matching matrix.

    Phase fixed so psi1(-h) is real and positive; not normalised.
    """
    well, E, k = state.well, state.energy, state.k
    h = well.half_width
    M = matching_matrix(E, k, well)
    _, _, vh = np.linalg.svd(M)
    A, B, C, D = vh[-1].conj()
    qx, lam, a, d, p, m, _ = _layout(E, k, well, state.interior.propagating)
    col = lambda c: tuple(complex(np.asarray(v).item()) for v in c)  # noqa: E731
    qx, lam = float(qx), complex(lam) if state.interior.propagating else float(lam)
    psi = PiecewiseSpinor(h)
    psi.regions[0] = [Wave(A, qx, -h, col(a))]
    psi.regions[1] = [Wave(B, lam, h, col(p)), Wave(C, -lam, -h, col(m))]
    psi.regions[2] = [Wave(D, -qx, h, col(d))]
    v1, v2 = psi.region_value(0, -h)
    ref = complex(v1) if abs(v1) > 1e-12 * abs(v2) else complex(v2)
    return psi.scaled(abs(ref) / ref)


def sample_wavefunction(state: BoundState, x_grid) -> list[SpinorSample]:
    """Bound spinor on x_grid, normalised so trapz(|psi1|^2 + |psi2|^2) = 1."""
    x = np.asarray(x_grid, dtype=float)
    if x.size == 0:
        raise ValueError("empty x grid")
    psi1, psi2 = bound_wavefunction(state)(x)
    if x.size > 1:
        norm = math.sqrt(np.trapezoid(np.abs(psi1) ** 2 + np.abs(psi2) ** 2, x))
        psi1, psi2 = psi1 / norm, psi2 / norm
    return from_arrays(x, psi1, psi2)
