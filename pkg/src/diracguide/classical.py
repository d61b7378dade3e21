"""Classical massless charges in square wells: regimes, refraction, rays.

Inside each region the potentials are constant, so trajectories are
straight lines with velocity (+-p_x, p_y) / |p|; only the interfaces
x = +-h refract or reflect.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BoundaryCase, ForbiddenRegime, NoLimit, NoRefraction
from .model import QuantumNumbers, WellConfig, WellKind, inner_momentum, outer_momentum

_REL = 1e-12


class RegimeTag(str, Enum):
    SCATTERING = "scattering"
    BOUND = "bound"
    TOTAL_REFLECTION = "total_reflection"
    FORBIDDEN = "forbidden"


class BoundDirection(str, Enum):
    DOWNWARD = "downward"  # k + a0 < 0
    UPWARD = "upward"  # k + a0 > 0


@dataclass(frozen=True)
class ClassicalRegime:
    tag: RegimeTag
    detail: BoundDirection | None = None


def _same(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=_REL, abs_tol=_REL)


def classify_electric(qn: QuantumNumbers, v0: float) -> ClassicalRegime:
    """Scattering for |E| > |k|; otherwise bound iff |E + v0| > |k|."""
    E, k = abs(qn.E), abs(qn.k)
    inner = abs(qn.E + v0)
    if _same(E, k):
        raise BoundaryCase(f"|E| = |k| = {k}")
    if E > k:
        return ClassicalRegime(RegimeTag.SCATTERING)
    if _same(inner, k):
        raise BoundaryCase(f"|E + v0| = |k| = {k}")
    if inner > k:
        return ClassicalRegime(RegimeTag.BOUND)
    return ClassicalRegime(RegimeTag.FORBIDDEN)


def classify_magnetic(qn: QuantumNumbers, a0: float) -> ClassicalRegime:
    E, k = abs(qn.E), abs(qn.k)
    ky = qn.k + a0
    inner = abs(ky)
    if _same(E, k):
        raise BoundaryCase(f"|E| = |k| = {k}")
    if _same(E, inner):
        raise BoundaryCase(f"|E| = |k + a0| = {inner}")
    if E > k and E > inner:
        return ClassicalRegime(RegimeTag.SCATTERING)
    if k < E < inner:
        return ClassicalRegime(RegimeTag.TOTAL_REFLECTION)
    if inner < E < k:
        detail = None if ky == 0 else (BoundDirection.DOWNWARD if ky < 0 else BoundDirection.UPWARD)
        return ClassicalRegime(RegimeTag.BOUND, detail)
    return ClassicalRegime(RegimeTag.FORBIDDEN)


def classify(qn: QuantumNumbers, well: WellConfig) -> ClassicalRegime:
    if well.is_electric:
        return classify_electric(qn, well.strength)
    return classify_magnetic(qn, well.strength)


@dataclass(frozen=True)
class AnglePair:
    alpha: float  # incidence, sign of k
    alpha_prime: float  # inside the well


def _incident(qn: QuantumNumbers):
    if not (qn.E > 0 and abs(qn.E) >= abs(qn.k)):
        raise ValueError(f"need E > 0 and |E| >= |k| for an incident particle (E={qn.E}, k={qn.k})")
    return math.asin(qn.k / qn.E)


def _refracted(num: float, den: float) -> float:
    if den == 0 or abs(num) > abs(den):
        raise NoRefraction(f"|sin alpha'| = |{num}/{den}| > 1")
    return math.asin(num / den)


def electric_angles(qn: QuantumNumbers, v0: float) -> AnglePair:
    """Snell-like refraction: E sin(alpha) = (E + v0) sin(alpha')."""
    return AnglePair(_incident(qn), _refracted(qn.k, qn.E + v0))


def magnetic_angles(qn: QuantumNumbers, a0: float) -> AnglePair:
    """sin(alpha) = k / E, sin(alpha') = (k + a0) / E; signs may differ."""
    return AnglePair(_incident(qn), _refracted(qn.k + a0, qn.E))


def max_angles(k: float, strength: float, kind) -> float:
    """Sine of the limiting angle.

    Electric: largest refraction angle inside the well, k / (k + v0).
    Magnetic: largest incidence angle that still transmits, k / (k + a0).
    """
    kind = WellKind(kind)
    den = k + strength
    if den == 0:
        raise ValueError("k + strength must be nonzero")
    ratio = k / den
    if abs(ratio) > 1:
        raise NoLimit(f"|k / (k + strength)| = {abs(ratio)} > 1")
    return ratio


# --------------------------------------------------------------------------
# ray tracing


class Termination(str, Enum):
    EXITED_RIGHT = "exited_right"
    EXITED_LEFT = "exited_left"
    TRUNCATED = "truncated_at_length"


@dataclass
class RayPath:
    vertices: np.ndarray  # (n, 2)
    segment_regimes: list  # region label per segment: "I", "II", "III"
    terminated: Termination

    @property
    def segments(self):
        return np.diff(self.vertices, axis=0)


def _region_momentum(qn: QuantumNumbers, well: WellConfig, region: str):
    """(p_x or None if forbidden, kinetic p_y) in a region."""
    if region == "II":
        p = inner_momentum(qn, well)
        py = well.inner_ky(qn.k)
    else:
        p = outer_momentum(qn)
        py = qn.k
    return (p.value if p.propagating else None), py


def trace_ray(
    qn: QuantumNumbers,
    well: WellConfig,
    start=(-2.0, 0.0),
    max_path_length: float = 20.0,
    direction: int = 1,
    tail: float | None = None,
) -> RayPath:
    """Event-driven polyline of a classical ray.

    ``direction`` is the initial sign of the x-velocity. After leaving the
    well outward the ray is continued for ``tail`` (default 2 h) and stops.
    """
    regime = classify(qn, well)
    if regime.tag is RegimeTag.FORBIDDEN:
        if well.is_electric:
            why = f"|E| < |k| and |E + v0| < |k| (E={qn.E}, k={qn.k}, v0={well.strength})"
        else:
            why = f"|E| < min(|k|, |k + a0|) (E={qn.E}, k={qn.k}, a0={well.strength})"
        raise ForbiddenRegime(f"classically forbidden everywhere: {why}")
    h = well.half_width
    tail = 2 * h if tail is None else tail
    x, y = map(float, start)
    if abs(x) == h:
        raise ValueError("start must not sit on an interface")
    region = well.region_of(x)
    px, py = _region_momentum(qn, well, region)
    if px is None:
        raise ForbiddenRegime(f"start point lies in classically forbidden region {region}")
    sx = 1 if direction >= 0 else -1

    vertices = [(x, y)]
    labels = []
    travelled = 0.0
    neighbours = {("I", 1): "II", ("II", -1): "I", ("II", 1): "III", ("III", -1): "II"}
    while True:
        px, py = _region_momentum(qn, well, region)
        speed = math.hypot(px, py)
        if speed == 0:
            raise ValueError("zero velocity")
        vx, vy = sx * px / speed, py / speed
        nxt = neighbours.get((region, sx))
        if nxt is None:
            # leaving outward
            step = min(tail, max_path_length - travelled)
            vertices.append((x + vx * step, y + vy * step))
            labels.append(region)
            term = Termination.EXITED_RIGHT if sx > 0 else Termination.EXITED_LEFT
            if step < tail:
                term = Termination.TRUNCATED
            break
        wall = sx * h if region == "II" else (-h if region == "I" else h)
        if vx == 0:
            step = max_path_length - travelled
        else:
            step = (wall - x) / vx
        if travelled + step >= max_path_length:
            step = max_path_length - travelled
            vertices.append((x + vx * step, y + vy * step))
            labels.append(region)
            term = Termination.TRUNCATED
            break
        x, y = wall, y + vy * step
        travelled += step
        vertices.append((x, y))
        labels.append(region)
        if _region_momentum(qn, well, nxt)[0] is None:
            sx = -sx  # turning point: specular bounce
        else:
            region = nxt
    return RayPath(np.array(vertices), labels, term)


# --------------------------------------------------------------------------
# region diagrams


def _check_grid(grid, name):
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError(f"{name} grid is empty")
    if g.size > 1 and not np.all(np.diff(g) > 0):
        raise ValueError(f"{name} grid must be strictly increasing")
    return g


def regime_grid(kind, fixed, E_grid, other_grid):
    """Regime tag (or None on a separatrix) at every (E, other) grid point.

    ``fixed`` is ("strength", value) for an (E, k) plane or ("k", value)
    for an (E, strength) plane. Grid values are cell centres.
    """
    kind = WellKind(kind)
    which, value = fixed
    if which not in ("strength", "k"):
        raise ValueError("fixed must name 'strength' or 'k'")
    E_grid = _check_grid(E_grid, "E")
    other_grid = _check_grid(other_grid, which == "strength" and "k" or "strength")
    out = np.empty((E_grid.size, other_grid.size), dtype=object)
    for i, E in enumerate(E_grid):
        for j, o in enumerate(other_grid):
            k, s = (o, value) if which == "strength" else (value, o)
            try:
                out[i, j] = classify(QuantumNumbers(float(E), float(k)), WellConfig(kind, s)).tag
            except BoundaryCase:
                out[i, j] = None
    return out


def region_mask(kind, fixed, E_grid, other_grid) -> np.ndarray:
    """Boolean mask of classically bound motion, shape (len(E_grid), len(other_grid))."""
    tags = regime_grid(kind, fixed, E_grid, other_grid)
    return np.vectorize(lambda t: t is RegimeTag.BOUND, otypes=[bool])(tags)
