"""Discrete symmetries of the reduced Dirac-Weyl Hamiltonian.

Each operation acts on sampled spinors and predicts how a spectrum and its
parameters transform. All comparisons are insensitive to a global phase.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from .model import WellConfig, WellKind
from .qbound import from_arrays, to_arrays


class SymmetryOp(str, Enum):
    REFLECT_X = "reflect_x"  # sigma_y R_x, any well
    CHIRAL_MAGNETIC = "chiral_magnetic"  # sigma_x R_x, E -> -E
    SIGN_FLIP_MAGNETIC = "sign_flip_magnetic"  # sigma_x, (k, a0) -> (-k, -a0)
    CHARGE_CONJ_ELECTRIC = "charge_conj_electric"  # sigma_z, (E, v0) -> (-E, -v0)
    K_FLIP_ELECTRIC = "k_flip_electric"  # sigma_y K, k -> -k

    @property
    def reflects(self) -> bool:
        return self in (SymmetryOp.REFLECT_X, SymmetryOp.CHIRAL_MAGNETIC)

    @property
    def kind(self) -> WellKind | None:
        if self in (SymmetryOp.CHIRAL_MAGNETIC, SymmetryOp.SIGN_FLIP_MAGNETIC):
            return WellKind.MAGNETIC
        if self in (SymmetryOp.CHARGE_CONJ_ELECTRIC, SymmetryOp.K_FLIP_ELECTRIC):
            return WellKind.ELECTRIC
        return None


def _reflected(x, psi1, psi2):
    order = np.argsort(x)
    x, psi1, psi2 = x[order], psi1[order], psi2[order]
    scale = max(1.0, float(np.max(np.abs(x)))) if x.size else 1.0
    if not np.allclose(x, -x[::-1], rtol=0, atol=1e-12 * scale):
        raise ValueError("reflection needs a grid symmetric about x = 0")
    return x, psi1[::-1], psi2[::-1]


def apply(op: SymmetryOp, samples):
    """Transformed samples of the spinor on the same x grid."""
    op = SymmetryOp(op)
    x, psi1, psi2 = to_arrays(samples)
    if op.reflects:
        x, psi1, psi2 = _reflected(x, psi1, psi2)
    if op is SymmetryOp.REFLECT_X:
        out = (-1j * psi2, 1j * psi1)
    elif op in (SymmetryOp.CHIRAL_MAGNETIC, SymmetryOp.SIGN_FLIP_MAGNETIC):
        out = (psi2, psi1)
    elif op is SymmetryOp.CHARGE_CONJ_ELECTRIC:
        out = (psi1, -psi2)
    else:
        # sigma_y alone does not map H(k) to H(-k); complex conjugation is needed
        c1, c2 = np.conj(psi1), np.conj(psi2)
        out = (-1j * c2, 1j * c1)
    return from_arrays(x, *out)


def spectrum_map(op: SymmetryOp, spectrum, params):
    """Predicted (spectrum, (k, well)) after the symmetry.

    ``params`` is a (k, WellConfig) pair. The returned spectrum is sorted.
    """
    op = SymmetryOp(op)
    k, well = params
    if op.kind is not None and op.kind is not well.kind:
        raise ValueError(f"{op.value} does not apply to a {well.kind.value} well")
    E = np.asarray(spectrum, dtype=float)
    if op is SymmetryOp.CHIRAL_MAGNETIC:
        return np.sort(-E), (k, well)
    if op is SymmetryOp.SIGN_FLIP_MAGNETIC:
        return np.sort(E), (-k, well.with_strength(-well.strength))
    if op is SymmetryOp.CHARGE_CONJ_ELECTRIC:
        return np.sort(-E), (k, well.with_strength(-well.strength))
    if op is SymmetryOp.K_FLIP_ELECTRIC:
        return np.sort(E), (-k, well)
    return np.sort(E), (k, well)


def mapped_energy(op: SymmetryOp, E: float) -> float:
    op = SymmetryOp(op)
    return -E if op in (SymmetryOp.CHIRAL_MAGNETIC, SymmetryOp.CHARGE_CONJ_ELECTRIC) else E


def overlap(a, b) -> float:
    """|<a, b>| / (|a| |b|) over the shared grid; 1 means equal up to phase."""
    _, a1, a2 = to_arrays(a)
    _, b1, b2 = to_arrays(b)
    va = np.concatenate([a1, a2])
    vb = np.concatenate([b1, b2])
    return float(abs(np.vdot(va, vb)) / (np.linalg.norm(va) * np.linalg.norm(vb)))


def phase_deviation(a, b) -> float:
    """max |a - e^{i phi} b| per sample, with phi chosen to align a and b."""
    _, a1, a2 = to_arrays(a)
    _, b1, b2 = to_arrays(b)
    va = np.concatenate([a1, a2])
    vb = np.concatenate([b1, b2])
    inner = np.vdot(vb, va)
    phase = inner / abs(inner) if abs(inner) > 0 else 1.0
    return float(np.max(np.abs(va - phase * vb))) if va.size else 0.0


def dirac_residual(samples, E: float, k: float, well: WellConfig, exclude: int = 2) -> float:
    """Finite-difference residual of (H - E) psi relative to max |psi|.

    Central differences; points within ``exclude`` grid steps of x = +-h are
    skipped because psi' jumps there.
    """
    x, psi1, psi2 = to_arrays(samples)
    if x.size < 3:
        raise ValueError("need at least three samples")
    dx = np.diff(x)
    h = well.half_width
    inside = np.abs(x) < h
    q = np.where(inside, well.inner_ky(k), k)
    V = np.where(inside, -well.strength, 0.0) if well.is_electric else np.zeros_like(x)
    d1 = (psi1[2:] - psi1[:-2]) / (x[2:] - x[:-2])
    d2 = (psi2[2:] - psi2[:-2]) / (x[2:] - x[:-2])
    c = slice(1, -1)
    r1 = -1j * d2 - 1j * q[c] * psi2[c] + (V[c] - E) * psi1[c]
    r2 = -1j * d1 + 1j * q[c] * psi1[c] + (V[c] - E) * psi2[c]
    margin = exclude * float(np.max(dx))
    keep = np.abs(np.abs(x[c]) - h) > margin
    scale = max(float(np.max(np.abs(psi1))), float(np.max(np.abs(psi2))))
    return float(max(np.max(np.abs(r1[keep])), np.max(np.abs(r2[keep]))) / scale)
