import numpy as np
import pytest

from diracguide.model import electric, magnetic
from diracguide.qbound import find_bound_states, from_arrays, sample_wavefunction, to_arrays
from diracguide.symmetry import (
    SymmetryOp,
    apply,
    dirac_residual,
    mapped_energy,
    phase_deviation,
    spectrum_map,
)

X = np.linspace(-3, 3, 6001)  # spacing 1e-3

CASES = {
    SymmetryOp.REFLECT_X: [(2.5, electric(4)), (-3, magnetic(4)), (1.5, magnetic(-2))],
    SymmetryOp.CHIRAL_MAGNETIC: [(-3, magnetic(4)), (2, magnetic(-3.5)), (-1.5, magnetic(2.5))],
    SymmetryOp.SIGN_FLIP_MAGNETIC: [(-3, magnetic(4)), (2, magnetic(-3.5)), (-4, magnetic(6))],
    SymmetryOp.CHARGE_CONJ_ELECTRIC: [(2.5, electric(4)), (-3, electric(2)), (4, electric(-5))],
    SymmetryOp.K_FLIP_ELECTRIC: [(2.5, electric(4)), (-3, electric(2)), (4, electric(-5))],
}


def spectrum(k, well):
    return np.array([s.energy for s in find_bound_states(k, well)])


@pytest.mark.parametrize("op", list(SymmetryOp))
def test_spectrum_maps(op):
    for k, well in CASES[op]:
        S = spectrum(k, well)
        assert S.size
        predicted, (k2, well2) = spectrum_map(op, S, (k, well))
        actual = spectrum(k2, well2)
        assert actual.shape == predicted.shape
        assert np.max(np.abs(actual - predicted)) < 1e-8


def test_spectrum_map_examples():
    S = [-1.12, -0.27, 0.76, 1.83]
    pred, (k, w) = spectrum_map(SymmetryOp.CHARGE_CONJ_ELECTRIC, S, (2.5, electric(4)))
    assert np.allclose(pred, [-1.83, -0.76, 0.27, 1.12]) and (k, w.strength) == (2.5, -4)
    pred, (k, w) = spectrum_map(SymmetryOp.K_FLIP_ELECTRIC, S, (2.5, electric(4)))
    assert np.allclose(pred, S) and k == -2.5
    pred, (k, w) = spectrum_map(SymmetryOp.CHIRAL_MAGNETIC, [0.2, 2.0], (-3, magnetic(4)))
    assert np.allclose(pred, [-2.0, -0.2]) and (k, w.strength) == (-3, 4)
    with pytest.raises(ValueError):
        spectrum_map(SymmetryOp.CHIRAL_MAGNETIC, S, (2.5, electric(4)))


@pytest.mark.parametrize("op", list(SymmetryOp))
def test_eigenstates_transported(op):
    for k, well in CASES[op]:
        _, (k2, well2) = spectrum_map(op, [], (k, well))
        for s in find_bound_states(k, well):
            samples = sample_wavefunction(s, X)
            assert dirac_residual(samples, s.energy, k, well) < 1e-4
            image = apply(op, samples)
            assert dirac_residual(image, mapped_energy(op, s.energy), k2, well2) < 1e-4


@pytest.mark.parametrize("op", list(SymmetryOp))
def test_involution(op, rng):
    x = np.linspace(-2, 2, 41)
    psi = rng.normal(size=(2, 41)) + 1j * rng.normal(size=(2, 41))
    samples = from_arrays(x, *psi)
    assert phase_deviation(apply(op, apply(op, samples)), samples) < 1e-12


def test_reflection_needs_symmetric_grid():
    samples = from_arrays(np.linspace(-1, 2, 5), np.ones(5), np.ones(5))
    with pytest.raises(ValueError):
        apply(SymmetryOp.REFLECT_X, samples)
    # non-reflecting ops are fine
    apply(SymmetryOp.CHARGE_CONJ_ELECTRIC, samples)


def test_plain_sigma_y_does_not_flip_k():
    s = find_bound_states(2.5, electric(4))[0]
    samples = sample_wavefunction(s, X)
    _, p1, p2 = to_arrays(samples)
    plain = from_arrays(X, -1j * p2, 1j * p1)
    assert dirac_residual(plain, s.energy, -2.5, electric(4)) > 0.1
    assert dirac_residual(apply(SymmetryOp.K_FLIP_ELECTRIC, samples), s.energy, -2.5, electric(4)) < 1e-4
