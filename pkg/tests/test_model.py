import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diracguide import (
    Character,
    QuantumNumbers,
    Region,
    WellConfig,
    WellKind,
    electric,
    inner_momentum,
    magnetic,
    outer_momentum,
)

reals = st.floats(-20, 20, allow_nan=False)


def test_outer_momentum_examples():
    p = outer_momentum(QuantumNumbers(2, 1))
    assert p.character is Character.PROPAGATING and p.region is Region.OUTER
    assert p.value == pytest.approx(math.sqrt(3), abs=1e-15)
    p = outer_momentum(QuantumNumbers(1, 1))
    assert p.propagating and p.value == 0.0
    p = outer_momentum(QuantumNumbers(0.5, 1))
    assert p.character is Character.EVANESCENT
    assert p.value == pytest.approx(math.sqrt(0.75), abs=1e-15)


def test_inner_momentum_examples():
    p = inner_momentum(QuantumNumbers(2, 1), magnetic(1))
    assert p.propagating and p.value == 0.0 and p.region is Region.INNER
    p = inner_momentum(QuantumNumbers(1.5, -2), magnetic(1))
    assert p.propagating and p.value == pytest.approx(math.sqrt(1.25), abs=1e-15)
    p = inner_momentum(QuantumNumbers(0, 2.5), electric(4))
    assert p.propagating and p.value == pytest.approx(math.sqrt(9.75), abs=1e-15)


@given(reals, reals, reals, st.sampled_from(list(WellKind)))
def test_value_squared_is_the_gap(E, k, s, kind):
    well = WellConfig(kind, s)
    eps, q = well.inner_energy(E), well.inner_ky(k)
    p = inner_momentum(QuantumNumbers(E, k), well)
    assert p.value >= 0
    assert p.value ** 2 == pytest.approx(abs(eps * eps - q * q), rel=1e-12, abs=1e-12)
    assert p.propagating == (abs(eps) >= abs(q))


@given(reals, reals, st.sampled_from(list(WellKind)))
def test_zero_strength_inner_equals_outer(E, k, kind):
    qn = QuantumNumbers(E, k)
    a = inner_momentum(qn, WellConfig(kind, 0.0))
    b = outer_momentum(qn)
    assert (a.value, a.character) == (b.value, b.character)


def test_well_config_validation():
    with pytest.raises(ValueError):
        WellConfig("electric", 1.0, half_width=0)
    with pytest.raises(ValueError):
        WellConfig("magnetic", float("nan"))
    with pytest.raises(ValueError):
        WellConfig("gravitational", 1.0)
    w = WellConfig("magnetic", 2, 0.5)
    assert w.kind is WellKind.MAGNETIC and w.strength == 2.0
    assert [w.region_of(x) for x in (-0.6, -0.5, 0.5, 0.6)] == ["I", "II", "II", "III"]


def test_exponent_types():
    prop = outer_momentum(QuantumNumbers(2, 1))
    ev = outer_momentum(QuantumNumbers(0.5, 1))
    assert prop.exponent == 1j * prop.value
    assert isinstance(ev.exponent, float)
