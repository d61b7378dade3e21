"""Fast self-checks behind `diracguide verify`.

Each check returns (name, ok, detail). They are cheap versions of the test
suite invariants, meant for a quick sanity pass on an installed copy.
"""
from __future__ import annotations

import math

import numpy as np

from .model import QuantumNumbers, electric, magnetic
from .qbound import find_bound_states
from .qscatter import closed_form_t, resonance_energies, solve_scattering


def check_electric_levels():
    states = find_bound_states(2.5, electric(4.0))
    got = [s.energy for s in states]
    ref = [-1.12, -0.27, 0.76, 1.83]
    ok = len(got) == 4 and all(abs(a - b) <= 0.02 for a, b in zip(got, ref))
    return "electric levels v0=4 k=2.5", ok, " ".join(f"{e:.4f}" for e in got)


def check_magnetic_edges():
    states = find_bound_states(-3.0, magnetic(4.0))
    edges = [s for s in states if s.is_edge]
    ok = len(states) == 4 and len(edges) == 2 and all(abs(s.energy) < 1 for s in edges)
    return "magnetic edge pair a0=4 k=-3", ok, " ".join(f"{s.energy:.4f}:{s.character.value}" for s in states)


def check_unitarity():
    worst = 0.0
    for well in (electric(1.0), electric(8.0), magnetic(1.0), magnetic(4.0)):
        for E in np.linspace(1.1, 9.0, 12):
            for k in np.linspace(-1.0, 1.0, 7):
                res = solve_scattering(QuantumNumbers(E, k), well)
                worst = max(worst, abs(res.probability_check - 1.0))
    return "unitarity", worst < 1e-10, f"max deviation {worst:.2e}"


def check_closed_forms():
    worst = 0.0
    for well in (electric(8.0), electric(0.5), magnetic(4.0), magnetic(0.5)):
        for E in np.linspace(1.2, 7.0, 9):
            qn = QuantumNumbers(E, 1.0)
            worst = max(worst, abs(closed_form_t(qn, well) - solve_scattering(qn, well).t))
    return "closed forms vs matching", worst < 1e-10, f"max |dt| {worst:.2e}"


def check_klein():
    worst = max(
        abs(abs(solve_scattering(QuantumNumbers(E, 0.0), electric(v0)).t) - 1.0)
        for E in (0.3, 2.0, 7.0)
        for v0 in (0.5, 4.0, 20.0)
    )
    return "Klein tunnelling at k=0", worst < 1e-10, f"max ||t|-1| {worst:.2e}"


def check_resonances():
    well = magnetic(4.0)
    energies = [e for e in resonance_energies(1.0, well, 5) if e > 0]
    worst = max(abs(abs(solve_scattering(QuantumNumbers(e, 1.0), well).t) - 1.0) for e in energies)
    expected = [math.sqrt((n * math.pi / 2) ** 2 + 25) for n in range(1, 6)]
    ok = worst < 1e-8 and np.allclose(energies, expected, rtol=0, atol=1e-12)
    return "magnetic resonances a0=4 k=1", ok, f"max ||t|-1| {worst:.2e}"


CHECKS = (
    check_electric_levels,
    check_magnetic_edges,
    check_unitarity,
    check_closed_forms,
    check_klein,
    check_resonances,
)


def run_checks():
    return [check() for check in CHECKS]
