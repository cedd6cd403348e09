"""Smoke tests for the python bindings: import, a couple of exact anchors,
and a tiny end-to-end sweep. Heavy numerics live in the C++ test suites."""

import math

import pytest

import hc2d


def test_version():
    assert hc2d.__version__ == "1.0.0"


def test_special_functions():
    assert hc2d.gamma(5.0) == pytest.approx(24.0, rel=1e-14)
    assert hc2d.digamma(1.0) == pytest.approx(-0.5772156649015329, rel=1e-13)
    m = hc2d.kummer_m(1.0, 2, 0.5)
    # M(1, 2, z) = (e^z - 1) / z
    assert m.value == pytest.approx((math.exp(0.5) - 1.0) / 0.5, rel=1e-13)
    u = hc2d.kummer_u_intb(-2.0, 1, 1.0)
    # U(-2, 1, z) degenerates to 2 L_2(z) = z^2 - 4 z + 2
    assert u.value == pytest.approx(-1.0, rel=1e-12)
    with pytest.raises(ValueError):
        hc2d.kummer_u_intb(-2.0, 1, -1.0)


def test_exact_anchor_state():
    state = hc2d.solve_state(hc2d.QuantumLabel(0, 1), math.sqrt(2.0))
    assert state.m == pytest.approx(1.0, abs=1e-11)
    assert state.energy == pytest.approx(3.0, abs=1e-10)

    profile = hc2d.build_profile(state)
    assert profile.node_count == 0
    assert profile.R_values[0] == 0.0
    assert profile.radial(math.sqrt(2.0)) == 0.0

    split = hc2d.energy_split(profile)
    assert split.kinetic == pytest.approx(1.0, rel=1e-8)
    assert split.potential == pytest.approx(2.0, rel=1e-8)

    frho = hc2d.fisher_density(profile)
    assert frho.value == pytest.approx(4.0, rel=1e-8)


def test_parameter_qfi():
    qfi = hc2d.fisher_parameter_refined(hc2d.QuantumLabel(0, 1), 1.0)
    assert qfi.value > 0.0
    assert qfi.kind == hc2d.QfiKind.parameter
    with pytest.raises(ValueError):
        hc2d.fisher_parameter(hc2d.QuantumLabel(0, 1), 1.0, 0.5)


def test_small_scan_and_crossing():
    labels = [hc2d.QuantumLabel(0, 2), hc2d.QuantumLabel(4, 1)]
    grid = hc2d.linspace_grid(1.0, 1.2, 6)
    table = hc2d.scan(labels, grid, 2)
    assert len(table.energies) == 6
    assert len(table.energies[0]) == 2

    events = hc2d.detect_crossings(table)
    assert len(events) == 1
    assert events[0].r0_star == pytest.approx(1.093424658339316, abs=1e-6)


def test_oracle_agreement():
    state = hc2d.solve_state(hc2d.QuantumLabel(0, 1), 2.0)
    config = hc2d.OracleConfig()
    config.h = 2e-3
    fd = hc2d.fd_eigenvalues(0, 2.0, config)
    assert fd[0].energy == pytest.approx(state.energy, abs=1e-4)
