"""Smoke tests for the python bindings."""

import math

import pytest

import wigner_entanglement as we


def test_lorentz_gamma():
    assert we.lorentz_gamma(0.0) == 1.0
    assert we.lorentz_gamma(0.6) == pytest.approx(1.25, abs=1e-12)
    assert math.isinf(we.lorentz_gamma(1.0))


def test_rapidity():
    assert we.rapidity(0.6) == pytest.approx(math.log(2.0), abs=1e-14)
    with pytest.raises(ValueError):
        we.rapidity(1.0)


def test_domain_errors_become_value_errors():
    with pytest.raises(ValueError):
        we.analyze(1.5, 0.0)
    with pytest.raises(ValueError):
        we.wigner_angle(-0.1, 0.5)


def test_wigner_angle():
    spot = 0.8660254037844386  # gamma = 2
    wa = we.wigner_angle(spot, spot)
    assert wa.cos_two_omega == pytest.approx(0.8, abs=1e-12)
    assert wa.sin_omega**2 == pytest.approx(0.1, abs=1e-12)
    assert wa.omega == pytest.approx(0.3217505543966422, abs=1e-12)
    # symmetric in the speeds
    ab = we.wigner_angle(0.6, 0.8)
    ba = we.wigner_angle(0.8, 0.6)
    assert ab.cos_two_omega == ba.cos_two_omega == pytest.approx(35.0 / 37.0, abs=1e-14)


def test_analyze_limits():
    rest = we.analyze(0.0, 0.0)
    assert rest.entanglement == 1.0
    assert rest.bell == pytest.approx(2.0 * math.sqrt(2.0), abs=1e-14)

    light = we.analyze(1.0, 1.0)
    assert light.cos_two_omega == 0.0
    assert light.entanglement == 0.0
    assert light.bell == 2.0
    assert light.concurrence == 1.0


def test_analyze_spot_point():
    spot = 0.8660254037844386
    rec = we.analyze(spot, spot)
    assert rec.entropy == pytest.approx(0.4689955935892812, abs=1e-12)
    assert rec.entanglement == pytest.approx(0.5310044064107188, abs=1e-12)
    assert rec.bell == pytest.approx(2.5612496949731395, abs=1e-12)
    assert rec.concurrence == pytest.approx(0.6, abs=1e-12)
    d = rec.as_dict()
    assert d["E"] == rec.entanglement
    assert d["cos2w"] == rec.cos_two_omega


def test_cnot_limit_fidelity():
    assert we.cnot_limit_fidelity(1.0, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert we.cnot_limit_fidelity(0.0, 0.0) == pytest.approx(0.5, abs=1e-12)


def test_run_sweep_shape_and_determinism():
    records = we.run_sweep(grid_n=11)
    assert len(records) == 121
    assert records[0].v1 == 0.0 and records[0].v2 == 0.0
    assert records[-1].v1 == 1.0 and records[-1].v2 == 1.0
    # v1 = 0 row stays maximally entangled
    assert all(r.entanglement == 1.0 for r in records[:11])

    serial = we.run_sweep(grid_n=11, threads=1)
    parallel = we.run_sweep(grid_n=11, threads=4)
    assert all(
        a.entanglement == b.entanglement and a.bell == b.bell
        for a, b in zip(serial, parallel)
    )


def test_sweep_csv():
    csv = we.sweep_csv(grid_n=5)
    lines = csv.strip().split("\n")
    assert lines[0] == "v1,v2,omega,cos2w,S,E,B,C"
    assert len(lines) == 26
    assert lines[1].startswith("0,0,")


def test_selftest_passes():
    results = we.selftest()
    assert len(results) >= 20
    failed = [r.name for r in results if not r.passed]
    assert failed == []
