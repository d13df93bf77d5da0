import json
import math

import pytest

import icrf


@pytest.fixture
def vsi_params():
    p = icrf.NetworkParams()
    p.a11, p.a22, p.a31, p.a32 = 0.42, 0.25, 0.26, 0.1
    p.a12 = p.a21 = 0.7
    p.a13 = p.a23 = 0.5
    p.p1 = p.p2 = p.p3 = 10.0
    return p


def test_exponential_integral_values():
    assert icrf.e1(1.0) == pytest.approx(0.21938393439552, rel=1e-10)
    assert icrf.e1_scaled(1.0) == pytest.approx(0.59634736232319, rel=1e-10)
    with pytest.raises(Exception):
        icrf.e1(0.0)


def test_classification_and_region(vsi_params):
    assert icrf.classify("full_to_relay", "phase", vsi_params) == "vsi"
    region = icrf.build_region("full_to_relay", "vsi", "phase", vsi_params)
    assert region.is_capacity
    corners = [tuple(v) for v in region.vertices]
    assert any(
        math.isclose(r1, 1.7824, abs_tol=1e-3) and math.isclose(r2, 0.7866, abs_tol=1e-3)
        for r1, r2 in corners
    )
    assert region.contains(1.0, 0.5)
    assert not region.contains(2.0, 0.5)


def test_condition_report_entries(vsi_params):
    rep = icrf.check_vsi("full_to_relay", "phase", vsi_params)
    assert rep.satisfied
    assert [e.name for e in rep.entries] == ["vsi_rx2_decodes_tx1", "vsi_rx1_decodes_tx2"]
    assert rep.entries[0].lhs == pytest.approx(2.44)


def test_channel_sampling_is_deterministic(vsi_params):
    a = icrf.sample_channel("rayleigh", vsi_params, seed=1, index=5)
    b = icrf.sample_channel("rayleigh", vsi_params, seed=1, index=5)
    assert a.h11 == b.h11 and a.h32 == b.h32
    y = icrf.apply_channel(a, 1 + 0j, 0j, 0j, 0j, 0j, 0j)
    assert y[2] == a.h13  # relay hears only the sources


def test_monte_carlo_matches_closed_form(vsi_params):
    cf = icrf.evaluate_mi("desired_with_relay_1", "phase", vsi_params)
    cov = [[10, 0, 0], [0, 10, 0], [0, 0, 10]]
    mc = icrf.mc_mi("desired_with_relay_1", "phase", vsi_params, cov, samples=20000, seed=2)
    assert mc.value == pytest.approx(cf.value, abs=3 * mc.std_error + 1e-6)


def test_placement_scan_and_exports():
    layout = icrf.Layout.reference()
    grid = icrf.scan_placement(
        layout, 10, 10, 3, "phase", ["no_feedback", "full_to_relay"], resolution=8
    )
    assert grid.resolution == 8
    pgm = grid.pgm("full_to_relay")
    assert pgm.startswith(b"P5\n8 8\n255\n")
    rows = grid.csv().strip().split("\n")
    assert len(rows) == 2 * 64 + 1


def test_cli_round_trip(tmp_path):
    scenario = {
        "model": "phase",
        "powers": [10, 10, 10],
        "attenuations": {
            "a11": 0.42, "a12": 0.7, "a13": 0.5, "a21": 0.7,
            "a22": 0.25, "a23": 0.5, "a31": 0.26, "a32": 0.1,
        },
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario))
    code, out, err = icrf.run_cli(["regime", "--scenario", str(path), "--config", "full_to_relay"])
    assert code == 0, err
    report = json.loads(out)
    assert report["regime"] == "vsi"
    code, out, _ = icrf.run_cli(["verify", "--suite", "psd", "--n", "15000"])
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_oracle_bindings(vsi_params):
    rep = icrf.verify_psd_inequality(n_draws=15000, seed=4)
    assert rep.pass_
    assert len(rep.checks) == 3
