import numpy as np
import pytest

import dhc


def test_uniform_state_and_effects():
    s = dhc.uniform_state(3)
    assert s.dim == 3
    assert np.allclose(s.tensor, np.full((3, 3, 3, 3), 1 / 9))
    z = dhc.computational_structure(3)
    assert dhc.forest_effect(s) == pytest.approx(1.0, abs=1e-12)
    assert dhc.tree_on_bridge_effect(s, z) == pytest.approx(1 / 3, abs=1e-12)
    assert dhc.extension_effect(s, z) == pytest.approx(2 / 3, abs=1e-12)


def test_slit_probabilities_follow_quartic_law():
    for d in (2, 3, 4):
        for k in range(1, d + 1):
            p = dhc.slit_probability(d, list(range(1, k + 1)))
            assert p == pytest.approx(k**4 / d**4, abs=1e-12)


def test_sorkin_hierarchy():
    assert dhc.sorkin_interference(3, [1, 2, 3]) == pytest.approx(36 / 81, abs=1e-12)
    assert dhc.sorkin_interference(4, [1, 2, 3, 4]) == pytest.approx(24 / 256, abs=1e-12)
    assert dhc.sorkin_interference(5, [1, 2, 3, 4, 5]) == pytest.approx(0.0, abs=1e-12)
    report = dhc.hierarchy_report(5, 5)
    orders = {entry["order"]: entry["value"] for entry in report["sorkin"]}
    assert orders[3] == pytest.approx(36 / 625, abs=1e-12)
    assert orders[4] == pytest.approx(24 / 625, abs=1e-12)


def test_idempotents_and_recovery():
    z = dhc.computational_structure(3)
    hyp = dhc.hypdecoh_map(z, 3)
    s = dhc.uniform_state(3)
    hs = dhc.apply(hyp, s)
    assert dhc.forest_effect(hs) == pytest.approx(1 / 3, abs=1e-12)

    sigma = dhc.random_density_matrix(3, 2, seed=9)
    lifted = dhc.quantum_lift_state(sigma, z)
    back = dhc.quantum_extract_state(dhc.apply(hyp, lifted))
    assert np.allclose(back, sigma, atol=1e-9)


def test_classical_round_trip():
    z = dhc.computational_structure(3)
    m = np.abs(np.random.default_rng(4).normal(size=(3, 3)))
    back = dhc.classical_extract(dhc.classical_embed(m, z, z), z, z)
    assert np.allclose(back.mat, m, atol=1e-12)


def test_census_reports_all_three_numbers():
    census = dhc.orbit_census(2)
    assert census["formula_value"] == pytest.approx(7.0)
    assert census["census_total"] == 10
    assert census["burnside_orbit_count"] == 7
    assert len(census["classes"]) == 15
    assert dhc.span_rank(2, 64, 3) == 10


def test_cross_theory_checks():
    assert dhc.quantum_sorkin(3, 3) == pytest.approx(0.0, abs=1e-12)
    assert dhc.classical_sorkin(2, 2) == pytest.approx(0.0, abs=1e-12)


def test_symmetry_of_random_states():
    s = dhc.random_state(3, 2, seed=21)
    rep = dhc.check_symmetry(s)
    assert rep["max"] < 1e-10
    assert s.has_certificate()


def test_verify_suite():
    report = dhc.run_suite("idempotence", 2, trials=10, seed=5)
    assert report["all_pass"] is True
