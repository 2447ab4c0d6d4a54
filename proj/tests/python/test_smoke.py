import math

import numpy as np
import pytest

import randpoly as rp


def test_sample_shape_and_norms():
    pts = rp.sample(3, 50, seed=7)
    assert pts.shape == (50, 3)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)
    again = rp.sample(3, 50, seed=7)
    assert np.array_equal(pts, again)
    other = rp.sample(3, 50, seed=8)
    assert not np.array_equal(pts, other)


def test_hull_counts_and_stats():
    pts = rp.sample(3, 30, seed=1)
    out = rp.hull(pts)
    assert len(out["facets"]) == 2 * 30 - 4
    assert out["contains_origin"] is True
    assert out["stats"]["sidedness_tests"] > 0
    offsets = [f["offset"] for f in out["facets"]]
    assert min(offsets) > 0
    # every facet supports all points on one side
    for f in out["facets"]:
        assert np.max(pts @ np.asarray(f["normal"])) <= f["offset"] + 1e-9


def test_hull_matches_brute_force():
    pts = rp.sample(4, 10, seed=3)
    fast = {tuple(f["vertices"]) for f in rp.hull(pts)["facets"]}
    slow = {tuple(f["vertices"]) for f in rp.brute_force_hull(pts)["facets"]}
    assert fast == slow


def test_lp_solution_is_feasible_and_tight():
    pts = rp.sample(3, 40, seed=5)
    v = np.array([0.3, -0.5, 0.8])
    sol = rp.solve_lp(pts, v)
    assert sol["status"] == "optimal"
    x = np.asarray(sol["x_star"])
    assert np.max(pts @ x) <= 1.0 + 1e-9
    for idx in sol["facet"]:
        assert pts[idx] @ x == pytest.approx(1.0, abs=1e-9)
    assert sol["total_pivots"] == sum(sol["pivots_by_dim"])


def test_geometry_values():
    assert rp.ball_volume(3) == pytest.approx(4.0 * math.pi / 3.0, rel=1e-14)
    assert rp.sphere_surface(3) == pytest.approx(4.0 * math.pi, rel=1e-14)
    h = 0.25
    assert rp.cap_volume(3, h) == pytest.approx(math.pi * h * h * (3 - h) / 3, rel=1e-12)
    assert rp.cap_surface(3, h) == pytest.approx(2 * math.pi * h, rel=1e-12)
    assert rp.cap_volume_quadrature(3, h) == pytest.approx(rp.cap_volume(3, h), rel=1e-12)
    assert rp.cap_fraction(3, rp.solve_cap_fraction(3, 0.1)) == pytest.approx(0.1, abs=1e-10)


def test_bounds_and_constants():
    assert rp.facet_constant(2) == pytest.approx(1.0, rel=1e-12)
    assert rp.facet_constant(3) == pytest.approx(2.0, rel=1e-12)
    assert rp.facet_constant(4) == pytest.approx(24 * math.pi**2 / 35, rel=1e-12)
    assert rp.borgwardt_bound(3, 100) > 0
    assert rp.facet_upper_bound(2, 100) > 100


def test_hausdorff():
    pts = rp.sample(3, 200, seed=11)
    d = rp.hausdorff_to_sphere(pts)
    assert 0 < d < rp.solve_delta(3, 200, 8.0)


def test_experiment_and_fit():
    records = rp.run_experiment("facets", 2, [10, 20, 40], trials=5, seed=13)
    assert [r["m"] for r in records] == [10, 20, 40]
    for r in records:
        assert r["mean"] == r["m"]  # planar hulls keep every point
        assert r["failures"] == 0
    fit = rp.fit_exponent([10, 100, 1000], [3.0, 300.0, 30000.0])
    assert fit["exponent"] == pytest.approx(2.0, abs=1e-12)
    assert fit["r_squared"] == pytest.approx(1.0, abs=1e-12)


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        rp.ball_volume(0)
    with pytest.raises(ValueError):
        rp.run_experiment("nope", 3, [10], trials=1)
    with pytest.raises(RuntimeError):
        rp.solve_cap_fraction(3, 0.9)  # unattainable target
