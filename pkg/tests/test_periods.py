import numpy as np
import pytest

from centrex.forms import eval_R
from centrex.periods import SphereFamily, sphere_period
from centrex.su import assert_algebra
from centrex.verify import run_period_check


def test_family_loops_are_valid_and_based():
    fam = SphereFamily(8, 8, 32)
    for (i, j) in ((0, 0), (3, 5), (8, 0)):
        u, phi = fam.node(i, j)
        loop = fam.loop_at(u, phi)
        assert np.abs(loop.samples[0] - np.eye(2)).max() <= 1e-15


def test_poles_independent_of_phi():
    fam = SphereFamily(8, 8, 32)
    north = [fam.loop_at(*fam.node(0, j)).samples for j in range(8)]
    for s in north[1:]:
        assert np.abs(s - north[0]).max() <= 1e-15


def test_analytic_tangents_match_finite_differences():
    fam = SphereFamily(8, 8, 64)
    for (i, j) in ((2, 1), (4, 3), (6, 7)):
        u, phi = fam.node(i, j)
        xu, xphi = fam.tangents_at(u, phi)
        assert_algebra(xu.samples)
        fu, fphi = fam.fd_tangents_at(u, phi)
        assert np.abs(xu.samples - fu.samples).max() <= 1e-9
        assert np.abs(xphi.samples - fphi.samples).max() <= 1e-9


def test_period_converges_to_minus_two():
    coarse = sphere_period(SphereFamily(16, 16, 64))
    fine = sphere_period(SphereFamily(32, 32, 64))
    assert coarse == pytest.approx(-2.0, abs=1e-3)
    assert fine == pytest.approx(-2.0, abs=1e-4)
    assert abs(fine + 2.0) < abs(coarse + 2.0)


def test_orientation_reversal_negates_period():
    p = sphere_period(SphereFamily(16, 16, 64))
    q = sphere_period(SphereFamily(16, 16, 64, orientation=-1))
    assert q == pytest.approx(-p, abs=1e-12)


def test_degenerate_family_period_zero():
    assert sphere_period(SphereFamily(8, 8, 32, degenerate=True)) == 0.0


def test_grid_validation():
    with pytest.raises(ValueError, match="even"):
        SphereFamily(7, 8, 32)
    with pytest.raises(ValueError, match="grid_phi"):
        SphereFamily(8, 2, 32)
    with pytest.raises(ValueError, match="orientation"):
        SphereFamily(8, 8, 32, orientation=2)


def test_integrand_is_phi_independent():
    # rotational symmetry of the family: R(X_u, X_phi) depends on u only
    fam = SphereFamily(8, 8, 64)
    values = []
    for j in range(8):
        u, phi = fam.node(3, j)
        values.append(eval_R(*fam.tangents_at(u, phi)))
    assert np.ptp(values) <= 1e-14


def test_run_period_check_pass_and_degenerate():
    results, check = run_period_check(grid=(16, 16), samples=64)
    assert check.passed
    assert results[0]["nearest_integer"] == results[1]["nearest_integer"] == -2
    assert results[1]["grid_u"] == 32
    _, degenerate = run_period_check(grid=(8, 8), samples=32, degenerate=True)
    assert degenerate.passed
