# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np
import pytest

from coopemit.core import (SERIES_THRESHOLD, KernelValue, d_bracket,
                           evaluate_kernels, kernel_D, kernel_grid, kernel_P,
                           p_bracket)
from coopemit.utils.exceptions import DomainError


@pytest.mark.parametrize('x, eta, expected', [
    (0.1, np.pi / 2, 0.922695),
    (0.5, np.pi / 2, -0.15198),
])
def test_kernel_d_values(x, eta, expected):
    assert kernel_D(x, eta) == pytest.approx(expected, abs=1e-5)


@pytest.mark.parametrize('x, eta, expected', [
    (0.1, np.pi / 2, 5.1942),
    (0.05, np.pi / 2, 46.165),
    (0.05, 0.0, -101.41),
])
def test_kernel_p_values(x, eta, expected):
    assert kernel_P(x, eta) == pytest.approx(expected, rel=1e-4)


def test_kernel_d_at_zero_separation():
    for eta in (0.0, np.pi / 4, np.pi / 2, np.pi):
        assert kernel_D(0.0, eta) == 1.0


@pytest.mark.parametrize('eta', [0.0, np.pi / 4, np.pi / 2])
def test_kernel_d_small_separation_limit(eta):
    assert abs(kernel_D(1e-4, eta) - 1.0) <= 1e-6


@pytest.mark.parametrize('eta', [0.0, np.pi / 2])
def test_kernel_p_cubic_divergence(eta):
    x = 1e-4
    limit = 1.5 * (1 - 3 * np.cos(eta)**2) / (2 * np.pi)**3
    assert x**3 * kernel_P(x, eta) == pytest.approx(limit, rel=1e-6)


def test_kernel_d_bounded():
    x = np.linspace(0.0, 5.0, 2001)
    for eta in np.linspace(0.0, np.pi / 2, 7):
        values = kernel_D(x, np.full_like(x, eta))
        assert np.all(np.abs(values) <= 1.0 + 1e-12)


def test_kernel_reflection_symmetry():
    rng = np.random.default_rng(7)
    x = rng.uniform(0.01, 3.0, 50)
    eta = rng.uniform(0.0, np.pi / 2, 50)
    np.testing.assert_allclose(
        kernel_D(x, np.pi - eta), kernel_D(x, eta), rtol=0, atol=1e-12)
    np.testing.assert_allclose(
        kernel_P(x, np.pi - eta), kernel_P(x, eta), rtol=1e-12, atol=1e-12)


def test_series_branch_continuity():
    u = np.array([SERIES_THRESHOLD])
    series_d = d_bracket(u, direct=False)
    direct_d = d_bracket(u, direct=True)
    assert abs(series_d[0] - direct_d[0]) <= 1e-12
    series_p = p_bracket(u, direct=False)
    direct_p = p_bracket(u, direct=True)
    assert abs(series_p[0] - direct_p[0]) <= 1e-12 * abs(direct_p[0])


def test_kernels_continuous_across_switch():
    x_switch = SERIES_THRESHOLD / (2 * np.pi)
    below, above = x_switch * (1 - 1e-12), x_switch * (1 + 1e-12)
    for eta in (0.0, np.pi / 3, np.pi / 2):
        assert abs(kernel_D(below, eta) - kernel_D(above, eta)) <= 1e-12
        p_below, p_above = kernel_P(below, eta), kernel_P(above, eta)
        assert abs(p_below - p_above) <= 1e-10 * abs(p_above)


def test_d_bracket_zero_limit():
    assert d_bracket(np.array([0.0]))[0] == pytest.approx(-1 / 3, abs=1e-15)


def test_oscillation_strongest_perpendicular():
    x = np.linspace(1.0, 5.0, 801)
    swing = {
        eta: np.abs(kernel_D(x, np.full_like(x, eta))).max()
        for eta in (0.0, np.pi / 4, np.pi / 2)
    }
    assert swing[np.pi / 2] > swing[np.pi / 4] > swing[0.0]


def test_kernel_domain_errors():
    with pytest.raises(DomainError):
        kernel_D(-0.1, 0.0)
    with pytest.raises(DomainError):
        kernel_P(0.0, 0.0)
    with pytest.raises(DomainError):
        kernel_D(0.1, 3.5)
    with pytest.raises(DomainError):
        kernel_P(np.nan, 0.0)


def test_scalar_and_array_results():
    assert isinstance(kernel_D(0.2, 0.3), float)
    values = kernel_P(np.array([0.1, 0.2]), 0.3)
    assert isinstance(values, np.ndarray)
    assert values.shape == (2, )
    np.testing.assert_allclose(values[1], kernel_P(0.2, 0.3), rtol=1e-15)


def test_evaluate_kernels():
    record = evaluate_kernels(0.1, np.pi / 2)
    assert isinstance(record, KernelValue)
    assert record.d == pytest.approx(0.922695, abs=1e-5)
    assert record.p == pytest.approx(5.1942, abs=1e-4)


def test_kernel_grid_layout():
    x = np.linspace(0.1, 1.0, 10)
    etas = [0.0, np.pi / 2]
    rows = kernel_grid(x, etas)
    assert rows.shape == (20, 4)
    np.testing.assert_array_equal(rows[:10, 0], x)
    assert np.all(rows[:10, 1] == 0.0)
    assert np.all(rows[10:, 1] == np.pi / 2)
    np.testing.assert_allclose(rows[10:, 2], kernel_D(x, np.pi / 2))
    np.testing.assert_allclose(rows[:10, 3], kernel_P(x, 0.0))


def test_unfolded_angle_matches_folded():
    for eta in (0.3, 1.1):
        assert kernel_D(0.2, np.pi - eta) == pytest.approx(
            kernel_D(0.2, eta), abs=1e-12)
        assert kernel_P(0.2, np.pi - eta) == pytest.approx(
            kernel_P(0.2, eta), rel=1e-12)
    with pytest.raises(DomainError):
        kernel_P(0.2, -0.1)
    with pytest.raises(DomainError):
        kernel_P(0.2, np.pi + 0.1)
