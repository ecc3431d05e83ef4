# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np
import pytest

from coopemit.core import (AnalyticSolver, AtomConfig, CouplingMatrix,
                           ModelParams, NumericSolver, build_coupling_matrix,
                           build_solver, collinear_config, cubic_roots,
                           eigenmodes_analytic, eigenmodes_numeric,
                           eigenvectors, equilateral_closed_form,
                           equilateral_config, equilateral_eigenvalues,
                           kernel_D, kernel_P, two_atom_modes)
from coopemit.utils.exceptions import (ConsistencyError, DomainError,
                                       InconsistentEigenvalueError,
                                       UnsupportedSizeError)


def _random_matrices(seed, count, x_min=0.02, x_max=2.0):
    rng = np.random.default_rng(seed)
    matrices = []
    while len(matrices) < count:
        positions = rng.uniform(0.0, 1.2, (3, 3))
        dipole = rng.normal(size=3)
        config = AtomConfig(positions, dipole / np.linalg.norm(dipole))
        dist = config.distance_matrix()[np.triu_indices(3, k=1)]
        if dist.min() < x_min or dist.max() > x_max:
            continue
        matrices.append(build_coupling_matrix(config))
    return matrices


def _closest_gap(values, others):
    return max(np.abs(others - v).min() for v in values)


def test_coupling_matrix_entries():
    matrix = build_coupling_matrix(equilateral_config(0.1))
    entries = matrix.entries
    np.testing.assert_array_equal(entries, entries.T)
    np.testing.assert_allclose(np.diag(entries), 0.5)
    expected = 0.5 * complex(kernel_D(0.1, np.pi / 2),
                             kernel_P(0.1, np.pi / 2))
    np.testing.assert_allclose(matrix.off_diagonal(), expected, rtol=1e-12)
    assert matrix.gamma_0 == 0.5


def test_coupling_matrix_params():
    params = ModelParams(gamma_eg=2.0, delta_eg=0.25)
    matrix = build_coupling_matrix(collinear_config(0.1, 0.2, 0.0), params)
    assert matrix.gamma_0 == complex(1.0, 0.5)
    assert matrix.entries[0, 1] == pytest.approx(
        complex(kernel_D(0.1, 0.0), kernel_P(0.1, 0.0)), rel=1e-12)


def test_coupling_matrix_validation():
    with pytest.raises(DomainError):
        CouplingMatrix([[0.5, 0.1], [0.2, 0.5]])
    with pytest.raises(DomainError):
        CouplingMatrix([[0.5, 0.1], [0.1, 0.6]])
    with pytest.raises(DomainError):
        CouplingMatrix(np.zeros((2, 3)))
    with pytest.raises(ConsistencyError):
        CouplingMatrix([[0.5, 2.0], [2.0, 0.5]])
    with pytest.raises(DomainError):
        ModelParams(gamma_eg=0.0)


def test_analytic_matches_numeric_on_random_geometries():
    for matrix in _random_matrices(seed=2024, count=1000):
        analytic = eigenmodes_analytic(matrix)
        numeric = eigenmodes_numeric(matrix)
        tol = 1e-10 * max(1.0, matrix.norm())
        assert _closest_gap(analytic.eigenvalues, numeric.eigenvalues) <= tol
        assert _closest_gap(numeric.eigenvalues, analytic.eigenvalues) <= tol


def test_trace_and_symmetric_polynomials():
    for matrix in _random_matrices(seed=11, count=100):
        entries = matrix.entries
        values = eigenmodes_analytic(matrix).eigenvalues
        scale = max(1.0, matrix.norm())
        assert abs(values.sum() - np.trace(entries)) <= 1e-12 * scale
        minors = sum(
            np.linalg.det(entries[np.ix_([i, j], [i, j])])
            for i, j in ((0, 1), (0, 2), (1, 2)))
        pairs = values[0] * values[1] + values[0] * values[2] + \
            values[1] * values[2]
        assert abs(pairs - minors) <= 1e-10 * scale**2
        assert abs(np.prod(values) - np.linalg.det(entries)) <= \
            1e-10 * scale**3


def test_rates_are_physical():
    for matrix in _random_matrices(seed=5, count=200):
        assert np.all(eigenmodes_numeric(matrix).rates >= -1e-10)


def test_bilinear_orthonormality():
    for matrix in _random_matrices(seed=3, count=50):
        vectors = eigenmodes_analytic(matrix).eigenvectors
        np.testing.assert_allclose(vectors.T @ vectors, np.eye(3), atol=1e-9)


@pytest.mark.parametrize('solver', ['analytic', 'numeric'])
def test_equilateral_degeneracy(solver):
    matrix = build_coupling_matrix(equilateral_config(0.1))
    modes = build_solver(solver)(matrix)
    assert modes.degeneracy_groups == [[0], [1, 2]]
    assert modes.is_degenerate
    assert modes.eigenvalues[1] == modes.eigenvalues[2]
    dicke = np.ones(3) / np.sqrt(3)
    assert abs(np.vdot(dicke, modes.vector(0))) == pytest.approx(1.0,
                                                                 abs=1e-10)
    np.testing.assert_allclose(
        modes.eigenvalues, equilateral_eigenvalues(0.1), atol=1e-12)


def test_equilateral_closed_form_values():
    gamma_a, gamma_b, delta_a, delta_b, splitting = \
        equilateral_closed_form(0.1)
    assert gamma_a == pytest.approx(2.8454, abs=1e-4)
    assert gamma_b == pytest.approx(0.0773, abs=1e-4)
    assert delta_a == pytest.approx(5.1942, abs=1e-4)
    assert delta_b == pytest.approx(-2.5971, abs=1e-4)
    assert splitting == pytest.approx(7.7913, abs=1e-4)
    assert delta_a - delta_b == pytest.approx(splitting, rel=1e-12)


def test_equilateral_closed_form_limits():
    gamma_a, gamma_b, *_ = equilateral_closed_form(1e-3)
    assert gamma_a >= 2.99
    assert gamma_b <= 0.01
    gamma_a, gamma_b, *_ = equilateral_closed_form(0.5)
    assert gamma_a < 1.0 < gamma_b
    with pytest.raises(DomainError):
        equilateral_closed_form(0.0)


def test_equilateral_closed_form_with_shift():
    params = ModelParams(gamma_eg=1.0, delta_eg=0.3)
    _, _, delta_a, delta_b, _ = equilateral_closed_form(0.2, params)
    p = kernel_P(0.2, np.pi / 2)
    assert delta_a == pytest.approx(0.3 + p)
    assert delta_b == pytest.approx(0.3 - p / 2)
    modes = eigenmodes_analytic(
        build_coupling_matrix(equilateral_config(0.2), params))
    np.testing.assert_allclose(
        modes.eigenvalues, equilateral_eigenvalues(0.2, params), atol=1e-12)


def test_collinear_asymmetric_modes():
    matrix = build_coupling_matrix(collinear_config(0.1, 0.2, np.pi / 2))
    modes = eigenmodes_analytic(matrix)
    assert not modes.is_degenerate
    assert modes.method == 'analytic'
    dicke = np.ones(3) / np.sqrt(3)
    for m in range(3):
        vec = modes.vector(m)
        overlap = abs(np.vdot(dicke, vec)) / np.linalg.norm(vec)
        assert overlap < 0.999


@pytest.mark.parametrize('eta, shifts', [
    (np.pi / 2, [3.8671, -0.38406, -3.48304]),
    (0.0, [-10.66, 1.13698, 9.523]),
])
def test_collinear_eigenvalues(eta, shifts):
    modes = eigenmodes_analytic(
        build_coupling_matrix(collinear_config(0.1, 0.1, eta)))
    np.testing.assert_allclose(modes.shifts, shifts, rtol=2e-3)
    assert np.all(np.diff(modes.rates) < 0)


def test_mode_order_convention():
    for matrix in _random_matrices(seed=9, count=20):
        modes = eigenmodes_numeric(matrix)
        quantum = 1e-12 * max(1.0, matrix.norm())
        assert np.all(np.diff(modes.eigenvalues.real) <= quantum)


def test_permutation_covariance():
    config = collinear_config(0.1, 0.25, np.pi / 3)
    order = [2, 0, 1]
    modes = eigenmodes_analytic(build_coupling_matrix(config))
    permuted = eigenmodes_analytic(
        build_coupling_matrix(config.permute(order)))
    np.testing.assert_allclose(
        permuted.eigenvalues, modes.eigenvalues, atol=1e-10)
    for m in range(3):
        overlap = permuted.vector(m) @ modes.vector(m)[order]
        assert abs(overlap) == pytest.approx(1.0, abs=1e-9)


def test_diagonal_matrix_gives_identity():
    modes = eigenmodes_numeric(CouplingMatrix(np.eye(3) * 0.5))
    np.testing.assert_array_equal(modes.eigenvectors, np.eye(3))
    assert modes.degeneracy_groups == [[0, 1, 2]]


def test_eigenvectors_reject_wrong_eigenvalues():
    matrix = build_coupling_matrix(collinear_config(0.1, 0.2, 0.3))
    values = eigenmodes_numeric(matrix).eigenvalues
    with pytest.raises(InconsistentEigenvalueError):
        eigenvectors(matrix, values + 0.01)


def test_analytic_needs_three_atoms():
    config = AtomConfig([[0, 0, 0], [0.1, 0, 0]], [0, 0, 1])
    with pytest.raises(UnsupportedSizeError):
        eigenmodes_analytic(build_coupling_matrix(config))


def test_two_atom_modes():
    config = AtomConfig([[0, 0, 0], [0.2, 0, 0]], [0, 0, 1])
    modes = eigenmodes_numeric(build_coupling_matrix(config))
    expected = two_atom_modes(0.2, np.pi / 2)
    np.testing.assert_allclose(modes.eigenvalues, expected, atol=1e-12)
    np.testing.assert_allclose(
        modes.eigenvectors,
        np.array([[1, 1], [1, -1]]) / np.sqrt(2),
        atol=1e-12)


def test_cubic_roots_residual():
    matrix = build_coupling_matrix(collinear_config(0.05, 0.3, 1.0))
    entries = matrix.entries
    mu, residual = cubic_roots(entries[0, 1], entries[0, 2], entries[1, 2])
    assert residual <= 1e-12
    np.testing.assert_allclose(
        np.sort_complex(mu + matrix.gamma_0),
        np.sort_complex(np.linalg.eigvals(entries)),
        atol=1e-10 * matrix.norm())


def test_far_separation_limit():
    for config in (equilateral_config(1000.0),
                   collinear_config(1000.0, 1500.0, 0.4)):
        modes = eigenmodes_numeric(build_coupling_matrix(config))
        assert np.all(np.abs(modes.eigenvalues - 0.5) <= 1e-3)


def test_build_solver():
    assert isinstance(build_solver('analytic'), AnalyticSolver)
    assert isinstance(build_solver('numeric'), NumericSolver)
    assert isinstance(build_solver(dict(type='NumericSolver')), NumericSolver)
    with pytest.raises(KeyError):
        build_solver('lapack')


def test_mode_set_is_read_only():
    modes = eigenmodes_numeric(
        build_coupling_matrix(collinear_config(0.1, 0.2, 0.0)))
    with pytest.raises(ValueError):
        modes.eigenvalues[0] = 0.0
    assert modes.labels == ['a', 'b', 'c']
    doc = modes.to_dict()
    assert doc['method'] == 'numeric'
    assert len(doc['eigenvectors']) == 3


def _near_equilateral(eps, side=0.1):
    base = equilateral_config(side)
    positions = np.array(base.positions, dtype=float)
    positions[2, 0] += eps
    return AtomConfig(positions, base.dipole)


@pytest.mark.parametrize('eps', [1e-7, 1e-8, 1e-9, 1e-11])
def test_near_equilateral_matches_numeric(eps):
    matrix = build_coupling_matrix(_near_equilateral(eps))
    analytic = eigenmodes_analytic(matrix)
    numeric = eigenmodes_numeric(matrix)
    assert _closest_gap(analytic.eigenvalues, numeric.eigenvalues) <= 1e-10
    assert _closest_gap(numeric.eigenvalues, analytic.eigenvalues) <= 1e-10


def test_rounded_equilateral_coordinates():
    config = AtomConfig([[0, 0, 0], [0.1, 0, 0], [0.05, 0.08660254, 0]],
                        [0, 0, 1])
    matrix = build_coupling_matrix(config)
    modes = eigenmodes_analytic(matrix)
    numeric = eigenmodes_numeric(matrix)
    assert _closest_gap(modes.eigenvalues, numeric.eigenvalues) <= 1e-10
    assert modes.rates[0] == pytest.approx(2.8454, abs=1e-3)


def test_cubic_roots_near_double_root():
    matrix = build_coupling_matrix(_near_equilateral(1e-6))
    entries = matrix.entries
    mu, residual = cubic_roots(entries[0, 1], entries[0, 2], entries[1, 2])
    assert residual <= 1e-12
    assert _closest_gap(mu + matrix.gamma_0,
                        np.linalg.eigvals(entries)) <= 1e-6
    gaps = np.abs(mu[:, None] - mu[None, :])[np.triu_indices(3, k=1)]
    assert gaps.min() > 1e-7


def _tetrahedron(side, dipole):
    corners = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
                       dtype=float)
    dipole = np.asarray(dipole, dtype=float)
    return AtomConfig(corners * side / (2 * np.sqrt(2)),
                      dipole / np.linalg.norm(dipole))


def _dicke_residual(matrix):
    dicke = np.ones(matrix.n) / np.sqrt(matrix.n)
    image = matrix.entries @ dicke
    return np.linalg.norm(image - (dicke @ image) * dicke)


def test_tetrahedron_dicke_state_is_not_a_mode():
    config = _tetrahedron(0.1, [1, 1, 1])
    np.testing.assert_allclose(
        config.distance_matrix()[np.triu_indices(4, k=1)], 0.1)
    matrix = build_coupling_matrix(config)
    assert _dicke_residual(matrix) > 1e-2
    modes = eigenmodes_numeric(matrix)
    assert len(modes) == 4
    dicke = np.ones(4) / 2
    for m in range(4):
        vec = modes.vector(m)
        assert abs(np.vdot(dicke, vec)) / np.linalg.norm(vec) < 0.999


def test_tetrahedron_with_edge_symmetric_dipole():
    # along z every atom sees one perpendicular and two 45 degree edges
    matrix = build_coupling_matrix(_tetrahedron(0.1, [0, 0, 1]))
    assert _dicke_residual(matrix) <= 1e-12 * matrix.norm()
