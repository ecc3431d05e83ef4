# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np
import pytest

from coopemit.apis import ScanResult, line_scan
from coopemit.core import kernel_D
from coopemit.utils.exceptions import DomainError


def _grid():
    return np.round(np.arange(1, 101) * 0.01, 10)


def test_line_scan_layout():
    scan = line_scan(0.1, [0.1, 0.2, 0.3], np.pi / 2)
    assert scan.header == [
        'x23', 'gamma_1', 'gamma_2', 'gamma_3', 'delta_1', 'delta_2',
        'delta_3'
    ]
    assert scan.rows().shape == (3, 7)
    rates = scan.select(['gamma_1', 'gamma_2', 'gamma_3']).data
    assert np.all(np.diff(rates, axis=1) <= 0)
    # three rates add up to the trace, 3 γ_eg
    np.testing.assert_allclose(rates.sum(axis=1), 3.0, atol=1e-10)


def test_superradiant_rate_peaks_at_equal_spacing():
    scan = line_scan(0.05, _grid(), np.pi / 2)
    gamma = scan.column('gamma_1')
    best = scan.values[np.argmax(gamma)]
    assert 0.04 <= best <= 0.06
    assert gamma.max() > 2.7


def test_wide_pair_favours_closest_third_atom():
    scan = line_scan(0.5, _grid(), np.pi / 2)
    assert np.argmax(scan.column('gamma_1')) == 0


def test_distant_third_atom_decouples():
    x12 = 0.1
    scan = line_scan(x12, [500.0, 1000.0], np.pi / 2)
    d = kernel_D(x12, np.pi / 2)
    expected = sorted([1 + d, 1.0, 1 - d], reverse=True)
    np.testing.assert_allclose(
        scan.select(['gamma_1', 'gamma_2', 'gamma_3']).data[-1],
        expected,
        atol=1e-3)


def test_line_scan_solvers_agree():
    grid = [0.05, 0.1, 0.4]
    analytic = line_scan(0.2, grid, 0.3, solver='analytic')
    numeric = line_scan(0.2, grid, 0.3, solver='numeric')
    np.testing.assert_allclose(analytic.data, numeric.data, atol=1e-10)


def test_line_scan_parallel():
    grid = [0.1, 0.2, 0.3, 0.4]
    serial = line_scan(0.1, grid, np.pi / 2)
    parallel = line_scan(0.1, grid, np.pi / 2, nproc=2)
    np.testing.assert_array_equal(parallel.data, serial.data)


def test_line_scan_errors():
    with pytest.raises(DomainError):
        line_scan(0.1, [0.0, 0.1], np.pi / 2)
    with pytest.raises(DomainError):
        line_scan(0.1, [0.2, 0.1, 0.3], np.pi / 2)


def test_scan_result():
    result = ScanResult('x', [3.0, 2.0, 1.0], ['y'], [[1.0], [2.0], [3.0]])
    np.testing.assert_array_equal(result.column('x'), [3.0, 2.0, 1.0])
    np.testing.assert_array_equal(result.column('y'), [1.0, 2.0, 3.0])
    assert len(result) == 3
    with pytest.raises(DomainError):
        ScanResult('x', [1.0, 1.0], ['y'], [[1.0], [2.0]])
