# Copyright (c) coopemit contributors. All rights reserved.
import sys

import mmcv
import numpy as np

from coopemit.core import (ModelParams, build_coupling_matrix, build_solver,
                           collinear_config)
from coopemit.utils.exceptions import DomainError


class ScanResult(object):
    """Table of per-point records along one scanned parameter.

    Args:
        axis (str): Name of the scanned parameter, also the first column.
        values (np.ndarray): Strictly monotone parameter values.
        columns (list[str]): Names of the record columns.
        data (np.ndarray): Records of shape (len(values), len(columns)).
    """

    def __init__(self, axis, values, columns, data):
        values = np.asarray(values, dtype=np.float64)
        data = np.asarray(data, dtype=np.float64)
        if values.ndim != 1 or len(values) == 0:
            raise DomainError('scan axis must be a non-empty vector')
        steps = np.diff(values)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise DomainError(f'scan axis {axis} must be strictly monotone')
        assert data.shape == (len(values), len(columns))
        self.axis = axis
        self.values = values
        self.columns = list(columns)
        self.data = data

    @property
    def header(self):
        return [self.axis] + self.columns

    def column(self, name):
        """np.ndarray: One record column by name."""
        if name == self.axis:
            return self.values
        return self.data[:, self.columns.index(name)]

    def select(self, columns):
        """:obj:`ScanResult`: A view restricted to ``columns``."""
        idx = [self.columns.index(c) for c in columns]
        return ScanResult(self.axis, self.values, columns, self.data[:, idx])

    def rows(self):
        """np.ndarray: Axis value followed by the record, one row each."""
        return np.column_stack([self.values, self.data])

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return (f'{self.__class__.__name__}(axis={self.axis}, '
                f'points={len(self)}, columns={self.columns})')


def _scan_point(task):
    x12, x23, eta, params, solver = task
    config = collinear_config(x12, x23, eta)
    modes = build_solver(solver)(build_coupling_matrix(config, params))
    order = np.argsort(-modes.rates, kind='stable')
    return np.concatenate([modes.rates[order], modes.shifts[order]])


def line_scan(x12,
              x23_grid,
              eta,
              params=None,
              solver='analytic',
              nproc=1,
              show_progress=False):
    """Collective rates of three collinear atoms as atom 3 moves.

    Args:
        x12 (float): Fixed gap between atoms 1 and 2 in λ0.
        x23_grid (list[float]): Strictly monotone positive gaps x23.
        eta (float): Dipole angle to the line, in [0, π/2].
        params (:obj:`ModelParams`, optional): Single-atom parameters.
        solver (str | dict, optional): Eigen solver config.
            Defaults to 'analytic'.
        nproc (int, optional): Worker processes. Defaults to 1.
        show_progress (bool, optional): Draw a progress bar on stderr.

    Returns:
        :obj:`ScanResult`: Columns ``gamma_1..3`` (rates sorted
            descending) and ``delta_1..3`` (shifts of the same modes).
    """
    params = ModelParams() if params is None else params
    x23_grid = np.asarray(x23_grid, dtype=np.float64)
    if x23_grid.ndim != 1 or np.any(~(x23_grid > 0)):
        raise DomainError('x23 grid values must be positive')
    tasks = [(x12, float(x23), eta, params, solver) for x23 in x23_grid]
    if nproc > 1:
        records = mmcv.track_parallel_progress(
            _scan_point, tasks, nproc, file=sys.stderr)
    elif show_progress:
        records = mmcv.track_progress(_scan_point, tasks, file=sys.stderr)
    else:
        records = [_scan_point(task) for task in tasks]
    columns = [f'gamma_{i}' for i in range(1, 4)] + \
        [f'delta_{i}' for i in range(1, 4)]
    return ScanResult('x23', x23_grid, columns, np.stack(records))
