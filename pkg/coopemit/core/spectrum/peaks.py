# Copyright (c) coopemit contributors. All rights reserved.
import numba
import numpy as np
from terminaltables import AsciiTable

from coopemit.utils import print_log

REL_HEIGHT = 1e-6


class Peak(object):
    """One resolved spectral line.

    Args:
        position (float): Refined detuning of the maximum.
        height (float): Refined maximum value.
        fwhm (float): Full width at half maximum.
        index (int): Grid index of the sampled maximum.
    """

    __slots__ = ('position', 'height', 'fwhm', 'index')

    def __init__(self, position, height, fwhm, index):
        self.position = float(position)
        self.height = float(height)
        self.fwhm = float(fwhm)
        self.index = int(index)

    def __iter__(self):
        return iter((self.position, self.height, self.fwhm))

    def to_dict(self):
        return dict(
            position=self.position, height=self.height, fwhm=self.fwhm)

    def __repr__(self):
        return (f'{self.__class__.__name__}(position={self.position:.6g}, '
                f'height={self.height:.6g}, fwhm={self.fwhm:.6g})')


@numba.jit(nopython=True)
def _local_maxima(values, floor):
    """Indices of three-point maxima above ``floor``.

    A plateau counts once, at its left end.
    """
    num = values.shape[0]
    out = np.empty(num, dtype=np.int64)
    count = 0
    for i in range(1, num - 1):
        if values[i] <= floor or values[i] <= values[i - 1]:
            continue
        j = i
        while j < num - 1 and values[j + 1] == values[i]:
            j += 1
        if j < num - 1 and values[j + 1] < values[i]:
            out[count] = i
            count += 1
    return out[:count]


@numba.jit(nopython=True)
def _half_crossing(grid, values, index, half, step):
    """Walk from ``index`` until the series drops to ``half``.

    The walk stops early at a valley, so overlapping lines do not borrow
    each other's flanks.
    """
    j = index
    while True:
        k = j + step
        if k < 0 or k >= values.shape[0]:
            return grid[j]
        if values[k] <= half:
            t = (values[j] - half) / (values[j] - values[k])
            return grid[j] + t * (grid[k] - grid[j])
        if values[k] > values[j]:
            return grid[j]
        j = k


def _refine(grid, values, i):
    x0, x1, x2 = grid[i - 1], grid[i], grid[i + 1]
    y0, y1, y2 = values[i - 1], values[i], values[i + 1]
    coeffs = np.polyfit([x0 - x1, 0.0, x2 - x1], [y0, y1, y2], 2)
    if not coeffs[0] < 0:
        return x1, y1
    offset = -coeffs[1] / (2 * coeffs[0])
    if not abs(offset) <= max(x1 - x0, x2 - x1):
        return x1, y1
    return x1 + offset, coeffs[2] - coeffs[1]**2 / (4 * coeffs[0])


def find_peaks(series, rel_height=REL_HEIGHT):
    """Locate the lines of a spectrum.

    Args:
        series (:obj:`SpectrumSeries`): The spectrum.
        rel_height (float, optional): Maxima lower than this fraction of
            the global maximum are ignored. Defaults to 1e-6.

    Returns:
        list[:obj:`Peak`]: Peaks in ascending detuning; empty for a flat
            series.
    """
    grid = series.grid.values
    values = np.ascontiguousarray(series.values, dtype=np.float64)
    if len(values) < 3:
        return []
    top = values.max()
    if not top > values.min():
        return []
    peaks = []
    for i in _local_maxima(values, rel_height * top):
        position, height = _refine(grid, values, i)
        half = height / 2
        left = _half_crossing(grid, values, i, half, -1)
        right = _half_crossing(grid, values, i, half, 1)
        peaks.append(Peak(position, height, right - left, i))
    return peaks


def widest_peak(peaks):
    """:obj:`Peak`: The peak of largest FWHM, or None."""
    return max(peaks, key=lambda p: p.fwhm) if peaks else None


def peak_table(peaks, title=None):
    """Render peaks as an :class:`AsciiTable` string."""
    table_data = [['peak', 'position', 'height', 'fwhm']]
    for i, peak in enumerate(peaks):
        table_data.append([
            str(i), f'{peak.position:.6g}', f'{peak.height:.6g}',
            f'{peak.fwhm:.6g}'
        ])
    table = AsciiTable(table_data, title=title)
    return table.table


def log_peaks(peaks, title=None, logger=None):
    print_log('\n' + peak_table(peaks, title), logger=logger)
