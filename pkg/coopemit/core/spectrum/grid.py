# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np

from coopemit.utils.exceptions import DomainError

DEFAULT_RANGE = (-15.0, 15.0)
DEFAULT_POINTS = 3001
NORMALIZATIONS = ('none', 'peak')


class DetuningGrid(object):
    """Detunings δ_k = ω_k - ω_eg in units of γ_eg.

    Args:
        values (np.ndarray): Strictly ascending finite detunings.
    """

    def __init__(self, values):
        values = np.array(values, dtype=np.float64)
        if values.ndim != 1 or len(values) < 1:
            raise DomainError(
                f'detuning grid must be a non-empty vector, got '
                f'{values.shape}')
        if not np.all(np.isfinite(values)):
            raise DomainError('detuning grid must be finite')
        if np.any(np.diff(values) <= 0):
            raise DomainError('detuning grid must be strictly ascending')
        values.setflags(write=False)
        self._values = values

    @classmethod
    def linspace(cls, dmin=DEFAULT_RANGE[0], dmax=DEFAULT_RANGE[1],
                 points=DEFAULT_POINTS):
        """Uniform grid, [-15, 15] with 3001 points by default."""
        if int(points) != points or points < 2:
            raise DomainError(f'points must be an integer >= 2, got {points}')
        if not dmax > dmin:
            raise DomainError(f'need dmin < dmax, got {dmin}, {dmax}')
        return cls(np.linspace(dmin, dmax, int(points)))

    @property
    def values(self):
        return self._values

    @property
    def step(self):
        """float: Smallest spacing, or 0 for a single point."""
        return float(np.diff(self._values).min()) if len(self) > 1 else 0.0

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return (f'{self.__class__.__name__}({self._values[0]:.6g} .. '
                f'{self._values[-1]:.6g}, points={len(self)})')


class SpectrumSeries(object):
    """Non-negative spectrum samples on a detuning grid.

    Args:
        grid (:obj:`DetuningGrid`): The detunings.
        values (np.ndarray): Spectrum values in arbitrary units.
        normalization (str, optional): ``'none'`` or ``'peak'`` (maximum
            equal to one). Only records the state of ``values``.
    """

    def __init__(self, grid, values, normalization='none'):
        values = np.array(values, dtype=np.float64)
        if values.shape != grid.values.shape:
            raise DomainError(f'{values.shape} values for a grid of '
                              f'{len(grid)} points')
        if not np.all(values >= 0):
            raise DomainError('spectrum values must be non-negative')
        if normalization not in NORMALIZATIONS:
            raise DomainError(f'normalization must be one of '
                              f'{NORMALIZATIONS}, got {normalization!r}')
        values.setflags(write=False)
        self.grid = grid
        self._values = values
        self.normalization = normalization

    @property
    def values(self):
        return self._values

    def normalized(self, normalization='peak'):
        """Return a copy rescaled to ``normalization``.

        A zero spectrum stays zero under peak normalisation.
        """
        if normalization not in NORMALIZATIONS:
            raise DomainError(f'normalization must be one of '
                              f'{NORMALIZATIONS}, got {normalization!r}')
        values = self._values
        if normalization == 'peak':
            peak = values.max()
            if peak > 0:
                values = values / peak
        return SpectrumSeries(self.grid, values, normalization)

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return (f'{self.__class__.__name__}(points={len(self)}, '
                f'normalization={self.normalization})')


class DetectorDirection(object):
    """Unit vector R̂ from the atoms to the detector.

    Args:
        vector (np.ndarray): Unit 3-vector.
    """

    def __init__(self, vector):
        vector = np.array(vector, dtype=np.float64)
        if vector.shape != (3, ) or not np.all(np.isfinite(vector)):
            raise DomainError(f'direction must be a finite 3-vector, '
                              f'got {vector}')
        norm = np.linalg.norm(vector)
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f'direction must be a unit vector, |R|={norm!r}')
        vector.setflags(write=False)
        self.vector = vector

    @classmethod
    def from_angles(cls, theta, phi):
        """Direction from polar angle ``theta`` and azimuth ``phi``."""
        if not np.isfinite(theta) or not np.isfinite(phi):
            raise DomainError('angles must be finite')
        return cls([
            np.sin(theta) * np.cos(phi),
            np.sin(theta) * np.sin(phi),
            np.cos(theta)
        ])

    def __repr__(self):
        return f'{self.__class__.__name__}({self.vector.tolist()})'
