# Copyright (c) coopemit contributors. All rights reserved.
"""Single-excitation amplitude dynamics.

The amplitudes obey ``dC/dt = -Γ C`` and are propagated in closed form,
``C_n(t) = Σ_m a_m b_n^(m) exp(-Γ_m t)``.
"""
import numpy as np

from coopemit.utils import get_root_logger
from coopemit.utils.exceptions import (DomainError, NonDiagonalizableError,
                                       OracleMismatchError)

NORM_TOL = 1e-12
COND_LIMIT = 1e12
RECONSTRUCT_TOL = 1e-10


class InitialState(object):
    """Normalised single-excitation state C(0) over |e_n; 0⟩.

    Args:
        amplitudes (np.ndarray): Complex vector with Σ|C_n|² = 1.
    """

    def __init__(self, amplitudes):
        amplitudes = np.array(amplitudes, dtype=np.complex128)
        if amplitudes.ndim != 1 or len(amplitudes) < 1:
            raise DomainError(
                f'initial state must be a vector, got {amplitudes.shape}')
        if not np.all(np.isfinite(amplitudes)):
            raise DomainError('initial state must be finite')
        norm2 = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise DomainError(
                f'initial state must be normalised, got |C|^2={norm2!r}')
        amplitudes.setflags(write=False)
        self._amplitudes = amplitudes

    @classmethod
    def excited(cls, n, num_atoms):
        """Atom ``n`` (zero based) excited, all others in the ground state."""
        if not 0 <= n < num_atoms:
            raise DomainError(f'atom index {n} out of range for '
                              f'{num_atoms} atoms')
        amplitudes = np.zeros(num_atoms, dtype=np.complex128)
        amplitudes[n] = 1.0
        return cls(amplitudes)

    @classmethod
    def dicke(cls, num_atoms):
        """Symmetric state (1, ..., 1)/√N."""
        return cls(np.full(num_atoms, 1 / np.sqrt(num_atoms)))

    @classmethod
    def from_vector(cls, amplitudes, normalize=False):
        """Build a state from a vector.

        Args:
            amplitudes (np.ndarray): Complex amplitudes.
            normalize (bool, optional): Rescale to unit norm first.
                Defaults to False.

        Returns:
            :obj:`InitialState`: The state.
        """
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if normalize:
            norm = np.linalg.norm(amplitudes)
            if not norm > 0:
                raise DomainError('cannot normalise a zero vector')
            amplitudes = amplitudes / norm
        return cls(amplitudes)

    @property
    def amplitudes(self):
        """np.ndarray: C(0)."""
        return self._amplitudes

    @property
    def num_atoms(self):
        return len(self._amplitudes)

    def __repr__(self):
        return f'{self.__class__.__name__}({self._amplitudes.tolist()})'


class ModeDecomposition(object):
    """Mode weights a_m with Σ_m a_m b^(m) = C(0).

    Args:
        coefficients (np.ndarray): Complex weights, one per mode.
    """

    def __init__(self, coefficients):
        coefficients = np.array(coefficients, dtype=np.complex128)
        assert coefficients.ndim == 1
        coefficients.setflags(write=False)
        self._coefficients = coefficients

    @property
    def coefficients(self):
        return self._coefficients

    def __len__(self):
        return len(self._coefficients)

    def __repr__(self):
        coeffs = ', '.join(f'{z:.6g}' for z in self._coefficients)
        return f'{self.__class__.__name__}([{coeffs}])'


class AmplitudeTrajectory(object):
    """Amplitudes C_n(t) sampled on a time grid.

    Args:
        times (np.ndarray): Sample times in 1/γ_eg, shape (K, ).
        amplitudes (np.ndarray): Complex amplitudes, shape (K, N).
    """

    def __init__(self, times, amplitudes):
        self.times = np.asarray(times, dtype=np.float64)
        self.amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        assert self.amplitudes.shape[0] == len(self.times)

    @property
    def populations(self):
        """np.ndarray: Excitation probabilities |C_n(t)|², shape (K, N)."""
        return np.abs(self.amplitudes)**2

    @property
    def survival(self):
        """np.ndarray: Total excitation probability Σ_n |C_n(t)|²."""
        return self.populations.sum(axis=1)

    def __len__(self):
        return len(self.times)

    def __repr__(self):
        return (f'{self.__class__.__name__}(num_samples={len(self)}, '
                f'num_atoms={self.amplitudes.shape[1]})')


def _as_vector(state):
    if isinstance(state, InitialState):
        return state.amplitudes
    return np.asarray(state, dtype=np.complex128)


def decompose_initial(modes, state):
    """Expand C(0) on the eigenvectors of Γ.

    The weights come from the linear system [b^(1)|...|b^(N)] a = C(0).
    Without degenerate modes they are cross-checked against the bilinear
    projections b^(m)ᵀ C(0).

    Args:
        modes (:obj:`ModeSet`): The collective modes.
        state (:obj:`InitialState` | np.ndarray): C(0). A raw vector need
            not be normalised, which restarting from C(t) requires.

    Returns:
        :obj:`ModeDecomposition`: The weights a_m.
    """
    vector = _as_vector(state)
    basis = modes.eigenvectors
    if vector.shape != (basis.shape[0], ):
        raise DomainError(f'state of shape {vector.shape} does not match '
                          f'{basis.shape[0]} modes')
    cond = np.linalg.cond(basis)
    if not cond <= COND_LIMIT:
        raise NonDiagonalizableError(
            f'eigenvector matrix condition number {cond:.3e} exceeds '
            f'{COND_LIMIT:.0e}')
    coefficients = np.linalg.solve(basis, vector)
    scale = max(1.0, float(np.linalg.norm(vector)))
    error = np.linalg.norm(basis @ coefficients - vector)
    if error > RECONSTRUCT_TOL * scale:
        raise OracleMismatchError(
            f'mode expansion misses C(0) by {error:.3e}')
    if not modes.is_degenerate:
        projection = basis.T @ vector
        gap = np.abs(projection - coefficients).max()
        if gap > RECONSTRUCT_TOL * scale * cond:
            raise OracleMismatchError(
                f'linear solve and bilinear projection differ by {gap:.3e}')
    return ModeDecomposition(coefficients)


def _check_times(times):
    times = np.asarray(times, dtype=np.float64)
    if times.ndim != 1:
        raise DomainError(f'times must be 1-D, got shape {times.shape}')
    if not np.all(np.isfinite(times)):
        raise DomainError('times must be finite')
    if np.any(times < 0):
        raise DomainError(f'times must be non-negative, got {times.min()}')
    if np.any(np.diff(times) < 0):
        raise DomainError('times must be ascending')
    return times


def evolve(modes, decomp, times):
    """Propagate the amplitudes with closed-form exponentials.

    Args:
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Weights of C(0).
        times (np.ndarray): Non-negative ascending times in 1/γ_eg.

    Returns:
        :obj:`AmplitudeTrajectory`: C_n(t) at every sample.
    """
    times = _check_times(times)
    if len(decomp) != len(modes):
        raise DomainError(f'{len(decomp)} weights for {len(modes)} modes')
    weighted = np.exp(-np.outer(times, modes.eigenvalues)) * \
        decomp.coefficients
    return AmplitudeTrajectory(times, weighted @ modes.eigenvectors.T)


def mode_populations(modes, decomp, times):
    """Weight left in each mode, |a_m|² exp(-γ_m t).

    Args:
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Weights of C(0).
        times (np.ndarray): Non-negative ascending times in 1/γ_eg.

    Returns:
        np.ndarray: Shape (K, N).
    """
    times = _check_times(times)
    return np.abs(decomp.coefficients)**2 * \
        np.exp(-np.outer(times, modes.rates))


def is_monotone_survival(trajectory, tol=1e-12):
    """Check that the survival probability never grows.

    Violations are logged, not clipped.

    Args:
        trajectory (:obj:`AmplitudeTrajectory`): The evolved amplitudes.
        tol (float, optional): Allowed increase between samples.

    Returns:
        bool: Whether the survival is non-increasing within ``tol``.
    """
    steps = np.diff(trajectory.survival)
    bad = np.nonzero(steps > tol)[0]
    if len(bad):
        logger = get_root_logger()
        logger.warning(
            'survival grows at %d samples, first at t=%.6g by %.3e',
            len(bad), trajectory.times[bad[0] + 1], steps[bad[0]])
        return False
    return True


__all__ = [
    'InitialState', 'ModeDecomposition', 'AmplitudeTrajectory',
    'decompose_initial', 'evolve', 'mode_populations', 'is_monotone_survival'
]
