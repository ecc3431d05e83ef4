# Copyright (c) coopemit contributors. All rights reserved.
"""Emission spectra of the decaying single excitation.

With f_n(δ) = Σ_m a_m b_n^(m) / (Γ_m - iδ) the spectrum integrated over all
detector directions is the Hermitian form S(δ) = f(δ)ᴴ T f(δ), where T
holds the angular integrals of the dipole pattern times the relative phase
of each atom pair. The phase factors use the resonant wavenumber
k0 = 2π/λ0, and slowly varying frequency prefactors are dropped.
"""
import numpy as np

from coopemit.utils.exceptions import DomainError, SpectrumConsistencyError
from ..kernels import kernel_D
from .grid import SpectrumSeries

SAME_ATOM_WEIGHT = 8 * np.pi / 3
IMAG_TOL = 1e-10
NEGATIVE_TOL = 1e-9


def _check_sizes(config, modes, decomp):
    if not config.num_atoms == len(modes) == len(decomp):
        raise DomainError(
            f'{config.num_atoms} atoms, {len(modes)} modes and '
            f'{len(decomp)} weights do not match')


def lineshapes(modes, decomp, deltas):
    """Amplitude lineshapes f_n(δ) of every atom.

    Args:
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        deltas (np.ndarray): Detunings in γ_eg, shape (K, ).

    Returns:
        np.ndarray: Complex array of shape (K, N).
    """
    deltas = np.atleast_1d(np.asarray(deltas, dtype=np.float64))
    poles = modes.eigenvalues[None, :] - 1j * deltas[:, None]
    return (decomp.coefficients / poles) @ modes.eigenvectors.T


def mode_lineshape(modes, decomp, n, delta):
    """f_n(δ) = Σ_m a_m b_n^(m) / (Γ_m - iδ) for one atom and detuning.

    Args:
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        n (int): Zero-based atom index.
        delta (float): Detuning in γ_eg.

    Returns:
        complex: The lineshape amplitude.
    """
    if not 0 <= n < len(modes):
        raise DomainError(f'atom index {n} out of range for {len(modes)} '
                          'atoms')
    return complex(lineshapes(modes, decomp, [delta])[0, n])


def pair_weight(x, theta, same_atom=False):
    """Angular weight T_mn of an atom pair.

    The weight is ∫dΩ (1 - (R̂·d̂)²) exp(i k0 R̂·r_mn), which evaluates to
    8π/3 on the diagonal and to (8π/3) D(x, θ) between distinct atoms.

    Args:
        x (float): Separation in λ0, positive unless ``same_atom``.
        theta (float): Angle between dipole and pair axis.
        same_atom (bool, optional): Evaluate the diagonal branch.

    Returns:
        float: The weight.
    """
    if same_atom:
        return SAME_ATOM_WEIGHT
    if not x > 0:
        raise DomainError(f'distinct atoms need a positive separation, '
                          f'got {x}')
    return SAME_ATOM_WEIGHT * kernel_D(x, theta)


def weight_matrix(config):
    """np.ndarray: Real symmetric N x N matrix of pair weights T_mn."""
    # D(0, η) = 1 puts 8π/3 on the diagonal
    return SAME_ATOM_WEIGHT * kernel_D(config.distance_matrix(),
                                       config.eta_matrix())


def _real_spectrum(values):
    residue = np.abs(values.imag).max()
    if residue > IMAG_TOL * np.abs(values).max():
        raise SpectrumConsistencyError(
            f'spectrum has imaginary residue {residue:.3e}')
    real = values.real
    peak = max(real.max(), 0.0)
    if real.min() < -NEGATIVE_TOL * peak:
        raise SpectrumConsistencyError(
            f'spectrum dips to {real.min():.3e} below zero '
            f'(peak {peak:.3e})')
    return np.maximum(real, 0.0)


def total_spectrum(config, modes, decomp, grid):
    """Spectrum integrated over all detector directions.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        modes (:obj:`ModeSet`): Modes of the coupling matrix of ``config``.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        grid (:obj:`DetuningGrid`): Detunings.

    Returns:
        :obj:`SpectrumSeries`: S(δ) = Σ_mn f_n f_m* T_mn.
    """
    _check_sizes(config, modes, decomp)
    amps = lineshapes(modes, decomp, grid.values)
    values = np.einsum('kn,nm,km->k', amps.conj(), weight_matrix(config),
                       amps)
    return SpectrumSeries(grid, _real_spectrum(values))


def directional_spectrum(config, modes, decomp, direction, grid):
    """Spectrum seen by a detector in direction R̂.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        modes (:obj:`ModeSet`): Modes of the coupling matrix of ``config``.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        direction (:obj:`DetectorDirection`): Detector direction.
        grid (:obj:`DetuningGrid`): Detunings.

    Returns:
        :obj:`SpectrumSeries`: (1 - (R̂·d̂)²) |Σ_n exp(-i k0 R̂·r_n) f_n|².
    """
    _check_sizes(config, modes, decomp)
    return SpectrumSeries(
        grid,
        _directional_values(config, modes, decomp, direction.vector[None],
                            grid.values)[:, 0])


def _directional_values(config, modes, decomp, directions, deltas):
    amps = lineshapes(modes, decomp, deltas)
    phases = np.exp(-2j * np.pi * directions @ config.positions.T)
    polarization = 1 - (directions @ config.dipole)**2
    # clip rounding below zero for directions along the dipole
    polarization = np.maximum(polarization, 0.0)
    return np.abs(amps @ phases.T)**2 * polarization


def mode_resolved_spectrum(config, modes, decomp, grid):
    """Lorentzian contribution of every mode, ignoring cross terms.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        grid (:obj:`DetuningGrid`): Detunings.

    Returns:
        np.ndarray: Shape (K, N), column m is
            |a_m|² (b^(m)ᴴ T b^(m)) / |Γ_m - iδ|².
    """
    _check_sizes(config, modes, decomp)
    vectors = modes.eigenvectors
    strength = np.einsum('nm,nl,lm->m', vectors.conj(), weight_matrix(config),
                         vectors).real
    poles = modes.eigenvalues[None, :] - 1j * grid.values[:, None]
    return np.abs(decomp.coefficients)**2 * strength / np.abs(poles)**2
