# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np
from numpy.polynomial.legendre import leggauss

from coopemit.utils.exceptions import DomainError, OracleMismatchError
from .grid import SpectrumSeries
from .lineshape import _check_sizes, _directional_values, total_spectrum

MIN_ORDER = 6
ORACLE_TOL = 1e-6


def sphere_quadrature(order):
    """Product rule on the unit sphere.

    Gauss-Legendre nodes in cos θ times ``2 * order`` equally spaced
    azimuths. Nodes are ordered polar-major so sums over them are
    reproducible.

    Args:
        order (int): Number of polar nodes, at least 6.

    Returns:
        tuple[np.ndarray]: Directions of shape (M, 3) and weights of shape
            (M, ) summing to 4π.
    """
    if int(order) != order or order < MIN_ORDER:
        raise DomainError(
            f'quadrature order must be an integer >= {MIN_ORDER}, '
            f'got {order}')
    order = int(order)
    cos_theta, polar_weights = leggauss(order)
    num_phi = 2 * order
    phi = 2 * np.pi * np.arange(num_phi) / num_phi
    sin_theta = np.sqrt(1 - cos_theta**2)
    directions = np.stack([
        np.outer(sin_theta, np.cos(phi)),
        np.outer(sin_theta, np.sin(phi)),
        np.repeat(cos_theta[:, None], num_phi, axis=1)
    ],
                          axis=-1).reshape(-1, 3)
    weights = np.repeat(polar_weights * 2 * np.pi / num_phi, num_phi)
    return directions, weights


def quadrature_total_spectrum(config, modes, decomp, grid, order=20):
    """Total spectrum by integrating the directional one over the sphere.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        modes (:obj:`ModeSet`): The collective modes.
        decomp (:obj:`ModeDecomposition`): Mode weights of C(0).
        grid (:obj:`DetuningGrid`): Detunings.
        order (int, optional): Polar order of the rule. Defaults to 20.

    Returns:
        :obj:`SpectrumSeries`: ∫dΩ S_R̂(δ).
    """
    _check_sizes(config, modes, decomp)
    directions, weights = sphere_quadrature(order)
    values = _directional_values(config, modes, decomp, directions,
                                 grid.values)
    return SpectrumSeries(grid, values @ weights)


def oracle_deviation(config, modes, decomp, grid, order=20):
    """Largest deviation of the quadrature spectrum from the closed form.

    Returns:
        float: max |S_quad - S| / max S, zero for a vanishing spectrum.
    """
    exact = total_spectrum(config, modes, decomp, grid).values
    approx = quadrature_total_spectrum(config, modes, decomp, grid,
                                       order).values
    peak = exact.max()
    if not peak > 0:
        return float(np.abs(approx).max())
    return float(np.abs(approx - exact).max() / peak)


def check_oracle(config, modes, decomp, grid, order=20, tol=ORACLE_TOL):
    """Raise :class:`OracleMismatchError` when the two paths disagree.

    Returns:
        float: The relative deviation.
    """
    deviation = oracle_deviation(config, modes, decomp, grid, order)
    if deviation > tol:
        raise OracleMismatchError(
            f'quadrature of order {order} deviates by {deviation:.3e} '
            f'(tolerance {tol:.0e})')
    return deviation
