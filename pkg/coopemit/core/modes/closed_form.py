# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np

from coopemit.utils.exceptions import DomainError
from ..kernels import kernel_D, kernel_P
from .coupling import ModelParams


def equilateral_closed_form(x, params=None):
    """Rates and shifts of three atoms on an equilateral triangle.

    The dipole is normal to the triangle, so every pair sees η = π/2. The
    symmetric (Dicke) mode ``a`` is non-degenerate; ``b`` and ``c`` coincide.

    Args:
        x (float): Side length in λ0.
        params (:obj:`ModelParams`, optional): Single-atom parameters.

    Returns:
        tuple[float]: ``(gamma_a, gamma_b, delta_a, delta_b, splitting)``
            where gamma_a = γ(1 + 2D), gamma_b = γ(1 - D), delta_a = Δγ + γP,
            delta_b = Δγ - γP/2 and splitting = 3γP/2.
    """
    if not x > 0:
        raise DomainError(f'side must be positive, got {x}')
    params = ModelParams() if params is None else params
    gamma = params.gamma_eg
    d = kernel_D(x, np.pi / 2)
    p = kernel_P(x, np.pi / 2)
    shift = params.delta_eg * gamma
    return (gamma * (1 + 2 * d), gamma * (1 - d), shift + gamma * p,
            shift - gamma * p / 2, 1.5 * gamma * p)


def equilateral_eigenvalues(x, params=None):
    """np.ndarray: ``[Γ_a, Γ_b, Γ_c]`` assembled from the closed form."""
    gamma_a, gamma_b, delta_a, delta_b, _ = equilateral_closed_form(
        x, params)
    return np.array([
        complex(gamma_a / 2, delta_a),
        complex(gamma_b / 2, delta_b),
        complex(gamma_b / 2, delta_b)
    ])


def two_atom_modes(x, eta, params=None):
    """Eigenvalues of an atom pair, Γ0 ± Γ12.

    The eigenvectors are (1, ±1)/√2.

    Args:
        x (float): Separation in λ0.
        eta (float): Dipole angle in radians.
        params (:obj:`ModelParams`, optional): Single-atom parameters.

    Returns:
        np.ndarray: Symmetric then antisymmetric eigenvalue.
    """
    params = ModelParams() if params is None else params
    coupling = params.gamma_eg / 2 * complex(kernel_D(x, eta),
                                             kernel_P(x, eta))
    return np.array([params.gamma_0 + coupling, params.gamma_0 - coupling])
