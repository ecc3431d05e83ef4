# Copyright (c) coopemit contributors. All rights reserved.
"""Dimensionless pair-coupling kernels.

With ``u = 2πx`` the real and imaginary parts of the off-diagonal coupling
``Γ_mn / (γ_eg / 2)`` read::

    D(x, η) = 3/2 { sin²η sin(u)/u + (1 - 3cos²η) [cos(u)/u² - sin(u)/u³] }
    P(x, η) = 3/2 { -sin²η cos(u)/u + (1 - 3cos²η) [sin(u)/u² + cos(u)/u³] }

The bracket of D cancels catastrophically for small ``u`` and is replaced by
its Maclaurin series below :data:`SERIES_THRESHOLD`; the bracket of P uses
the same switch so both kernels share one code path.

η enters only through cos²η, so any angle in [0, π] is accepted; the
geometry layer folds pair angles into [0, π/2].
"""
import math

import numpy as np

from coopemit.utils.exceptions import DomainError

SERIES_THRESHOLD = 0.1

# cos(u)/u² - sin(u)/u³ = Σ_j (-1)^(j+1) 2(j+1)/(2j+3)! u^(2j)
# seven terms reach below 1e-17 for u <= SERIES_THRESHOLD
_D_SERIES = tuple((-1)**(j + 1) * 2 * (j + 1) / math.factorial(2 * j + 3)
                  for j in range(7))
# sin(u)/u² + cos(u)/u³ = u^-3 + u^-1/2 + Σ_{j>=2} (-1)^j (1-2j)/(2j)! u^(2j-3)
_P_SERIES = tuple((-1)**j * (1 - 2 * j) / math.factorial(2 * j)
                  for j in range(2, 9))


class KernelValue(object):
    """Both kernels evaluated at one pair geometry.

    Args:
        x (float): Separation in λ0.
        eta (float): Folded dipole angle in radians.
        d (float): Value of D(x, η).
        p (float): Value of P(x, η).
    """

    __slots__ = ('x', 'eta', 'd', 'p')

    def __init__(self, x, eta, d, p):
        self.x = float(x)
        self.eta = float(eta)
        self.d = float(d)
        self.p = float(p)

    def __repr__(self):
        return (f'{self.__class__.__name__}(x={self.x:.6g}, '
                f'eta={self.eta:.6g}, d={self.d:.6g}, p={self.p:.6g})')


def _horner(coeffs, t):
    result = np.zeros_like(t)
    for c in reversed(coeffs):
        result = result * t + c
    return result


def _check_eta(eta):
    # D(x, η) = D(x, π - η), unfolded angles give the folded value
    if np.any(~np.isfinite(eta)) or np.any(eta < 0) or np.any(eta > np.pi):
        raise DomainError(f'eta must lie in [0, pi], got {eta}')


def d_bracket(u, direct=None):
    """cos(u)/u² - sin(u)/u³, finite at u = 0 where it equals -1/3.

    Args:
        u (np.ndarray): Non-negative arguments.
        direct (bool, optional): Force the direct (True) or series (False)
            branch everywhere. Defaults to switching at
            :data:`SERIES_THRESHOLD`.

    Returns:
        np.ndarray: The bracket values.
    """
    u = np.asarray(u, dtype=np.float64)
    small = u < SERIES_THRESHOLD if direct is None else \
        np.full(u.shape, not direct)
    out = np.empty_like(u)
    us = u[small]
    out[small] = _horner(_D_SERIES, us * us)
    ul = u[~small]
    out[~small] = np.cos(ul) / ul**2 - np.sin(ul) / ul**3
    return out


def p_bracket(u, direct=None):
    """sin(u)/u² + cos(u)/u³ for u > 0.

    Args:
        u (np.ndarray): Positive arguments.
        direct (bool, optional): Force one branch, see :func:`d_bracket`.

    Returns:
        np.ndarray: The bracket values.
    """
    u = np.asarray(u, dtype=np.float64)
    small = u < SERIES_THRESHOLD if direct is None else \
        np.full(u.shape, not direct)
    out = np.empty_like(u)
    us = u[small]
    out[small] = 1.0 / us**3 + 0.5 / us + us * _horner(_P_SERIES, us * us)
    ul = u[~small]
    out[~small] = np.sin(ul) / ul**2 + np.cos(ul) / ul**3
    return out


def kernel_D(x, eta):
    """Dissipative pair kernel D(x, η).

    Args:
        x (float | np.ndarray): Separation(s) in λ0, ``x >= 0``.
        eta (float | np.ndarray): Dipole angle(s) in radians, [0, π].

    Returns:
        float | np.ndarray: D, with D(0, η) = 1.
    """
    scalar = np.isscalar(x) and np.isscalar(eta)
    x, eta = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64), np.asarray(eta, dtype=np.float64))
    if np.any(~np.isfinite(x)) or np.any(x < 0):
        raise DomainError(f'separation must be non-negative, got {x}')
    _check_eta(eta)
    u = 2 * np.pi * x
    sin2 = np.sin(eta)**2
    value = 1.5 * (sin2 * np.sinc(u / np.pi) +
                   (1 - 3 * np.cos(eta)**2) * d_bracket(u))
    # exact small-sample limit
    value = np.where(x == 0, 1.0, value)
    return float(value) if scalar else value


def kernel_P(x, eta):
    """Dispersive pair kernel P(x, η), divergent as x^-3.

    Args:
        x (float | np.ndarray): Separation(s) in λ0, ``x > 0``.
        eta (float | np.ndarray): Dipole angle(s) in radians, [0, π].

    Returns:
        float | np.ndarray: P.
    """
    scalar = np.isscalar(x) and np.isscalar(eta)
    x, eta = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64), np.asarray(eta, dtype=np.float64))
    if np.any(~np.isfinite(x)) or np.any(x <= 0):
        raise DomainError(f'separation must be positive, got {x}')
    _check_eta(eta)
    u = 2 * np.pi * x
    sin2 = np.sin(eta)**2
    value = 1.5 * (-sin2 * np.cos(u) / u +
                   (1 - 3 * np.cos(eta)**2) * p_bracket(u))
    return float(value) if scalar else value


def evaluate_kernels(x, eta):
    """Evaluate both kernels at one pair geometry.

    Args:
        x (float): Separation in λ0, positive.
        eta (float): Dipole angle in radians.

    Returns:
        :obj:`KernelValue`: The kernel record.
    """
    return KernelValue(x, eta, kernel_D(x, eta), kernel_P(x, eta))


def kernel_grid(x_values, etas):
    """Tabulate D and P on a product grid.

    Args:
        x_values (np.ndarray): Positive separations in λ0.
        etas (list[float]): Dipole angles in radians.

    Returns:
        np.ndarray: Rows (x, eta, D, P), eta-major then ascending x.
    """
    x_values = np.asarray(x_values, dtype=np.float64)
    rows = []
    for eta in etas:
        eta_col = np.full_like(x_values, eta)
        rows.append(
            np.stack([
                x_values, eta_col,
                kernel_D(x_values, eta_col),
                kernel_P(x_values, eta_col)
            ],
                     axis=1))
    return np.concatenate(rows, axis=0)


__all__ = [
    'SERIES_THRESHOLD', 'KernelValue', 'd_bracket', 'p_bracket', 'kernel_D',
    'kernel_P', 'evaluate_kernels', 'kernel_grid'
]
