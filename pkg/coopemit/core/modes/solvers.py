# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np

from coopemit.utils import get_root_logger
from coopemit.utils.exceptions import (DomainError,
                                       InconsistentEigenvalueError,
                                       UnsupportedSizeError)
from .coupling import CouplingMatrix
from .mode_set import (ModeSet, degeneracy_tolerance, group_degenerate,
                       order_modes)

RESIDUAL_TOL = 1e-10
SYMMETRIC_TOL = 1e-12
SINGULAR_SUM_TOL = 1e-14
NEAR_DOUBLE_TOL = 1e-8
CLOSE_PAIR_RATIO = 1e-2

EQUILATERAL_BASIS = np.array([
    [1.0, 1.0, 1.0],
    [0.0, 1.0, -1.0],
    [-2.0, 1.0, 1.0],
]) / np.sqrt([[3.0], [2.0], [6.0]])


def _as_matrix(matrix):
    if isinstance(matrix, CouplingMatrix):
        return matrix
    return CouplingMatrix(matrix, check=False)


def _bilinear_normalize(vec):
    norm2 = vec @ vec
    if abs(norm2) <= 1e-8 * np.vdot(vec, vec).real:
        raise InconsistentEigenvalueError(
            'eigenvector is self-orthogonal under the bilinear form '
            '(matrix close to an exceptional point)')
    vec = vec / np.sqrt(norm2)
    # sign convention: dominant component has a positive real part
    k = int(np.argmax(np.abs(vec) - 1e-9 * np.arange(len(vec))))
    if vec[k].real < 0:
        vec = -vec
    return vec


def _orthonormal_null_space(shifted, k):
    _, _, vh = np.linalg.svd(shifted)
    basis = vh[-k:].conj().T
    vectors = []
    for i in range(k):
        vec = basis[:, i]
        for prev in vectors:
            vec = vec - (prev @ vec) * prev
        vectors.append(_bilinear_normalize(vec))
    return vectors


def _is_equilateral(entries):
    if entries.shape != (3, 3):
        return False
    off = entries[np.triu_indices(3, k=1)]
    scale = max(1.0, np.abs(entries).max())
    return bool(np.all(np.abs(off - off[0]) <= SYMMETRIC_TOL * scale))


def eigenvectors(matrix, eigenvalues):
    """Eigenvectors of Γ for given eigenvalues.

    Each group of coinciding eigenvalues is handled as one eigenspace whose
    basis is made orthonormal under the bilinear form vᵀw. When all
    off-diagonal couplings of a three-atom matrix coincide, the symmetric
    basis (1,1,1)/√3, (0,1,-1)/√2, (-2,1,1)/√6 is returned instead.

    Args:
        matrix (:obj:`CouplingMatrix` | np.ndarray): The coupling matrix.
        eigenvalues (np.ndarray): Its eigenvalues in mode order.

    Returns:
        np.ndarray: Column matrix of bilinear-normalised eigenvectors.
    """
    matrix = _as_matrix(matrix)
    entries = matrix.entries
    eigenvalues = np.asarray(eigenvalues, dtype=np.complex128)
    num = matrix.n
    if eigenvalues.shape != (num, ):
        raise DomainError(
            f'expected {num} eigenvalues, got {eigenvalues.shape}')
    tol = degeneracy_tolerance(matrix.gamma_0)
    groups = group_degenerate(eigenvalues, tol)
    vectors = np.zeros((num, num), dtype=np.complex128)
    off = matrix.off_diagonal()

    if np.all(off == 0):
        vectors = np.eye(num, dtype=np.complex128)
    elif _is_equilateral(entries):
        superradiant = matrix.gamma_0 + 2 * off.mean()
        dicke = [
            i for i in range(num) if abs(eigenvalues[i] - superradiant) <= tol
        ]
        if len(dicke) != 1:
            raise InconsistentEigenvalueError(
                f'no unique eigenvalue at {superradiant} among {eigenvalues}')
        others = [i for i in range(num) if i != dicke[0]]
        vectors[:, dicke[0]] = EQUILATERAL_BASIS[0]
        vectors[:, others[0]] = EQUILATERAL_BASIS[1]
        vectors[:, others[1]] = EQUILATERAL_BASIS[2]
    else:
        for group in groups:
            center = eigenvalues[group].mean()
            shifted = entries - center * np.eye(num)
            for idx, vec in zip(group,
                                _orthonormal_null_space(shifted, len(group))):
                vectors[:, idx] = vec

    scale = max(1.0, matrix.norm())
    for group in groups:
        center = eigenvalues[group].mean()
        for idx in group:
            vec = vectors[:, idx]
            residual = np.linalg.norm(entries @ vec - center * vec)
            if residual > RESIDUAL_TOL * scale * np.linalg.norm(vec):
                raise InconsistentEigenvalueError(
                    f'eigenvalue {eigenvalues[idx]} leaves residual '
                    f'{residual:.3e} (tolerance '
                    f'{RESIDUAL_TOL * scale:.3e})')
    return vectors


def _assemble(matrix, raw_eigenvalues, method):
    tol = degeneracy_tolerance(matrix.gamma_0)
    values = np.array(raw_eigenvalues, dtype=np.complex128)
    for group in group_degenerate(values, tol):
        values[group] = values[group].mean()
    values = values[order_modes(values, scale=matrix.norm())]
    groups = group_degenerate(values, tol)
    return ModeSet(values, eigenvectors(matrix, values), groups, method)


def eigenmodes_numeric(matrix):
    """Collective modes from a dense general eigen solver.

    Args:
        matrix (:obj:`CouplingMatrix` | np.ndarray): Square matrix, N >= 2.

    Returns:
        :obj:`ModeSet`: Modes ordered by descending Re Γ_m, ties by
            ascending Im Γ_m.
    """
    matrix = _as_matrix(matrix)
    return _assemble(matrix, np.linalg.eigvals(matrix.entries), 'numeric')


def _cubic(mu, s, p):
    return mu**3 - s * mu - 2 * p


def _cubic_scale(mu, s, p):
    return np.abs(mu)**3 + np.abs(s) * np.abs(mu) + 2 * abs(p)


def _polish(mu, s, p, steps=6):
    mu = np.array(mu, dtype=np.complex128)
    for _ in range(steps):
        value = _cubic(mu, s, p)
        slope = 3 * mu**2 - s
        safe = slope != 0
        trial = mu.copy()
        trial[safe] = mu[safe] - value[safe] / slope[safe]
        better = np.abs(_cubic(trial, s, p)) < np.abs(value)
        mu = np.where(better, trial, mu)
    return mu


def cubic_roots(g12, g13, g23):
    """Closed-form roots of det(Γ - Γ_0 - μ) = 0 for three atoms.

    With s = Γ12² + Γ13² + Γ23² and T = -3√3 Γ12Γ13Γ23 s^(-3/2), θ = arccos T
    (complex), the shifted eigenvalues are::

        μ_a = (√3/3) √s (cos θ/3 + √3 sin θ/3)
        μ_b = (√3/3) √s (cos θ/3 - √3 sin θ/3)
        μ_c = -(2√3/3) √s cos θ/3

    Both signs of √s are tried and the candidate set with the smaller
    characteristic-polynomial residual is kept, then polished by guarded
    Newton steps. Next to a double root the pair is seeded from -3p/s
    split by ±√disc / (6s), p = Γ12Γ13Γ23, disc = 4s³ - 108p².

    Args:
        g12 (complex): Coupling of atoms 1 and 2.
        g13 (complex): Coupling of atoms 1 and 3.
        g23 (complex): Coupling of atoms 2 and 3.

    Returns:
        tuple[np.ndarray, float]: The three shifts μ and the worst relative
            residual.
    """
    s = complex(g12**2 + g13**2 + g23**2)
    p = complex(g12 * g13 * g23)
    disc = 4 * s**3 - 108 * p**2
    if abs(disc) <= NEAR_DOUBLE_TOL * (4 * abs(s)**3 + 108 * abs(p)**2):
        # arccos loses half the digits here, split the double root -3p/s
        # by δ² = disc / (36 s²) instead
        double = -3 * p / s
        split = np.sqrt(disc) / (6 * s)
        best = np.array([-2 * double, double + split, double - split])
    else:
        best, best_residual = None, np.inf
        for root_s in (np.sqrt(s), -np.sqrt(s)):
            t = -3 * np.sqrt(3) * p / root_s**3
            theta = np.arccos(complex(t))
            c3, s3 = np.cos(theta / 3), np.sin(theta / 3)
            mu = np.array([
                np.sqrt(3) / 3 * root_s * (c3 + np.sqrt(3) * s3),
                np.sqrt(3) / 3 * root_s * (c3 - np.sqrt(3) * s3),
                -2 * np.sqrt(3) / 3 * root_s * c3,
            ])
            residual = np.max(
                np.abs(_cubic(mu, s, p)) / _cubic_scale(mu, s, p))
            if residual < best_residual:
                best, best_residual = mu, residual
    best = _polish(best, s, p)
    residual = float(
        np.max(np.abs(_cubic(best, s, p)) / _cubic_scale(best, s, p)))
    return best, residual


def _refine_close_pair(matrix, values):
    """Recompute two nearly equal eigenvalues on the deflated 2 x 2 block.

    Roots of the cubic are only accurate to about √eps next to a double
    root, while Γ itself stays well conditioned there. With v the
    eigenvector of the isolated eigenvalue, Γ maps {w : vᵀw = 0} onto
    itself, so the pair are the eigenvalues of Γ restricted to that plane.
    """
    gaps = [(abs(values[i] - values[j]), i, j)
            for i, j in ((0, 1), (0, 2), (1, 2))]
    gap, i, j = min(gaps)
    k = 3 - i - j
    isolation = min(abs(values[k] - values[i]), abs(values[k] - values[j]))
    if not gap <= CLOSE_PAIR_RATIO * isolation:
        return values
    entries = matrix.entries
    vec = np.linalg.svd(entries - values[k] * np.eye(3))[2][-1].conj()
    pivot = int(np.argmax(np.abs(vec)))
    a, b = [idx for idx in range(3) if idx != pivot]
    # columns e_a - (v_a/v_pivot) e_pivot and e_b - (v_b/v_pivot) e_pivot
    basis = np.zeros((3, 2), dtype=np.complex128)
    basis[a, 0] = basis[b, 1] = 1.0
    basis[pivot] = -vec[[a, b]] / vec[pivot]
    block = (entries @ basis)[[a, b]]
    half_trace = (block[0, 0] + block[1, 1]) / 2
    root = np.sqrt(((block[0, 0] - block[1, 1]) / 2)**2 +
                   block[0, 1] * block[1, 0])
    values = np.array(values, dtype=np.complex128)
    values[i], values[j] = half_trace + root, half_trace - root
    return values


def eigenmodes_analytic(matrix):
    """Collective modes of three atoms from the closed-form cubic.

    Args:
        matrix (:obj:`CouplingMatrix` | np.ndarray): 3 x 3 coupling matrix
            with equal diagonal entries.

    Returns:
        :obj:`ModeSet`: Modes in the same order convention as
            :func:`eigenmodes_numeric`.
    """
    matrix = _as_matrix(matrix)
    if matrix.n != 3:
        raise UnsupportedSizeError(
            f'closed-form eigenvalues need N = 3, got N = {matrix.n}')
    entries = matrix.entries
    if not np.all(np.diag(entries) == entries[0, 0]):
        raise DomainError('closed form needs equal diagonal entries')
    g12, g13, g23 = entries[0, 1], entries[0, 2], entries[1, 2]
    gamma_0 = matrix.gamma_0
    s = g12**2 + g13**2 + g23**2
    if abs(s) < SINGULAR_SUM_TOL * abs(gamma_0)**2:
        logger = get_root_logger()
        logger.debug('closed form singular (|s|=%.3e), using numeric path',
                     abs(s))
        return eigenmodes_numeric(matrix)
    mu, residual = cubic_roots(g12, g13, g23)
    if residual > RESIDUAL_TOL:
        raise InconsistentEigenvalueError(
            f'closed-form roots leave relative residual {residual:.3e}')
    return _assemble(matrix, _refine_close_pair(matrix, gamma_0 + mu),
                     'analytic')
