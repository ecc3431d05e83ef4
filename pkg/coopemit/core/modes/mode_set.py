# Copyright (c) coopemit contributors. All rights reserved.
import string

import numpy as np

DEGENERACY_RTOL = 1e-9


def degeneracy_tolerance(gamma_0):
    """float: Distance below which two eigenvalues count as one."""
    return DEGENERACY_RTOL * max(1.0, abs(gamma_0))


def order_modes(eigenvalues, scale=1.0):
    """Presentation order of the modes.

    Descending real part, ties (within 1e-12 relative to ``scale``) broken
    by ascending imaginary part.

    Args:
        eigenvalues (np.ndarray): Complex eigenvalues.
        scale (float, optional): Magnitude used to quantise real parts.

    Returns:
        np.ndarray: Index array sorting the modes.
    """
    eigenvalues = np.asarray(eigenvalues)
    quantum = 1e-12 * max(1.0, scale)
    real_key = np.round(eigenvalues.real / quantum)
    return np.lexsort((eigenvalues.imag, -real_key))


def group_degenerate(eigenvalues, tol):
    """Partition mode indices into groups of coinciding eigenvalues.

    Groups are built by single linkage, so a chain of close eigenvalues ends
    up in one group.

    Args:
        eigenvalues (np.ndarray): Complex eigenvalues in mode order.
        tol (float): Linking distance.

    Returns:
        list[list[int]]: Groups with ascending indices, ordered by their
            first member.
    """
    eigenvalues = np.asarray(eigenvalues)
    num = len(eigenvalues)
    parent = list(range(num))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(num):
        for j in range(i + 1, num):
            if abs(eigenvalues[i] - eigenvalues[j]) <= tol:
                parent[find(j)] = find(i)
    groups = dict()
    for i in range(num):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


class ModeSet(object):
    """Collective eigenmodes of a coupling matrix.

    Args:
        eigenvalues (np.ndarray): Complex eigenvalues Γ_m, shape (N, ).
        eigenvectors (np.ndarray): Matrix whose column ``m`` is b^(m),
            normalised with the bilinear form b^(m)ᵀ b^(m) = 1.
        degeneracy_groups (list[list[int]]): Partition of mode indices.
        method (str, optional): Name of the solver that produced the modes.
    """

    def __init__(self, eigenvalues, eigenvectors, degeneracy_groups,
                 method=None):
        eigenvalues = np.array(eigenvalues, dtype=np.complex128)
        eigenvectors = np.array(eigenvectors, dtype=np.complex128)
        assert eigenvectors.shape == (len(eigenvalues), len(eigenvalues))
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors
        self._groups = [list(g) for g in degeneracy_groups]
        self.method = method

    @property
    def eigenvalues(self):
        """np.ndarray: Complex eigenvalues Γ_m in presentation order."""
        return self._eigenvalues

    @property
    def eigenvectors(self):
        """np.ndarray: Column matrix [b^(1) | ... | b^(N)]."""
        return self._eigenvectors

    @property
    def rates(self):
        """np.ndarray: Decay rates γ_m = 2 Re Γ_m."""
        return 2 * self._eigenvalues.real

    @property
    def shifts(self):
        """np.ndarray: Collective Lamb shifts δ_m = Im Γ_m."""
        return self._eigenvalues.imag

    @property
    def degeneracy_groups(self):
        """list[list[int]]: Partition of mode indices."""
        return [list(g) for g in self._groups]

    @property
    def is_degenerate(self):
        """bool: Whether any group holds more than one mode."""
        return any(len(g) > 1 for g in self._groups)

    @property
    def labels(self):
        """list[str]: Presentation labels a, b, c, ... in mode order."""
        letters = string.ascii_lowercase
        return [
            letters[i] if i < len(letters) else f'm{i}'
            for i in range(len(self))
        ]

    def vector(self, m):
        """np.ndarray: Eigenvector b^(m)."""
        return self._eigenvectors[:, m]

    def __len__(self):
        return len(self._eigenvalues)

    def to_dict(self):
        """Plain-type dump used by the JSON writer."""
        return dict(
            method=self.method,
            labels=self.labels,
            eigenvalues=[[z.real, z.imag] for z in self._eigenvalues],
            rates=self.rates.tolist(),
            shifts=self.shifts.tolist(),
            eigenvectors=[[[z.real, z.imag] for z in self.vector(m)]
                          for m in range(len(self))],
            degeneracy_groups=self.degeneracy_groups)

    def __repr__(self):
        vals = ', '.join(f'{z:.6g}' for z in self._eigenvalues)
        return f'{self.__class__.__name__}([{vals}], method={self.method})'
