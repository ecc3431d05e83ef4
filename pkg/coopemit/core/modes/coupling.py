# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np

from coopemit.utils.exceptions import ConsistencyError, DomainError
from ..kernels import kernel_D, kernel_P

PSD_TOL = 1e-10


class ModelParams(object):
    """Single-atom parameters shared by every atom.

    Args:
        gamma_eg (float, optional): Single-atom decay rate, the rate unit.
            Defaults to 1.
        delta_eg (float, optional): Single-atom dynamic shift in units of
            ``gamma_eg``. Defaults to 0, i.e. absorbed into the frequency
            origin.
    """

    def __init__(self, gamma_eg=1.0, delta_eg=0.0):
        if not np.isfinite(gamma_eg) or not gamma_eg > 0:
            raise DomainError(f'gamma_eg must be positive, got {gamma_eg}')
        if not np.isfinite(delta_eg):
            raise DomainError(f'delta_eg must be finite, got {delta_eg}')
        self.gamma_eg = float(gamma_eg)
        self.delta_eg = float(delta_eg)

    @property
    def gamma_0(self):
        """complex: Diagonal element γ_eg/2 + iΔ_eg γ_eg."""
        return complex(self.gamma_eg / 2, self.delta_eg * self.gamma_eg)

    def to_dict(self):
        return dict(gamma_eg=self.gamma_eg, delta_eg=self.delta_eg)

    def __eq__(self, other):
        return isinstance(other, ModelParams) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return (f'{self.__class__.__name__}(gamma_eg={self.gamma_eg}, '
                f'delta_eg={self.delta_eg})')


class CouplingMatrix(object):
    """Complex-symmetric decay matrix of the single-excitation amplitudes.

    The amplitudes obey ``dC/dt = -Γ C``.

    Args:
        entries (np.ndarray): N x N complex matrix in units of γ_eg.
        check (bool, optional): Validate symmetry, equal diagonal and
            positivity of the dissipative part. Defaults to True.
    """

    def __init__(self, entries, check=True):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DomainError(
                f'coupling matrix must be square, got {entries.shape}')
        if entries.shape[0] < 2:
            raise DomainError('coupling matrix needs at least two atoms')
        entries.setflags(write=False)
        self._entries = entries
        if check:
            self.validate()

    @property
    def entries(self):
        """np.ndarray: Read-only complex matrix."""
        return self._entries

    @property
    def n(self):
        """int: Atom count."""
        return self._entries.shape[0]

    @property
    def gamma_0(self):
        """complex: The common diagonal element."""
        return complex(self._entries[0, 0])

    def off_diagonal(self):
        """np.ndarray: Upper-triangle couplings ordered by (m, n)."""
        rows, cols = np.triu_indices(self.n, k=1)
        return self._entries[rows, cols]

    def dissipative_part(self):
        """np.ndarray: Hermitian part (Γ + Γᴴ) / 2."""
        return (self._entries + self._entries.conj().T) / 2

    def norm(self):
        """float: Frobenius norm, the scale of residual tolerances."""
        return float(np.linalg.norm(self._entries))

    def validate(self):
        entries = self._entries
        if not np.array_equal(entries, entries.T):
            raise DomainError('coupling matrix must be complex-symmetric')
        diag = np.diag(entries)
        if not np.all(diag == diag[0]):
            raise DomainError('coupling matrix diagonal entries must be equal')
        lowest = np.linalg.eigvalsh(self.dissipative_part()).min()
        if lowest < -PSD_TOL * max(1.0, abs(diag[0])):
            raise ConsistencyError(
                f'dissipative part has negative eigenvalue {lowest:.3e}')

    def __repr__(self):
        return (f'{self.__class__.__name__}(n={self.n}, '
                f'gamma_0={self.gamma_0})')


def build_coupling_matrix(config, params=None):
    """Assemble Γ for an atom configuration.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        params (:obj:`ModelParams`, optional): Single-atom parameters.
            Defaults to ``ModelParams()``.

    Returns:
        :obj:`CouplingMatrix`: Diagonal γ/2 + iΔγ, off-diagonal
            (γ/2)(D + iP) of each pair.
    """
    params = ModelParams() if params is None else params
    num_atoms = config.num_atoms
    rows, cols = np.triu_indices(num_atoms, k=1)
    dist = config.distance_matrix()[rows, cols]
    eta = config.eta_matrix()[rows, cols]
    half = params.gamma_eg / 2
    coupling = half * (kernel_D(dist, eta) + 1j * kernel_P(dist, eta))

    entries = np.full((num_atoms, num_atoms),
                      params.gamma_0,
                      dtype=np.complex128)
    entries[rows, cols] = coupling
    entries[cols, rows] = coupling
    return CouplingMatrix(entries)
