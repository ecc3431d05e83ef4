# Copyright (c) coopemit contributors. All rights reserved.
import numpy as np

from coopemit.utils.exceptions import DegenerateGeometryError, DomainError

DIPOLE_NORM_TOL = 1e-12
DIPOLE_LOAD_TOL = 1e-6


def _readonly(array):
    array = np.array(array, dtype=np.float64)
    array.setflags(write=False)
    return array


class AtomConfig(object):
    """Positions of identical atoms sharing one dipole direction.

    Args:
        positions (np.ndarray | list): N x 3 positions in units of λ0.
        dipole (np.ndarray | list): Unit dipole direction, shape (3, ).

    Attributes:
        positions (np.ndarray): Read-only float array of shape (N, 3).
        dipole (np.ndarray): Read-only unit vector of shape (3, ).
    """

    def __init__(self, positions, dipole):
        positions = np.asarray(positions, dtype=np.float64)
        dipole = np.asarray(dipole, dtype=np.float64)
        if positions.ndim != 2 or positions.shape[1] != 3:
            raise DomainError(
                f'positions must have shape (N, 3), got {positions.shape}')
        if positions.shape[0] < 2:
            raise DomainError(
                f'at least two atoms are required, got {positions.shape[0]}')
        if dipole.shape != (3, ):
            raise DomainError(f'dipole must have shape (3, ), '
                              f'got {dipole.shape}')
        if not np.all(np.isfinite(positions)) or \
                not np.all(np.isfinite(dipole)):
            raise DomainError('positions and dipole must be finite')
        norm = np.linalg.norm(dipole)
        if abs(norm - 1.0) > DIPOLE_NORM_TOL:
            raise DomainError(f'dipole must be a unit vector, |d|={norm!r}')

        self._positions = _readonly(positions)
        self._dipole = _readonly(dipole)
        dist = self.distance_matrix()
        for m in range(self.num_atoms):
            for n in range(m + 1, self.num_atoms):
                if not dist[m, n] > 0:
                    raise DegenerateGeometryError(m, n, dist[m, n])

    @classmethod
    def from_unnormalized(cls, positions, dipole, tol=DIPOLE_LOAD_TOL):
        """Build a config, normalising a nearly-unit dipole.

        Args:
            positions (np.ndarray | list): N x 3 positions in λ0.
            dipole (np.ndarray | list): Dipole direction whose norm lies
                within ``tol`` of one.
            tol (float, optional): Accepted deviation of the norm from one.
                Defaults to 1e-6.

        Returns:
            :obj:`AtomConfig`: The validated configuration.
        """
        dipole = np.asarray(dipole, dtype=np.float64)
        norm = np.linalg.norm(dipole)
        if not abs(norm - 1.0) <= tol:
            raise DomainError(
                f'dipole norm {norm!r} deviates from 1 by more than {tol}')
        return cls(positions, dipole / norm)

    @property
    def positions(self):
        """np.ndarray: Atom positions of shape (N, 3)."""
        return self._positions

    @property
    def dipole(self):
        """np.ndarray: Shared unit dipole of shape (3, )."""
        return self._dipole

    @property
    def num_atoms(self):
        """int: Number of atoms."""
        return self._positions.shape[0]

    def displacements(self):
        """np.ndarray: Pairwise vectors r_m - r_n of shape (N, N, 3)."""
        return self._positions[:, None, :] - self._positions[None, :, :]

    def distance_matrix(self):
        """np.ndarray: Symmetric (N, N) separations with zero diagonal."""
        return np.linalg.norm(self.displacements(), axis=-1)

    def eta_matrix(self):
        """Folded dipole/pair-axis angles.

        Returns:
            np.ndarray: Symmetric (N, N) angles in [0, π/2]; the diagonal is
                set to zero and carries no meaning.
        """
        disp = self.displacements()
        dist = self.distance_matrix()
        np.fill_diagonal(dist, 1.0)
        cos_eta = np.abs(disp @ self._dipole) / dist
        eta = np.arccos(np.clip(cos_eta, 0.0, 1.0))
        np.fill_diagonal(eta, 0.0)
        return eta

    def permute(self, order):
        """Relabel the atoms.

        Args:
            order (list[int]): New atom ``i`` is old atom ``order[i]``.

        Returns:
            :obj:`AtomConfig`: The relabelled configuration.
        """
        order = np.asarray(order, dtype=np.int64)
        if sorted(order.tolist()) != list(range(self.num_atoms)):
            raise DomainError(f'{order.tolist()} is not a permutation')
        return AtomConfig(self._positions[order], self._dipole)

    def transform(self, rotation=None, translation=None):
        """Apply one rigid motion to positions and dipole together.

        Args:
            rotation (np.ndarray, optional): Orthogonal 3 x 3 matrix.
            translation (np.ndarray, optional): Shift of shape (3, ).

        Returns:
            :obj:`AtomConfig`: The moved configuration.
        """
        rotation = np.eye(3) if rotation is None else np.asarray(rotation)
        translation = np.zeros(3) if translation is None \
            else np.asarray(translation)
        positions = self._positions @ rotation.T + translation
        dipole = rotation @ self._dipole
        return AtomConfig(positions, dipole / np.linalg.norm(dipole))

    def __repr__(self):
        """str: Return a string that describes the config."""
        repr_str = self.__class__.__name__
        indent = ' ' * (len(repr_str) + 1)
        repr_str += f'(positions={self._positions.tolist()},\n'
        repr_str += indent + f'dipole={self._dipole.tolist()})'
        return repr_str


class PairGeometry(object):
    """Separation and dipole angle of one unordered atom pair.

    Args:
        m (int): Smaller atom index.
        n (int): Larger atom index.
        x (float): Separation r_mn / λ0.
        eta (float): Angle between the dipole and the pair axis, folded
            into [0, π/2].
    """

    __slots__ = ('m', 'n', 'x', 'eta')

    def __init__(self, m, n, x, eta):
        assert m < n, f'pair indices must be sorted, got ({m}, {n})'
        assert x > 0 and 0.0 <= eta <= np.pi / 2
        self.m = int(m)
        self.n = int(n)
        self.x = float(x)
        self.eta = float(eta)

    def __iter__(self):
        return iter((self.m, self.n, self.x, self.eta))

    def __repr__(self):
        return (f'{self.__class__.__name__}(m={self.m}, n={self.n}, '
                f'x={self.x:.6g}, eta={self.eta:.6g})')


def build_pair_geometry(config):
    """Derive the pair quantities consumed by the kernels.

    Args:
        config (:obj:`AtomConfig`): The atom configuration.

    Returns:
        list[:obj:`PairGeometry`]: N(N-1)/2 entries ordered by (m, n).
    """
    dist = config.distance_matrix()
    eta = config.eta_matrix()
    pairs = []
    for m in range(config.num_atoms):
        for n in range(m + 1, config.num_atoms):
            if not dist[m, n] > 0:
                raise DegenerateGeometryError(m, n, dist[m, n])
            pairs.append(PairGeometry(m, n, dist[m, n], eta[m, n]))
    return pairs


def equilateral_config(side):
    """Three atoms on an equilateral triangle in the xy-plane.

    The dipole points along z, normal to the plane of the atoms.

    Args:
        side (float): Side length in λ0.

    Returns:
        :obj:`AtomConfig`: The triangle configuration.
    """
    if not side > 0:
        raise DomainError(f'side must be positive, got {side}')
    height = side * np.sqrt(3.0) / 2
    positions = [[0.0, 0.0, 0.0], [side, 0.0, 0.0], [side / 2, height, 0.0]]
    return AtomConfig(positions, [0.0, 0.0, 1.0])


def collinear_config(x12, x23, eta):
    """Three atoms on the x-axis.

    Args:
        x12 (float): Gap between atoms 1 and 2 in λ0.
        x23 (float): Gap between atoms 2 and 3 in λ0.
        eta (float): Angle between the dipole and the line, in [0, π/2].

    Returns:
        :obj:`AtomConfig`: The line configuration.
    """
    if not x12 > 0 or not x23 > 0:
        raise DomainError(f'gaps must be positive, got x12={x12}, x23={x23}')
    if not 0.0 <= eta <= np.pi / 2:
        raise DomainError(f'eta must lie in [0, pi/2], got {eta}')
    positions = [[0.0, 0.0, 0.0], [x12, 0.0, 0.0], [x12 + x23, 0.0, 0.0]]
    dipole = [np.cos(eta), 0.0, np.sin(eta)]
    return AtomConfig(positions, dipole)


__all__ = [
    'AtomConfig', 'PairGeometry', 'build_pair_geometry', 'equilateral_config',
    'collinear_config'
]
