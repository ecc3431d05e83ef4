# Copyright (c) coopemit contributors. All rights reserved.
"""Exception hierarchy.

Validation problems derive from :class:`ValueError` and map to exit code 2
of the command line; invariant and oracle failures derive from
:class:`ConsistencyError` and map to exit code 3.
"""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class DegenerateGeometryError(DomainError):
    """Two atoms coincide.

    Args:
        m (int): Index of the first atom of the pair.
        n (int): Index of the second atom of the pair.
    """

    def __init__(self, m, n, distance=0.0):
        self.pair = (m, n)
        super().__init__(
            f'atoms {m} and {n} coincide (separation {distance:.3e} λ0)')


class UnsupportedSizeError(DomainError):
    """The operation is only defined for a particular atom count."""


class ScenarioError(DomainError):
    """A scenario document violates the schema.

    Args:
        path (str): JSON path of the offending field, e.g. ``atoms[2]``.
        msg (str): What is wrong with it.
    """

    def __init__(self, path, msg):
        self.path = path
        super().__init__(f'{path}: {msg}' if path else msg)


class ConsistencyError(RuntimeError):
    """A numerical invariant or oracle comparison failed."""


class InconsistentEigenvalueError(ConsistencyError):
    """An eigenvalue does not annihilate ``Γ - λI`` within tolerance."""


class NonDiagonalizableError(ConsistencyError):
    """The eigenvector matrix is numerically singular."""


class SpectrumConsistencyError(ConsistencyError):
    """A spectrum came out complex or negative beyond tolerance."""


class OracleMismatchError(ConsistencyError):
    """Two independent evaluation paths disagree."""


class FileAccessError(DomainError):
    """A file or directory could not be read or written.

    Args:
        path (str): The offending path.
        msg (str): The underlying failure.
    """

    def __init__(self, path, msg):
        self.path = str(path)
        super().__init__(f'{path}: {msg}')
