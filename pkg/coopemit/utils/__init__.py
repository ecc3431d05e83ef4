# Copyright (c) coopemit contributors. All rights reserved.
from mmcv.utils import Registry, build_from_cfg, print_log

from .collect_env import collect_env
from .exceptions import (ConsistencyError, DegenerateGeometryError,
                         DomainError, FileAccessError,
                         InconsistentEigenvalueError, NonDiagonalizableError,
                         OracleMismatchError, ScenarioError,
                         SpectrumConsistencyError, UnsupportedSizeError)
from .logger import get_root_logger

__all__ = [
    'Registry', 'build_from_cfg', 'get_root_logger', 'collect_env',
    'print_log', 'DomainError', 'DegenerateGeometryError',
    'UnsupportedSizeError', 'ScenarioError', 'FileAccessError',
    'ConsistencyError', 'InconsistentEigenvalueError',
    'NonDiagonalizableError', 'SpectrumConsistencyError',
    'OracleMismatchError'
]
