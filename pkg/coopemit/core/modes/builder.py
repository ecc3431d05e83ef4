# Copyright (c) coopemit contributors. All rights reserved.
from coopemit.utils import Registry, build_from_cfg
from .solvers import eigenmodes_analytic, eigenmodes_numeric

EIGEN_SOLVERS = Registry('eigen solver')


@EIGEN_SOLVERS.register_module()
class AnalyticSolver(object):
    """Closed-form cubic solver, three atoms only."""

    name = 'analytic'

    def __call__(self, matrix):
        return eigenmodes_analytic(matrix)

    def __repr__(self):
        return f'{self.__class__.__name__}()'


@EIGEN_SOLVERS.register_module()
class NumericSolver(object):
    """Dense eigen solver for any N >= 2."""

    name = 'numeric'

    def __call__(self, matrix):
        return eigenmodes_numeric(matrix)

    def __repr__(self):
        return f'{self.__class__.__name__}()'


_ALIASES = dict(analytic='AnalyticSolver', numeric='NumericSolver')


def build_solver(cfg):
    """Build an eigen solver.

    Args:
        cfg (str | dict): ``'analytic'``, ``'numeric'`` or a config dict
            with a registered ``type``.

    Returns:
        callable: Maps a :obj:`CouplingMatrix` to a :obj:`ModeSet`.
    """
    if isinstance(cfg, str):
        cfg = dict(type=cfg)
    cfg = dict(cfg)
    cfg['type'] = _ALIASES.get(cfg['type'], cfg['type'])
    return build_from_cfg(cfg, EIGEN_SOLVERS)
