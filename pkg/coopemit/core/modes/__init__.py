# Copyright (c) coopemit contributors. All rights reserved.
from .builder import (EIGEN_SOLVERS, AnalyticSolver, NumericSolver,
                      build_solver)
from .closed_form import (equilateral_closed_form, equilateral_eigenvalues,
                          two_atom_modes)
from .coupling import CouplingMatrix, ModelParams, build_coupling_matrix
from .mode_set import (ModeSet, degeneracy_tolerance, group_degenerate,
                       order_modes)
from .solvers import (cubic_roots, eigenmodes_analytic, eigenmodes_numeric,
                      eigenvectors)

__all__ = [
    'EIGEN_SOLVERS', 'AnalyticSolver', 'NumericSolver', 'build_solver',
    'equilateral_closed_form', 'equilateral_eigenvalues', 'two_atom_modes',
    'CouplingMatrix', 'ModelParams', 'build_coupling_matrix', 'ModeSet',
    'degeneracy_tolerance', 'group_degenerate', 'order_modes', 'cubic_roots',
    'eigenmodes_analytic', 'eigenmodes_numeric', 'eigenvectors'
]
