# Copyright (c) coopemit contributors. All rights reserved.
from .grid import DetectorDirection, DetuningGrid, SpectrumSeries
from .lineshape import (directional_spectrum, lineshapes, mode_lineshape,
                        mode_resolved_spectrum, pair_weight, total_spectrum,
                        weight_matrix)
from .peaks import Peak, find_peaks, log_peaks, peak_table, widest_peak
from .quadrature import (check_oracle, oracle_deviation,
                         quadrature_total_spectrum, sphere_quadrature)

__all__ = [
    'DetectorDirection', 'DetuningGrid', 'SpectrumSeries',
    'directional_spectrum', 'lineshapes', 'mode_lineshape',
    'mode_resolved_spectrum', 'pair_weight', 'total_spectrum',
    'weight_matrix', 'Peak', 'find_peaks', 'log_peaks', 'peak_table',
    'widest_peak', 'check_oracle', 'oracle_deviation',
    'quadrature_total_spectrum', 'sphere_quadrature'
]
