# Copyright (c) coopemit contributors. All rights reserved.
from .reproduce import (FIGURE_DEFAULTS, FIGURES, Artifact, BaseFigure,
                        CollinearRateScans, CollinearSpectra,
                        EquilateralSpectra, KernelCurves, build_figure,
                        figure_config, reproduce)
from .scan import ScanResult, line_scan

__all__ = [
    'FIGURE_DEFAULTS', 'FIGURES', 'Artifact', 'BaseFigure',
    'CollinearRateScans', 'CollinearSpectra', 'EquilateralSpectra',
    'KernelCurves', 'build_figure', 'figure_config', 'reproduce',
    'ScanResult', 'line_scan'
]
