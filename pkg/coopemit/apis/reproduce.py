# Copyright (c) coopemit contributors. All rights reserved.
import copy
import os.path as osp
import sys

import mmcv
import numpy as np
from mmcv import Config

from coopemit import __version__
from coopemit.core import (DetuningGrid, ModelParams, build_coupling_matrix,
                           build_solver, collinear_config, decompose_initial,
                           equilateral_config, find_peaks, kernel_grid,
                           log_peaks, total_spectrum)
from coopemit.fileio import dump_csv, dump_json, resolve_initial
from coopemit.utils import Registry, build_from_cfg, collect_env
from coopemit.utils.exceptions import DomainError, FileAccessError
from .scan import line_scan

FIGURES = Registry('figure')

FIGURE_DEFAULTS = dict(
    fig2=dict(type='KernelCurves'),
    fig3=dict(type='CollinearRateScans'),
    fig5=dict(type='EquilateralSpectra'),
    fig6=dict(type='CollinearSpectra'))

DEFAULT_DETUNING = dict(dmin=-15.0, dmax=15.0, points=3001)
# the superradiant line of the 0.07 triangle sits near +16
WIDE_DETUNING = dict(dmin=-20.0, dmax=20.0, points=4001)


class Artifact(object):
    """One CSV table produced by a figure.

    Args:
        filename (str): File name inside the output directory.
        header (list[str]): Column names.
        rows (np.ndarray): Numeric rows.
        peaks (list[:obj:`Peak`], optional): Peaks of a spectrum table.
    """

    def __init__(self, filename, header, rows, peaks=None):
        self.filename = filename
        self.header = list(header)
        self.rows = np.asarray(rows, dtype=np.float64)
        self.peaks = peaks


class BaseFigure(object):
    """Base class of the figure reproducers.

    Subclasses implement :meth:`run` and list their constructor arguments in
    :meth:`parameters` for the manifest.
    """

    name = None

    def run(self, logger=None, show_progress=False):
        raise NotImplementedError

    def parameters(self):
        raise NotImplementedError

    def __repr__(self):
        params = ', '.join(f'{k}={v!r}' for k, v in self.parameters().items())
        return f'{self.__class__.__name__}({params})'


@FIGURES.register_module()
class KernelCurves(BaseFigure):
    """D(x, η) and P(x, η) against x for a few dipole angles."""

    name = 'fig2'

    def __init__(self,
                 x_min=0.01,
                 x_max=2.0,
                 points=200,
                 etas=(0.0, np.pi / 4, np.pi / 2)):
        if not 0 < x_min < x_max:
            raise DomainError(f'need 0 < x_min < x_max, got {x_min}, {x_max}')
        self.x_min = float(x_min)
        self.x_max = float(x_max)
        self.points = int(points)
        self.etas = [float(eta) for eta in etas]

    def parameters(self):
        return dict(
            x_min=self.x_min,
            x_max=self.x_max,
            points=self.points,
            etas=self.etas)

    def run(self, logger=None, show_progress=False):
        x_values = np.linspace(self.x_min, self.x_max, self.points)
        rows = kernel_grid(x_values, self.etas)
        return [Artifact('fig2_kernels.csv', ['x', 'eta', 'D', 'P'], rows)]


@FIGURES.register_module()
class CollinearRateScans(BaseFigure):
    """Sorted collective rates of three collinear atoms against x23."""

    name = 'fig3'

    def __init__(self,
                 x12_values=(0.05, 0.1, 0.2, 0.5),
                 eta=np.pi / 2,
                 x23_min=0.01,
                 x23_max=1.0,
                 points=100,
                 solver='analytic',
                 nproc=1):
        self.x12_values = [float(x) for x in x12_values]
        self.eta = float(eta)
        self.x23_min = float(x23_min)
        self.x23_max = float(x23_max)
        self.points = int(points)
        self.solver = solver
        self.nproc = int(nproc)

    def parameters(self):
        return dict(
            x12_values=self.x12_values,
            eta=self.eta,
            x23_min=self.x23_min,
            x23_max=self.x23_max,
            points=self.points,
            solver=self.solver)

    def run(self, logger=None, show_progress=False):
        grid = np.linspace(self.x23_min, self.x23_max, self.points)
        columns = ['gamma_1', 'gamma_2', 'gamma_3']
        artifacts = []
        for x12 in self.x12_values:
            scan = line_scan(
                x12,
                grid,
                self.eta,
                solver=self.solver,
                nproc=self.nproc,
                show_progress=show_progress).select(columns)
            artifacts.append(
                Artifact(f'fig3_x12_{x12:g}.csv', scan.header, scan.rows()))
        return artifacts


class _SpectrumFigure(BaseFigure):

    default_detuning = DEFAULT_DETUNING

    def __init__(self, initial='e1', detuning=None, normalize='peak',
                 solver='analytic'):
        self.initial = initial
        self.detuning = dict(self.default_detuning)
        self.detuning.update(detuning or {})
        self.normalize = normalize
        self.solver = solver

    def _common(self):
        return dict(
            initial=self.initial,
            detuning=self.detuning,
            normalize=self.normalize,
            solver=self.solver)

    def _spectrum(self, config, filename, logger):
        matrix = build_coupling_matrix(config, ModelParams())
        modes = build_solver(self.solver)(matrix)
        decomp = decompose_initial(
            modes, resolve_initial(self.initial, config.num_atoms))
        grid = DetuningGrid.linspace(**self.detuning)
        series = total_spectrum(config, modes, decomp, grid)
        series = series.normalized(self.normalize)
        peaks = find_peaks(series)
        log_peaks(peaks, title=filename, logger=logger)
        return Artifact(
            filename, ['delta', 'S'],
            np.column_stack([grid.values, series.values]),
            peaks=peaks)

    def _run_all(self, jobs, logger, show_progress):
        if show_progress:
            prog_bar = mmcv.ProgressBar(len(jobs), file=sys.stderr)
        artifacts = []
        for config, filename in jobs:
            artifacts.append(self._spectrum(config, filename, logger))
            if show_progress:
                prog_bar.update()
        return artifacts


@FIGURES.register_module()
class EquilateralSpectra(_SpectrumFigure):
    """Total spectra of equilateral triangles of several side lengths."""

    name = 'fig5'
    default_detuning = WIDE_DETUNING

    def __init__(self, sides=(0.07, 0.1, 0.2, 0.5), **kwargs):
        super().__init__(**kwargs)
        self.sides = [float(s) for s in sides]

    def parameters(self):
        return dict(sides=self.sides, **self._common())

    def run(self, logger=None, show_progress=False):
        jobs = [(equilateral_config(side), f'fig5_side_{side:g}.csv')
                for side in self.sides]
        return self._run_all(jobs, logger, show_progress)


@FIGURES.register_module()
class CollinearSpectra(_SpectrumFigure):
    """Total spectra of three collinear atoms for two dipole angles."""

    name = 'fig6'

    def __init__(self,
                 x12=0.1,
                 x23_values=(0.1, 0.2, 0.4, 1.0),
                 etas=(np.pi / 2, 0.0),
                 **kwargs):
        super().__init__(**kwargs)
        self.x12 = float(x12)
        self.x23_values = [float(x) for x in x23_values]
        self.etas = [float(eta) for eta in etas]

    def parameters(self):
        return dict(
            x12=self.x12,
            x23_values=self.x23_values,
            etas=self.etas,
            **self._common())

    def run(self, logger=None, show_progress=False):
        jobs = []
        for eta in self.etas:
            for x23 in self.x23_values:
                jobs.append((collinear_config(self.x12, x23, eta),
                             f'fig6_eta_{np.degrees(eta):g}_x23_{x23:g}.csv'))
        return self._run_all(jobs, logger, show_progress)


def figure_config(figure, cfg_options=None):
    """Resolve a figure name or config and apply overrides.

    Args:
        figure (str | dict): Figure name or config dict with a ``type``.
        cfg_options (dict, optional): Overrides, nested keys joined by dots
            as produced by :class:`mmcv.DictAction`.

    Returns:
        dict: The merged figure config.
    """
    if isinstance(figure, str):
        if figure not in FIGURE_DEFAULTS:
            raise DomainError(f'unknown figure {figure!r}, expected one of '
                              f'{sorted(FIGURE_DEFAULTS)}')
        figure = FIGURE_DEFAULTS[figure]
    cfg = Config(dict(figure=copy.deepcopy(dict(figure))))
    if cfg_options:
        cfg.merge_from_dict({f'figure.{k}': v for k, v in cfg_options.items()})
    return cfg.figure.to_dict()


def build_figure(cfg):
    """Build a figure reproducer from a name or a config dict."""
    if isinstance(cfg, str):
        cfg = figure_config(cfg)
    return build_from_cfg(copy.deepcopy(dict(cfg)), FIGURES)


def reproduce(figure, out, cfg_options=None, logger=None,
              show_progress=False):
    """Write the data behind one figure plus a manifest.

    Args:
        figure (str | dict): ``'fig2'``, ``'fig3'``, ``'fig5'``, ``'fig6'``
            or a figure config dict.
        out (str): Output directory, created when missing.
        cfg_options (dict, optional): Overrides merged into the figure
            config.
        logger (logging.Logger | str, optional): Logger for peak tables.
        show_progress (bool, optional): Draw progress bars on stderr.

    Returns:
        list[str]: Paths of the written files, manifest last.
    """
    cfg = figure_config(figure, cfg_options)
    fig = build_figure(cfg)
    try:
        mmcv.mkdir_or_exist(out)
    except OSError as e:
        raise FileAccessError(out, e.strerror or str(e)) from e

    artifacts = fig.run(logger=logger, show_progress=show_progress)
    paths = []
    for artifact in artifacts:
        path = osp.join(out, artifact.filename)
        dump_csv(artifact.header, artifact.rows, path)
        paths.append(path)

    manifest = dict(
        figure=fig.name,
        version=__version__,
        config=dict(type=cfg['type'], **fig.parameters()),
        files=[a.filename for a in artifacts],
        peaks={
            a.filename: [p.to_dict() for p in a.peaks]
            for a in artifacts if a.peaks is not None
        },
        env=collect_env())
    manifest_path = osp.join(out, 'manifest.json')
    dump_json(manifest, manifest_path)
    paths.append(manifest_path)
    return paths
