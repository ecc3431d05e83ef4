# Copyright (c) coopemit contributors. All rights reserved.
import os.path as osp

import mmcv
import numpy as np
import pytest

from coopemit import __version__
from coopemit.apis import (CollinearRateScans, EquilateralSpectra,
                           build_figure, figure_config, reproduce)
from coopemit.utils.exceptions import DomainError, FileAccessError


def _read_csv(path):
    with open(path) as f:
        header = f.readline().strip().split(',')
    return header, np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)


def test_figure_config_overrides():
    cfg = figure_config('fig3', {'points': 20, 'x12_values': [0.1]})
    assert cfg['type'] == 'CollinearRateScans'
    assert cfg['points'] == 20
    fig = build_figure(cfg)
    assert isinstance(fig, CollinearRateScans)
    assert fig.x12_values == [0.1]
    with pytest.raises(DomainError):
        figure_config('fig4')


def test_nested_override_keeps_defaults():
    fig = build_figure(figure_config('fig5', {'detuning.points': 401}))
    assert isinstance(fig, EquilateralSpectra)
    assert fig.detuning == dict(dmin=-20.0, dmax=20.0, points=401)


def test_reproduce_fig2(tmp_path):
    paths = reproduce('fig2', str(tmp_path))
    assert [osp.basename(p) for p in paths] == [
        'fig2_kernels.csv', 'manifest.json'
    ]
    header, rows = _read_csv(paths[0])
    assert header == ['x', 'eta', 'D', 'P']
    assert rows.shape == (600, 4)
    perpendicular = rows[rows[:, 1] == rows[:, 1].max()]
    assert np.all(np.diff(perpendicular[:, 0]) > 0)
    assert perpendicular[0, 0] == pytest.approx(0.01)
    assert perpendicular[0, 2] == pytest.approx(1.0, abs=1e-3)


def test_reproduce_fig3(tmp_path):
    paths = reproduce('fig3', str(tmp_path), cfg_options={'points': 20})
    assert len(paths) == 5
    names = [osp.basename(p) for p in paths[:-1]]
    assert names == [
        'fig3_x12_0.05.csv', 'fig3_x12_0.1.csv', 'fig3_x12_0.2.csv',
        'fig3_x12_0.5.csv'
    ]
    header, rows = _read_csv(paths[0])
    assert header == ['x23', 'gamma_1', 'gamma_2', 'gamma_3']
    assert rows.shape == (20, 4)
    manifest = mmcv.load(paths[-1])
    assert manifest['figure'] == 'fig3'
    assert manifest['version'] == __version__
    assert manifest['config']['points'] == 20
    assert manifest['files'] == names
    assert manifest['env']['coopemit'] == __version__


def test_reproduce_fig5_manifest_peaks(tmp_path):
    paths = reproduce('fig5', str(tmp_path), cfg_options={'sides': [0.1]})
    manifest = mmcv.load(paths[-1])
    peaks = manifest['peaks']['fig5_side_0.1.csv']
    assert len(peaks) == 2
    header, rows = _read_csv(paths[0])
    assert header == ['delta', 'S']
    assert rows.shape == (4001, 2)
    assert rows[:, 1].max() == pytest.approx(1.0)


def test_reproduce_fig6_file_names(tmp_path):
    paths = reproduce(
        'fig6',
        str(tmp_path),
        cfg_options={
            'x23_values': [0.1],
            'detuning.points': 301
        })
    assert [osp.basename(p) for p in paths] == [
        'fig6_eta_90_x23_0.1.csv', 'fig6_eta_0_x23_0.1.csv', 'manifest.json'
    ]


def test_reproduce_is_deterministic(tmp_path):
    first = reproduce('fig2', str(tmp_path / 'a'))
    second = reproduce('fig2', str(tmp_path / 'b'))
    with open(first[0], 'rb') as f1, open(second[0], 'rb') as f2:
        assert f1.read() == f2.read()


def test_reproduce_unwritable_output(tmp_path):
    blocker = tmp_path / 'blocker'
    blocker.write_text('not a directory')
    with pytest.raises(FileAccessError) as excinfo:
        reproduce('fig2', str(blocker / 'out'))
    assert 'blocker' in excinfo.value.path
