# Copyright (c) coopemit contributors. All rights reserved.
import json

import numpy as np
import pytest

from coopemit.fileio import (csv_text, dump_csv, dump_json, format_float,
                             json_text, round_floats, write_text)
from coopemit.utils.exceptions import FileAccessError


def test_format_float_keeps_twelve_digits():
    assert format_float(1 / 3) == '0.333333333333'
    assert format_float(np.float64(2.0)) == '2'
    assert format_float(-1.234567890123456e-20) == '-1.23456789012e-20'


def test_csv_text():
    text = csv_text(['delta', 'S'], np.array([[-1.0, 0.5], [0.0, 1 / 3]]))
    assert text == 'delta,S\n-1,0.5\n0,0.333333333333\n'


def test_round_floats():
    doc = round_floats(
        dict(a=np.array([1 / 3, 2.0]), b=(np.int64(3), np.bool_(True)),
             c='x'))
    assert doc == dict(a=[0.333333333333, 2.0], b=[3, True], c='x')
    assert isinstance(doc['b'][1], bool)


def test_json_text():
    text = json_text(dict(value=np.float64(np.pi)))
    assert json.loads(text) == dict(value=3.14159265359)
    assert text.endswith('\n')


def test_dump_creates_directories(tmp_path):
    path = tmp_path / 'nested' / 'dir' / 'table.csv'
    dump_csv(['x'], [[1.5]], str(path))
    assert path.read_text() == 'x\n1.5\n'
    path = tmp_path / 'doc.json'
    dump_json(dict(x=[1, 2]), str(path))
    assert json.loads(path.read_text()) == dict(x=[1, 2])


def test_write_text_failure(tmp_path):
    with pytest.raises(FileAccessError) as excinfo:
        write_text('x', str(tmp_path))
    assert excinfo.value.path == str(tmp_path)
