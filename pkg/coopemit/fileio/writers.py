# Copyright (c) coopemit contributors. All rights reserved.
"""CSV and JSON emission with 12 significant digits."""
import csv
import io
import os.path as osp

import mmcv
import numpy as np

from coopemit.utils.exceptions import FileAccessError

SIGNIFICANT_DIGITS = 12


def format_float(value):
    """str: ``value`` with 12 significant digits, '.' as decimal mark."""
    return f'{float(value):.{SIGNIFICANT_DIGITS}g}'


def round_floats(obj):
    """Recursively round every float of a JSON-like object.

    Numpy scalars and arrays are converted to plain Python types.
    """
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return round_floats(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(format_float(obj))
    return obj


def csv_text(header, rows):
    """Render a header and numeric rows as CSV text.

    Args:
        header (list[str]): Column names.
        rows (np.ndarray | list): Numeric rows.

    Returns:
        str: RFC 4180 style text with '\\n' line endings.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        assert len(row) == len(header)
        writer.writerow([format_float(v) for v in row])
    return buf.getvalue()


def json_text(obj):
    """str: Indented JSON of ``obj`` with rounded floats."""
    return mmcv.dump(round_floats(obj), file_format='json', indent=2) + '\n'


def write_text(text, path):
    """Write ``text`` to ``path``, creating parent directories.

    Raises:
        FileAccessError: The path cannot be written.
    """
    try:
        mmcv.mkdir_or_exist(osp.dirname(osp.abspath(path)))
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise FileAccessError(path, e.strerror or str(e)) from e


def dump_csv(header, rows, path):
    write_text(csv_text(header, rows), path)


def dump_json(obj, path):
    write_text(json_text(obj), path)
