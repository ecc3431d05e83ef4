# Copyright (c) coopemit contributors. All rights reserved.
from .scenario import (Scenario, dump_scenario, load_scenario, parse_initial,
                       parse_scenario, resolve_initial)
from .writers import (csv_text, dump_csv, dump_json, format_float, json_text,
                      round_floats, write_text)

__all__ = [
    'Scenario', 'dump_scenario', 'load_scenario', 'parse_initial',
    'parse_scenario', 'resolve_initial', 'csv_text', 'dump_csv', 'dump_json',
    'format_float', 'json_text', 'round_floats', 'write_text'
]
