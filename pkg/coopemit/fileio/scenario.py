# Copyright (c) coopemit contributors. All rights reserved.
"""Scenario documents.

A scenario is a JSON object describing one physical system::

    {"atoms": [[0, 0, 0], [0.1, 0, 0], [0.3, 0, 0]],
     "dipole": [0, 0, 1],
     "gamma_eg": 1.0, "delta_eg": 0.0,
     "initial": "e1",
     "task": {"detuning": {"dmin": -15, "dmax": 15, "points": 3001}}}

``atoms``/``dipole`` may be replaced by a preset block, either
``{"preset": "equilateral", "side": 0.1}`` or
``{"preset": "collinear", "x12": 0.1, "x23": 0.2, "eta": 1.5708}``.
"""
import io

import mmcv
import numpy as np

from coopemit.core import (AtomConfig, DetectorDirection, DetuningGrid,
                           InitialState, ModelParams, collinear_config,
                           equilateral_config)
from coopemit.utils.exceptions import (DegenerateGeometryError, DomainError,
                                       FileAccessError, ScenarioError)

PRESET_KEYS = dict(
    equilateral=('side', ), collinear=('x12', 'x23', 'eta'))
TOP_KEYS = ('atoms', 'dipole', 'preset', 'side', 'x12', 'x23', 'eta',
            'gamma_eg', 'delta_eg', 'initial', 'task')
TASK_KEYS = ('detuning', 'direction', 'times', 'method', 'normalize',
             'oracle')
VECTOR_NORM_TOL = 1e-6


def _join(path, key):
    if isinstance(key, int):
        return f'{path}[{key}]'
    return f'{path}.{key}' if path else key


def _number(value, path, positive=False, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(path, f'expected a number, got {value!r}')
    if not np.isfinite(value):
        raise ScenarioError(path, f'expected a finite number, got {value!r}')
    if integer and int(value) != value:
        raise ScenarioError(path, f'expected an integer, got {value!r}')
    if positive and not value > 0:
        raise ScenarioError(path, f'expected a positive number, got {value!r}')
    return int(value) if integer else float(value)


def _vector(value, path, length=None):
    if not isinstance(value, list):
        raise ScenarioError(path, f'expected a list, got {value!r}')
    if length is not None and len(value) != length:
        raise ScenarioError(path, f'expected {length} entries, '
                            f'got {len(value)}')
    return [_number(v, _join(path, i)) for i, v in enumerate(value)]


def _object(value, path, allowed):
    if not isinstance(value, dict):
        raise ScenarioError(path, f'expected an object, got {value!r}')
    for key in value:
        if key not in allowed:
            raise ScenarioError(
                _join(path, key),
                f'unknown key, expected one of {list(allowed)}')
    return value


def _complex(value, path):
    if isinstance(value, list):
        re, im = _vector(value, path, length=2)
        return complex(re, im)
    return complex(_number(value, path))


class Scenario(object):
    """A validated physical system plus task parameters.

    Args:
        config (:obj:`AtomConfig`): The atoms.
        params (:obj:`ModelParams`, optional): Single-atom parameters.
        initial (str | list[complex], optional): Named preset ``'e<n>'`` or
            ``'dicke'``, or explicit amplitudes. Defaults to 'e1'.
        task (dict, optional): Task parameters, see :func:`parse_scenario`.
        preset (dict, optional): Preset block the config was built from.
    """

    def __init__(self,
                 config,
                 params=None,
                 initial='e1',
                 task=None,
                 preset=None):
        self.config = config
        self.params = ModelParams() if params is None else params
        self.initial = initial if isinstance(initial, str) \
            else [complex(z) for z in initial]
        self.task = dict() if task is None else dict(task)
        self.preset = None if preset is None else dict(preset)

    @property
    def num_atoms(self):
        return self.config.num_atoms

    def initial_state(self):
        """:obj:`InitialState`: The resolved, normalised C(0)."""
        return resolve_initial(self.initial, self.num_atoms)

    def detuning_grid(self):
        """:obj:`DetuningGrid`: From ``task.detuning``, [-15, 15] x 3001
        by default."""
        return DetuningGrid.linspace(**self.task.get('detuning', {}))

    def direction(self):
        """:obj:`DetectorDirection` | None: From ``task.direction``."""
        if 'direction' not in self.task:
            return None
        return DetectorDirection.from_angles(*self.task['direction'])

    def times(self):
        """np.ndarray: ``steps + 1`` samples on [0, tmax]."""
        times = self.task.get('times', dict(tmax=10.0, steps=200))
        return np.linspace(0.0, times['tmax'], times['steps'] + 1)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (np.array_equal(self.config.positions, other.config.positions)
                and np.array_equal(self.config.dipole, other.config.dipole)
                and self.params == other.params
                and self.initial == other.initial and self.task == other.task
                and self.preset == other.preset)

    def __repr__(self):
        return (f'{self.__class__.__name__}(num_atoms={self.num_atoms}, '
                f'params={self.params}, initial={self.initial!r})')


def resolve_initial(initial, num_atoms):
    """Expand an initial-state value into an :obj:`InitialState`.

    Args:
        initial (str | list[complex]): ``'e<n>'`` (one based), ``'dicke'``
            or explicit amplitudes.
        num_atoms (int): Atom count.

    Returns:
        :obj:`InitialState`: The normalised state.
    """
    if isinstance(initial, str):
        if initial == 'dicke':
            return InitialState.dicke(num_atoms)
        if initial.startswith('e') and initial[1:].isdigit():
            index = int(initial[1:])
            if not 1 <= index <= num_atoms:
                raise ScenarioError(
                    'initial', f'{initial} names no atom of {num_atoms}')
            return InitialState.excited(index - 1, num_atoms)
        raise ScenarioError(
            'initial', f'unknown preset {initial!r}, expected e<n> or dicke')
    amplitudes = np.asarray(initial, dtype=np.complex128)
    if amplitudes.shape != (num_atoms, ):
        raise ScenarioError(
            'initial', f'expected {num_atoms} amplitudes, '
            f'got {len(amplitudes)}')
    norm = np.linalg.norm(amplitudes)
    if not abs(norm - 1.0) <= VECTOR_NORM_TOL:
        raise ScenarioError(
            'initial', f'amplitude norm {norm!r} deviates from 1 by more '
            f'than {VECTOR_NORM_TOL}')
    return InitialState(amplitudes / norm)


def parse_initial(value, path='initial'):
    """Validate an initial-state value without resolving it.

    Args:
        value (str | list): Preset name or amplitudes, each a number or a
            ``[re, im]`` pair.
        path (str, optional): JSON path used in error messages.

    Returns:
        str | list[complex]: The value in :class:`Scenario` form.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return [_complex(z, _join(path, i)) for i, z in enumerate(value)]
    raise ScenarioError(path, f'expected a preset name or a list, '
                        f'got {value!r}')


def _parse_geometry(doc):
    preset = doc.get('preset')
    if preset is None:
        for key in ('side', 'x12', 'x23', 'eta'):
            if key in doc:
                raise ScenarioError(key, 'only valid inside a preset block')
        for key in ('atoms', 'dipole'):
            if key not in doc:
                raise ScenarioError(key, 'missing required key')
        atoms = doc['atoms']
        if not isinstance(atoms, list) or len(atoms) < 2:
            raise ScenarioError('atoms', 'expected a list of at least two '
                                'positions')
        positions = [
            _vector(p, _join('atoms', i), length=3)
            for i, p in enumerate(atoms)
        ]
        dipole = _vector(doc['dipole'], 'dipole', length=3)
        try:
            config = AtomConfig.from_unnormalized(positions, dipole,
                                                  VECTOR_NORM_TOL)
        except DegenerateGeometryError as e:
            raise ScenarioError(_join('atoms', e.pair[1]), str(e)) from e
        except DomainError as e:
            raise ScenarioError('dipole', str(e)) from e
        return config, None

    if preset not in PRESET_KEYS:
        raise ScenarioError(
            'preset', f'unknown preset {preset!r}, expected one of '
            f'{list(PRESET_KEYS)}')
    for key in ('atoms', 'dipole'):
        if key in doc:
            raise ScenarioError(key, f'not allowed with preset {preset!r}')
    block = dict(preset=preset)
    for key in ('side', 'x12', 'x23', 'eta'):
        if key in doc and key not in PRESET_KEYS[preset]:
            raise ScenarioError(key, f'not a parameter of preset {preset!r}')
    for key in PRESET_KEYS[preset]:
        if key not in doc:
            raise ScenarioError(key, f'required by preset {preset!r}')
        block[key] = _number(doc[key], key, positive=key != 'eta')
    builder = equilateral_config if preset == 'equilateral' \
        else collinear_config
    args = [block[key] for key in PRESET_KEYS[preset]]
    try:
        config = builder(*args)
    except DomainError as e:
        raise ScenarioError('preset', str(e)) from e
    return config, block


def _parse_task(task):
    _object(task, 'task', TASK_KEYS)
    out = dict()
    if 'detuning' in task:
        block = _object(task['detuning'], 'task.detuning',
                        ('dmin', 'dmax', 'points'))
        detuning = dict()
        for key in ('dmin', 'dmax'):
            if key in block:
                detuning[key] = _number(block[key], f'task.detuning.{key}')
        if 'points' in block:
            detuning['points'] = _number(
                block['points'], 'task.detuning.points', integer=True)
        try:
            DetuningGrid.linspace(**detuning)
        except DomainError as e:
            raise ScenarioError('task.detuning', str(e)) from e
        out['detuning'] = detuning
    if 'direction' in task:
        out['direction'] = _vector(task['direction'], 'task.direction', 2)
    if 'times' in task:
        block = _object(task['times'], 'task.times', ('tmax', 'steps'))
        for key in ('tmax', 'steps'):
            if key not in block:
                raise ScenarioError(f'task.times.{key}',
                                    'missing required key')
        out['times'] = dict(
            tmax=_number(block['tmax'], 'task.times.tmax', positive=True),
            steps=_number(
                block['steps'], 'task.times.steps', positive=True,
                integer=True))
    if 'method' in task:
        if task['method'] not in ('analytic', 'numeric'):
            raise ScenarioError('task.method',
                                f'expected analytic or numeric, got '
                                f'{task["method"]!r}')
        out['method'] = task['method']
    if 'normalize' in task:
        if task['normalize'] not in ('none', 'peak'):
            raise ScenarioError('task.normalize',
                                f'expected none or peak, got '
                                f'{task["normalize"]!r}')
        out['normalize'] = task['normalize']
    if 'oracle' in task:
        out['oracle'] = _number(
            task['oracle'], 'task.oracle', positive=True, integer=True)
    return out


def parse_scenario(text):
    """Parse and validate a scenario document.

    Args:
        text (str | dict): JSON text or an already decoded object.

    Returns:
        :obj:`Scenario`: The validated scenario.

    Raises:
        ScenarioError: With the JSON path of the first offending field.
    """
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    if isinstance(text, str):
        try:
            doc = mmcv.load(io.StringIO(text), file_format='json')
        except ValueError as e:
            raise ScenarioError('', f'invalid JSON: {e}') from e
    else:
        doc = text
    _object(doc, '', TOP_KEYS)
    config, preset = _parse_geometry(doc)
    params = ModelParams(
        _number(doc.get('gamma_eg', 1.0), 'gamma_eg', positive=True),
        _number(doc.get('delta_eg', 0.0), 'delta_eg'))

    initial = parse_initial(doc.get('initial', 'e1'))
    task = _parse_task(doc.get('task', {}))
    scenario = Scenario(config, params, initial, task, preset)
    scenario.initial_state()
    return scenario


def load_scenario(path):
    """Read and parse a scenario file.

    Raises:
        FileAccessError: The file cannot be read.
    """
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise FileAccessError(path, e.strerror or str(e)) from e
    return parse_scenario(text)


def dump_scenario(scenario, file=None):
    """Serialise a scenario so that :func:`parse_scenario` restores it.

    Args:
        scenario (:obj:`Scenario`): The scenario.
        file (str, optional): Write to this path instead of returning text.

    Returns:
        str | None: The JSON text when ``file`` is None.
    """
    doc = dict()
    if scenario.preset is not None:
        doc.update(scenario.preset)
    else:
        doc['atoms'] = scenario.config.positions.tolist()
        doc['dipole'] = scenario.config.dipole.tolist()
    doc.update(scenario.params.to_dict())
    if isinstance(scenario.initial, str):
        doc['initial'] = scenario.initial
    else:
        doc['initial'] = [[z.real, z.imag] for z in scenario.initial]
    if scenario.task:
        doc['task'] = scenario.task
    if file is None:
        return mmcv.dump(doc, file_format='json', indent=2)
    try:
        mmcv.dump(doc, file, file_format='json', indent=2)
    except OSError as e:
        raise FileAccessError(file, e.strerror or str(e)) from e
