# Copyright (c) coopemit contributors. All rights reserved.
"""Command line entry point.

Products (CSV or JSON) go to stdout or ``--out``; logs go to stderr.
Exit codes: 0 success, 2 invalid input, 3 failed consistency check.
"""
import argparse
import os.path as osp
import sys

import mmcv
import numpy as np
from mmcv import DictAction
from terminaltables import AsciiTable

from coopemit.apis import line_scan, reproduce
from coopemit.core import (build_coupling_matrix, build_solver,
                           check_oracle, decompose_initial,
                           directional_spectrum, evolve, find_peaks,
                           is_monotone_survival, log_peaks, total_spectrum)
from coopemit.fileio import (csv_text, json_text, load_scenario,
                             parse_initial, resolve_initial, write_text)
from coopemit.utils import get_root_logger, print_log
from coopemit.utils.exceptions import (ConsistencyError, DomainError,
                                       FileAccessError, OracleMismatchError,
                                       UnsupportedSizeError)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3
CHECK_TOL = 1e-10


def parse_range(text):
    """Expand ``A:B:STEP`` into the values A, A + STEP, ... <= B."""
    parts = text.split(':')
    if len(parts) != 3:
        raise DomainError(f'expected A:B:STEP, got {text!r}')
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as e:
        raise DomainError(f'expected A:B:STEP, got {text!r}') from e
    if not step > 0 or not stop >= start:
        raise DomainError(f'need STEP > 0 and B >= A, got {text!r}')
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def parse_direction(text):
    """Parse ``THETA,PHI`` in radians."""
    try:
        theta, phi = (float(p) for p in text.split(','))
    except ValueError as e:
        raise DomainError(f'expected THETA,PHI, got {text!r}') from e
    return [theta, phi]


def _initial_spec(value, scenario):
    if value is None:
        return scenario.initial
    if value.endswith('.json') or osp.isfile(value):
        try:
            doc = mmcv.load(value, file_format='json')
        except OSError as e:
            raise FileAccessError(value, e.strerror or str(e)) from e
        if isinstance(doc, dict):
            doc = doc.get('initial', doc)
        return parse_initial(doc)
    return value


def eigenvalue_gap(first, second):
    """Largest distance from a value of either set to the nearest value of
    the other, independent of the order the solvers return."""
    dist = np.abs(np.asarray(first)[:, None] - np.asarray(second)[None, :])
    return float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))


def _modes(scenario, method):
    matrix = build_coupling_matrix(scenario.config, scenario.params)
    if method is None:
        method = scenario.task.get('method',
                                   'analytic' if matrix.n == 3 else 'numeric')
    return build_solver(method)(matrix)


def _mode_table(modes, logger, title=None):
    table_data = [['mode', 'rate', 'shift', 'group']]
    group_of = {
        m: g
        for g, members in enumerate(modes.degeneracy_groups) for m in members
    }
    for m, label in enumerate(modes.labels):
        table_data.append([
            label, f'{modes.rates[m]:.8g}', f'{modes.shifts[m]:.8g}',
            str(group_of[m])
        ])
    table = AsciiTable(table_data, title=title or modes.method)
    print_log('\n' + table.table, logger=logger)


def run_modes(args, logger):
    scenario = load_scenario(args.config)
    modes = _modes(scenario, args.method)
    _mode_table(modes, logger)
    if args.check:
        if scenario.num_atoms != 3:
            raise UnsupportedSizeError('--check compares the closed form '
                                       'and needs three atoms')
        matrix = build_coupling_matrix(scenario.config, scenario.params)
        analytic = build_solver('analytic')(matrix)
        numeric = build_solver('numeric')(matrix)
        gap = eigenvalue_gap(analytic.eigenvalues, numeric.eigenvalues)
        logger.info('analytic vs numeric eigenvalues differ by %.3e', gap)
        if gap > CHECK_TOL * max(1.0, matrix.norm()):
            raise OracleMismatchError(
                f'analytic and numeric eigenvalues differ by {gap:.3e}')
    if (args.format or 'json') == 'json':
        return json_text(modes.to_dict())
    rows = np.column_stack([
        np.arange(1, len(modes) + 1), modes.eigenvalues.real,
        modes.eigenvalues.imag, modes.rates, modes.shifts
    ])
    return csv_text(['mode', 're', 'im', 'rate', 'shift'], rows)


def run_dynamics(args, logger):
    scenario = load_scenario(args.config)
    modes = _modes(scenario, args.method)
    state = resolve_initial(
        _initial_spec(args.initial, scenario), scenario.num_atoms)
    times = scenario.times()
    if args.tmax is not None or args.steps is not None:
        tmax = times[-1] if args.tmax is None else args.tmax
        steps = len(times) - 1 if args.steps is None else args.steps
        if not tmax > 0 or not steps > 0:
            raise DomainError('--tmax and --steps must be positive')
        times = np.linspace(0.0, tmax, steps + 1)
    trajectory = evolve(modes, decompose_initial(modes, state), times)
    is_monotone_survival(trajectory)
    if (args.format or 'csv') == 'json':
        return json_text(
            dict(
                t=trajectory.times,
                amplitudes=[[[z.real, z.imag] for z in row]
                            for row in trajectory.amplitudes],
                survival=trajectory.survival))
    header = ['t']
    columns = [trajectory.times]
    for n in range(scenario.num_atoms):
        header += [f're_C{n + 1}', f'im_C{n + 1}']
        columns += [
            trajectory.amplitudes[:, n].real, trajectory.amplitudes[:, n].imag
        ]
    header.append('survival')
    columns.append(trajectory.survival)
    return csv_text(header, np.column_stack(columns))


def run_spectrum(args, logger):
    scenario = load_scenario(args.config)
    modes = _modes(scenario, args.method)
    state = resolve_initial(
        _initial_spec(args.initial, scenario), scenario.num_atoms)
    decomp = decompose_initial(modes, state)
    detuning = dict(scenario.task.get('detuning', {}))
    for key in ('dmin', 'dmax', 'points'):
        if getattr(args, key) is not None:
            detuning[key] = getattr(args, key)
    if detuning:
        scenario.task['detuning'] = detuning
    grid = scenario.detuning_grid()
    if args.direction is not None:
        scenario.task['direction'] = parse_direction(args.direction)
    direction = scenario.direction()
    if direction is None:
        series = total_spectrum(scenario.config, modes, decomp, grid)
    else:
        series = directional_spectrum(scenario.config, modes, decomp,
                                      direction, grid)
    order = args.oracle or scenario.task.get('oracle')
    if order:
        if direction is not None:
            raise DomainError('--oracle checks the total spectrum and '
                              'cannot be combined with --direction')
        deviation = check_oracle(scenario.config, modes, decomp, grid, order)
        logger.info('quadrature oracle of order %d deviates by %.3e', order,
                    deviation)
    normalize = args.normalize or scenario.task.get('normalize', 'peak')
    series = series.normalized(normalize)
    peaks = find_peaks(series)
    log_peaks(peaks, title='peaks', logger=logger)
    if (args.format or 'csv') == 'json':
        return json_text(
            dict(
                delta=grid.values,
                S=series.values,
                normalization=series.normalization,
                peaks=[p.to_dict() for p in peaks]))
    return csv_text(['delta', 'S'],
                    np.column_stack([grid.values, series.values]))


def run_scan(args, logger):
    scan = line_scan(
        args.x12,
        parse_range(args.x23),
        args.eta,
        solver=args.method or 'analytic',
        nproc=args.nproc,
        show_progress=args.nproc > 1)
    if (args.format or 'csv') == 'json':
        return json_text(
            dict(axis=scan.axis, columns=scan.header, rows=scan.rows()))
    scan = scan.select(['gamma_1', 'gamma_2', 'gamma_3'])
    return csv_text(scan.header, scan.rows())


def run_reproduce(args, logger):
    if args.out is None:
        raise DomainError('reproduce needs --out DIR')
    paths = reproduce(
        args.figure,
        args.out,
        cfg_options=args.cfg_options,
        logger=logger,
        show_progress=True)
    for path in paths:
        logger.info('wrote %s', path)
    return None


def parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='scenario JSON file')
    common.add_argument(
        '--out', help='output file (output directory for reproduce)')
    common.add_argument(
        '--format', choices=['csv', 'json'], help='output format')
    common.add_argument('--log-file', help='also write the log to this file')
    common.add_argument(
        '--log-level',
        default='INFO',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='logging level')

    parser = argparse.ArgumentParser(
        prog='coopemit',
        description='Cooperative spontaneous emission of small atom arrays')
    subparsers = parser.add_subparsers(dest='command', required=True)

    modes = subparsers.add_parser(
        'modes', parents=[common], help='collective eigenmodes')
    modes.add_argument(
        '--method', choices=['analytic', 'numeric'], help='eigen solver')
    modes.add_argument(
        '--check',
        action='store_true',
        help='compare the closed form with the numeric solver')
    modes.set_defaults(func=run_modes, needs_config=True)

    dynamics = subparsers.add_parser(
        'dynamics', parents=[common], help='amplitude evolution')
    dynamics.add_argument(
        '--initial', help='e<n>, dicke or a JSON file with amplitudes')
    dynamics.add_argument('--tmax', type=float, help='final time in 1/γ')
    dynamics.add_argument('--steps', type=int, help='number of time steps')
    dynamics.add_argument('--method', choices=['analytic', 'numeric'])
    dynamics.set_defaults(func=run_dynamics, needs_config=True)

    spectrum = subparsers.add_parser(
        'spectrum', parents=[common], help='emission spectrum')
    spectrum.add_argument(
        '--initial', help='e<n>, dicke or a JSON file with amplitudes')
    spectrum.add_argument('--dmin', type=float, help='lowest detuning')
    spectrum.add_argument('--dmax', type=float, help='highest detuning')
    spectrum.add_argument('--points', type=int, help='number of detunings')
    spectrum.add_argument(
        '--direction', help='detector direction THETA,PHI in radians')
    spectrum.add_argument(
        '--normalize', choices=['none', 'peak'], help='normalisation')
    spectrum.add_argument(
        '--oracle',
        type=int,
        metavar='ORDER',
        help='cross-check against sphere quadrature of this order')
    spectrum.add_argument('--method', choices=['analytic', 'numeric'])
    spectrum.set_defaults(func=run_spectrum, needs_config=True)

    scan = subparsers.add_parser('scan', help='parameter scans')
    scan_kinds = scan.add_subparsers(dest='kind', required=True)
    line = scan_kinds.add_parser(
        'line', parents=[common], help='collinear x23 scan')
    line.add_argument('--x12', type=float, required=True)
    line.add_argument('--x23', required=True, help='A:B:STEP')
    line.add_argument('--eta', type=float, required=True)
    line.add_argument('--method', choices=['analytic', 'numeric'])
    line.add_argument('--nproc', type=int, default=1)
    line.set_defaults(func=run_scan, needs_config=False)

    repro = subparsers.add_parser(
        'reproduce', parents=[common], help='figure datasets')
    repro.add_argument('figure', choices=['fig2', 'fig3', 'fig5', 'fig6'])
    repro.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override figure settings, e.g. points=50 sides="[0.1,0.2]"')
    repro.set_defaults(func=run_reproduce, needs_config=False)

    args = parser.parse_args(argv)
    if args.needs_config and args.config is None:
        parser.error(f'{args.command} needs --config')
    return args


def main(argv=None):
    args = parse_args(argv)
    logger = get_root_logger(log_file=args.log_file, log_level=args.log_level)
    try:
        text = args.func(args, logger)
        if text is not None:
            if args.out is None:
                sys.stdout.write(text)
            else:
                write_text(text, args.out)
    except ConsistencyError as e:
        logger.error('consistency check failed: %s', e)
        return EXIT_INCONSISTENT
    except ValueError as e:
        logger.error('invalid input: %s', e)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
