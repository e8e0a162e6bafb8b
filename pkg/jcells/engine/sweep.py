from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from easydict import EasyDict as edict

from jcells.core.errors import ConfigError, JCellsError
from jcells.utils.exp import get_num_threads
from jcells.utils.log import logger, progress
from .verify import run_verify
from .workflows import get_workflow, RunResult, RunTable

SWEEPABLE = ('cells', 'omega_c', 'delta', 'g', 'kappa', 'gamma_a', 'gamma_c', 'gamma')

SWEEP_COMMANDS = ('eigen', 'rates', 'spectrum', 'verify')

SweepPoint = namedtuple('SweepPoint', ['index', 'value', 'summary', 'error'])


def sweep_values(start, stop, steps, parameter):
    if int(steps) < 1:
        raise ConfigError(f'sweep needs at least one step, got {steps}')
    values = np.linspace(float(start), float(stop), int(steps))
    if parameter == 'cells':
        return [int(round(x)) for x in values]
    return [float(x) for x in values]


def _run_point(workflow, cfg, parameter, index, value):
    point_cfg = edict(cfg)
    point_cfg[parameter] = value
    try:
        summary = workflow(point_cfg).summary
    except JCellsError as e:
        logger.warning(f'sweep point {index} ({parameter}={value}): {type(e).__name__}: {e}')
        return SweepPoint(index, value, None, f'{type(e).__name__}: {e}')
    return SweepPoint(index, value, summary, None)


def run_sweep(cfg):
    parameter = str(cfg.get('parameter') or '').replace('-', '_')
    if parameter not in SWEEPABLE:
        raise ConfigError(f'Cannot sweep "{parameter}", expected one of {SWEEPABLE}')
    command = cfg.get('sweep_command') or 'spectrum'
    if command not in SWEEP_COMMANDS:
        raise ConfigError(f'Cannot sweep the "{command}" command, expected one of {SWEEP_COMMANDS}')

    workflow = run_verify if command == 'verify' else get_workflow(command)
    values = sweep_values(cfg.start, cfg.stop, cfg.steps, parameter)
    threads = min(get_num_threads(cfg.get('THREADS', 0)), len(values))
    logger.info(f'Sweeping {command} over {parameter} ({len(values)} points, {threads} threads)')

    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = executor.map(lambda x: _run_point(workflow, cfg, parameter, *x), enumerate(values))
        points = list(progress(futures, total=len(values), desc=f'sweep {parameter}'))

    return RunResult(document={'sweep_command': command, 'parameter': parameter,
                               'points': [p._asdict() for p in points]},
                     summary=None, table=sweep_table(parameter, points))


def flatten_summary(summary):
    flat = dict()
    for key, value in summary.items():
        if isinstance(value, (list, tuple, np.ndarray)):
            for i, x in enumerate(value):
                flat[f'{key}_{i}'] = x
        else:
            flat[key] = value
    return flat


def sweep_table(parameter, points):
    rows = [flatten_summary(p.summary) if p.summary is not None else dict() for p in points]

    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)

    header = [parameter] + columns + ['error']
    table_rows = [[p.value] + [row.get(c) for c in columns] + [p.error] for p, row in zip(points, rows)]
    return RunTable(header=header, rows=table_rows)
