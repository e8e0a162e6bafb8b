import argparse
from pathlib import Path

import yaml

from jcells.core.errors import (JCellsError, ConfigError, DegenerateAngle, DegenerateCell,
                                WrongReservoirModel, NoConvergence, NonPositiveWidth)
from jcells.engine.sweep import run_sweep, SWEEP_COMMANDS
from jcells.engine.verify import run_verify
from jcells.engine.workflows import get_workflow
from jcells.utils.exp import load_config_file, load_run_config, dump_run_config, update_config, init_run
from jcells.utils.log import logger, remove_logging, set_level
from jcells.utils.serialize import write_json, write_csv

SUBCOMMANDS = ('eigen', 'rates', 'spectrum', 'sweep', 'verify')

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[1] / 'config.yml'

RUN_KEYS = ('cells', 'omega_c', 'delta', 'g', 'kappa', 'gamma_a', 'gamma_c', 'reservoir',
            'gamma', 'wmin', 'wmax', 'points', 'frame', 'manifold',
            'sweep_command', 'parameter', 'start', 'stop', 'steps',
            'output', 'format', 'seed', 'samples', 'logs_path')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2

INPUT_ERRORS = (ConfigError, DegenerateAngle, DegenerateCell, WrongReservoirModel, NonPositiveWidth)


def rate_list(text):
    values = [float(x) for x in text.split(',') if x.strip()]
    if not values:
        raise argparse.ArgumentTypeError(f'expected a rate or a comma separated list, got "{text}"')
    return values[0] if len(values) == 1 else values


def parse_args(argv=None):
    parser = argparse.ArgumentParser(prog='run_jcells.py',
                                     description='Coupled Jaynes-Cummings cells: eigenstates, '
                                                 'decay rates and probe absorption spectra.')
    parser.add_argument('subcommand', choices=SUBCOMMANDS)

    group = parser.add_argument_group('lattice')
    group.add_argument('--cells', type=int, default=None, help='Number of cells N.')
    group.add_argument('--omega-c', type=float, default=None, help='Cavity frequency.')
    group.add_argument('--delta', type=float, default=None, help='Detuning omega_a - omega_c.')
    group.add_argument('--g', type=float, default=None, help='Atom-cavity coupling.')
    group.add_argument('--kappa', type=float, default=None, help='Photon hopping rate.')
    group.add_argument('--gamma-a', type=rate_list, default=None,
                       help='Atomic decay rate, one value or one per cell separated by commas.')
    group.add_argument('--gamma-c', type=rate_list, default=None,
                       help='Cavity decay rate, one value or one per cell separated by commas.')
    group.add_argument('--reservoir', choices=['common', 'independent'], default=None,
                       help='Atoms share one reservoir (common) or decay separately (independent).')

    group = parser.add_argument_group('spectrum')
    group.add_argument('--gamma', type=float, default=None, help='Probe transition width.')
    group.add_argument('--wmin', type=float, default=None, help='Lowest probe frequency.')
    group.add_argument('--wmax', type=float, default=None, help='Highest probe frequency.')
    group.add_argument('--points', type=int, default=None, help='Number of grid points.')
    group.add_argument('--frame', choices=['atomic', 'bohr'], default=None,
                       help='Line positions relative to the shifted ground level (atomic) or raw Bohr frequencies.')
    group.add_argument('--manifold', type=int, default=None,
                       help='Excitation manifold probed for a single cell (1 = transitions to the ground state).')

    group = parser.add_argument_group('sweep')
    group.add_argument('--sweep-command', choices=SWEEP_COMMANDS, default=None,
                       help='Subcommand repeated at every sweep point.')
    group.add_argument('--parameter', type=str, default=None, help='Swept parameter, e.g. delta.')
    group.add_argument('--start', type=float, default=None)
    group.add_argument('--stop', type=float, default=None)
    group.add_argument('--steps', type=int, default=None)

    group = parser.add_argument_group('run')
    group.add_argument('--output', type=str, default=None,
                       help='Output directory. Default: cfg.OUTPUT_PATH/<subcommand>/<run index>.')
    group.add_argument('--format', choices=['csv', 'json'], default=None,
                       help='Sweep table format; JSON is always written as well.')
    group.add_argument('--seed', type=int, default=None, help='Seed of the verification suite.')
    group.add_argument('--samples', type=int, default=None, help='Random samples of the verification suite.')
    group.add_argument('--config', type=str, default=None,
                       help='A flat key=value file; flags given explicitly override it.')
    group.add_argument('--config-path', type=str, default=str(DEFAULT_CONFIG_PATH),
                       help='The path to the YAML defaults.')
    group.add_argument('--logs-path', type=str, default=None,
                       help='The path to the run logs. Default: <output>/logs.')

    return parser.parse_args(argv)


def build_config(args):
    try:
        cfg = load_config_file(args.config_path, subcommand=args.subcommand, return_edict=True)
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f'Cannot read defaults from {args.config_path}: {e}')

    run_cfg = dict(cfg.pop('RUN_DEFAULTS')) if 'RUN_DEFAULTS' in cfg else dict()
    file_cfg = dict()
    if args.config:
        try:
            file_cfg = load_run_config(args.config)
        except (OSError, ValueError) as e:
            raise ConfigError(f'Cannot read run config {args.config}: {e}')
        unknown = sorted(set(file_cfg) - set(RUN_KEYS) - {'subcommand'})
        if unknown:
            raise ConfigError(f'Unknown keys in {args.config}: {", ".join(unknown)}')
        file_cfg.pop('subcommand', None)
        update_config(run_cfg, file_cfg)

    update_config(run_cfg, {key: getattr(args, key) for key in RUN_KEYS if getattr(args, key) is not None})

    # without an explicit cell count the oracle suite draws N at random
    if args.subcommand == 'verify' and args.cells is None and 'cells' not in file_cfg:
        run_cfg['cells'] = None

    cfg.update(run_cfg)
    cfg.subcommand = args.subcommand
    set_level(cfg.get('LOG_LEVEL', 'INFO'))
    return cfg


def run_config_items(cfg):
    return {key: cfg.get(key) for key in ('subcommand',) + RUN_KEYS}


def execute(cfg):
    run_path = Path(cfg.RUN_PATH)
    dump_run_config(run_config_items(cfg), run_path / 'run_config.txt')

    if cfg.subcommand == 'verify':
        result = run_verify(cfg)
        write_json(result.document, run_path / 'verify.json')
        return EXIT_OK if result.document['passed'] else EXIT_FAILURE

    if cfg.subcommand == 'sweep':
        result = run_sweep(cfg)
        write_json(result.document, run_path / 'sweep.json')
        if (cfg.get('format') or 'csv') == 'csv':
            write_csv(run_path / 'sweep.csv', result.table.header, result.table.rows)
        return EXIT_OK

    result = get_workflow(cfg.subcommand)(cfg)
    write_json(result.document, run_path / f'{cfg.subcommand}.json')
    if result.table is not None:
        write_csv(run_path / f'{cfg.subcommand}.csv', result.table.header, result.table.rows)
    return EXIT_OK


def run(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CONFIG_ERROR

    cfg = None
    try:
        cfg = init_run(build_config(args))
        return execute(cfg)
    except INPUT_ERRORS as e:
        logger.error(f'{type(e).__name__}: {e}')
        return EXIT_CONFIG_ERROR
    except NoConvergence as e:
        logger.error(str(e))
        return EXIT_FAILURE
    except JCellsError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return EXIT_FAILURE
    finally:
        if cfg is not None and cfg.get('log_handler') is not None:
            remove_logging(cfg.log_handler)


def main():
    return run()
