import os
from pathlib import Path

import yaml
from easydict import EasyDict as edict

from .log import logger, add_logging, log_run_config

THREADS_ENV = 'JC_LATTICE_THREADS'


def load_config_file(config_path, subcommand=None, return_edict=False):
    with open(config_path, 'r') as f:
        cfg = yaml.safe_load(f) or dict()

    if 'SUBCONFIGS' in cfg:
        if subcommand is not None and subcommand in cfg['SUBCONFIGS']:
            cfg.update(cfg['SUBCONFIGS'][subcommand])
        del cfg['SUBCONFIGS']

    return edict(cfg) if return_edict else cfg


def load_run_config(config_path):
    """Read a flat ``key=value`` file; blank lines and ``#`` comments are skipped."""
    cfg = dict()
    with open(config_path, 'r', encoding='utf-8') as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ValueError(f'{config_path}:{line_number}: expected key=value, got "{line}"')
            key, value = line.split('=', 1)
            cfg[key.strip().replace('-', '_')] = parse_value(value)
    return cfg


def dump_run_config(cfg, config_path):
    with open(config_path, 'w', encoding='utf-8', newline='\n') as f:
        for key in sorted(cfg):
            f.write(f'{key}={format_value(cfg[key])}\n')


def parse_value(text):
    text = text.strip()
    if text.startswith('['):
        return [_to_number(x) for x in yaml.safe_load(text)]
    return _to_number(text)


def _to_number(value):
    if not isinstance(value, str):
        return value
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return yaml.safe_load(value) if value else None


def format_value(value):
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(format_value(x) for x in value) + ']'
    if value is None:
        return 'null'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def update_config(cfg, overrides):
    for param_name, value in overrides.items():
        if value is None and param_name in cfg:
            continue
        cfg[param_name] = value


def init_run(cfg):
    """Resolve the output directory and attach a file log for one run."""
    if cfg.get('output'):
        run_path = Path(cfg.output)
    else:
        run_parent_path = Path(cfg.OUTPUT_PATH) / cfg.subcommand
        run_parent_path.mkdir(parents=True, exist_ok=True)
        run_path = run_parent_path / f'{find_last_run_indx(run_parent_path):03d}'
    run_path.mkdir(parents=True, exist_ok=True)

    cfg.RUN_PATH = run_path
    cfg.LOGS_PATH = Path(cfg.logs_path) if cfg.get('logs_path') else run_path / 'logs'
    cfg.log_handler = add_logging(cfg.LOGS_PATH, prefix=f'{cfg.subcommand}_')

    log_run_config({k: v for k, v in cfg.items() if k.islower() and k != 'log_handler'})
    return cfg


def find_last_run_indx(run_parent_path):
    indx = 0
    for x in run_parent_path.iterdir():
        if not x.is_dir():
            continue

        run_name = x.stem
        if run_name[:3].isnumeric():
            indx = max(indx, int(run_name[:3]) + 1)

    return indx


def get_num_threads(default=0):
    value = os.environ.get(THREADS_ENV, '')
    try:
        threads = int(value) if value.strip() else int(default)
    except ValueError:
        logger.warning(f'Ignoring non-integer {THREADS_ENV}="{value}"')
        threads = int(default)

    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads
