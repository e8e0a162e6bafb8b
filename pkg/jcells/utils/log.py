import io
import time
import pprint
import logging
from datetime import datetime

from tqdm import tqdm

LOGGER_NAME = 'jcells'
LOG_FORMAT = '(%(levelname)s) %(asctime)s: %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'
RUN_STAMP = '%Y-%m-%d_%H-%M-%S'

logger = logging.getLogger(LOGGER_NAME)
logger.setLevel(logging.INFO)
logger.addHandler(logging.StreamHandler())


def add_logging(logs_path, prefix):
    """Mirror the package log into logs_path/<prefix><timestamp>.log; returns the handler."""
    logs_path.mkdir(parents=True, exist_ok=True)
    log_file = logs_path / f'{prefix}{datetime.now().strftime(RUN_STAMP)}.log'

    file_handler = logging.FileHandler(str(log_file), encoding='utf-8')
    file_handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATEFMT))
    logger.addHandler(file_handler)
    return file_handler


def remove_logging(file_handler):
    logger.removeHandler(file_handler)
    file_handler.close()


def set_level(level_name):
    level = logging.getLevelName(str(level_name).upper())
    if isinstance(level, int):
        logger.setLevel(level)


def log_run_config(cfg, title='Run with config:'):
    logger.info(title)
    logger.info(pprint.pformat(dict(cfg), indent=4))


def progress(iterable, total=None, desc=None):
    """tqdm bar whose output goes through the package logger."""
    stream = TqdmToLogger(logger, level=logging.INFO)
    return tqdm(iterable, total=total, desc=desc, file=stream, ncols=100, leave=False)


class TqdmToLogger(io.StringIO):
    """File-like sink for tqdm: keeps the latest bar and logs it at most every ``min_interval`` seconds."""

    def __init__(self, target, level=logging.INFO, min_interval=5.0):
        super(TqdmToLogger, self).__init__()
        self.target = target
        self.level = level
        self.min_interval = min_interval
        self._line = ''
        self._logged_at = 0.0

    def write(self, text):
        line = text.strip('\r\n\t ')
        if line:
            self._line = line
        return len(text)

    def flush(self):
        now = time.monotonic()
        if self._line and now - self._logged_at > self.min_interval:
            self.target.log(self.level, self._line)
            self._logged_at = now
            self._line = ''
