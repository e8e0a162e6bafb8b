import sys
from pathlib import Path

import numpy as np
import pytest
from easydict import EasyDict as edict

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from jcells.utils.exp import load_config_file


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def make_cfg():
    """Run config as the CLI builds it: YAML defaults, run defaults, then overrides."""
    def _make_cfg(**overrides):
        cfg = load_config_file(ROOT / 'config.yml', return_edict=True)
        run_defaults = dict(cfg.pop('RUN_DEFAULTS'))
        run_defaults.update(overrides)
        cfg.update(run_defaults)
        cfg.THREADS = 1
        return edict(cfg)
    return _make_cfg


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (z + z.conj().T)
