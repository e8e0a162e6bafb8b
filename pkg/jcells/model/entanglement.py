from collections import namedtuple

import numpy as np

from jcells.core.errors import ZeroVector
from jcells.core.linalg import abs2

SUPPORT_THRESHOLD = 1e-12

WStateMetrics = namedtuple('WStateMetrics', ['balance', 'maximally_entangled', 'support'])


def w_state_metrics(amplitudes, tol=1e-9):
    """Weight balance of a one-excitation state over the cells it occupies.

    Both slots of every occupied cell count as components, so a cell holding
    the excitation only in its photon gives balance 0.
    """
    weights = abs2(np.asarray(amplitudes, dtype=np.complex128))
    assert weights.ndim == 1 and weights.size % 2 == 0, 'expected 2N amplitudes'

    total = float(weights.sum())
    if total == 0:
        raise ZeroVector('w_state_metrics of a zero vector')
    weights = weights / total

    per_cell = weights.reshape(-1, 2)
    support = np.flatnonzero(per_cell.sum(axis=1) > SUPPORT_THRESHOLD)
    components = per_cell[support].ravel()

    balance = float(components.min() / components.max())
    return WStateMetrics(balance=balance, maximally_entangled=balance > 1.0 - tol,
                         support=[int(x) for x in support])
