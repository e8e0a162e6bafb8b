from collections import namedtuple

import numpy as np

from .errors import (ConfigError, NegativeRate, EmptyLattice,
                     DampingLengthMismatch, KappaOnSingleCell)

COMMON = 'common'
INDEPENDENT = 'independent'
RESERVOIR_MODELS = (COMMON, INDEPENDENT)

CellDamping = namedtuple('CellDamping', ['gamma_a', 'gamma_c'])


class LatticeParams(namedtuple('LatticeParams', ['n_cells', 'omega_c', 'delta', 'g', 'kappa',
                                                 'damping', 'reservoir'])):
    __slots__ = ()

    @property
    def omega_a(self):
        return self.omega_c + self.delta

    @property
    def ground_energy(self):
        # per-cell zero point (omega_c - omega_a) / 2
        return -0.5 * self.n_cells * self.delta

    @property
    def display_ground_energy(self):
        # ground level of the published level diagrams: -delta/2 for one cell, -delta otherwise
        return -0.5 * self.delta if self.n_cells == 1 else -self.delta

    @property
    def gamma_a(self):
        return np.array([d.gamma_a for d in self.damping], dtype=np.float64)

    @property
    def gamma_c(self):
        return np.array([d.gamma_c for d in self.damping], dtype=np.float64)

    @property
    def identical_cells(self):
        return all(d == self.damping[0] for d in self.damping)

    @property
    def max_cell_rate(self):
        return max(d.gamma_a + d.gamma_c for d in self.damping)

    def replace(self, **kwargs):
        if 'damping' in kwargs:
            kwargs['damping'] = tuple(kwargs['damping'])
        return self._replace(**kwargs)


def make_params(n_cells, omega_c=0.0, delta=0.0, g=1.0, kappa=0.0,
                gamma_a=0.0, gamma_c=0.0, reservoir=COMMON):
    gammas_a = _broadcast(gamma_a, n_cells)
    gammas_c = _broadcast(gamma_c, n_cells)
    if len(gammas_a) != len(gammas_c):
        raise DampingLengthMismatch(f'{len(gammas_a)} atomic rates vs {len(gammas_c)} cavity rates')

    damping = tuple(CellDamping(float(a), float(c)) for a, c in zip(gammas_a, gammas_c))
    return LatticeParams(n_cells=int(n_cells), omega_c=float(omega_c), delta=float(delta),
                         g=float(g), kappa=float(kappa), damping=damping, reservoir=reservoir)


def _broadcast(value, n_cells):
    if np.isscalar(value):
        return [value] * max(int(n_cells), 0)
    return list(value)


def validate(params):
    if params.n_cells < 1:
        raise EmptyLattice(f'n_cells must be >= 1, got {params.n_cells}')
    if len(params.damping) != params.n_cells:
        raise DampingLengthMismatch(f'{len(params.damping)} damping entries for {params.n_cells} cells')
    if params.g < 0:
        raise NegativeRate(f'g must be >= 0, got {params.g}')
    for i, d in enumerate(params.damping):
        if d.gamma_a < 0 or d.gamma_c < 0:
            raise NegativeRate(f'cell {i}: negative damping {tuple(d)}')
    if params.n_cells == 1 and params.kappa != 0:
        raise KappaOnSingleCell(f'kappa = {params.kappa} given for a single cell')
    if params.reservoir not in RESERVOIR_MODELS:
        raise ConfigError(f'Unknown reservoir model "{params.reservoir}", '
                          f'expected one of {RESERVOIR_MODELS}')

    return params
