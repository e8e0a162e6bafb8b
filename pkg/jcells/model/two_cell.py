"""Closed-form one-excitation eigenstates of two hopping-coupled cells.

Parity ``epsilon`` fixes the photon mode omega_c + epsilon * kappa; the
branch ``varepsilon`` picks the upper or lower dressed level of that mode:

    |epsilon, varepsilon> = u (|1g0g> - epsilon |0g1g>) + w (|0e0g> - epsilon |0g0e>)
"""
import math
from collections import namedtuple

import numpy as np

from jcells.core.errors import DegenerateCell, ConfigError

PLUS = 1
MINUS = -1


def branch_ratios(r):
    """(p_plus, p_minus) = -r +- sqrt(r^2 + 1), without cancellation."""
    s = math.hypot(r, 1.0)
    if r >= 0:
        p_minus = -(r + s)
        return -1.0 / p_minus, p_minus
    p_plus = s - r
    return p_plus, -1.0 / p_plus


class TwoCellState(namedtuple('TwoCellState', ['epsilon', 'varepsilon', 'u', 'w',
                                               'energy', 'bohr_frequency'])):
    __slots__ = ()

    @property
    def state_id(self):
        return f'|{_sign(self.epsilon)},{_sign(self.varepsilon)}>'

    @property
    def kind(self):
        if self.epsilon == PLUS:
            return 'antisymmetric_upper' if self.varepsilon == PLUS else 'antisymmetric_lower'
        return 'symmetric_plus' if self.varepsilon == PLUS else 'symmetric_minus'

    @property
    def display_energy(self):
        return self.energy

    def vector(self):
        eps = self.epsilon
        return np.array([self.w, self.u, -eps * self.w, -eps * self.u], dtype=np.complex128)


def _sign(value):
    return '+' if value == PLUS else '-'


def two_cell_eigensystem(params):
    if params.n_cells != 2:
        raise ConfigError(f'two-cell eigensystem needs 2 cells, got {params.n_cells}')
    if params.g == 0:
        raise DegenerateCell('g = 0: two-cell amplitudes are undefined')

    g, delta, kappa = params.g, params.delta, params.kappa
    ground = -delta

    states = []
    for eps in (PLUS, MINUS):
        r = (delta - eps * kappa) / (2.0 * g)
        ratios = dict(zip((PLUS, MINUS), branch_ratios(r)))
        for veps in (PLUS, MINUS):
            p = ratios[veps]
            w = 1.0 / math.sqrt(2.0 * (1.0 + p ** 2))
            energy = params.omega_c - 0.5 * (delta - eps * kappa) + veps * g * math.hypot(r, 1.0)
            states.append(TwoCellState(epsilon=eps, varepsilon=veps, u=p * w, w=w,
                                       energy=energy, bohr_frequency=energy - ground))
    return states


def maximal_entanglement_detuning(epsilon, kappa):
    # r_epsilon = 0
    return epsilon * kappa
