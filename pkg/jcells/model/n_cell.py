"""Closed-form one-excitation eigenstates of N mutually hopping cells.

Antisymmetric states pair the last cell against cell k = 1..N-1::

    (a (|e>_N - |e>_k) + b (|1>_N - |1>_k)) / sqrt(2 (a^2 + b^2))

and share the photon mode omega_c + kappa, so each block of N-1 states is
degenerate. The two symmetric states sit on the mode omega_c - (N-1) kappa.
"""
import math
from collections import namedtuple

import numpy as np

from jcells.core.basis import atom_index, photon_index
from jcells.core.errors import ConfigError, DegenerateCell
from .two_cell import branch_ratios

ANTISYMMETRIC_UPPER = 'antisymmetric_upper'
ANTISYMMETRIC_LOWER = 'antisymmetric_lower'
SYMMETRIC_PLUS = 'symmetric_plus'
SYMMETRIC_MINUS = 'symmetric_minus'

ANTISYMMETRIC_KINDS = (ANTISYMMETRIC_UPPER, ANTISYMMETRIC_LOWER)
SYMMETRIC_KINDS = (SYMMETRIC_PLUS, SYMMETRIC_MINUS)

_KIND_NAMES = {
    ANTISYMMETRIC_UPPER: 'AntisymmetricUpper',
    ANTISYMMETRIC_LOWER: 'AntisymmetricLower',
    SYMMETRIC_PLUS: 'SymmetricPlus',
    SYMMETRIC_MINUS: 'SymmetricMinus',
}

BranchParameters = namedtuple('BranchParameters', ['r', 'p_plus', 'p_minus', 'norm_lower', 'norm_upper',
                                                   'r_sym', 'p_sym_plus', 'p_sym_minus',
                                                   'norm_sym_plus', 'norm_sym_minus'])


class NCellEigenstate(namedtuple('NCellEigenstate', ['kind', 'index', 'atom_amplitude', 'photon_amplitude',
                                                     'partner', 'norm', 'amplitudes',
                                                     'bohr_frequency', 'energy', 'display_energy'])):
    """``partner`` is the 0-based cell paired against the last one (None when symmetric)."""
    __slots__ = ()

    @property
    def state_id(self):
        name = _KIND_NAMES[self.kind]
        return f'{name}({self.index})' if self.kind in ANTISYMMETRIC_KINDS else name

    @property
    def antisymmetric(self):
        return self.kind in ANTISYMMETRIC_KINDS

    def vector(self):
        return self.amplitudes.copy()


def branch_parameters(params):
    n, g = params.n_cells, params.g
    r = (params.delta - params.kappa) / (2.0 * g)
    p_plus, p_minus = branch_ratios(r)

    r_sym = (params.delta + (n - 1) * params.kappa) / (2.0 * g)
    p_sym_plus, p_sym_minus = branch_ratios(r_sym)

    return BranchParameters(
        r=r, p_plus=p_plus, p_minus=p_minus,
        norm_lower=math.sqrt(2.0 * p_plus ** 2 + 2.0),
        norm_upper=math.sqrt(2.0 * p_minus ** 2 + 2.0),
        r_sym=r_sym, p_sym_plus=p_sym_plus, p_sym_minus=p_sym_minus,
        norm_sym_plus=math.sqrt(n / p_sym_plus ** 2 + n),
        norm_sym_minus=math.sqrt(n / p_sym_minus ** 2 + n),
    )


def antisymmetric_bohr(params, sign):
    mean = params.omega_c + 0.5 * (params.delta + params.kappa)
    return mean + sign * math.sqrt(params.g ** 2 + 0.25 * (params.delta - params.kappa) ** 2)


def symmetric_bohr(params, sign):
    spread = (params.n_cells - 1) * params.kappa
    mean = params.omega_c + 0.5 * (params.delta - spread)
    return mean + sign * math.sqrt(params.g ** 2 + 0.25 * (params.delta + spread) ** 2)


def n_cell_eigensystem(params):
    n = params.n_cells
    if n < 2:
        raise ConfigError(f'N-cell eigensystem needs at least 2 cells, got {n}')
    if params.g == 0:
        raise DegenerateCell('g = 0: N-cell amplitudes are undefined')

    bp = branch_parameters(params)
    last = n - 1

    def _make(kind, index, atom, photon, partner, norm, amplitudes, bohr):
        return NCellEigenstate(kind=kind, index=index, atom_amplitude=atom, photon_amplitude=photon,
                               partner=partner, norm=norm, amplitudes=amplitudes, bohr_frequency=bohr,
                               energy=bohr + params.ground_energy,
                               display_energy=bohr + params.display_ground_energy)

    blocks = [
        # photon/atom ratio p_plus belongs to the upper level
        (ANTISYMMETRIC_UPPER, 1, bp.p_minus, bp.norm_upper, antisymmetric_bohr(params, +1)),
        (ANTISYMMETRIC_LOWER, n, bp.p_plus, bp.norm_lower, antisymmetric_bohr(params, -1)),
    ]

    states = []
    for kind, first_index, atom, norm, bohr in blocks:
        for k in range(n - 1):
            amplitudes = np.zeros(2 * n, dtype=np.complex128)
            amplitudes[atom_index(last)] = atom / norm
            amplitudes[photon_index(last)] = -1.0 / norm
            amplitudes[atom_index(k)] = -atom / norm
            amplitudes[photon_index(k)] = 1.0 / norm
            states.append(_make(kind, first_index + k, atom, -1.0, k, norm, amplitudes, bohr))

    for kind, sign, p, norm in ((SYMMETRIC_PLUS, +1, bp.p_sym_plus, bp.norm_sym_plus),
                                (SYMMETRIC_MINUS, -1, bp.p_sym_minus, bp.norm_sym_minus)):
        amplitudes = np.zeros(2 * n, dtype=np.complex128)
        amplitudes[0::2] = 1.0 / (p * norm)
        amplitudes[1::2] = 1.0 / norm
        states.append(_make(kind, None, 1.0 / p, 1.0, None, norm, amplitudes, symmetric_bohr(params, sign)))

    return states
