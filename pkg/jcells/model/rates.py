import math
from collections import namedtuple

import numpy as np

from jcells.core.linalg import EigenSystem
from jcells.core.params import COMMON, INDEPENDENT, validate
from jcells.core.errors import ConfigError
from jcells.solver.golden_rule import golden_rule_rates_numeric
from .entanglement import w_state_metrics
from .n_cell import NCellEigenstate
from .single import SingleCellState, PLUS, doublet_to_ground_rates
from .two_cell import TwoCellState

SUPERRADIANT = 'superradiant'
SUBRADIANT = 'subradiant'
DARK = 'dark'

# rates within this relative distance of the single-cell rate are not superradiant
ROUNDOFF_RTOL = 1e-12

RateEntry = namedtuple('RateEntry', ['state_id', 'kind', 'bohr_frequency', 'rate', 'rate_class',
                                     'entanglement_balance', 'maximally_entangled'])


class RateReport(object):
    def __init__(self, entries, params):
        self.entries = list(entries)
        self.params = params

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def rates(self):
        return np.array([x.rate for x in self.entries])

    def by_class(self, rate_class):
        return [x for x in self.entries if x.rate_class == rate_class]

    def by_kind(self, kind):
        return [x for x in self.entries if x.kind == kind]

    def to_dict(self):
        return {
            'reservoir': self.params.reservoir,
            'states': [dict(x._asdict()) for x in self.entries],
            'counts': {c: len(self.by_class(c)) for c in (SUPERRADIANT, SUBRADIANT, DARK)},
        }


def single_cell_rate(state, damping):
    gamma_plus, gamma_minus = doublet_to_ground_rates(state.theta, damping[0])
    return gamma_plus if state.sign == PLUS else gamma_minus


def two_cell_rate(state, damping, reservoir):
    (ga1, gc1), (ga2, gc2) = damping
    eps = state.epsilon

    photon_part = (math.sqrt(gc1) - eps * math.sqrt(gc2)) ** 2 * state.u ** 2
    if reservoir == COMMON:
        atom_part = (math.sqrt(ga1) - eps * math.sqrt(ga2)) ** 2 * state.w ** 2
    else:
        atom_part = (ga1 + ga2) * state.w ** 2
    return atom_part + photon_part


def n_cell_rate(state, damping, reservoir):
    sq_a = [math.sqrt(d.gamma_a) for d in damping]
    sq_c = [math.sqrt(d.gamma_c) for d in damping]
    atom2 = (state.atom_amplitude / state.norm) ** 2
    photon2 = (state.photon_amplitude / state.norm) ** 2

    if state.antisymmetric:
        last, k = len(damping) - 1, state.partner
        photon_part = photon2 * (sq_c[last] - sq_c[k]) ** 2
        if reservoir == COMMON:
            return atom2 * (sq_a[last] - sq_a[k]) ** 2 + photon_part
        return atom2 * (damping[last].gamma_a + damping[k].gamma_a) + photon_part

    photon_part = photon2 * math.fsum(sq_c) ** 2
    if reservoir == COMMON:
        return atom2 * math.fsum(sq_a) ** 2 + photon_part
    return atom2 * math.fsum(d.gamma_a for d in damping) + photon_part


def closed_form_rate(state, params):
    damping, reservoir = params.damping, params.reservoir
    if reservoir not in (COMMON, INDEPENDENT):
        raise ConfigError(f'Unknown reservoir model "{reservoir}"')

    if isinstance(state, SingleCellState):
        return single_cell_rate(state, damping)
    elif isinstance(state, TwoCellState):
        return two_cell_rate(state, damping, reservoir)
    elif isinstance(state, NCellEigenstate):
        return n_cell_rate(state, damping, reservoir)
    raise TypeError(f'No closed-form rate for {type(state).__name__}')


def classify(rate, params, dark_threshold=1e-9):
    scale = params.max_cell_rate
    if rate == 0 or rate < dark_threshold * scale:
        return DARK
    if rate > scale * (1.0 + ROUNDOFF_RTOL):
        return SUPERRADIANT
    return SUBRADIANT


def transition_rates(states, params, dark_threshold=1e-9, entanglement_tol=1e-9):
    """Rate report for closed-form states or for a numeric eigensystem."""
    validate(params)

    if isinstance(states, EigenSystem):
        rates = golden_rule_rates_numeric(states, params.damping, params.reservoir)
        rows = [(f'numeric({i})', None, float(states.eigenvalues[i]), states.vector(i), rate)
                for i, rate in enumerate(rates)]
    else:
        rows = [(x.state_id, x.kind, x.bohr_frequency, x.vector(), closed_form_rate(x, params))
                for x in states]

    entries = []
    for state_id, kind, bohr, vector, rate in rows:
        assert vector.shape[0] == 2 * params.n_cells, f'{state_id}: wrong amplitude count'
        metrics = w_state_metrics(vector, tol=entanglement_tol)
        entries.append(RateEntry(state_id=state_id, kind=kind, bohr_frequency=float(bohr), rate=float(rate),
                                 rate_class=classify(rate, params, dark_threshold),
                                 entanglement_balance=metrics.balance,
                                 maximally_entangled=metrics.maximally_entangled))
    return RateReport(entries, params)
