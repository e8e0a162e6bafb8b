"""Strong-hopping limit of the rates with independent atomic reservoirs.

For kappa >> g the photon-like antisymmetric block stops radiating and the
atom-like one decays at the bare atomic rate; deviations shrink as (g/kappa)^2.
"""
from collections import namedtuple

from jcells.core.errors import ConfigError, WrongReservoirModel
from jcells.core.params import INDEPENDENT, validate
from .n_cell import (n_cell_eigensystem, branch_parameters, ANTISYMMETRIC_UPPER, ANTISYMMETRIC_LOWER,
                     SYMMETRIC_PLUS, SYMMETRIC_MINUS)
from .rates import transition_rates

LimitDeviation = namedtuple('LimitDeviation', ['kind', 'limit', 'max_rate', 'max_deviation'])

LimitReport = namedtuple('LimitReport', ['small_parameter', 'deviations'])


def strong_coupling_limit_check(params, report=None):
    validate(params)
    if params.reservoir != INDEPENDENT:
        raise WrongReservoirModel(f'strong-coupling limits hold for independent atomic reservoirs, '
                                  f'got "{params.reservoir}"')
    if not params.identical_cells:
        raise ConfigError('strong-coupling limits need identical cells')
    if params.n_cells < 2:
        raise ConfigError('strong-coupling limits need at least 2 cells')

    if report is None:
        report = transition_rates(n_cell_eigensystem(params), params)

    gamma_a, gamma_c = params.damping[0]
    n = params.n_cells
    bp = branch_parameters(params)

    def _symmetric(p):
        return (gamma_a + p ** 2 * n * gamma_c) / (1.0 + p ** 2)

    limits = {
        ANTISYMMETRIC_UPPER: 0.0,
        ANTISYMMETRIC_LOWER: gamma_a,
        SYMMETRIC_PLUS: _symmetric(bp.p_sym_plus),
        SYMMETRIC_MINUS: _symmetric(bp.p_sym_minus),
    }

    deviations = []
    for kind, limit in limits.items():
        rates = [x.rate for x in report.by_kind(kind)]
        if not rates:
            continue
        deviations.append(LimitDeviation(kind=kind, limit=limit, max_rate=max(rates),
                                         max_deviation=max(abs(x - limit) for x in rates)))

    small = (params.g / params.kappa) ** 2 if params.kappa else float('inf')
    return LimitReport(small_parameter=small, deviations=deviations)
