"""Randomized closed-form versus numeric oracle suite."""
import math
from collections import OrderedDict

import numpy as np

from jcells.core.errors import ConfigError
from jcells.core.params import CellDamping, make_params, COMMON, INDEPENDENT
from jcells.model.lattice import numeric_eigensystem, closed_form_states
from jcells.model.n_cell import ANTISYMMETRIC_KINDS, SYMMETRIC_KINDS
from jcells.model.rates import closed_form_rate
from jcells.model.single import doublet_to_ground_rates, inter_doublet_rates, total_rates
from jcells.solver.golden_rule import amplitude_rate, golden_rule_rates_numeric, ladder_rates_numeric
from jcells.solver.jacobi import SolverConfig
from jcells.solver.subspace import max_eigenspace_deviation
from jcells.utils.log import logger, progress
from .workflows import RunResult

DEFAULT_TOLERANCES = OrderedDict([
    ('energies', 1e-10),
    ('eigenspaces', 1e-9),
    ('rates', 1e-12),
    ('numeric_rates', 1e-12),
    ('ladder_rates', 1e-12),
    ('sum_rules', 1e-12),
    ('dark_states', 1e-12),
])

_TOLERANCE_KEYS = {
    'energies': 'ENERGY_RTOL',
    'eigenspaces': 'SUBSPACE_TOL',
    'rates': 'RATE_TOL',
    'numeric_rates': 'RATE_TOL',
    'ladder_rates': 'RATE_TOL',
    'sum_rules': 'SUM_RULE_TOL',
    'dark_states': 'DARK_TOL',
}


class DeviationTracker(object):
    def __init__(self, tolerances):
        self.tolerances = OrderedDict(tolerances)
        self.max_deviation = OrderedDict((name, 0.0) for name in self.tolerances)
        self.counts = OrderedDict((name, 0) for name in self.tolerances)

    def update(self, name, deviation):
        deviation = float(deviation)
        self.counts[name] += 1
        if not deviation <= self.max_deviation[name]:
            self.max_deviation[name] = deviation

    def passed(self, name):
        return self.max_deviation[name] <= self.tolerances[name]

    @property
    def all_passed(self):
        return all(self.passed(name) for name in self.tolerances)

    def to_dict(self):
        return OrderedDict((name, {'max_deviation': self.max_deviation[name],
                                   'tolerance': self.tolerances[name],
                                   'checks': self.counts[name],
                                   'passed': self.passed(name)}) for name in self.tolerances)


def tolerances_from_config(cfg):
    verify_cfg = cfg.get('VERIFY', dict())
    return OrderedDict((name, float(verify_cfg.get(_TOLERANCE_KEYS[name], default)))
                       for name, default in DEFAULT_TOLERANCES.items())


def random_params(rng, n_cells=None):
    n = int(n_cells) if n_cells else int(rng.integers(1, 9))
    identical = bool(rng.random() < 0.5)
    size = 1 if identical else n

    gamma_a = rng.uniform(0.001, 0.1, size=size)
    gamma_c = rng.uniform(0.001, 0.1, size=size)
    return make_params(n_cells=n,
                       omega_c=rng.uniform(0.0, 10.0),
                       delta=rng.uniform(-5.0, 5.0),
                       g=rng.uniform(0.5, 2.0),
                       kappa=rng.uniform(0.1, 3.0) if n > 1 else 0.0,
                       gamma_a=float(gamma_a[0]) if identical else gamma_a.tolist(),
                       gamma_c=float(gamma_c[0]) if identical else gamma_c.tolist(),
                       reservoir=COMMON if rng.random() < 0.5 else INDEPENDENT)


def crossing_params(n_cells, g=1.0, kappa=2.0, gamma_a=0.05, gamma_c=0.02):
    """Identical common-reservoir cells at the detunings where one closed-form branch mixes maximally."""
    points = [make_params(n_cells, delta=delta, g=g, kappa=kappa, gamma_a=gamma_a, gamma_c=gamma_c)
              for delta in (kappa, -kappa, -(n_cells - 1) * kappa)]
    return points


def check_lattice_point(params, tracker, solver_cfg):
    eig = numeric_eigensystem(params, solver_cfg)
    states = closed_form_states(params)

    bohr = np.array([x.bohr_frequency for x in states])
    scale = max(1.0, float(np.max(np.abs(eig.eigenvalues))))
    tracker.update('energies', np.max(np.abs(bohr - eig.eigenvalues)) / scale)
    tracker.update('eigenspaces', max_eigenspace_deviation(states, eig))

    rate_scale = params.n_cells * params.max_cell_rate or 1.0
    closed = np.array([closed_form_rate(x, params) for x in states])
    from_amplitudes = np.array([amplitude_rate(x.vector(), params.gamma_a, params.gamma_c, params.reservoir)
                                for x in states])
    tracker.update('rates', np.max(np.abs(closed - from_amplitudes)) / rate_scale)

    # degenerate blocks only have basis-free rates for identical cells
    if params.n_cells <= 2 or params.identical_cells:
        numeric = np.array(golden_rule_rates_numeric(eig, params.damping, params.reservoir))
        tracker.update('numeric_rates', np.max(np.abs(closed - numeric)) / rate_scale)

        if params.n_cells >= 2 and params.identical_cells and params.reservoir == COMMON:
            kinds = [x.kind for x in states]
            single_rate = params.max_cell_rate
            dark = [numeric[i] for i, k in enumerate(kinds) if k in ANTISYMMETRIC_KINDS]
            tracker.update('dark_states', max(dark) / single_rate)

            bright = [closed[i] for i, k in enumerate(kinds) if k in SYMMETRIC_KINDS]
            tracker.update('sum_rules', abs(sum(bright) - params.n_cells * single_rate) / rate_scale)


def check_ladder_point(rng, tracker):
    damping = CellDamping(rng.uniform(0.0, 0.1), rng.uniform(0.0, 0.1))
    scale = damping.gamma_a + damping.gamma_c or 1.0
    thetas = rng.uniform(0.0, 0.5 * math.pi, size=4)

    gamma_plus, gamma_minus = doublet_to_ground_rates(thetas[0], damping)
    tracker.update('sum_rules', abs(gamma_plus + gamma_minus - scale) / scale)
    numeric = ladder_rates_numeric(1, thetas[0], None, damping)
    tracker.update('ladder_rates', np.max(np.abs(numeric - [gamma_plus, gamma_minus])) / scale)

    for n in (2, 3, int(rng.integers(4, 7))):
        theta_n, theta_nm1 = thetas[1], thetas[2]
        rates = inter_doublet_rates(n, theta_n, theta_nm1, damping)
        components = np.array([[rates.gamma_pp, rates.gamma_pm], [rates.gamma_mp, rates.gamma_mm]])
        if n <= 3:
            numeric = ladder_rates_numeric(n, theta_n, theta_nm1, damping)
            tracker.update('ladder_rates', np.max(np.abs(components - numeric)) / (n * scale))

        totals = total_rates(n, theta_n, damping)
        tracker.update('ladder_rates', max(abs(rates.total_plus - totals[0]),
                                           abs(rates.total_minus - totals[1])) / (n * scale))

    # n = 1 totals reproduce the ground-state rates
    totals = total_rates(1, thetas[3], damping)
    tracker.update('ladder_rates', max(abs(a - b) for a, b in
                                       zip(totals, doublet_to_ground_rates(thetas[3], damping))) / scale)


def get_results_table(tracker):
    table_header = f'|{"Check":^15}|{"Checks":^8}|{"Max deviation":^15}|{"Tolerance":^11}|{"Status":^8}|'
    row_width = len(table_header)
    header = '-' * row_width + '\n' + table_header + '\n' + '-' * row_width

    rows = []
    for name, item in tracker.to_dict().items():
        status = 'ok' if item['passed'] else 'FAIL'
        rows.append(f'|{name:^15}|{item["checks"]:^8}|{item["max_deviation"]:^15.3e}|'
                    f'{item["tolerance"]:^11.1e}|{status:^8}|')
    return header, rows


def run_verify(cfg):
    verify_cfg = cfg.get('VERIFY', dict())
    seed = int(cfg.seed if cfg.get('seed') is not None else verify_cfg.get('SEED', 7))
    samples = int(cfg.samples if cfg.get('samples') is not None else verify_cfg.get('SAMPLES', 200))
    n_cells = cfg.get('cells')
    if n_cells is not None and int(n_cells) < 1:
        raise ConfigError(f'verify needs at least one cell, got {n_cells}')

    rng = np.random.default_rng(seed)
    solver_cfg = SolverConfig.from_config(cfg)
    tracker = DeviationTracker(tolerances_from_config(cfg))

    for _ in progress(range(samples), total=samples, desc='verify'):
        check_lattice_point(random_params(rng, n_cells), tracker, solver_cfg)
        check_ladder_point(rng, tracker)

    crossing_cells = [int(n_cells)] if n_cells else list(range(2, 9))
    for n in crossing_cells:
        if n < 2:
            continue
        for params in crossing_params(n):
            check_lattice_point(params, tracker, solver_cfg)

    header, rows = get_results_table(tracker)
    print(header)
    for row in rows:
        print(row)

    if tracker.all_passed:
        logger.info(f'All checks passed ({samples} random samples, seed {seed})')
    else:
        failed = [name for name in tracker.tolerances if not tracker.passed(name)]
        logger.warning(f'Checks failed: {", ".join(failed)}')

    document = {'seed': seed, 'samples': samples, 'cells': n_cells,
                'checks': tracker.to_dict(), 'passed': tracker.all_passed}
    return RunResult(document=document, summary={'passed': tracker.all_passed,
                                                 'max_deviation': max(tracker.max_deviation.values())},
                     table=None)
