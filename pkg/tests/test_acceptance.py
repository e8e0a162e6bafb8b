"""End-to-end checks of the published regimes: oracle agreement, dark and
superradiant states, and the reference spectra."""
import math

import numpy as np
import pytest

from jcells.cli import run, EXIT_OK
from jcells.core.params import CellDamping, make_params, INDEPENDENT
from jcells.engine.verify import DeviationTracker, DEFAULT_TOLERANCES, crossing_params, check_lattice_point, run_verify
from jcells.engine.workflows import run_spectrum, run_rates
from jcells.model.lattice import numeric_eigensystem, closed_form_states
from jcells.model.n_cell import ANTISYMMETRIC_KINDS, ANTISYMMETRIC_UPPER, SYMMETRIC_KINDS
from jcells.model.rates import transition_rates
from jcells.model.single import doublet_to_ground_rates
from jcells.solver.golden_rule import golden_rule_rates_numeric
from jcells.solver.jacobi import SolverConfig
from jcells.utils.exp import THREADS_ENV

GAMMA_A, GAMMA_C = 0.05, 0.02


def spectrum(make_cfg, **overrides):
    return run_spectrum(make_cfg(**overrides)).document


def grid_step(document, points=4001):
    positions = [line['position'] for line in document['lines']]
    half_width = 2.0 * max(abs(x - document['center']) for x in positions) + 10.0 * document['probe_width']
    return 2.0 * half_width / (points - 1)


def test_oracle_equivalence(make_cfg):
    result = run_verify(make_cfg(cells=None, samples=200, seed=7))
    assert result.document['passed']
    checks = result.document['checks']
    assert checks['energies']['max_deviation'] <= 1e-10
    assert checks['rates']['max_deviation'] <= 1e-12
    assert checks['numeric_rates']['checks'] > 0


@pytest.mark.parametrize('n_cells', range(2, 11))
def test_dark_states_are_exact(n_cells, rng):
    for _ in range(50):
        params = make_params(n_cells, g=rng.uniform(0.5, 2.0), kappa=rng.uniform(0.1, 3.0),
                             delta=rng.uniform(-5.0, 5.0), gamma_a=GAMMA_A, gamma_c=GAMMA_C)
        eig = numeric_eigensystem(params)
        rates = golden_rule_rates_numeric(eig, params.damping)
        kinds = [x.kind for x in closed_form_states(params)]
        dark = [rate for rate, kind in zip(rates, kinds) if kind in ANTISYMMETRIC_KINDS]
        assert len(dark) == 2 * n_cells - 2
        assert max(dark) < 1e-12 * (GAMMA_A + GAMMA_C)


def test_superradiant_pair(make_cfg):
    document = run_rates(make_cfg(cells=10, g=1.0, kappa=2.0, delta=-18.0)).document
    bright = [x for x in document['states'] if x['kind'] in SYMMETRIC_KINDS]
    assert [x['rate'] for x in bright] == pytest.approx([0.35, 0.35], abs=1e-12)
    assert document['counts'] == {'superradiant': 2, 'subradiant': 0, 'dark': 18}


class TestSingleCellSpectrum:
    def test_resonance_is_symmetric(self, make_cfg):
        document = spectrum(make_cfg, cells=1, delta=0.0, gamma=0.01)
        peaks = document['peaks']
        assert len(peaks) == 2
        assert document['symmetry_witness'] < 1e-3
        assert peaks[0]['height'] == pytest.approx(peaks[1]['height'], rel=1e-3)
        step = grid_step(document)
        assert sorted(p['omega_c_minus_omega_p'] for p in peaks) == pytest.approx([-1.0, 1.0], abs=step)

    def test_large_detuning_is_asymmetric(self, make_cfg):
        assert spectrum(make_cfg, cells=1, delta=10.0, gamma=0.01)['symmetry_witness'] > 0.3


class TestTwoCellSpectrum:
    def test_maximal_mixing_is_symmetric(self, make_cfg):
        document = spectrum(make_cfg, cells=2, kappa=2.0, delta=-2.0, gamma=0.01)
        assert len(document['peaks']) == 2
        assert document['symmetry_witness'] < 0.01

    def test_large_detuning_is_asymmetric(self, make_cfg):
        assert spectrum(make_cfg, cells=2, kappa=2.0, delta=10.0, gamma=0.01)['symmetry_witness'] > 0.1

    def test_unequal_damping(self, make_cfg):
        document = spectrum(make_cfg, cells=2, kappa=4.0, delta=0.0, gamma=0.05,
                            gamma_a=[0.01, 0.2], gamma_c=[0.2, 0.05])
        peaks = document['peaks']
        assert len(peaks) == 4
        tallest = sorted(peaks, key=lambda p: p['height'])[2:]
        assert sorted(p['position'] for p in tallest) == pytest.approx([-2 - math.sqrt(5), math.sqrt(5) - 2], abs=0.01)


def test_ten_cell_spectrum(make_cfg):
    document = spectrum(make_cfg, cells=10, g=1.0, kappa=2.0, delta=-18.0, gamma=0.01)
    peaks = document['peaks']
    assert len(document['lines']) == 2
    assert len(peaks) == 2
    assert peaks[0]['height'] == pytest.approx(peaks[1]['height'], rel=1e-3)
    step = grid_step(document)
    assert sorted(p['omega_c_minus_omega_p'] for p in peaks) == pytest.approx([-1.0, 1.0], abs=step)


@pytest.mark.parametrize('n_cells', range(2, 9))
def test_crossing_points(n_cells):
    tracker = DeviationTracker(DEFAULT_TOLERANCES)
    for params in crossing_params(n_cells):
        check_lattice_point(params, tracker, SolverConfig())
    assert tracker.passed('eigenspaces')
    assert tracker.passed('energies')
    assert tracker.all_passed


def test_strong_coupling_scaling():
    kappas = np.array([10.0, 100.0, 1000.0])
    upper = []
    for kappa in kappas:
        params = make_params(4, g=1.0, kappa=kappa, gamma_a=GAMMA_A, gamma_c=GAMMA_C, reservoir=INDEPENDENT)
        report = transition_rates(closed_form_states(params), params)
        upper.append(max(x.rate for x in report.by_kind(ANTISYMMETRIC_UPPER)))
    assert np.all(np.diff(upper) < 0)
    slope = np.polyfit(np.log(kappas), np.log(upper), 1)[0]
    assert slope == pytest.approx(-2.0, abs=0.2)


def test_sum_rules(rng):
    for _ in range(100):
        damping = CellDamping(*rng.uniform(0.0, 0.1, size=2))
        gamma_plus, gamma_minus = doublet_to_ground_rates(rng.uniform(0.0, 0.5 * math.pi), damping)
        assert abs(gamma_plus + gamma_minus - sum(damping)) <= 1e-12 * max(sum(damping), 1e-300)

        n_cells = int(rng.integers(2, 9))
        params = make_params(n_cells, g=rng.uniform(0.5, 2.0), kappa=rng.uniform(0.1, 3.0),
                             delta=rng.uniform(-5.0, 5.0), gamma_a=damping.gamma_a, gamma_c=damping.gamma_c)
        report = transition_rates(closed_form_states(params), params)
        bright = sum(x.rate for x in report if x.kind in SYMMETRIC_KINDS)
        assert abs(bright - n_cells * sum(damping)) <= 1e-12 * max(n_cells * sum(damping), 1e-300)


def test_threads_are_deterministic(tmp_path, monkeypatch):
    outputs = []
    for threads in ('1', '8'):
        monkeypatch.setenv(THREADS_ENV, threads)
        path = tmp_path / threads
        assert run(['spectrum', '--cells', '10', '--kappa', '2', '--delta', '-18', '--gamma', '0.01',
                    '--output', str(path)]) == EXIT_OK
        outputs.append((path / 'spectrum.csv').read_bytes())
    assert outputs[0] == outputs[1]
