import math

import numpy as np
import pytest

from jcells.core.errors import DegenerateAngle, InvalidManifold
from jcells.core.params import CellDamping, make_params
from jcells.model.lattice import build_hamiltonian
from jcells.model.single import (PLUS, MINUS, dressed_angle, ladder_energies, dressed_state, dressed_concurrence,
                                 doublet_to_ground_rates, inter_doublet_rates, total_rates, infer_mixing,
                                 is_maximally_mixed, one_excitation_states, doublet_lines)
from jcells.solver.golden_rule import ladder_rates_numeric

DAMPING = CellDamping(gamma_a=0.05, gamma_c=0.02)


class TestDressedStates:
    def test_resonant_angle(self):
        assert dressed_angle(1, 1.0, 0.0) == pytest.approx(math.pi / 4)
        assert is_maximally_mixed(dressed_angle(3, 0.7, 0.0))
        assert dressed_concurrence(math.pi / 4) == pytest.approx(1.0)

    def test_bare_limits(self):
        assert math.cos(dressed_angle(1, 1.0, 1e6)) ** 2 == pytest.approx(1.0)
        assert math.cos(dressed_angle(1, 1.0, -1e6)) ** 2 == pytest.approx(0.0, abs=1e-9)
        assert 0.0 <= dressed_angle(1, 1.0, -3.0) <= 0.5 * math.pi

    def test_degenerate_angle(self):
        with pytest.raises(DegenerateAngle):
            dressed_angle(1, 0.0, 0.0)

    @pytest.mark.parametrize('n', [0, -1, 1.5])
    def test_invalid_manifold(self, n):
        with pytest.raises(InvalidManifold):
            dressed_angle(n, 1.0, 0.0)

    def test_vacuum_rabi_splitting(self):
        omega_plus, omega_minus, omega_ground = ladder_energies(1, 0.0, 1.0, 0.0)
        assert omega_plus - omega_minus == pytest.approx(2.0)
        assert omega_ground == 0.0

        omega_plus, omega_minus, _ = ladder_energies(4, 2.0, 0.5, 0.0)
        assert omega_plus == pytest.approx(8.0 + 1.0)
        assert omega_minus == pytest.approx(8.0 - 1.0)

    @pytest.mark.parametrize('theta', [0.0, 0.3, math.pi / 4, 1.2])
    def test_doublet_is_orthonormal(self, theta):
        plus, minus = dressed_state(2, PLUS, theta), dressed_state(2, MINUS, theta)
        assert np.isclose(np.vdot(plus, plus), 1.0)
        assert np.isclose(np.vdot(minus, minus), 1.0)
        assert abs(np.vdot(plus, minus)) < 1e-15

    @pytest.mark.parametrize('delta', [-2.0, 0.0, 0.5, 10.0])
    def test_one_excitation_states_diagonalize_the_cell(self, delta):
        params = make_params(1, omega_c=1.5, delta=delta, g=1.0)
        h = build_hamiltonian(params).entries
        for state in one_excitation_states(params):
            v = state.vector()
            assert np.allclose(h @ v, state.bohr_frequency * v, atol=1e-12)

        minus, plus = one_excitation_states(params)
        assert minus.bohr_frequency < plus.bohr_frequency
        assert plus.state_id == '|+,1>' and minus.kind == 'dressed_minus'


class TestDoubletRates:
    def test_resonant_rates_are_equal(self):
        gamma_plus, gamma_minus = doublet_to_ground_rates(math.pi / 4, DAMPING)
        assert gamma_plus == pytest.approx(0.035)
        assert gamma_minus == pytest.approx(0.035)

    def test_equal_rates_only_at_maximal_mixing(self, rng):
        thetas = np.concatenate([rng.uniform(0.0, 0.5 * math.pi, size=200),
                                 [math.pi / 4, math.pi / 4 + 1e-6, math.pi / 4 - 1e-6]])
        for theta in thetas:
            gamma_plus, gamma_minus = doublet_to_ground_rates(theta, DAMPING)
            equal = abs(gamma_plus - gamma_minus) <= 1e-9 * (gamma_plus + gamma_minus)
            maximal = abs(math.cos(theta) ** 2 - 0.5) <= 1e-9
            assert equal == maximal

    def test_equal_channels_decay_at_gamma(self):
        damping = CellDamping(0.03, 0.03)
        for theta in (0.1, 0.7, 1.3):
            assert np.allclose(doublet_to_ground_rates(theta, damping), 0.03, rtol=1e-14)

    def test_ground_sum_rule(self, rng):
        for theta in rng.uniform(0.0, 0.5 * math.pi, size=50):
            damping = CellDamping(*rng.uniform(0.0, 0.1, size=2))
            gamma_plus, gamma_minus = doublet_to_ground_rates(theta, damping)
            assert abs(gamma_plus + gamma_minus - sum(damping)) <= 1e-12 * sum(damping)

    def test_infer_mixing(self):
        theta = dressed_angle(1, 1.0, 3.0)
        gamma_plus, _ = doublet_to_ground_rates(theta, DAMPING)
        assert infer_mixing(gamma_plus, DAMPING) == pytest.approx(math.cos(theta) ** 2)
        with pytest.raises(DegenerateAngle):
            infer_mixing(0.02, CellDamping(0.02, 0.02))

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_inter_doublet_rates_match_operator_elements(self, n, rng):
        for _ in range(10):
            theta_n, theta_nm1 = rng.uniform(0.0, 0.5 * math.pi, size=2)
            damping = CellDamping(*rng.uniform(0.0, 0.1, size=2))
            rates = inter_doublet_rates(n, theta_n, theta_nm1, damping)
            numeric = ladder_rates_numeric(n, theta_n, theta_nm1, damping)
            closed = [[rates.gamma_pp, rates.gamma_pm], [rates.gamma_mp, rates.gamma_mm]]
            assert np.allclose(closed, numeric, rtol=0, atol=1e-14)

    def test_ground_rates_match_operator_elements(self, rng):
        theta = rng.uniform(0.0, 0.5 * math.pi)
        numeric = ladder_rates_numeric(1, theta, None, DAMPING)
        assert np.allclose(doublet_to_ground_rates(theta, DAMPING), numeric, rtol=0, atol=1e-15)

    @pytest.mark.parametrize('n', [1, 2, 5])
    def test_totals(self, n):
        theta_n = dressed_angle(n, 1.0, 0.8)
        totals = total_rates(n, theta_n, DAMPING)
        assert sum(totals) == pytest.approx(DAMPING.gamma_a - DAMPING.gamma_c + 2 * n * DAMPING.gamma_c)
        if n > 1:
            rates = inter_doublet_rates(n, theta_n, dressed_angle(n - 1, 1.0, 0.8), DAMPING)
            assert rates.total_plus == pytest.approx(totals[0], rel=1e-12)
            assert rates.total_minus == pytest.approx(totals[1], rel=1e-12)

    def test_first_doublet_needs_a_lower_doublet(self):
        with pytest.raises(InvalidManifold):
            inter_doublet_rates(1, 0.3, 0.3, DAMPING)


class TestDoubletLines:
    def test_ground_lines(self):
        lines = doublet_lines(1, 0.0, 1.0, 0.0, DAMPING)
        assert [x.bohr_frequency for x in lines] == pytest.approx([-1.0, 1.0])
        assert [x.rate for x in lines] == pytest.approx([0.035, 0.035])
        assert lines[0].origin == '|-,1> -> |0>'

    def test_second_manifold(self):
        lines = doublet_lines(2, 0.0, 1.0, 0.0, DAMPING)
        assert len(lines) == 4
        positions = [x.bohr_frequency for x in lines]
        assert positions == sorted(positions)
        assert positions == pytest.approx([-math.sqrt(2) - 1, 1 - math.sqrt(2),
                                           math.sqrt(2) - 1, math.sqrt(2) + 1])
        assert sum(x.rate for x in lines) == pytest.approx(DAMPING.gamma_a + 3 * DAMPING.gamma_c)
        assert {x.origin for x in lines} == {'|+,2> -> |+,1>', '|+,2> -> |-,1>',
                                             '|-,2> -> |+,1>', '|-,2> -> |-,1>'}
