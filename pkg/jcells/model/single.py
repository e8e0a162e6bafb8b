"""Closed-form single-cell Jaynes-Cummings ladder and its radiative rates.

Dressed doublet of the n-quanta manifold::

    |+,n> =  cos(t_n)|e,n-1> + i sin(t_n)|g,n>
    |-,n> = -sin(t_n)|e,n-1> + i cos(t_n)|g,n>

with 2 t_n = atan2(2 g sqrt(n), delta), so t_n lies in [0, pi/2].
"""
import math
from collections import namedtuple

import numpy as np

from jcells.core.errors import DegenerateAngle, InvalidManifold
from jcells.spectra.lines import SpectralLine
from jcells.utils.log import logger

PLUS = 1
MINUS = -1

ROUNDOFF = 1e-12

DressedDoublet = namedtuple('DressedDoublet', ['n', 'theta_n', 'omega_plus', 'omega_minus'])

DoubletRates = namedtuple('DoubletRates', ['gamma_pp', 'gamma_pm', 'gamma_mp', 'gamma_mm',
                                           'total_plus', 'total_minus'])


def _check_manifold(n, lowest=1):
    if int(n) != n or n < lowest:
        raise InvalidManifold(f'manifold index must be an integer >= {lowest}, got {n}')


def dressed_angle(n, g, delta):
    _check_manifold(n)
    if g == 0 and delta == 0:
        raise DegenerateAngle('g = 0 and delta = 0: every basis of the doublet is an eigenbasis')

    theta = 0.5 * math.atan2(2.0 * abs(g) * math.sqrt(n), delta)
    return min(max(theta, 0.0), 0.5 * math.pi)


def ladder_energies(n, omega_c, g, delta):
    _check_manifold(n)
    splitting = math.sqrt(n * g ** 2 + 0.25 * delta ** 2)
    return n * omega_c + splitting, n * omega_c - splitting, -0.5 * delta


def dressed_doublet(n, omega_c, g, delta):
    omega_plus, omega_minus, _ = ladder_energies(n, omega_c, g, delta)
    return DressedDoublet(n=n, theta_n=dressed_angle(n, g, delta),
                          omega_plus=omega_plus, omega_minus=omega_minus)


def dressed_state(n, sign, theta_n):
    """Amplitudes of |sign,n> over (|e,n-1>, |g,n>)."""
    _check_manifold(n)
    c, s = math.cos(theta_n), math.sin(theta_n)
    if sign == PLUS:
        return np.array([c, 1j * s], dtype=np.complex128)
    elif sign == MINUS:
        return np.array([-s, 1j * c], dtype=np.complex128)
    raise ValueError(f'sign must be +1 or -1, got {sign}')


def dressed_concurrence(theta_n):
    # atom-field concurrence of either doublet state
    return abs(math.sin(2.0 * theta_n))


def clamp_rate(rate):
    assert rate >= -ROUNDOFF, f'rate {rate} is negative beyond roundoff'
    if rate < 0:
        logger.debug(f'clamping roundoff-negative rate {rate:.3e} to 0')
        return 0.0
    return rate


def doublet_to_ground_rates(theta_1, damping):
    cos2 = math.cos(theta_1) ** 2
    diff = damping.gamma_a - damping.gamma_c

    gamma_plus = damping.gamma_c + diff * cos2
    gamma_minus = damping.gamma_a - diff * cos2
    return clamp_rate(gamma_plus), clamp_rate(gamma_minus)


def inter_doublet_rates(n, theta_n, theta_nm1, damping):
    _check_manifold(n, lowest=2)
    gamma_a, gamma_c = damping

    cos2_n, sin2_n = math.cos(theta_n) ** 2, math.sin(theta_n) ** 2
    c2n, s2n = math.cos(2 * theta_n), math.sin(2 * theta_n)
    c2m, s2m = math.cos(2 * theta_nm1), math.sin(2 * theta_nm1)
    cross = 0.5 * gamma_c * math.sqrt(n * (n - 1)) * s2n * s2m

    def _atomic(sign):
        # sign = +1 for the |+,n-1> target, -1 for |-,n-1>
        return 0.5 * ((gamma_a - gamma_c) - sign * (gamma_a + gamma_c) * c2m)

    gamma_pp = _atomic(PLUS) * cos2_n + 0.5 * n * gamma_c * (1 + c2n * c2m) + cross
    gamma_pm = _atomic(MINUS) * cos2_n + 0.5 * n * gamma_c * (1 - c2n * c2m) - cross
    gamma_mp = _atomic(PLUS) * sin2_n + 0.5 * n * gamma_c * (1 - c2n * c2m) - cross
    gamma_mm = _atomic(MINUS) * sin2_n + 0.5 * n * gamma_c * (1 + c2n * c2m) + cross

    components = [clamp_rate(x) for x in (gamma_pp, gamma_pm, gamma_mp, gamma_mm)]
    return DoubletRates(*components,
                        total_plus=components[0] + components[1],
                        total_minus=components[2] + components[3])


def total_rates(n, theta_n, damping):
    """Total decay of |+,n> and |-,n> into the manifold below; n = 1 gives the ground rates."""
    _check_manifold(n)
    diff = damping.gamma_a - damping.gamma_c
    total_plus = n * damping.gamma_c + diff * math.cos(theta_n) ** 2
    total_minus = n * damping.gamma_c + diff * math.sin(theta_n) ** 2
    return clamp_rate(total_plus), clamp_rate(total_minus)


def infer_mixing(gamma_plus_1, damping):
    """cos^2(theta_1) read back from a measured |+,1> decay rate."""
    diff = damping.gamma_a - damping.gamma_c
    if diff == 0:
        raise DegenerateAngle('gamma_a == gamma_c: the rates do not depend on the mixing angle')
    return (gamma_plus_1 - damping.gamma_c) / diff


def is_maximally_mixed(theta_n, tol=1e-9):
    return abs(math.cos(theta_n) ** 2 - 0.5) <= tol


class SingleCellState(namedtuple('SingleCellState', ['sign', 'theta', 'bohr_frequency', 'energy'])):
    """One-excitation dressed state embedded in the (AtomExcited(0), PhotonIn(0)) basis."""
    __slots__ = ()

    @property
    def state_id(self):
        return f'|{"+" if self.sign == PLUS else "-"},1>'

    @property
    def kind(self):
        return 'dressed_plus' if self.sign == PLUS else 'dressed_minus'

    @property
    def display_energy(self):
        return self.energy

    def vector(self):
        # photon slot phase i of the dressed state is dropped so the vector
        # diagonalizes the real lattice Hamiltonian
        return dressed_state(1, self.sign, self.theta) * np.array([1.0, -1j])


def one_excitation_states(params):
    theta = dressed_angle(1, params.g, params.delta)
    omega_plus, omega_minus, omega_ground = ladder_energies(1, params.omega_c, params.g, params.delta)

    states = [SingleCellState(sign=MINUS, theta=theta, energy=omega_minus,
                              bohr_frequency=omega_minus - omega_ground),
              SingleCellState(sign=PLUS, theta=theta, energy=omega_plus,
                              bohr_frequency=omega_plus - omega_ground)]
    return states


def _sign_name(sign):
    return '+' if sign == PLUS else '-'


def doublet_lines(n, omega_c, g, delta, damping):
    """Probe lines of the n -> n-1 transitions; n = 1 ends on the ground state."""
    _check_manifold(n)
    upper = dressed_doublet(n, omega_c, g, delta)
    upper_levels = {PLUS: upper.omega_plus, MINUS: upper.omega_minus}

    if n == 1:
        omega_ground = ladder_energies(1, omega_c, g, delta)[2]
        gamma_plus, gamma_minus = doublet_to_ground_rates(upper.theta_n, damping)
        return [SpectralLine(upper_levels[MINUS] - omega_ground, gamma_minus, '|-,1> -> |0>'),
                SpectralLine(upper_levels[PLUS] - omega_ground, gamma_plus, '|+,1> -> |0>')]

    lower = dressed_doublet(n - 1, omega_c, g, delta)
    lower_levels = {PLUS: lower.omega_plus, MINUS: lower.omega_minus}
    rates = inter_doublet_rates(n, upper.theta_n, lower.theta_n, damping)
    by_pair = {(PLUS, PLUS): rates.gamma_pp, (PLUS, MINUS): rates.gamma_pm,
               (MINUS, PLUS): rates.gamma_mp, (MINUS, MINUS): rates.gamma_mm}

    lines = []
    for (i, j), rate in by_pair.items():
        origin = f'|{_sign_name(i)},{n}> -> |{_sign_name(j)},{n - 1}>'
        lines.append(SpectralLine(upper_levels[i] - lower_levels[j], rate, origin))
    return sorted(lines, key=lambda x: x.bohr_frequency)
