"""Golden-rule decay rates evaluated directly from state amplitudes.

A one-excitation state decays to the vacuum through sigma^-_j and a_j, so the
matrix elements are just its AtomExcited(j) and PhotonIn(j) amplitudes.
"""
import numpy as np

from jcells.core.basis import basis_labels
from jcells.core.errors import BasisMismatch, ConfigError
from jcells.core.linalg import abs2
from jcells.core.params import COMMON, INDEPENDENT
from jcells.model.single import dressed_state, PLUS, MINUS


def amplitude_rate(vector, gamma_a, gamma_c, reservoir=COMMON):
    vector = np.asarray(vector, dtype=np.complex128)
    atoms, photons = vector[0::2], vector[1::2]
    gamma_a = np.asarray(gamma_a, dtype=np.float64)
    gamma_c = np.asarray(gamma_c, dtype=np.float64)

    photon_part = float(abs2(np.sum(np.sqrt(gamma_c) * photons)))
    if reservoir == COMMON:
        atom_part = float(abs2(np.sum(np.sqrt(gamma_a) * atoms)))
    elif reservoir == INDEPENDENT:
        atom_part = float(np.sum(gamma_a * abs2(atoms)))
    else:
        raise ConfigError(f'Unknown reservoir model "{reservoir}"')

    return atom_part + photon_part


def golden_rule_rates_numeric(eig, damping, reservoir=COMMON):
    damping = list(damping)
    if list(eig.basis) != basis_labels(len(damping)):
        raise BasisMismatch(f'eigensystem of dim {eig.dim} is not over the one-excitation basis '
                            f'of {len(damping)} cells')

    gamma_a = [d.gamma_a for d in damping]
    gamma_c = [d.gamma_c for d in damping]
    return [amplitude_rate(eig.vector(i), gamma_a, gamma_c, reservoir) for i in range(eig.dim)]


def _fock_state(k, n_max):
    state = np.zeros(n_max + 1, dtype=np.complex128)
    state[k] = 1.0
    return state


def _ladder_state(n, sign, theta_n, n_max):
    excited, ground = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    c_e, c_g = dressed_state(n, sign, theta_n)
    return c_e * np.kron(excited, _fock_state(n - 1, n_max)) + c_g * np.kron(ground, _fock_state(n, n_max))


def ladder_rates_numeric(n, theta_n, theta_nm1, damping):
    """Rates of the single-cell n -> n-1 transitions from explicit operator matrix elements.

    Returns a (2, 2) array indexed [from, to] with index 0 = '+', 1 = '-';
    for n = 1 the target is the ground state and the shape is (2,).
    """
    n_max = n
    sigma_minus = np.kron(np.array([[0.0, 0.0], [1.0, 0.0]]), np.eye(n_max + 1))
    annihilate = np.kron(np.eye(2), np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1))

    def _rate(initial, final):
        return (damping.gamma_a * float(abs2(np.vdot(final, sigma_minus @ initial))) +
                damping.gamma_c * float(abs2(np.vdot(final, annihilate @ initial))))

    signs = (PLUS, MINUS)
    initials = [_ladder_state(n, s, theta_n, n_max) for s in signs]
    if n == 1:
        ground = np.kron(np.array([0.0, 1.0]), _fock_state(0, n_max))
        return np.array([_rate(x, ground) for x in initials])

    finals = [_ladder_state(n - 1, s, theta_nm1, n_max) for s in signs]
    return np.array([[_rate(x, y) for y in finals] for x in initials])
