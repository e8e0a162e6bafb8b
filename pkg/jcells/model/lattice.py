import numpy as np

from jcells.core.basis import basis_labels, atom_index, photon_index
from jcells.core.errors import ConfigError
from jcells.core.linalg import HermitianMatrix
from jcells.core.params import validate
from jcells.solver.jacobi import diagonalize
from .single import one_excitation_states
from .two_cell import two_cell_eigensystem
from .n_cell import n_cell_eigensystem

CONSTRUCTIONS = ('auto', 'two_cell', 'n_cell')


def build_hamiltonian(params):
    """One-excitation Hamiltonian relative to the ground state |0g...0g>."""
    n = params.n_cells
    h = np.zeros((2 * n, 2 * n), dtype=np.complex128)

    for cell in range(n):
        a, p = atom_index(cell), photon_index(cell)
        h[a, a] = params.omega_a
        h[p, p] = params.omega_c
        h[a, p] = params.g

        for other in range(cell + 1, n):
            h[p, photon_index(other)] = -params.kappa

    return HermitianMatrix(h)


def numeric_eigensystem(params, solver_cfg=None):
    validate(params)
    return diagonalize(build_hamiltonian(params), solver_cfg, basis=basis_labels(params.n_cells))


def closed_form_states(params, construction='auto'):
    """Closed-form one-excitation eigenstates sorted by Bohr frequency.

    ``construction`` picks the two-cell or the general N-cell formulas for
    N = 2; 'auto' uses the two-cell ones there.
    """
    validate(params)
    if construction not in CONSTRUCTIONS:
        raise ConfigError(f'Unknown construction "{construction}", expected one of {CONSTRUCTIONS}')

    if params.n_cells == 1:
        states = one_excitation_states(params)
    elif params.n_cells == 2 and construction in ('auto', 'two_cell'):
        states = two_cell_eigensystem(params)
    elif construction == 'two_cell':
        raise ConfigError(f'two-cell construction requested for {params.n_cells} cells')
    else:
        states = n_cell_eigensystem(params)

    return sorted(states, key=lambda x: x.bohr_frequency)


def level_curves(params, deltas, solver_cfg=None):
    """Display energies minus omega_c of every one-excitation level, one row per detuning."""
    rows = []
    for delta in deltas:
        point = params.replace(delta=float(delta))
        eig = numeric_eigensystem(point, solver_cfg)
        rows.append(eig.eigenvalues + point.display_ground_energy - point.omega_c)
    return np.array(rows)
