import numpy as np
from scipy.linalg import orth

from jcells.core.linalg import group_degenerate


def span_projector(vectors):
    """Orthogonal projector onto the span of ``vectors`` (need not be orthonormal)."""
    basis = orth(np.column_stack([np.asarray(v, dtype=np.complex128) for v in vectors]))
    return basis @ basis.conj().T


def projector_distance(vectors_a, vectors_b):
    return float(np.linalg.norm(span_projector(vectors_a) - span_projector(vectors_b)))


def eigenspace_deviations(states, eig, rel_tol=1e-9):
    """Projector distance per degenerate block between closed-form states and ``eig``.

    ``states`` must be sorted by Bohr frequency and cover the whole spectrum.
    """
    assert len(states) == eig.dim, f'{len(states)} closed-form states for dim {eig.dim}'

    deviations = []
    for block in group_degenerate(eig.eigenvalues, rel_tol=rel_tol):
        closed = [states[i].vector() for i in block]
        numeric = [eig.vector(i) for i in block]
        deviations.append((block, projector_distance(closed, numeric)))
    return deviations


def max_eigenspace_deviation(states, eig, rel_tol=1e-9):
    return max(d for _, d in eigenspace_deviations(states, eig, rel_tol=rel_tol))


def orthonormal_states(states, rel_tol=1e-9):
    """(origin, bohr_frequency, vector) per state with every degenerate block orthonormalised.

    Blocks of one state keep their closed-form vector and id.
    """
    out = []
    for block in group_degenerate([x.bohr_frequency for x in states], rel_tol=rel_tol):
        members = [states[i] for i in block]
        if len(members) == 1:
            out.append((members[0].state_id, members[0].bohr_frequency, members[0].vector()))
            continue

        basis = orth(np.column_stack([np.asarray(x.vector(), dtype=np.complex128) for x in members]))
        assert basis.shape[1] == len(members), f'degenerate block {block} is rank deficient'
        bohr = float(np.mean([x.bohr_frequency for x in members]))
        label = '|'.join(x.state_id for x in members)
        out.extend((f'{label}#{k}', bohr, basis[:, k]) for k in range(basis.shape[1]))
    return out
