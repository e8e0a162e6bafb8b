"""Cyclic complex Jacobi eigensolver for small dense Hermitian matrices."""
import math
from collections import namedtuple

import numpy as np

from jcells.core.errors import ConfigError, NoConvergence
from jcells.core.linalg import HermitianMatrix, EigenSystem
from jcells.utils.log import logger


class SolverConfig(namedtuple('SolverConfig', ['off_diagonal_tolerance', 'max_sweeps'])):
    """``off_diagonal_tolerance`` is relative to the Frobenius norm of the input."""
    __slots__ = ()

    def __new__(cls, off_diagonal_tolerance=1e-14, max_sweeps=64):
        if not off_diagonal_tolerance > 0:
            raise ConfigError(f'off_diagonal_tolerance must be > 0, got {off_diagonal_tolerance}')
        if int(max_sweeps) < 1:
            raise ConfigError(f'max_sweeps must be >= 1, got {max_sweeps}')
        return super(SolverConfig, cls).__new__(cls, float(off_diagonal_tolerance), int(max_sweeps))

    @classmethod
    def from_config(cls, cfg):
        solver_cfg = cfg.get('SOLVER', dict())
        return cls(off_diagonal_tolerance=solver_cfg.get('OFF_DIAGONAL_TOLERANCE', 1e-14),
                   max_sweeps=solver_cfg.get('MAX_SWEEPS', 64))


def off_diagonal_norm(a):
    a = np.asarray(a)
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def rotation(a, p, q):
    """2x2 unitary that zeroes a[p, q] under U^H A U, with rotation angle |t| <= pi/4."""
    a_pq = a[p, q]
    phase = np.exp(-1j * np.angle(a_pq))
    gap = a[q, q].real - a[p, p].real
    t = 0.5 * math.atan(2.0 * abs(a_pq) / gap) if gap != 0 else 0.25 * math.pi
    c, s = math.cos(t), math.sin(t)

    return np.array([[c, s],
                     [-s * phase, c * phase]], dtype=np.complex128)


def diagonalize(matrix, cfg=None, basis=None):
    if cfg is None:
        cfg = SolverConfig()
    if not isinstance(matrix, HermitianMatrix):
        matrix = HermitianMatrix(matrix)

    n = matrix.dim
    a = matrix.to_array()
    v = np.eye(n, dtype=np.complex128)
    tol = cfg.off_diagonal_tolerance * matrix.frobenius_norm()

    off_norm = off_diagonal_norm(a)
    sweep = 0
    while off_norm > tol:
        if sweep >= cfg.max_sweeps:
            raise NoConvergence(sweep, off_norm)

        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0:
                    continue

                u2 = rotation(a, p, q)
                pq = [p, q]
                a[:, pq] = a[:, pq] @ u2
                a[pq, :] = u2.conj().T @ a[pq, :]
                v[:, pq] = v[:, pq] @ u2

                a[p, q] = a[q, p] = 0.0
                a[p, p], a[q, q] = a[p, p].real, a[q, q].real

        sweep += 1
        off_norm = off_diagonal_norm(a)
        logger.debug(f'jacobi sweep {sweep}: off-diagonal norm {off_norm:.3e} (tol {tol:.3e})')

    eigenvalues = np.diag(a).real
    order = np.argsort(eigenvalues, kind='stable')
    eigenvalues = eigenvalues[order]
    v = fix_phases(v[:, order])

    if basis is None:
        basis = list(range(n))
    return EigenSystem(eigenvalues, v, basis)


def fix_phases(vectors):
    """Rotate each column so its largest component is real and positive."""
    vectors = vectors.copy()
    for i in range(vectors.shape[1]):
        k = int(np.argmax(np.abs(vectors[:, i])))
        pivot = vectors[k, i]
        if pivot != 0:
            vectors[:, i] *= np.conj(pivot) / abs(pivot)
            vectors[k, i] = abs(vectors[k, i])
    return vectors
