import numpy as np


class HermitianMatrix(object):
    """Dense Hermitian matrix, exactly Hermitian by construction.

    Only the upper triangle (diagonal included) of ``entries`` is read; the
    lower triangle is rebuilt as its conjugate and the diagonal made real.
    """

    def __init__(self, entries):
        m = np.array(entries, dtype=np.complex128)
        assert m.ndim == 2 and m.shape[0] == m.shape[1], 'square matrix expected'

        upper = np.triu(m, 1)
        self._entries = upper + upper.conj().T + np.diag(np.diag(m).real)
        self._entries.setflags(write=False)

    @property
    def dim(self):
        return self._entries.shape[0]

    @property
    def entries(self):
        return self._entries

    def to_array(self):
        return self._entries.copy()

    def frobenius_norm(self):
        return float(np.linalg.norm(self._entries))

    def trace(self):
        return float(np.trace(self._entries).real)

    def permuted(self, perm):
        perm = np.asarray(perm)
        return HermitianMatrix(self._entries[np.ix_(perm, perm)])

    def __repr__(self):
        return f'HermitianMatrix(dim={self.dim})'


class EigenSystem(object):
    def __init__(self, eigenvalues, eigenvectors, basis):
        self.eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
        self.eigenvectors = np.asarray(eigenvectors, dtype=np.complex128)
        self.basis = list(basis)
        assert self.eigenvectors.shape == (self.dim, self.dim)
        assert len(self.basis) == self.dim

    @property
    def dim(self):
        return self.eigenvalues.shape[0]

    def vector(self, index):
        return self.eigenvectors[:, index]

    def vectors(self):
        return [self.eigenvectors[:, i] for i in range(self.dim)]

    def degenerate_blocks(self, rel_tol=1e-9):
        return group_degenerate(self.eigenvalues, rel_tol=rel_tol)

    def projector(self, indices):
        v = self.eigenvectors[:, list(indices)]
        return v @ v.conj().T

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def group_degenerate(values, rel_tol=1e-9):
    """Split ascending ``values`` into runs whose neighbours lie within
    rel_tol * spectral span of each other."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return []

    span = float(values.max() - values.min())
    tol = rel_tol * (span if span > 0 else float(np.abs(values).max()))
    blocks = [[0]]
    for i in range(1, values.size):
        if values[i] - values[blocks[-1][-1]] <= tol:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks


def abs2(z):
    z = np.asarray(z)
    return z.real ** 2 + z.imag ** 2


def normalized(vector):
    vector = np.asarray(vector, dtype=np.complex128)
    return vector / np.linalg.norm(vector)
