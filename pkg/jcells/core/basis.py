from collections import namedtuple

ATOM = 'atom'
PHOTON = 'photon'

BasisLabel = namedtuple('BasisLabel', ['kind', 'cell'])


def atom_excited(cell):
    return BasisLabel(kind=ATOM, cell=cell)


def photon_in(cell):
    return BasisLabel(kind=PHOTON, cell=cell)


def basis_labels(n_cells):
    # cell-major, atom before photon: |e_0>, |1_0>, |e_1>, |1_1>, ...
    labels = []
    for cell in range(n_cells):
        labels.append(atom_excited(cell))
        labels.append(photon_in(cell))
    return labels


def index_of(label):
    offset = 0 if label.kind == ATOM else 1
    return 2 * label.cell + offset


def label_of(index):
    cell, offset = divmod(index, 2)
    return atom_excited(cell) if offset == 0 else photon_in(cell)


def atom_index(cell):
    return 2 * cell


def photon_index(cell):
    return 2 * cell + 1


def label_name(label):
    if label.kind == ATOM:
        return f'AtomExcited({label.cell})'
    return f'PhotonIn({label.cell})'
