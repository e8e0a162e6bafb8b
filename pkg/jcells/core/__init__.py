from .basis import BasisLabel, basis_labels, index_of, label_of, atom_index, photon_index
from .params import (CellDamping, LatticeParams, make_params, validate,
                     COMMON, INDEPENDENT, RESERVOIR_MODELS)
from .linalg import HermitianMatrix, EigenSystem, group_degenerate, abs2
