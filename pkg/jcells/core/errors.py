class JCellsError(Exception):
    pass


class ConfigError(JCellsError, ValueError):
    pass


class NegativeRate(ConfigError):
    pass


class EmptyLattice(ConfigError):
    pass


class DampingLengthMismatch(ConfigError):
    pass


class KappaOnSingleCell(ConfigError):
    pass


class InvalidManifold(ConfigError):
    pass


class DegenerateAngle(JCellsError):
    pass


class DegenerateCell(JCellsError):
    pass


class WrongReservoirModel(JCellsError):
    pass


class NoConvergence(JCellsError):
    def __init__(self, sweeps, off_norm):
        super().__init__(f'Jacobi sweeps exhausted after {sweeps} sweeps '
                         f'(off-diagonal norm = {off_norm:.3e})')
        self.sweeps = sweeps
        self.off_norm = off_norm


class BasisMismatch(JCellsError):
    pass


class ZeroVector(JCellsError):
    pass


class EmptyLineList(JCellsError):
    pass


class NonPositiveWidth(JCellsError):
    pass


class NoPeaks(JCellsError):
    pass
