from collections import namedtuple

import numpy as np

from jcells.core.errors import ConfigError

ATOMIC_FRAME = 'atomic'
BOHR_FRAME = 'bohr'
FRAMES = (ATOMIC_FRAME, BOHR_FRAME)


class SpectralLine(namedtuple('SpectralLine', ['bohr_frequency', 'rate', 'origin'])):
    __slots__ = ()

    def __new__(cls, bohr_frequency, rate, origin=''):
        assert rate >= 0, f'line {origin} has negative rate {rate}'
        return super(SpectralLine, cls).__new__(cls, float(bohr_frequency), float(rate), origin)


def frame_offset(params, frame, manifold=1):
    """Shift added to a Bohr frequency to get the line position in ``frame``.

    Lines between two excited manifolds are already centred on omega_c and are never shifted.
    """
    if frame not in FRAMES:
        raise ConfigError(f'Unknown frame "{frame}", expected one of {FRAMES}')
    if frame == BOHR_FRAME or manifold > 1:
        return 0.0
    return params.display_ground_energy


def frame_center(params, frame, manifold=1):
    """Mirror axis of the spectrum: omega_c in the atomic frame."""
    offset = frame_offset(params, frame, manifold)
    if manifold > 1:
        return params.omega_c
    return params.omega_c + offset - params.display_ground_energy


def in_frame(lines, offset):
    return [line._replace(bohr_frequency=line.bohr_frequency + offset) for line in lines]


def drop_dark(lines, threshold):
    return [line for line in lines if line.rate >= threshold and line.rate > 0]


def lines_from_report(report):
    return [SpectralLine(entry.bohr_frequency, entry.rate, entry.state_id)
            for entry in report.entries]


def line_positions(lines):
    return np.array([line.bohr_frequency for line in lines], dtype=np.float64)
