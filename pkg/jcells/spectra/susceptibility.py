from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from jcells.core.errors import ConfigError, EmptyLineList, NonPositiveWidth
from jcells.utils.log import logger
from .lines import line_positions

OVERLAP_WIDTHS = 5.0

SpectrumSamples = namedtuple('SpectrumSamples', ['grid', 'values', 'probe_width'])


def make_grid(wmin, wmax, points):
    if int(points) < 3:
        raise ConfigError(f'a spectrum grid needs at least 3 points, got {points}')
    if not wmax > wmin:
        raise ConfigError(f'empty probe window [{wmin}, {wmax}]')
    return np.linspace(wmin, wmax, int(points))


def default_grid(lines, gamma, center, points=4001, margin_widths=10.0):
    """Uniform grid centered on ``center`` wide enough for every line plus a margin of widths."""
    _check_inputs(lines, gamma)
    half_width = 2.0 * float(np.max(np.abs(line_positions(lines) - center))) + margin_widths * gamma
    return make_grid(center - half_width, center + half_width, points)


def _check_inputs(lines, gamma):
    if len(lines) == 0:
        raise EmptyLineList('no spectral lines to synthesize')
    if not gamma > 0:
        raise NonPositiveWidth(f'probe width must be > 0, got {gamma}')


def warn_overlaps(lines, gamma):
    positions = np.sort(line_positions(lines))
    gaps = np.diff(positions)
    close = gaps[(gaps > 0) & (gaps < OVERLAP_WIDTHS * gamma)]
    if close.size:
        logger.warning(f'{close.size} pair(s) of lines closer than {OVERLAP_WIDTHS:g} probe widths '
                       f'(min gap {close.min():.3e}); peaks may not be resolved')


def lorentzian_sum(lines, gamma, grid):
    values = np.zeros_like(grid, dtype=np.float64)
    for line in lines:
        values += gamma * line.rate / ((line.bohr_frequency - grid) ** 2 + gamma ** 2)
    return values


def susceptibility(lines, gamma, grid, threads=1):
    """Im chi on ``grid``: a sum of Lorentzians of width ``gamma`` weighted by line rates."""
    _check_inputs(lines, gamma)
    grid = np.asarray(grid, dtype=np.float64)
    assert grid.ndim == 1 and np.all(np.diff(grid) > 0), 'grid must be strictly increasing'

    warn_overlaps(lines, gamma)

    if threads <= 1 or grid.size < 2 * threads:
        values = lorentzian_sum(lines, gamma, grid)
    else:
        chunks = np.array_split(grid, threads)
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(lambda x: lorentzian_sum(lines, gamma, x), chunks))
        values = np.concatenate(parts)

    return SpectrumSamples(grid=grid, values=values, probe_width=float(gamma))
