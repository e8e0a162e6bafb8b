from collections import namedtuple

import numpy as np
from scipy import signal

Peak = namedtuple('Peak', ['position', 'height'])


def refine_peak(x, y, i):
    """Vertex of the parabola through the samples i-1, i, i+1."""
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    curvature = y0 - 2.0 * y1 + y2
    if curvature == 0:
        return Peak(float(x[i]), float(y1))

    shift = 0.5 * (y0 - y2) / curvature
    step = 0.5 * (x[i + 1] - x[i - 1])
    return Peak(position=float(x[i] + shift * step),
                height=float(y1 - 0.25 * (y0 - y2) * shift))


def find_peaks(samples):
    x = np.asarray(samples.grid, dtype=np.float64)
    y = np.asarray(samples.values, dtype=np.float64)
    if y.size < 3:
        return []

    indices, _ = signal.find_peaks(y)
    peaks = [refine_peak(x, y, int(i)) for i in indices]
    return sorted(peaks, key=lambda p: p.position)
