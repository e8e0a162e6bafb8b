import numpy as np

from jcells.core.errors import NoPeaks

PAIRING_WIDTHS = 3.0


def symmetry_witness(peaks, center, gamma):
    """0 for a spectrum mirror-symmetric about ``center``, 1 if any peak lacks a mirror partner.

    A peak at center + d is paired with the peak nearest center - d, within
    PAIRING_WIDTHS probe widths; the score is the largest relative height
    mismatch over the pairs. A peak that close to ``center`` is its own mirror.
    """
    if len(peaks) == 0:
        raise NoPeaks('symmetry witness of an empty peak list')

    positions = np.array([p.position for p in peaks], dtype=np.float64)
    heights = np.array([p.height for p in peaks], dtype=np.float64)

    score = 0.0
    for i in range(len(peaks)):
        mirror = 2.0 * center - positions[i]
        j = int(np.argmin(np.abs(positions - mirror)))
        if abs(positions[j] - mirror) > PAIRING_WIDTHS * gamma:
            return 1.0

        score = max(score, abs(heights[i] - heights[j]) / (heights[i] + heights[j]))
    return float(score)
