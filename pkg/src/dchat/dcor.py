"""Distance correlation (V-statistic form), the symmetric comparison baseline.

Uses the full double-centered matrices, including self-pairs, in the
biased V-statistic form. Degenerate zero-variance inputs yield 0 so that
permutation loops never abort on pathological resamples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distance import as_sample_set, double_center, pairwise_distances
from .errors import ShapeMismatch

__all__ = ["DcorStatistic", "distance_correlation"]


@dataclass(frozen=True)
class DcorStatistic:
    """Distance correlation value, in [0, 1]."""

    value: float


def dcor_from_centered(a: np.ndarray, b: np.ndarray) -> float:
    """Distance correlation from precomputed double-centered matrices."""
    dcov2 = float((a * b).mean())
    dvar_x = float((a * a).mean())
    dvar_y = float((b * b).mean())
    if dvar_x == 0.0 or dvar_y == 0.0:
        return 0.0
    r = np.sqrt(max(dcov2, 0.0)) / np.sqrt(np.sqrt(dvar_x) * np.sqrt(dvar_y))
    return float(min(r, 1.0))


def distance_correlation(x, y) -> DcorStatistic:
    """Symmetric dependence measure of the two sample sets.

    dCov^2 = (1/N^2) sum_ij A_ij B_ij over the double-centered distance
    matrices; normalized by the fourth root of the two distance variances.
    """
    sx = as_sample_set(x)
    sy = as_sample_set(y)
    if sx.n != sy.n:
        raise ShapeMismatch(f"X and Y must share the sample count, got {sx.n} and {sy.n}")
    a = double_center(pairwise_distances(sx))
    b = double_center(pairwise_distances(sy))
    return DcorStatistic(value=dcor_from_centered(a, b))
