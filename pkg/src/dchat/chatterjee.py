"""The bivariate rank correlation of Chatterjee (2021) for real scalar pairs.

This is the computational kernel reused by the distance-based variant:
sort the pairs by the predictor, rank the reordered response, and measure
the total variation of consecutive ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch
from .ranks import TiePolicy, rank_all, sort_index_by

__all__ = ["XiStatistic", "chatterjee_xi"]


@dataclass(frozen=True)
class XiStatistic:
    """Value of the rank correlation plus the number of pairs it used."""

    value: float
    n_pairs: int

    @property
    def max_attainable(self) -> float:
        """Largest value reachable at this sample size, 1 - 3/(n+1)."""
        return 1.0 - 3.0 / (self.n_pairs + 1.0)


def chatterjee_xi(x, y, policy: TiePolicy | None = None) -> XiStatistic:
    """Rank correlation for "y as a function of x"; asymmetric in (x, y).

    Pairs are sorted by x, the reordered y values are ranked, and the
    statistic is 1 - 3 * sum|r_{k+1} - r_k| / (L^2 - 1). Rank differences
    are summed in integer arithmetic and divided once at the end.

    :param x: predictor sample (1-D, finite, no exact ties under the
        default policy)
    :param y: response sample, same length
    :param policy: tie policy for both the x-sort and the y-ranking
    :return: XiStatistic with the value and the pair count
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatch(f"x and y must be equal-length 1-D sequences, "
                             f"got {x.shape} and {y.shape}")
    n = x.size
    if n < 2:
        raise LengthMismatch("need at least two pairs")
    order = sort_index_by(x, policy)
    r = rank_all(y[order], policy)
    s = int(np.abs(np.diff(r)).sum())
    return XiStatistic(value=1.0 - 3.0 * s / (n * n - 1.0), n_pairs=n)
