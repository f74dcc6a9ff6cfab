"""Distance-based Chatterjee correlation in both directions and causal direction inference.

The directed statistics rank the distance-transformed data, so they apply
to multivariate real and complex sample sets of possibly different
dimensions. The causal verdict follows the regression-error comparison
rule: the direction with the better predictability is inferred as cause.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .chatterjee import chatterjee_xi
from .distance import as_sample_set, distance_transform
from .errors import ShapeMismatch
from .ranks import TiePolicy

__all__ = [
    "DchResult",
    "CausalVerdict",
    "dch_y_given_x",
    "dch_x_given_y",
    "causal_deltas",
    "reci_verdict",
]


@dataclass(frozen=True)
class DchResult:
    """Both directed statistics and the causal deltas derived from them.

    delta_y_to_x is the exact negation of delta_x_to_y.
    """

    dch_y_given_x: float
    dch_x_given_y: float
    delta_x_to_y: float
    delta_y_to_x: float


class CausalVerdict(Enum):
    X_CAUSES_Y = "x_causes_y"
    Y_CAUSES_X = "y_causes_x"
    UNDETERMINED = "undetermined"


def _paired_transforms(x, y):
    sx = as_sample_set(x)
    sy = as_sample_set(y)
    if sx.n != sy.n:
        raise ShapeMismatch(f"X and Y must share the sample count, got {sx.n} and {sy.n}")
    return distance_transform(sx), distance_transform(sy)


def dch_y_given_x(x, y, policy: TiePolicy | None = None) -> float:
    """How well Y is predicted by X: the rank kernel on the two distance vectors."""
    dx, dy = _paired_transforms(x, y)
    return chatterjee_xi(dx.values, dy.values, policy).value


def dch_x_given_y(x, y, policy: TiePolicy | None = None) -> float:
    """How well X is predicted by Y: roles of the distance vectors exchanged."""
    dx, dy = _paired_transforms(x, y)
    return chatterjee_xi(dy.values, dx.values, policy).value


def causal_deltas(x, y, policy: TiePolicy | None = None) -> DchResult:
    """Both directed statistics from one pair of distance vectors, plus the deltas."""
    dx, dy = _paired_transforms(x, y)
    yx = chatterjee_xi(dx.values, dy.values, policy).value
    xy = chatterjee_xi(dy.values, dx.values, policy).value
    delta = yx - xy
    return DchResult(dch_y_given_x=yx, dch_x_given_y=xy,
                     delta_x_to_y=delta, delta_y_to_x=-delta)


def reci_verdict(result: DchResult | float) -> CausalVerdict:
    """Sign rule on delta(x -> y): positive means X causes Y, negative the reverse.

    An exact zero is undetermined; this happens for symmetric (e.g. linear)
    relations where prediction quality carries no directional information.
    Statistical significance is the permutation test's job, not this rule's.
    """
    delta = result.delta_x_to_y if isinstance(result, DchResult) else float(result)
    if delta > 0.0:
        return CausalVerdict.X_CAUSES_Y
    if delta < 0.0:
        return CausalVerdict.Y_CAUSES_X
    return CausalVerdict.UNDETERMINED
