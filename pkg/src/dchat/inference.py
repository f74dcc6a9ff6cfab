"""Synchronized random-permutation tests for prediction and causal direction.

One random permutation of sample indices per draw is used twice: once to
reorder the Y samples (null for "Y predicted by X") and once to reorder
the X samples (null for "X predicted by Y"). The distance matrices are
centered once; each permutation acts by index remapping of the flattened
distance vector, O(M) per draw, never recomputing distances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chatterjee import chatterjee_xi
from .dcor import dcor_from_centered
from .distance import (as_sample_set, check_permutation, double_center,
                       flat_permutation, pairwise_distances)
from .errors import EmptyNull, InvalidK, LengthMismatch, NonFiniteInput, ShapeMismatch
from .ranks import TiePolicy, has_ties

__all__ = [
    "AssociationReport",
    "XiReport",
    "pvalue",
    "permuted_centered",
    "synchronized_test",
    "synchronized_xi_test",
]


@dataclass(frozen=True)
class AssociationReport:
    """Observed directed statistics plus permutation p-values, one per hypothesis.

    Every p-value is an integer multiple of 1/K (or of 1/(K+1) when the
    plus-one correction is requested). The delta null samples are exact
    negations of each other, so p_delta_x_to_y + p_delta_y_to_x >= 1.
    """

    dch_y_given_x: float
    dch_x_given_y: float
    delta_x_to_y: float
    delta_y_to_x: float
    dcor: float
    p_dch_y_given_x: float
    p_dch_x_given_y: float
    p_delta_x_to_y: float
    p_delta_y_to_x: float
    p_dcor: float
    n_permutations: int
    seed: object = field(default=None, compare=False)


@dataclass(frozen=True)
class XiReport:
    """Same test layout for the original bivariate rank correlation on raw data."""

    xi_y_given_x: float
    xi_x_given_y: float
    delta_x_to_y: float
    delta_y_to_x: float
    p_xi_y_given_x: float
    p_xi_x_given_y: float
    p_delta_x_to_y: float
    p_delta_y_to_x: float
    n_permutations: int
    seed: object = field(default=None, compare=False)


def pvalue(s0: float, null_samples, plus_one: bool = False) -> float:
    """Right-tail permutation p-value: fraction of null draws >= the observed value.

    Equality counts toward the null (Ind(s0 <= s_k)), so p = 0 is possible.
    ``plus_one`` switches to the (count+1)/(K+1) correction for users who
    need strictly positive p-values.
    """
    nulls = np.asarray(null_samples, dtype=float)
    if nulls.size == 0:
        raise EmptyNull("need at least one null sample")
    count = int(np.count_nonzero(s0 <= nulls))
    if plus_one:
        return (count + 1) / (nulls.size + 1)
    return count / nulls.size


def permuted_centered(b: np.ndarray, perm) -> np.ndarray:
    """Relabel samples of a double-centered matrix: entry (i, j) -> B[perm i, perm j].

    Centering commutes with sample relabeling (H P = P H), so this equals
    recomputing distances plus centering on the permuted sample set, at
    O(N^2) instead of O(N^2 d).
    """
    b = np.asarray(b, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {b.shape}")
    perm = check_permutation(perm, b.shape[0])
    return b[np.ix_(perm, perm)]


def _as_seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def _overall_rank(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sort order, 1-based ranks) of a tie-free vector."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=np.int64)
    ranks[order] = np.arange(1, values.size + 1)
    return order, ranks


def _xi_from_ranks(rank_sequence: np.ndarray, denom: float) -> float:
    s = int(np.abs(np.diff(rank_sequence)).sum())
    return 1.0 - 3.0 * s / denom


def _flat_dcor(cross_mean: float, dvar_x: float, dvar_y: float) -> float:
    if dvar_x == 0.0 or dvar_y == 0.0:
        return 0.0
    r = np.sqrt(max(cross_mean, 0.0)) / np.sqrt(np.sqrt(dvar_x) * np.sqrt(dvar_y))
    return float(min(r, 1.0))


def synchronized_test(x, y, n_permutations: int, seed=0,
                      policy: TiePolicy | None = None,
                      plus_one: bool = False) -> AssociationReport:
    """Permutation test of the four directed hypotheses plus distance correlation.

    :param x: predictor sample set (N x p, real or complex)
    :param y: response sample set (N x q)
    :param n_permutations: K, the number of synchronized permutations
    :param seed: int or SeedSequence; permutation k draws from a stream
        derived from (seed, k), so results are independent of scheduling
    :param policy: tie policy for the observed statistics (default: error
        on ties). Inside the permutation loop ties are always broken
        randomly from the per-permutation stream, since aborting mid-test
        on a pathological resample is unacceptable.
    :param plus_one: report (count+1)/(K+1) p-values instead of count/K
    """
    sx = as_sample_set(x)
    sy = as_sample_set(y)
    if sx.n != sy.n:
        raise ShapeMismatch(f"X and Y must share the sample count, got {sx.n} and {sy.n}")
    if sx.n < 3:
        raise ShapeMismatch("synchronized test needs at least 3 samples")
    if int(n_permutations) != n_permutations or n_permutations < 1:
        raise InvalidK(f"permutation count must be a positive integer, got {n_permutations}")
    k_total = int(n_permutations)
    n = sx.n

    a = double_center(pairwise_distances(sx))
    b = double_center(pairwise_distances(sy))
    iu, ju = np.triu_indices(n)
    dx = a[iu, ju]
    dy = b[iu, ju]
    m = dx.size
    denom = float(m) * m - 1.0

    obs_yx = chatterjee_xi(dx, dy, policy).value
    obs_xy = chatterjee_xi(dy, dx, policy).value
    obs_delta = obs_yx - obs_xy

    # V-statistic pieces on the flattened triangle: off-diagonal entries
    # appear twice in the full double sum, diagonal entries once.
    weights = np.where(iu == ju, 1.0, 2.0)
    n2 = float(n) * n
    dvar_x = float((weights * dx * dx).sum() / n2)
    dvar_y = float((weights * dy * dy).sum() / n2)
    wdx = weights * dx
    obs_dcor = _flat_dcor(float((wdx * dy).sum() / n2), dvar_x, dvar_y)

    null_yx = np.empty(k_total)
    null_xy = np.empty(k_total)
    null_dcor = np.empty(k_total)
    children = _as_seed_sequence(seed).spawn(k_total)

    tie_free = not (has_ties(dx) or has_ties(dy))
    if tie_free:
        order_x, rank_x = _overall_rank(dx)
        order_y, rank_y = _overall_rank(dy)
        for k in range(k_total):
            rng = np.random.default_rng(children[k])
            sigma = flat_permutation(rng.permutation(n), n)
            null_yx[k] = _xi_from_ranks(rank_y[sigma[order_x]], denom)
            null_xy[k] = _xi_from_ranks(rank_x[sigma[order_y]], denom)
            null_dcor[k] = _flat_dcor(float((wdx * dy[sigma]).sum() / n2),
                                      dvar_x, dvar_y)
    else:
        for k in range(k_total):
            rng = np.random.default_rng(children[k])
            sigma = flat_permutation(rng.permutation(n), n)
            loop_policy = TiePolicy.random_break(rng)
            null_yx[k] = chatterjee_xi(dx, dy[sigma], loop_policy).value
            null_xy[k] = chatterjee_xi(dy, dx[sigma], loop_policy).value
            null_dcor[k] = _flat_dcor(float((wdx * dy[sigma]).sum() / n2),
                                      dvar_x, dvar_y)

    null_delta = null_yx - null_xy
    return AssociationReport(
        dch_y_given_x=obs_yx,
        dch_x_given_y=obs_xy,
        delta_x_to_y=obs_delta,
        delta_y_to_x=-obs_delta,
        dcor=obs_dcor,
        p_dch_y_given_x=pvalue(obs_yx, null_yx, plus_one),
        p_dch_x_given_y=pvalue(obs_xy, null_xy, plus_one),
        p_delta_x_to_y=pvalue(obs_delta, null_delta, plus_one),
        p_delta_y_to_x=pvalue(-obs_delta, -null_delta, plus_one),
        p_dcor=pvalue(obs_dcor, null_dcor, plus_one),
        n_permutations=k_total,
        seed=seed,
    )


def synchronized_xi_test(x, y, n_permutations: int, seed=0,
                         policy: TiePolicy | None = None,
                         plus_one: bool = False) -> XiReport:
    """The same synchronized procedure on raw bivariate real data.

    Applies the original rank correlation directly to the data instead of
    its distance transform; only meaningful for two real scalar variables.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatch(f"x and y must be equal-length 1-D sequences, "
                             f"got {x.shape} and {y.shape}")
    n = x.size
    if n < 3:
        raise ShapeMismatch("synchronized test needs at least 3 samples")
    if int(n_permutations) != n_permutations or n_permutations < 1:
        raise InvalidK(f"permutation count must be a positive integer, got {n_permutations}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NonFiniteInput("values must be finite real numbers")
    k_total = int(n_permutations)
    denom = float(n) * n - 1.0

    obs_yx = chatterjee_xi(x, y, policy).value
    obs_xy = chatterjee_xi(y, x, policy).value
    obs_delta = obs_yx - obs_xy

    null_yx = np.empty(k_total)
    null_xy = np.empty(k_total)
    children = _as_seed_sequence(seed).spawn(k_total)

    tie_free = not (has_ties(x) or has_ties(y))
    if tie_free:
        order_x, rank_x = _overall_rank(x)
        order_y, rank_y = _overall_rank(y)
        for k in range(k_total):
            rng = np.random.default_rng(children[k])
            pi = rng.permutation(n)
            null_yx[k] = _xi_from_ranks(rank_y[pi[order_x]], denom)
            null_xy[k] = _xi_from_ranks(rank_x[pi[order_y]], denom)
    else:
        for k in range(k_total):
            rng = np.random.default_rng(children[k])
            pi = rng.permutation(n)
            loop_policy = TiePolicy.random_break(rng)
            null_yx[k] = chatterjee_xi(x, y[pi], loop_policy).value
            null_xy[k] = chatterjee_xi(y, x[pi], loop_policy).value

    null_delta = null_yx - null_xy
    return XiReport(
        xi_y_given_x=obs_yx,
        xi_x_given_y=obs_xy,
        delta_x_to_y=obs_delta,
        delta_y_to_x=-obs_delta,
        p_xi_y_given_x=pvalue(obs_yx, null_yx, plus_one),
        p_xi_x_given_y=pvalue(obs_xy, null_xy, plus_one),
        p_delta_x_to_y=pvalue(obs_delta, null_delta, plus_one),
        p_delta_y_to_x=pvalue(-obs_delta, -null_delta, plus_one),
        n_permutations=k_total,
        seed=seed,
    )
