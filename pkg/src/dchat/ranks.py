"""Ranking of real scalar sequences with an explicit tie policy.

Ranks are 1-based and always form a permutation of {1, ..., L}: ties are
either rejected (the default, since tied data is outside the supported
scope) or broken uniformly at random from a caller-supplied stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import NonFiniteInput, TiesDetected

__all__ = ["TieMode", "TiePolicy", "rank_all", "sort_index_by"]


class TieMode(Enum):
    ERROR = "error"
    RANDOM_BREAK = "random"


@dataclass
class TiePolicy:
    """How exactly-equal values are handled while sorting/ranking.

    ERROR raises :class:`TiesDetected` on the first pair of bit-identical
    values. RANDOM_BREAK orders equal values uniformly at random, drawing
    from ``rng``; determinism under a fixed seed is the caller's contract.
    Equality is exact floating equality, never epsilon-based.
    """

    mode: TieMode = TieMode.ERROR
    rng: np.random.Generator | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.mode is TieMode.RANDOM_BREAK and self.rng is None:
            raise ValueError("RANDOM_BREAK policy requires a random stream")

    @classmethod
    def error(cls) -> "TiePolicy":
        return cls(TieMode.ERROR)

    @classmethod
    def random_break(cls, seed) -> "TiePolicy":
        """Build a RANDOM_BREAK policy from a seed, SeedSequence or Generator."""
        return cls(TieMode.RANDOM_BREAK, np.random.default_rng(seed))

    @property
    def breaks_ties(self) -> bool:
        return self.mode is TieMode.RANDOM_BREAK


def _as_finite_1d(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        v = v.reshape(-1)
    if not np.all(np.isfinite(v)):
        raise NonFiniteInput("values must be finite real numbers")
    return v


def has_ties(values) -> bool:
    """True if the sequence contains at least two bit-identical values."""
    v = np.asarray(values, dtype=float)
    sv = np.sort(v)
    return bool(np.any(sv[1:] == sv[:-1]))


def sort_index_by(values, policy: TiePolicy | None = None) -> np.ndarray:
    """Indices that sort ``values`` ascending.

    Under ERROR (the default) any exact duplicate raises TiesDetected.
    Under RANDOM_BREAK equal values are ordered uniformly at random.
    """
    policy = policy or TiePolicy.error()
    v = _as_finite_1d(values)
    if policy.breaks_ties:
        shuffle = policy.rng.permutation(v.size)
        return shuffle[np.argsort(v[shuffle], kind="stable")]
    order = np.argsort(v, kind="stable")
    sv = v[order]
    if np.any(sv[1:] == sv[:-1]):
        k = int(np.argmax(sv[1:] == sv[:-1]))
        raise TiesDetected(f"tied value {sv[k]!r} found; use a random tie-break policy "
                           "or deduplicate the data")
    return order


def rank_all(values, policy: TiePolicy | None = None) -> np.ndarray:
    """1-based ranks of ``values``; the result is a permutation of 1..L.

    rank[i] = 1 + number of j with values[j] < values[i], with exact ties
    resolved per ``policy``.
    """
    order = sort_index_by(values, policy)
    ranks = np.empty(order.size, dtype=np.int64)
    ranks[order] = np.arange(1, order.size + 1)
    return ranks
