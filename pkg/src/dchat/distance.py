"""Distance transform: pairwise norms, double centering, upper-triangle flattening.

Maps N vector samples (real or complex, any dimension) to M = N(N+1)/2
real scalars. The flattening deliberately includes the diagonal of the
double-centered matrix; do not "fix" this to the more common
distance-correlation convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadPermutation, NonFiniteInput, ShapeMismatch

__all__ = [
    "SampleSet",
    "PairedData",
    "DistanceVector",
    "pairwise_distances",
    "double_center",
    "flatten_upper",
    "distance_transform",
    "flat_index",
    "flat_pair",
    "flat_permutation",
]


@dataclass
class SampleSet:
    """N samples of d-dimensional complex vectors; real data has zero imaginary part.

    ``data`` is coerced to a complex (N, d) array. Requires N >= 2, d >= 1
    and finite entries.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2:
            raise ShapeMismatch(f"sample data must be 1-D or 2-D, got shape {arr.shape}")
        arr = arr.astype(np.complex128, copy=False)
        if arr.shape[0] < 2 or arr.shape[1] < 1:
            raise ShapeMismatch(f"need N >= 2 samples of dimension >= 1, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteInput("sample data must be finite")
        self.data = arr

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.data.imag == 0.0))

    def real_values(self) -> np.ndarray:
        """The real part as an (N, d) float array (valid only when is_real)."""
        return self.data.real.copy()


def as_sample_set(x) -> SampleSet:
    return x if isinstance(x, SampleSet) else SampleSet(x)


@dataclass
class PairedData:
    """Aligned sample sets (X: N x p, Y: N x q) sharing the sample index."""

    x: SampleSet
    y: SampleSet

    def __post_init__(self):
        self.x = as_sample_set(self.x)
        self.y = as_sample_set(self.y)
        if self.x.n != self.y.n:
            raise ShapeMismatch(f"X and Y must share the sample count, "
                                f"got {self.x.n} and {self.y.n}")

    @property
    def n(self) -> int:
        return self.x.n


@dataclass(frozen=True)
class DistanceVector:
    """M = N(N+1)/2 real scalars from the flattened double-centered distance matrix.

    Enumeration order is row-major over the upper triangle including the
    diagonal: A11, A12, ..., A1N, A22, ..., A2N, ..., ANN.
    """

    values: np.ndarray
    n_source: int

    @property
    def m(self) -> int:
        return self.values.size


def pairwise_distances(s: SampleSet) -> np.ndarray:
    """N x N matrix of Euclidean norms |X_i - X_j| (conjugate inner product).

    Symmetric with zero diagonal; squared moduli are accumulated in double
    precision with a single square root per entry.
    """
    s = as_sample_set(s)
    diff = s.data[:, None, :] - s.data[None, :, :]
    sq = diff.real ** 2 + diff.imag ** 2
    return np.sqrt(sq.sum(axis=-1))


def double_center(a: np.ndarray) -> np.ndarray:
    """H a H with H = I - (1/N) 11^T, computed via row/column/grand means.

    Every row and column of the result sums to ~0. O(N^2), no explicit H.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteInput("matrix entries must be finite")
    row = a.mean(axis=1, keepdims=True)
    col = a.mean(axis=0, keepdims=True)
    return a - row - col + a.mean()


def flatten_upper(centered: np.ndarray) -> DistanceVector:
    """Row-major upper triangle of a centered matrix, diagonal included."""
    a = np.asarray(centered, dtype=float)
    n = a.shape[0]
    i, j = np.triu_indices(n)
    return DistanceVector(values=a[i, j], n_source=n)


def distance_transform(s: SampleSet) -> DistanceVector:
    """Full transform of a sample set: distances, centering, flattening."""
    return flatten_upper(double_center(pairwise_distances(s)))


def flat_index(i, j, n: int):
    """Flat position of entry (i, j), i <= j, in the upper-triangle enumeration."""
    i = np.asarray(i, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    return i * n - (i * (i - 1)) // 2 + (j - i)


def flat_pair(k, n: int):
    """Inverse of :func:`flat_index`: the (i, j) pair stored at flat position k."""
    k = np.asarray(k, dtype=np.int64)
    rows = np.arange(n, dtype=np.int64)
    row_starts = rows * n - (rows * (rows - 1)) // 2
    i = np.searchsorted(row_starts, k, side="right") - 1
    j = i + (k - row_starts[i])
    return i, j


def check_permutation(perm, n: int) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise BadPermutation(f"expected a permutation of 0..{n - 1}")
    return perm


def flat_permutation(perm, n: int) -> np.ndarray:
    """Permutation of flat indices induced by relabeling samples with ``perm``.

    If B is any symmetric N x N matrix and Bp[i, j] = B[perm[i], perm[j]],
    then flatten_upper(Bp).values == flatten_upper(B).values[sigma] with
    sigma = flat_permutation(perm, n). O(M) with M = N(N+1)/2.
    """
    perm = check_permutation(perm, n)
    i, j = np.triu_indices(n)
    a = perm[i]
    b = perm[j]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return flat_index(lo, hi, n)
