"""Synthetic data models for the simulation studies, plus outlier contamination.

Bivariate models (p = q = 1): linear, w-shape, sinusoid, circular, all with
x ~ U[-1,1] and Gaussian noise scaled by the noise level. Multivariate
models (default p = q = 5): linear, quadratic, log-quadratic with fixed
printed noise weights. The phase-amplitude-coupling model produces p = q = 2
complex vectors whose responses are products of the predictor coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .distance import PairedData, SampleSet
from .errors import ComplexYUnsupported, InvalidSpec

__all__ = [
    "Model",
    "OutlierSpec",
    "GeneratorSpec",
    "generate",
    "inject_outliers",
    "complex_gaussian",
    "unit_modulus",
    "BIVARIATE_MODELS",
    "MULTIVARIATE_MODELS",
]


class Model(Enum):
    LINEAR_1D = "linear"
    W_SHAPE = "w_shape"
    SINUSOID = "sinusoid"
    CIRCULAR = "circular"
    LINEAR_MV = "linear_mv"
    QUADRATIC_MV = "quadratic_mv"
    LOG_QUADRATIC_MV = "log_quadratic_mv"
    PAC_COMPLEX = "pac_complex"


BIVARIATE_MODELS = frozenset({Model.LINEAR_1D, Model.W_SHAPE,
                              Model.SINUSOID, Model.CIRCULAR})
MULTIVARIATE_MODELS = frozenset({Model.LINEAR_MV, Model.QUADRATIC_MV,
                                 Model.LOG_QUADRATIC_MV})


@dataclass(frozen=True)
class OutlierSpec:
    """Contaminate a fraction of the Y scalar entries with U[low, high] draws."""

    fraction: float
    low: float
    high: float


@dataclass(frozen=True)
class GeneratorSpec:
    """One synthetic association model with its sample size and noise level.

    ``dim`` is the per-coordinate dimension for the multivariate models
    (default 5); bivariate models are fixed at 1 and the coupling model
    at 2. ``noise`` is the noise level lambda; the multivariate linear and
    quadratic models carry their own fixed noise weights and ignore it,
    and the log-quadratic model has no noise term at all.
    """

    model: Model
    n: int
    dim: int | None = None
    noise: float = 0.0
    outliers: OutlierSpec | None = None

    def resolved_dim(self) -> int:
        if self.model in BIVARIATE_MODELS:
            return 1
        if self.model is Model.PAC_COMPLEX:
            return 2
        return 5 if self.dim is None else self.dim


def _validate(spec: GeneratorSpec) -> None:
    if spec.n < 2:
        raise InvalidSpec(f"need n >= 2, got {spec.n}")
    if not np.isfinite(spec.noise) or spec.noise < 0:
        raise InvalidSpec(f"noise level must be >= 0, got {spec.noise}")
    if spec.model in BIVARIATE_MODELS and spec.dim not in (None, 1):
        raise InvalidSpec(f"{spec.model.value} is bivariate; dim must be 1")
    if spec.model is Model.PAC_COMPLEX and spec.dim not in (None, 2):
        raise InvalidSpec("the coupling model is fixed at dimension 2")
    if spec.model in MULTIVARIATE_MODELS and spec.dim is not None and spec.dim < 1:
        raise InvalidSpec(f"dim must be >= 1, got {spec.dim}")
    if spec.outliers is not None:
        o = spec.outliers
        if not 0.0 <= o.fraction <= 1.0:
            raise InvalidSpec(f"outlier fraction must be in [0, 1], got {o.fraction}")
        if o.low > o.high:
            raise InvalidSpec(f"outlier range is empty: [{o.low}, {o.high}]")


def complex_gaussian(n: int, seed=None) -> np.ndarray:
    """Standard complex Gaussian draws: parts independent N(0, 1/2), total variance 1."""
    if n < 1:
        raise InvalidSpec(f"need n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    scale = np.sqrt(0.5)
    re = rng.standard_normal(n)
    im = rng.standard_normal(n)
    return scale * (re + 1j * im)


def unit_modulus(seed=None) -> complex:
    """One random complex coefficient on the unit circle."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * np.pi)
    return complex(np.cos(theta), np.sin(theta))


def _generate_bivariate(model: Model, n: int, lam: float, rng) -> PairedData:
    x = rng.uniform(-1.0, 1.0, n)
    eps = rng.standard_normal(n)
    if model is Model.LINEAR_1D:
        y = 0.5 * x + 3.0 * lam * eps
    elif model is Model.W_SHAPE:
        y = (np.abs(x + 0.5) * (x < 0) + np.abs(x - 0.5) * (x >= 0)
             + 0.75 * lam * eps)
    elif model is Model.SINUSOID:
        y = np.cos(8.0 * np.pi * x) + 3.0 * lam * eps
    else:  # CIRCULAR
        z = rng.choice([-1.0, 1.0], size=n)
        y = z * np.sqrt(1.0 - x ** 2) + 0.9 * lam * eps
    return PairedData(x=SampleSet(x), y=SampleSet(y))


def _generate_multivariate(model: Model, n: int, p: int, rng) -> PairedData:
    if model is Model.LOG_QUADRATIC_MV:
        x = rng.standard_normal((n, p))
        y = np.log(x ** 2)
        return PairedData(x=SampleSet(x), y=SampleSet(y))
    x = rng.uniform(-1.0, 1.0, (n, p))
    eps = rng.standard_normal((n, p))
    if model is Model.LINEAR_MV:
        y = 0.5 * x - 0.1 * (x.sum(axis=1, keepdims=True) - x) + 0.4 * eps
    else:  # QUADRATIC_MV
        x2 = x ** 2
        y = x2 - 0.1 * (x2.sum(axis=1, keepdims=True) - x2) + 0.2 * eps
    return PairedData(x=SampleSet(x), y=SampleSet(y))


def _generate_pac(n: int, lam: float, rng) -> PairedData:
    x1 = complex_gaussian(n, rng)
    x2 = complex_gaussian(n, rng)
    a1 = unit_modulus(rng)
    a2 = unit_modulus(rng)
    e1 = complex_gaussian(n, rng)
    e2 = complex_gaussian(n, rng)
    y1 = a1 * x1 * x2 + lam * e1
    y2 = a2 * x1 * np.conj(x2) + lam * e2
    return PairedData(x=SampleSet(np.column_stack([x1, x2])),
                      y=SampleSet(np.column_stack([y1, y2])))


def generate(spec: GeneratorSpec, seed=None) -> PairedData:
    """Draw one paired dataset from the model; bit-reproducible for fixed (spec, seed)."""
    _validate(spec)
    rng = np.random.default_rng(seed)
    if spec.model in BIVARIATE_MODELS:
        data = _generate_bivariate(spec.model, spec.n, spec.noise, rng)
    elif spec.model in MULTIVARIATE_MODELS:
        data = _generate_multivariate(spec.model, spec.n, spec.resolved_dim(), rng)
    else:
        data = _generate_pac(spec.n, spec.noise, rng)
    if spec.outliers is not None and spec.outliers.fraction > 0:
        o = spec.outliers
        data = _inject(data, o.fraction, o.low, o.high, rng)
    return data


def _inject(data: PairedData, fraction: float, low: float, high: float,
            rng) -> PairedData:
    if not 0.0 <= fraction <= 1.0:
        raise InvalidSpec(f"outlier fraction must be in [0, 1], got {fraction}")
    if fraction == 0.0:
        return data
    if not data.y.is_real:
        raise ComplexYUnsupported("outlier injection needs a real-valued Y")
    yr = data.y.real_values()
    count = int(round(fraction * yr.size))
    positions = rng.choice(yr.size, size=count, replace=False)
    flat = yr.reshape(-1)
    flat[positions] = rng.uniform(low, high, count)
    return PairedData(x=data.x, y=SampleSet(yr))


def inject_outliers(data: PairedData, fraction: float, low: float, high: float,
                    seed=None) -> PairedData:
    """Replace round(fraction * N * q) distinct Y scalar entries with U[low, high] draws.

    Positions are chosen without replacement across the flattened N x q
    grid of Y values; X is untouched. Y must be real-valued.
    """
    return _inject(data, fraction, low, high, np.random.default_rng(seed))
