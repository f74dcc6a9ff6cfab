"""Monte-Carlo power estimation over model / noise / sample-size grids.

Power is the fraction of simulated datasets whose permutation p-value
falls below the significance level. All tests for one dataset share the
same K synchronized permutations. Per-simulation seeds derive from
(master seed, point index, sim index), so any grid subset can be
recomputed independently and results do not depend on worker count.
"""

from __future__ import annotations

import csv
import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec
from .generators import BIVARIATE_MODELS, GeneratorSpec, generate
from .inference import synchronized_test, synchronized_xi_test
from .ranks import TiePolicy

__all__ = [
    "TEST_LABELS",
    "PowerPoint",
    "PowerCurve",
    "estimate_power",
    "power_curve",
    "power_curve_to_csv",
]

# Column order of the power CSV; the ch-* tests only exist for bivariate
# real data, where the original rank correlation is applicable.
TEST_LABELS = (
    "dch-PowYfX", "dch-PowXfY",
    "ch-PowYfX", "ch-PowXfY",
    "sz-PowYfX",
    "dch-PowXcY", "dch-PowYcX",
    "ch-PowXcY", "ch-PowYcX",
)


@dataclass(frozen=True)
class PowerPoint:
    """Estimated power of every applicable test at one grid point."""

    spec: GeneratorSpec
    alpha: float
    n_sim: int
    n_permutations: int
    power_by_test: dict


@dataclass(frozen=True)
class PowerCurve:
    """Ordered power estimates along a noise-level or sample-size axis."""

    axis: str  # "noise" or "sample_size"
    points: tuple

    def axis_values(self) -> list:
        if self.axis == "noise":
            return [p.spec.noise for p in self.points]
        return [p.spec.n for p in self.points]


def estimate_power(spec: GeneratorSpec, alpha: float, n_sim: int,
                   n_permutations: int, seed: int = 0,
                   point_index: int = 0) -> PowerPoint:
    """Monte-Carlo power of every applicable test for one generator setting.

    Each simulation draws a dataset, runs the synchronized distance-based
    test and, for bivariate real data only, the raw-data rank correlation
    test, and counts p < alpha.
    """
    if n_sim < 1 or n_permutations < 1:
        raise InvalidSpec("n_sim and the permutation count must be >= 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidSpec(f"alpha must be in (0, 1), got {alpha}")

    bivariate = spec.model in BIVARIATE_MODELS
    labels = [t for t in TEST_LABELS if bivariate or not t.startswith("ch-")]
    counts = dict.fromkeys(labels, 0)

    for i in range(n_sim):
        root = np.random.SeedSequence([seed, point_index, i])
        gen_ss, dch_ss, ch_ss, tie_dch, tie_ch = root.spawn(5)
        data = generate(spec, gen_ss)
        rep = synchronized_test(data.x, data.y, n_permutations, seed=dch_ss,
                                policy=TiePolicy.random_break(tie_dch))
        pvals = {
            "dch-PowYfX": rep.p_dch_y_given_x,
            "dch-PowXfY": rep.p_dch_x_given_y,
            "dch-PowXcY": rep.p_delta_x_to_y,
            "dch-PowYcX": rep.p_delta_y_to_x,
            "sz-PowYfX": rep.p_dcor,
        }
        if bivariate:
            xrep = synchronized_xi_test(
                data.x.data[:, 0].real, data.y.data[:, 0].real,
                n_permutations, seed=ch_ss,
                policy=TiePolicy.random_break(tie_ch))
            pvals.update({
                "ch-PowYfX": xrep.p_xi_y_given_x,
                "ch-PowXfY": xrep.p_xi_x_given_y,
                "ch-PowXcY": xrep.p_delta_x_to_y,
                "ch-PowYcX": xrep.p_delta_y_to_x,
            })
        for label in labels:
            if pvals[label] < alpha:
                counts[label] += 1

    powers = {label: counts[label] / n_sim for label in labels}
    return PowerPoint(spec=spec, alpha=alpha, n_sim=n_sim,
                      n_permutations=n_permutations, power_by_test=powers)


def power_curve(spec: GeneratorSpec, axis: str, values, alpha: float,
                n_sim: int, n_permutations: int, seed: int = 0) -> PowerCurve:
    """One power estimate per axis value; the axis must be strictly increasing."""
    if axis not in ("noise", "sample_size"):
        raise InvalidSpec(f"axis must be 'noise' or 'sample_size', got {axis!r}")
    values = list(values)
    if not values:
        raise InvalidSpec("axis values must be nonempty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidSpec("axis values must be strictly increasing")
    points = []
    for idx, v in enumerate(values):
        if axis == "noise":
            point_spec = dataclasses.replace(spec, noise=float(v))
        else:
            point_spec = dataclasses.replace(spec, n=int(v))
        points.append(estimate_power(point_spec, alpha, n_sim, n_permutations,
                                     seed=seed, point_index=idx))
    return PowerCurve(axis=axis, points=tuple(points))


def power_curve_to_csv(curves, out, seed: int | None = None) -> None:
    """Write one or more power curves as CSV with the fixed column schema.

    Header comment lines record the run configuration so every number in
    the file can be regenerated. Tests that do not apply to a model (the
    ch-* columns for multivariate or complex data) are left empty.
    """
    if isinstance(curves, PowerCurve):
        curves = [curves]
    close = False
    if isinstance(out, (str, bytes)) or hasattr(out, "__fspath__"):
        out = open(out, "w", newline="")
        close = True
    try:
        first = curves[0].points[0]
        out.write(f"# seed={seed} K={first.n_permutations} "
                  f"n_sim={first.n_sim} alpha={first.alpha}\n")
        writer = csv.writer(out)
        writer.writerow(["model", "axis_name", "axis_value", "alpha",
                         "n_sim", "K", *TEST_LABELS])
        for curve in curves:
            for point in curve.points:
                axis_value = point.spec.noise if curve.axis == "noise" else point.spec.n
                row = [point.spec.model.value, curve.axis, axis_value,
                       point.alpha, point.n_sim, point.n_permutations]
                for label in TEST_LABELS:
                    p = point.power_by_test.get(label)
                    row.append("" if p is None else p)
                writer.writerow(row)
    finally:
        if close:
            out.close()
