"""Dataset loading, result serialization, and the bundled example dataset.

CSV columns named with matching ``_re``/``_im`` suffixes are paired into
complex coordinates; plain columns load as real. Cause-effect pair files
are two whitespace-separated numeric columns, one sample per line.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .directed import CausalVerdict
from .distance import PairedData, SampleSet
from .errors import (ColumnCountMismatch, EmptyFile, MissingColumn,
                     NonNumericCell, UnpairedComplexColumn)
from .inference import AssociationReport, XiReport

__all__ = [
    "ColumnSpec",
    "load_paired_csv",
    "write_paired_csv",
    "load_cause_effect_pair",
    "bundled_pair0048_path",
    "report_to_dict",
    "report_to_json",
    "report_to_csv",
    "format_report_table",
]


@dataclass
class ColumnSpec:
    """Which CSV columns form X and Y, and how complex pairs are named.

    A column ``s_re`` pairs with ``s_im`` into one complex coordinate; both
    must be listed on the same side. X and Y columns must be disjoint.
    """

    x_columns: list
    y_columns: list
    re_suffix: str = "_re"
    im_suffix: str = "_im"

    def __post_init__(self):
        overlap = set(self.x_columns) & set(self.y_columns)
        if overlap:
            raise UnpairedComplexColumn(
                f"columns cannot appear on both sides: {sorted(overlap)}")


def _coordinate_plan(names: list, cols: ColumnSpec) -> list:
    """Group listed column names into coordinates: (re_name, im_name or None)."""
    listed = set(names)
    plan = []
    for name in names:
        if name.endswith(cols.re_suffix):
            base = name[: -len(cols.re_suffix)]
            partner = base + cols.im_suffix
            if partner not in listed:
                raise UnpairedComplexColumn(f"{name} has no matching {partner}")
            plan.append((name, partner))
        elif name.endswith(cols.im_suffix):
            base = name[: -len(cols.im_suffix)]
            partner = base + cols.re_suffix
            if partner not in listed:
                raise UnpairedComplexColumn(f"{name} has no matching {partner}")
            # consumed when its _re partner is reached
        else:
            plan.append((name, None))
    return plan


def _parse_cell(text: str, row_number: int, column: str) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise NonNumericCell(f"row {row_number}, column {column!r}: "
                             f"cannot parse {text!r}") from None
    if not np.isfinite(value):
        raise NonNumericCell(f"row {row_number}, column {column!r}: "
                             f"non-finite value {text!r}")
    return value


def load_paired_csv(path, cols: ColumnSpec) -> PairedData:
    """Load aligned X/Y sample sets from a headered CSV file."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise EmptyFile(f"{path}: no header row")
        header = set(reader.fieldnames)
        for name in [*cols.x_columns, *cols.y_columns]:
            if name not in header:
                raise MissingColumn(f"{path}: column {name!r} not in header")
        x_plan = _coordinate_plan(cols.x_columns, cols)
        y_plan = _coordinate_plan(cols.y_columns, cols)
        x_rows, y_rows = [], []
        for row_number, row in enumerate(reader, start=1):
            def coord(pair):
                re_val = _parse_cell(row[pair[0]], row_number, pair[0])
                if pair[1] is None:
                    return complex(re_val, 0.0)
                return complex(re_val, _parse_cell(row[pair[1]], row_number, pair[1]))

            x_rows.append([coord(p) for p in x_plan])
            y_rows.append([coord(p) for p in y_plan])
    if not x_rows:
        raise EmptyFile(f"{path}: no data rows")
    return PairedData(x=SampleSet(np.array(x_rows, dtype=np.complex128)),
                      y=SampleSet(np.array(y_rows, dtype=np.complex128)))


def _side_header(side: SampleSet, prefix: str, cols: ColumnSpec) -> list:
    names = []
    for j in range(side.dim):
        if side.is_real:
            names.append(f"{prefix}{j}")
        else:
            names.extend([f"{prefix}{j}{cols.re_suffix}", f"{prefix}{j}{cols.im_suffix}"])
    return names


def write_paired_csv(data: PairedData, path, cols: ColumnSpec | None = None) -> ColumnSpec:
    """Write a paired dataset; returns the ColumnSpec that loads it back.

    Values are written in full precision so a round-trip is numerically
    identical. Complex coordinates become suffix pairs.
    """
    if cols is None:
        cols = ColumnSpec(x_columns=[], y_columns=[])
    x_names = _side_header(data.x, "x", cols)
    y_names = _side_header(data.y, "y", cols)

    def side_cells(side: SampleSet, i: int) -> list:
        cells = []
        for j in range(side.dim):
            v = side.data[i, j]
            if side.is_real:
                cells.append(repr(float(v.real)))
            else:
                cells.extend([repr(float(v.real)), repr(float(v.imag))])
        return cells

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(x_names + y_names)
        for i in range(data.n):
            writer.writerow(side_cells(data.x, i) + side_cells(data.y, i))
    return ColumnSpec(x_columns=x_names, y_columns=y_names,
                      re_suffix=cols.re_suffix, im_suffix=cols.im_suffix)


def load_cause_effect_pair(path, swap: bool = False) -> PairedData:
    """Load a two-column whitespace-separated pair file.

    Column 1 becomes X and column 2 becomes Y; ``swap`` exchanges them
    (the benchmark files do not document their column order).
    """
    first, second = [], []
    with open(path) as fh:
        for line_number, line in enumerate(fh, start=1):
            tokens = line.split()
            if not tokens:
                continue
            if len(tokens) != 2:
                raise ColumnCountMismatch(f"{path}: line {line_number} has "
                                          f"{len(tokens)} columns, expected 2")
            first.append(_parse_cell(tokens[0], line_number, "1"))
            second.append(_parse_cell(tokens[1], line_number, "2"))
    if not first:
        raise EmptyFile(f"{path}: no data rows")
    if swap:
        first, second = second, first
    return PairedData(x=SampleSet(np.array(first)), y=SampleSet(np.array(second)))


def bundled_pair0048_path() -> Path:
    """Path of the bundled outdoor/indoor temperature example dataset."""
    return Path(resources.files("dchat").joinpath("data/pair0048.txt"))


def report_to_dict(report: AssociationReport, xi_report: XiReport | None = None,
                   verdict: CausalVerdict | None = None, **extra) -> dict:
    """Flatten analysis results into the serializable key set."""
    out = {
        "dch_yx": report.dch_y_given_x,
        "dch_xy": report.dch_x_given_y,
        "delta_xy": report.delta_x_to_y,
        "dcor": report.dcor,
        "p_dch_yx": report.p_dch_y_given_x,
        "p_dch_xy": report.p_dch_x_given_y,
        "p_dch_delta_xy": report.p_delta_x_to_y,
        "p_dch_delta_yx": report.p_delta_y_to_x,
        "p_dcor": report.p_dcor,
        "K": report.n_permutations,
        "seed": report.seed if isinstance(report.seed, int) else str(report.seed),
    }
    if xi_report is not None:
        out.update({
            "ch_yx": xi_report.xi_y_given_x,
            "ch_xy": xi_report.xi_x_given_y,
            "p_ch_yx": xi_report.p_xi_y_given_x,
            "p_ch_xy": xi_report.p_xi_x_given_y,
            "p_ch_delta_xy": xi_report.p_delta_x_to_y,
            "p_ch_delta_yx": xi_report.p_delta_y_to_x,
        })
    if verdict is not None:
        out["reci"] = verdict.value
    out.update(extra)
    return out


def report_to_json(report_dict: dict) -> str:
    return json.dumps(report_dict, indent=2, sort_keys=True) + "\n"


def report_to_csv(report_dict: dict) -> str:
    """Key/value CSV with the run configuration in header comments."""
    meta_keys = ("K", "seed", "ties", "n")
    lines = [f"# {k}={report_dict[k]}" for k in meta_keys if k in report_dict]
    lines.append("key,value")
    for key in sorted(report_dict):
        if key not in meta_keys:
            lines.append(f"{key},{report_dict[key]}")
    return "\n".join(lines) + "\n"


def format_report_table(report: AssociationReport,
                        xi_report: XiReport | None = None,
                        verdict: CausalVerdict | None = None) -> str:
    """Human-readable table of statistics and p-values, three-decimal style."""

    def row(label, pairs):
        cells = "".join(f"  {name} = {stat:+.4f} (p = {p:.3f})" for name, stat, p in pairs)
        return f"{label:<22}{cells}"

    lines = [
        row("dist-Chatterjee", [
            ("Y|X", report.dch_y_given_x, report.p_dch_y_given_x),
            ("X|Y", report.dch_x_given_y, report.p_dch_x_given_y),
        ]),
        row("  causal", [
            ("d(x->y)", report.delta_x_to_y, report.p_delta_x_to_y),
            ("d(y->x)", report.delta_y_to_x, report.p_delta_y_to_x),
        ]),
    ]
    if xi_report is not None:
        lines += [
            row("Chatterjee (raw)", [
                ("y|x", xi_report.xi_y_given_x, xi_report.p_xi_y_given_x),
                ("x|y", xi_report.xi_x_given_y, xi_report.p_xi_x_given_y),
            ]),
            row("  causal", [
                ("d(x->y)", xi_report.delta_x_to_y, xi_report.p_delta_x_to_y),
                ("d(y->x)", xi_report.delta_y_to_x, xi_report.p_delta_y_to_x),
            ]),
        ]
    lines.append(row("distance correlation",
                     [("sym", report.dcor, report.p_dcor)]))
    if verdict is not None:
        pretty = {CausalVerdict.X_CAUSES_Y: "X causes Y",
                  CausalVerdict.Y_CAUSES_X: "Y causes X",
                  CausalVerdict.UNDETERMINED: "undetermined"}[verdict]
        lines.append(f"RECI verdict: {pretty}")
    return "\n".join(lines) + "\n"
