"""Summary tables and front files built purely from run records.

Nothing here looks at wall time or file order, so the same set of records
always produces byte-identical output.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from drmcmo.algorithm import VARIANTS
from drmcmo.metrics import MARKERS, friedman_mean_ranks, wilcoxon_rank_sum
from drmcmo.records import RunRecord, read_record

MIN_SAMPLES = 5


def fmt_sci(x: float | None, digits: int) -> str:
    """Scientific notation without exponent padding: ``1.3118e-2``."""
    if x is None or not math.isfinite(x):
        return "NaN"
    mantissa, exp = f"{x:.{digits}e}".split("e")
    e = int(exp)
    return f"{mantissa}e{'+' if e >= 0 else '-'}{abs(e)}"


def fmt_cell(mean: float | None, std: float | None) -> str:
    """A "mean (std)" table cell, e.g. ``1.3118e-2 (3.37e-3)``."""
    if mean is None:
        return "N/A"
    return f"{fmt_sci(mean, 4)} ({fmt_sci(std, 2)})"


def _natural(s: str) -> list:
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


def algorithm_label(record: RunRecord) -> str:
    return record.variant if record.operator == "ga" else f"{record.variant}-{record.operator}"


def _label_order(label: str) -> tuple:
    variant = label.split("-")[0]
    return (VARIANTS.index(variant) if variant in VARIANTS else len(VARIANTS), _natural(label))


@dataclass
class Cell:
    problem: str
    algorithm: str
    n_runs: int
    n_failed: int
    igd: list[float]
    hv: list[float]
    igd_marker: str = ""
    hv_marker: str = ""

    @staticmethod
    def _stats(values: list[float]) -> tuple[float | None, float | None]:
        if not values:
            return None, None
        arr = np.asarray(values)
        return float(arr.mean()), float(arr.std(ddof=1)) if len(arr) > 1 else 0.0

    @property
    def igd_stats(self) -> tuple[float | None, float | None]:
        return self._stats(self.igd)

    @property
    def hv_stats(self) -> tuple[float | None, float | None]:
        return self._stats(self.hv)


@dataclass
class Summary:
    problems: list[str]
    algorithms: list[str]
    baseline: str
    cells: dict[tuple[str, str], Cell]
    friedman_igd: list[float] | None
    friedman_hv: list[float] | None

    def cell(self, problem: str, algorithm: str) -> Cell | None:
        return self.cells.get((problem, algorithm))


def _marker(values: list[float], base: list[float], lower_is_better: bool) -> str:
    if len(values) < MIN_SAMPLES or len(base) < MIN_SAMPLES:
        return ""
    return MARKERS[wilcoxon_rank_sum(values, base, lower_is_better=lower_is_better)]


def _friedman(summary_cells, problems, algorithms, which: int, lower_is_better: bool) -> list[float] | None:
    if len(algorithms) < 2 or len(problems) < 2:
        return None
    M = np.full((len(algorithms), len(problems)), np.nan)
    for i, a in enumerate(algorithms):
        for j, p in enumerate(problems):
            c = summary_cells.get((p, a))
            mean = None if c is None else (c.igd_stats if which == 0 else c.hv_stats)[0]
            if mean is not None:
                M[i, j] = mean
    ranks = friedman_mean_ranks(M, lower_is_better=lower_is_better)
    return [float(r) for r in ranks]


def summarize_records(records: list[RunRecord], baseline: str | None = "full") -> Summary:
    """Aggregate final IGD/HV per (problem, algorithm) cell, with rank-sum markers and Friedman ranks.

    Failed runs are counted but contribute no values; runs without a feasible
    archive contribute neither IGD nor HV, matching the N/A convention.
    """
    records = sorted(records, key=lambda r: (_natural(r.problem), _label_order(algorithm_label(r)), r.seed))
    problems = sorted({r.problem for r in records}, key=_natural)
    algorithms = sorted({algorithm_label(r) for r in records}, key=_label_order)
    if baseline not in algorithms:
        baseline = algorithms[0] if algorithms else ""
    cells: dict[tuple[str, str], Cell] = {}
    for r in records:
        key = (r.problem, algorithm_label(r))
        cell = cells.setdefault(key, Cell(r.problem, key[1], 0, 0, [], []))
        cell.n_runs += 1
        if r.status != "ok":
            cell.n_failed += 1
            continue
        if r.final_igd is not None:
            cell.igd.append(r.final_igd)
        if r.final_hv is not None and r.final_igd is not None:
            cell.hv.append(r.final_hv)
    for (p, a), cell in cells.items():
        base = cells.get((p, baseline))
        if base is None:
            continue
        cell.igd_marker = _marker(cell.igd, base.igd, lower_is_better=True)
        cell.hv_marker = _marker(cell.hv, base.hv, lower_is_better=False)
    return Summary(
        problems=problems,
        algorithms=algorithms,
        baseline=baseline,
        cells=cells,
        friedman_igd=_friedman(cells, problems, algorithms, 0, True),
        friedman_hv=_friedman(cells, problems, algorithms, 1, False),
    )


CSV_FIELDS = [
    "problem", "algorithm", "n_runs", "n_failed", "n_feasible",
    "igd_mean", "igd_std", "igd_marker", "hv_mean", "hv_std", "hv_marker",
]


def summary_csv(summary: Summary) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for p in summary.problems:
        for a in summary.algorithms:
            c = summary.cell(p, a)
            if c is None:
                continue
            im, isd = c.igd_stats
            hm, hsd = c.hv_stats
            w.writerow([
                p, a, c.n_runs, c.n_failed, len(c.igd),
                "" if im is None else repr(im), "" if isd is None else repr(isd), c.igd_marker,
                "" if hm is None else repr(hm), "" if hsd is None else repr(hsd), c.hv_marker,
            ])
    return buf.getvalue()


def _table(summary: Summary, which: int) -> list[str]:
    header = ["Problem", *summary.algorithms]
    rows = []
    counts = {a: {"+": 0, "-": 0, "≈": 0} for a in summary.algorithms}
    for p in summary.problems:
        row = [p]
        for a in summary.algorithms:
            c = summary.cell(p, a)
            if c is None:
                row.append("")
                continue
            mean, std = c.igd_stats if which == 0 else c.hv_stats
            mark = c.igd_marker if which == 0 else c.hv_marker
            row.append(fmt_cell(mean, std) + (f" {mark}" if mark and a != summary.baseline else ""))
            if mark and a != summary.baseline:
                counts[a][mark] += 1
        rows.append(row)
    rows.append(["+/-/≈", *("" if a == summary.baseline else "{}/{}/{}".format(*counts[a].values()) for a in summary.algorithms)])
    ranks = summary.friedman_igd if which == 0 else summary.friedman_hv
    if ranks is not None:
        rows.append(["Friedman rank", *(f"{r:.2f}" for r in ranks)])
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = lambda cells: "  ".join(str(x).ljust(w) for x, w in zip(cells, widths)).rstrip()  # noqa: E731
    return [fmt(header), fmt(["-" * w for w in widths]), *(fmt(r) for r in rows)]


def summary_text(summary: Summary) -> str:
    lines = [f"Markers compare each algorithm with {summary.baseline} (rank-sum, alpha=0.05).", ""]
    lines += ["IGD (mean (std), lower is better)", *_table(summary, 0), ""]
    lines += ["HV (mean (std), higher is better)", *_table(summary, 1)]
    return "\n".join(lines) + "\n"


def write_summary(summary: Summary, directory: str | Path) -> tuple[Path, Path]:
    directory = Path(directory)
    csv_path = directory / "summary.csv"
    txt_path = directory / "summary.txt"
    csv_path.write_text(summary_csv(summary), encoding="utf-8")
    txt_path.write_text(summary_text(summary), encoding="utf-8")
    return csv_path, txt_path


def load_records(directory: str | Path) -> list[RunRecord]:
    return [read_record(p) for p in sorted(Path(directory).glob("*.json"))]


def summarize(directory: str | Path, baseline: str | None = "full") -> Summary:
    """Rebuild and write the summary tables from every record in ``directory``."""
    summary = summarize_records(load_records(directory), baseline=baseline)
    write_summary(summary, directory)
    return summary


def emit_front(record: RunRecord, path: str | Path) -> Path:
    """Write the feasible archive objectives as CSV; a lone ``N/A`` row if there are none."""
    path = Path(path)
    points = record.feasible_objectives
    with open(path, "w", encoding="utf-8") as fh:
        if not points:
            fh.write("N/A\n")
        for row in points:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    return path
