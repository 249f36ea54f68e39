"""Batch execution of (problem x variant x seed) runs and their persistence."""

from __future__ import annotations

import logging
import os
import tempfile
import traceback
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Any

from drmcmo.algorithm import AlgorithmConfig, run
from drmcmo.core import ConfigurationError
from drmcmo.harness.config import CampaignConfig
from drmcmo.harness.report import Summary, summarize_records, write_summary
from drmcmo.problems import default_front_size, get_problem, sample_reference_front
from drmcmo.problems.fronts import ReferenceFront
from drmcmo.records import RunRecord, write_record

log = logging.getLogger(__name__)

_FRONT_CACHE: dict[tuple, ReferenceFront | None] = {}


def _problem_params(params: dict[str, Any] | None) -> dict[str, Any]:
    params = dict(params or {})
    if "difficulty" in params:
        params["difficulty"] = tuple(params["difficulty"])
    return params


def reference_front_for(name: str, params: dict[str, Any] | None = None, path: str | None = None) -> ReferenceFront | None:
    """Reference front for metric checkpoints, or None when the problem has no front source."""
    key = (name, repr(sorted((params or {}).items())), path)
    if key not in _FRONT_CACHE:
        problem = get_problem(name, **_problem_params(params))
        try:
            _FRONT_CACHE[key] = sample_reference_front(problem, default_front_size(problem.n_obj), path)
        except ConfigurationError:
            log.warning("no reference front for %s; IGD/HV will not be recorded", name)
            _FRONT_CACHE[key] = None
    return _FRONT_CACHE[key]


def execute_run(
    problem_name: str,
    config: AlgorithmConfig,
    params: dict[str, Any] | None = None,
    front_path: str | None = None,
) -> RunRecord:
    """One run, never raising: failures come back as a record with status "failed"."""
    try:
        problem = get_problem(problem_name, **_problem_params(params))
        reference = reference_front_for(problem_name, params, front_path)
        _, record = run(problem, config, reference)
        record.problem = problem_name
        return record
    except Exception as exc:  # noqa: BLE001 - a failed run must not stop the campaign
        log.error("run %s/%s seed %d failed: %s", problem_name, config.variant, config.seed, exc)
        return RunRecord(
            problem=problem_name,
            variant=config.variant,
            operator=config.operator,
            seed=config.seed,
            N=config.N,
            max_fe=config.max_fe,
            status="failed",
            error="".join(traceback.format_exception_only(type(exc), exc)).strip(),
        )


def check_writable(directory: str | Path) -> Path:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, probe = tempfile.mkstemp(dir=directory, suffix=".probe")
        os.close(fd)
        os.remove(probe)
    except OSError as exc:
        raise ConfigurationError(f"output directory {directory} is not writable: {exc}") from None
    return directory


def _task_args(config: CampaignConfig, problem: str, variant: str, seed: int) -> tuple:
    return (
        problem,
        config.algorithm_config(variant, seed),
        config.problem_params.get(problem),
        config.fronts.get(problem),
    )


def run_campaign(config: CampaignConfig) -> Summary:
    """Execute every run of ``config``, write one record per run plus the summary tables."""
    out = check_writable(config.output_dir)
    tasks = [_task_args(config, *t) for t in config.tasks()]
    records: list[RunRecord] = []
    workers = min(config.n_workers, len(tasks))
    log.info("campaign: %d runs on %d worker(s) -> %s", len(tasks), workers, out)
    if workers == 1:
        for args in tasks:
            rec = execute_run(*args)
            write_record(rec, out)
            records.append(rec)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(execute_run, *args) for args in tasks]
            for fut in as_completed(futures):
                rec = fut.result()
                write_record(rec, out)
                records.append(rec)
    summary = summarize_records(records, baseline=config.baseline)
    write_summary(summary, out)
    failed = sum(r.status != "ok" for r in records)
    if failed:
        log.warning("%d of %d runs failed; see the records for details", failed, len(records))
    return summary
