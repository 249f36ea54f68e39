import dataclasses
import json
import math

import numpy as np
import pytest

import drmcmo.harness.campaign as campaign
from drmcmo.core import ConfigurationError
from drmcmo.harness import CampaignConfig, load_config, run_campaign
from drmcmo.harness.report import emit_front, fmt_cell, fmt_sci, load_records, summarize, summarize_records
from drmcmo.records import RunRecord, read_record, write_record

SMALL = dict(N=10, max_fe=200, workers=1)


def small_config(tmp_path, **kw):
    base = dict(problems=["bc_band", "bc_arcs"], variants=["full", "v3_cdp_only"], seeds=[1, 2, 3], output_dir=str(tmp_path))
    return CampaignConfig(**{**base, **SMALL, **kw})


def stable(record: RunRecord) -> dict:
    d = dataclasses.asdict(record)
    d.pop("wall_time")
    return d


def fake_record(problem, variant, seed, igd, feasible=True):
    return RunRecord(
        problem=problem, variant=variant, operator="ga", seed=seed, N=10, max_fe=100,
        archive_objectives=[[0.1, 0.9]], archive_cv=[0 if feasible else 1],
        final_igd=igd if feasible else None, final_hv=0.5 if feasible else 0.0,
    )


def test_format_matches_table_cells():
    assert fmt_cell(1.3118e-2, 3.37e-3) == "1.3118e-2 (3.37e-3)"
    assert fmt_sci(0.0, 2) == "0.00e+0"
    assert fmt_sci(250.0, 1) == "2.5e+2"
    assert fmt_sci(math.nan, 2) == "NaN" and fmt_sci(None, 2) == "NaN"
    assert fmt_cell(None, None) == "N/A"


def test_campaign_writes_every_record_and_summary(tmp_path):
    summary = run_campaign(small_config(tmp_path))
    records = sorted(tmp_path.glob("*.json"))
    assert len(records) == 12
    assert (tmp_path / "summary.csv").exists() and (tmp_path / "summary.txt").exists()
    assert summary.problems == ["bc_arcs", "bc_band"] and summary.algorithms == ["full", "v3_cdp_only"]
    rec = read_record(tmp_path / "bc_band__full__ga__s2.json")
    assert rec.status == "ok" and rec.evaluations == 200 and rec.final_igd is not None
    csv_lines = (tmp_path / "summary.csv").read_text().splitlines()
    assert csv_lines[0].startswith("problem,algorithm,n_runs") and len(csv_lines) == 5
    text = (tmp_path / "summary.txt").read_text()
    assert "IGD (mean (std), lower is better)" in text and "Friedman rank" in text


def test_campaign_is_independent_of_worker_count(tmp_path):
    serial = tmp_path / "serial"
    parallel = tmp_path / "parallel"
    run_campaign(small_config(serial, seeds=[1, 2]))
    run_campaign(small_config(parallel, seeds=[1, 2], workers=3))
    for path in sorted(serial.glob("*.json")):
        assert stable(read_record(path)) == stable(read_record(parallel / path.name))
    for name in ("summary.csv", "summary.txt"):
        assert (serial / name).read_bytes() == (parallel / name).read_bytes()


def test_baseline_against_itself_is_similar():
    records = [fake_record("p1", "full", s, 0.01 * s) for s in range(1, 7)]
    records += [fake_record("p2", "full", s, 0.02 * s) for s in range(1, 7)]
    summary = summarize_records(records, baseline="full")
    assert summary.cell("p1", "full").igd_marker == "≈" and summary.cell("p2", "full").hv_marker == "≈"


def test_markers_need_five_samples_and_follow_orientation():
    few = [fake_record("p", v, s, 0.1) for v in ("full", "v3_cdp_only") for s in range(1, 5)]
    assert summarize_records(few).cell("p", "v3_cdp_only").igd_marker == ""
    many = [fake_record("p", "full", s, 0.01 + 0.001 * s) for s in range(1, 8)]
    many += [fake_record("p", "v3_cdp_only", s, 0.5 + 0.001 * s) for s in range(1, 8)]
    cell = summarize_records(many).cell("p", "v3_cdp_only")
    assert cell.igd_marker == "-"


def test_summary_without_feasible_runs_reports_na():
    records = [fake_record("p", "full", s, None, feasible=False) for s in range(1, 6)]
    records += [fake_record("q", "full", s, 0.1) for s in range(1, 6)]
    summary = summarize_records(records)
    assert summary.cell("p", "full").igd == [] and summary.cell("p", "full").hv == []
    from drmcmo.harness.report import summary_text

    assert "N/A" in summary_text(summary)


def test_summarize_rebuilds_identical_tables(tmp_path):
    run_campaign(small_config(tmp_path, seeds=[1, 2]))
    before = (tmp_path / "summary.csv").read_bytes(), (tmp_path / "summary.txt").read_bytes()
    (tmp_path / "summary.csv").unlink()
    summarize(tmp_path, baseline="full")
    assert ((tmp_path / "summary.csv").read_bytes(), (tmp_path / "summary.txt").read_bytes()) == before
    assert len(load_records(tmp_path)) == 8


def test_unwritable_output_aborts_before_any_run(tmp_path, monkeypatch):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    calls = []
    monkeypatch.setattr(campaign, "execute_run", lambda *a: calls.append(a))
    with pytest.raises(ConfigurationError, match="not writable"):
        run_campaign(small_config(blocker / "sub"))
    assert calls == []


def test_failed_run_is_recorded_and_campaign_continues(tmp_path, monkeypatch):
    real = campaign.run

    def flaky(problem, config, reference=None, callback=None):
        if config.seed == 2:
            raise RuntimeError("boom")
        return real(problem, config, reference, callback)

    monkeypatch.setattr(campaign, "run", flaky)
    summary = run_campaign(small_config(tmp_path, problems=["bc_band"], variants=["full"]))
    bad = read_record(tmp_path / "bc_band__full__ga__s2.json")
    assert bad.status == "failed" and "boom" in bad.error
    assert read_record(tmp_path / "bc_band__full__ga__s3.json").status == "ok"
    cell = summary.cell("bc_band", "full")
    assert cell.n_runs == 3 and cell.n_failed == 1 and len(cell.igd) == 2


def test_problem_without_reference_front_still_runs(tmp_path, monkeypatch):
    campaign._FRONT_CACHE.clear()
    monkeypatch.setattr(campaign, "sample_reference_front", lambda *a: (_ for _ in ()).throw(ConfigurationError("none")))
    rec = campaign.execute_run("bc_band", small_config(tmp_path).algorithm_config("full", 1))
    campaign._FRONT_CACHE.clear()
    assert rec.status == "ok" and rec.final_igd is None and rec.archive_objectives


def test_emit_front(tmp_path):
    rec = fake_record("p", "full", 1, 0.1)
    rec.archive_objectives = [[0.1, 0.9], [0.5, 0.5], [0.9, 0.1], [0.2, 0.2]]
    rec.archive_cv = [0, 0, 0, 2]
    path = emit_front(rec, tmp_path / "f.csv")
    rows = np.loadtxt(path, delimiter=",", ndmin=2)
    assert rows.shape == (3, 2) and rows.tolist() == rec.archive_objectives[:3]
    first = path.read_bytes()
    assert emit_front(rec, path).read_bytes() == first
    rec3 = fake_record("p", "full", 1, 0.1)
    rec3.archive_objectives = [[0.1, 0.2, 0.3]]
    assert np.loadtxt(emit_front(rec3, tmp_path / "g.csv"), delimiter=",", ndmin=2).shape == (1, 3)
    empty = fake_record("p", "full", 1, None, feasible=False)
    assert emit_front(empty, tmp_path / "e.csv").read_text() == "N/A\n"


def test_record_roundtrip(tmp_path):
    rec = fake_record("p", "full", 4, 0.25)
    path = write_record(rec, tmp_path)
    assert path.name == "p__full__ga__s4.json"
    assert read_record(path) == rec
    data = json.loads(path.read_text())
    data["schema"] = "other"
    path.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="schema"):
        read_record(path)


def test_config_validation():
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=[])
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=["bc_band"], seeds=[1, 1])
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=["bc_band"], variants=["v9"])
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=["bc_band"], baseline="v3_cdp_only")
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=["nope"])
    with pytest.raises(ConfigurationError):
        CampaignConfig(problems=["bc_band"], operators={"eta_x": 3})
    cfg = CampaignConfig(problems=["bc_band"], variants=["v3_cdp_only", "v1_no_shift"])
    assert cfg.baseline == "v3_cdp_only" and cfg.seeds == list(range(1, 31))
    assert len(cfg.tasks()) == 60


def test_load_config(tmp_path):
    good = tmp_path / "c.yaml"
    good.write_text(
        "problems: [bc_band, dascmop2_bc]\nvariants: [full, v3_cdp_only]\nseeds: [1, 2]\n"
        "N: 20\nmax_fe: 400\nproblem_params: {dascmop2_bc: {difficulty: [0.5, 0.5, 0.5]}}\n"
    )
    cfg = load_config(good)
    assert cfg.problems == ["bc_band", "dascmop2_bc"] and cfg.N == 20 and cfg.baseline == "full"
    bad = tmp_path / "bad.yaml"
    bad.write_text("problems: [bc_band]\npopulation: 5\n")
    with pytest.raises(ConfigurationError, match="unknown keys"):
        load_config(bad)
    missing = tmp_path / "missing.yaml"
    missing.write_text("variants: [full]\n")
    with pytest.raises(ConfigurationError, match="required"):
        load_config(missing)
    listy = tmp_path / "list.yaml"
    listy.write_text("- bc_band\n")
    with pytest.raises(ConfigurationError, match="mapping"):
        load_config(listy)
