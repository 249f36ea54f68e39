"""Experiment campaigns: configuration, batch execution and reporting."""

from drmcmo.harness.campaign import execute_run, run_campaign
from drmcmo.harness.config import CampaignConfig, load_config
from drmcmo.harness.report import emit_front, fmt_cell, summarize, summarize_records

__all__ = [
    "CampaignConfig",
    "emit_front",
    "execute_run",
    "fmt_cell",
    "load_config",
    "run_campaign",
    "summarize",
    "summarize_records",
]
