"""Shared fixtures plus the acceptance summary printed after a run.

Acceptance tests are named ``test_criterion_<n>_...``; the terminal summary
aggregates every test (and parametrized case) sharing a criterion number and
prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent

CRITERION_PREFIX = "test_criterion_"


@pytest.fixture(scope="session")
def fixture_dir() -> pathlib.Path:
    return ROOT / "fixtures"


@pytest.fixture(scope="session")
def manifest(fixture_dir) -> dict:
    return json.loads((fixture_dir / "manifest.json").read_text(encoding="utf-8"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts: dict[int, bool] = {}
    audits: list[str] = []
    for status, reports in terminalreporter.stats.items():
        if status not in ("passed", "failed", "error"):
            continue
        for report in reports:
            nodeid = getattr(report, "nodeid", "")
            name = nodeid.split("::")[-1].split("[")[0]
            if not name.startswith(CRITERION_PREFIX):
                continue
            number = int(name[len(CRITERION_PREFIX):].split("_")[0])
            verdicts[number] = verdicts.get(number, True) and status == "passed"
            for key, value in getattr(report, "user_properties", []):
                if key.endswith("_audit"):
                    audits.append(f"{key}: {value}")
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for line in audits:
        terminalreporter.write_line(line)
    for number in sorted(verdicts):
        outcome = "PASS" if verdicts[number] else "FAIL"
        terminalreporter.write_line(f"CRITERION {number}: {outcome}")
