from __future__ import annotations

import runpy
import shutil
import subprocess
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(p.name for p in DEMOS.glob("*.py")))
def test_demo_runs(script, capsys):
    runpy.run_path(str(DEMOS / script), run_name="__main__")
    assert capsys.readouterr().out


@pytest.mark.skipif(shutil.which("cyclepack") is None, reason="console script not installed")
def test_cli_demo_runs():
    out = subprocess.run(["sh", str(DEMOS / "07_cli_report.sh")], capture_output=True,
                         text=True, check=True)
    assert "all_agree True" in out.stdout
