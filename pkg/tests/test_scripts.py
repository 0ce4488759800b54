import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("script,args", [
    ("selfadjoint_crosscheck.py", ["--samples", "12", "--dim", "2"]),
    ("trace_norm_survey.py", ["--max-num", "2", "--max-den", "2"]),
    ("corpus_report.py", ["--oracle-max-len", "5"]),
])
def test_script_runs_clean(script, args):
    r = subprocess.run([sys.executable, str(SCRIPTS / script), *args],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip()
