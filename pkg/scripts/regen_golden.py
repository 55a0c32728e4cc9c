"""Regenerate tests/golden/*.out from tests/golden/cases.json.

Run from the repository root after an intended change to CLI output:
    python3 scripts/regen_golden.py
"""

import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def run_case(case: dict) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "cutdecomp", *case["argv"]],
                          cwd=GOLDEN, capture_output=True, env={"NO_COLOR": "1", "PATH": ""})


def main() -> None:
    for case in json.loads((GOLDEN / "cases.json").read_text()):
        proc = run_case(case)
        if proc.returncode != case["exit"]:
            sys.exit(f"{case['name']}: exit {proc.returncode}, expected {case['exit']}\n{proc.stderr.decode()}")
        (GOLDEN / f"{case['name']}.out").write_bytes(proc.stdout + proc.stderr)
        print(f"wrote {case['name']}.out")


if __name__ == "__main__":
    main()
