"""Rewrite the CLI golden files from the current build.

Run from anywhere; review the diff before committing.
"""

import io
import json
import os
from pathlib import Path

from conefan.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue()


def main():
    os.chdir(GOLDEN)
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case in cases:
        for fmt in ("text", "json"):
            code, text = capture(case["argv"] + ["--format", fmt])
            (GOLDEN / f"{case['name']}.{fmt}").write_text(f"exit {code}\n{text}")
            print(f"{case['name']:22s} {fmt:4s} exit {code}")


if __name__ == "__main__":
    main()
