"""Rewrite tests/golden/*.out from the current CLI. Review the diff before committing."""

import contextlib
import io
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from cli_cases import CASES  # noqa: E402
from primeplaces.cli import main  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv, expected in CASES:
        code, text = run(argv)
        if code != expected:
            sys.exit(f"{name}: exit {code}, expected {expected}")
        (GOLDEN / f"{name}.out").write_text(text, encoding="utf-8")
    print(f"wrote {len(CASES)} golden files")
