"""Regenerate fixtures/golden/*.json from the current CLI.

Run after a deliberate output change, then review the diff.
"""
import contextlib
import io
import sys
from pathlib import Path

from lyubeznik.cli import run_command

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"

COMMANDS = {
    "gens": ["gens"],
    "m_minimal": ["covers", "--m-minimal"],
    "decide": ["decide"],
    "classify": ["classify"],
}
RANDOM = {"random_s5_n3_e4_seed7": ["random", "--gens", "5", "--vars", "3", "--max-exp", "4", "--seed", "7"]}


def capture(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = run_command(argv)
    if code != 0:
        raise SystemExit(f"{argv} exited with {code}")
    return out.getvalue()


def targets():
    for ideal in sorted(FIXTURES.glob("*.txt")):
        for key, argv in COMMANDS.items():
            yield GOLDEN / f"{ideal.stem}.{key}.json", argv + [str(ideal)]
    for name, argv in RANDOM.items():
        yield GOLDEN / f"{name}.json", argv


def main():
    GOLDEN.mkdir(exist_ok=True)
    n = 0
    for path, argv in targets():
        path.write_text(capture(argv))
        n += 1
    print(f"wrote {n} golden files", file=sys.stderr)


if __name__ == "__main__":
    main()
