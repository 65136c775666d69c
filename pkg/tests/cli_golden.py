"""CLI invocations whose output is frozen in ``golden/cli.txt``.

Regenerate after an intended output change with ``python3 tests/cli_golden.py --write``.
"""

import io
import sys
from pathlib import Path

from smctensor.cli import main

GOLDEN = Path(__file__).parent / "golden" / "cli.txt"

W1 = [
    "lunit~((*,*)); R[(*,*)]alpha(*); gamma(*,*,*); tens_l(1,*)",
    "lunit~((*,*)); R[(*,*)]alpha(*); R[(*,*)]tens_l(1,*); gamma(*,*,*)",
    "lunit~((*,*)); R[(*,*)]beta(*); R[(*,*)]tens_l(1,*); gamma(*,*,*)",
    "lunit~((*,*)); R[(*,*)]beta(*); gamma(*,*,*)",
    "lunit~((*,*)); R[(*,*)]alpha(*); gamma(*,*,*)",
]

CASES = [
    ["tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--budget", "4", "--into", "z2xz3"],
    ["tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--budget", "0"],
    ["tensor-eq", "z2", "z3", "sym((0,*),(1,*)); sym((1,*),(0,*))", "id([(0,*)*(1,*)])", "--budget", "2"],
    ["tensor-eq", "z3", "terminal", "tens_l(1,*)", "tens_l(2,*)", "--budget", "16", "--into", "z3"],
    ["tensor-eq", "z3", "terminal", "tens_l(1,*)", "id((*,*))", "--budget", "8", "--into", "z3"]
    + [x for w in W1 for x in ("--via", w)],
    ["tensor-eq", "z2", "z3", "beta(0)", "id((1,*))"],
    ["tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--into", "z2xz3", "--extensions", "0,99"],
    ["tensor-eq", "sline", "terminal", "sym((1,*),(1,*)); gamma(1,1,*)", "gamma(1,1,*); tens_l('0-',*)",
     "--budget", "4", "--into", "sline", "--extensions", "all"],
    ["coherence", "(0,*)*[(1,*)*(2,*)]", "[(2,*)*(0,*)]*(1,*)"],
    ["coherence", "(0,*)*(1,*)", "(0,*)*(0,*)"],
    ["check", "z3"],
    ["hom", "terminal", "z3"],
]


def render() -> str:
    out = io.StringIO()
    for argv in CASES:
        out.write("$ smctensor " + " ".join(repr(a) if " " in a or ";" in a else a for a in argv) + "\n")
        code = main(argv, out=out)
        out.write(f"[exit {code}]\n\n")
    return out.getvalue()


if __name__ == "__main__":
    if "--write" in sys.argv:
        GOLDEN.write_text(render(), encoding="utf-8")
    else:
        sys.stdout.write(render())
