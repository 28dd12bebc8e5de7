"""Regenerate the golden CLI outputs.

Run from the repository root: python3 tests/golden/regenerate.py
Each case NN_name lives as a .cmd file (one argv token per line) and the
captured stdout in the matching .out file.
"""

import contextlib
import io
import pathlib

from ramforge.cli import main

CASES = [
    ("01_analyze_text", ["analyze", "--p", "2", "x^3+1", "x"]),
    ("02_analyze_json", ["analyze", "--p", "2", "--format", "json", "x^3+1", "x"]),
    ("03_analyze_f5_json", ["analyze", "--p", "5", "--format", "json", "x^2+1", "x"]),
    ("04_wild_text", ["belyi-wild", "--p", "2", "--places", "x^2+x+1"]),
    ("05_wild_empty_json", ["belyi-wild", "--p", "3", "--format", "json"]),
    (
        "06_tame_json",
        ["belyi-tame", "--p", "3", "--places", "x+1,x+2", "--format", "json"],
    ),
    ("07_pseudotame_text", ["pseudotame", "--p", "2", "w^2+w^5", "--at", "w"]),
    (
        "08_laurent_json",
        ["laurent", "--p", "2", "1/(x^2+x)", "--at", "x", "--prec", "6",
         "--format", "json"],
    ),
    ("09_factor_text", ["factor", "--p", "5", "2*T^3+2*T"]),
    ("10_field_json", ["field", "--p", "2", "--m", "4", "--format", "json"]),
]


def run():
    here = pathlib.Path(__file__).parent
    for name, argv in CASES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = main(argv)
        if rc != 0:
            raise SystemExit(f"{name}: exit code {rc}")
        (here / f"{name}.cmd").write_text("\n".join(argv) + "\n")
        (here / f"{name}.out").write_text(buf.getvalue())
        print(f"{name}: {len(buf.getvalue())} bytes")


if __name__ == "__main__":
    run()
