#!/usr/bin/env python3
"""Reproduce the bound-curve figure data: lambda0 against the concentration
parameter for dk = 0, 1, 2, 3 and the infinite-precision limit.

Writes fig1.csv plus a gnuplot script next to it; render with
``gnuplot -p fig1.gp`` if gnuplot is available.
"""

import argparse
from pathlib import Path

from phasebound.cli import main as cli_main


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "fig1.csv"
    code = cli_main(
        [
            "curve",
            "--dk", "0,1,2,3,inf",
            "--xi-start", "0",
            "--xi-stop", "4",
            "--xi-step", "0.05",
            "--output", str(csv_path),
            "--gnuplot", str(outdir / "fig1.gp"),
        ]
    )
    if code != 0:
        raise SystemExit(code)
    print(f"wrote {csv_path} and {outdir / 'fig1.gp'}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("out"))
    run(parser.parse_args().outdir)
