"""Print the mass-ratio, frequency and exercise tables as CSV into a directory.

    python scripts/reproduce_tables.py results/
"""
import sys
from pathlib import Path

from subspace_mass.cli import run

TABLES = {
    "ratios.csv": ["ratios"],
    "ratios_pdg.csv": ["ratios", "--masses", "pdg"],
    "freq.csv": ["freq"],
    "problems.csv": ["problems"],
    "repcheck.csv": ["repcheck"],
}


def main(outdir="results"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, argv in TABLES.items():
        code = run([*argv, "--format", "csv", "--output", str(out / name)])
        if code:
            sys.exit(code)
        print(out / name)


if __name__ == "__main__":
    main(*sys.argv[1:])
