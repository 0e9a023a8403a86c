#!/usr/bin/env python3
"""Plot concurrence (and optionally EoF) from one or more `spinpair path` CSVs."""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", nargs="+", help="path CSVs; label with name=file")
    ap.add_argument("-o", "--out", default="path.png")
    ap.add_argument("--eof", action="store_true", help="also plot entanglement of formation")
    ap.add_argument("--xlabel", default="u")
    args = ap.parse_args()

    fig, ax = plt.subplots(figsize=(6, 4))
    for item in args.csv:
        label, _, file = item.rpartition("=")
        file = file or item
        data = np.genfromtxt(file, delimiter=",", names=True, filling_values=np.nan)
        keep = data["in_domain"] == 1
        label = label or Path(file).stem
        ax.plot(data["u"][keep], data["concurrence"][keep], label=f"C {label}")
        if args.eof:
            ax.plot(data["u"][keep], data["eof"][keep], "--", label=f"EoF {label}")
    ax.set_xlabel(args.xlabel)
    ax.set_ylim(bottom=0.0)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(args.out)


if __name__ == "__main__":
    main()
