#!/usr/bin/env python3
"""Render a `spinpair scan` CSV as a concurrence map with the PPT boundary."""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def load(path):
    data = np.genfromtxt(path, delimiter=",", names=True, filling_values=np.nan)
    u1 = np.unique(data["axis1"])
    u2 = np.unique(data["axis2"])
    # Rows run with axis1 fastest.
    shape = (len(u2), len(u1))
    conc = data["concurrence"].reshape(shape)
    ppt = data["ppt_min_eig"].reshape(shape)
    return u1, u2, conc, ppt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv")
    ap.add_argument("-o", "--out", help="image path (default: CSV name with .png)")
    ap.add_argument("--xlabel", default="axis1")
    ap.add_argument("--ylabel", default="axis2")
    args = ap.parse_args()

    u1, u2, conc, ppt = load(args.csv)
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(u1, u2, np.ma.masked_invalid(conc), shading="nearest", cmap="viridis",
                         vmin=0.0)
    fig.colorbar(mesh, ax=ax, label="concurrence")
    if np.isfinite(ppt).any():
        ax.contour(u1, u2, np.ma.masked_invalid(ppt), levels=[0.0], colors="white",
                   linewidths=0.8)
    ax.set_xlabel(args.xlabel)
    ax.set_ylabel(args.ylabel)
    ax.set_aspect("equal")
    fig.tight_layout()
    out = args.out or str(Path(args.csv).with_suffix(".png"))
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main()
