#!/usr/bin/env python3
"""Render a gnum CSV table as a line plot."""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", help="CSV written by gnum (lines starting with # are skipped)")
    ap.add_argument("-x", default=None, help="x column (default: first)")
    ap.add_argument("-y", action="append", help="y column, repeatable (default: second)")
    ap.add_argument("-o", "--output", default="plot.png")
    ap.add_argument("--logy", action="store_true")
    args = ap.parse_args()

    df = pd.read_csv(args.csv, comment="#")
    x = args.x or df.columns[0]
    ys = args.y or [df.columns[1]]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for y in ys:
        ax.plot(df[x], df[y], lw=0.8, label=y)
    ax.set_xlabel(x)
    if args.logy:
        ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
