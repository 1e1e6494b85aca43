#!/usr/bin/env python3
"""Regenerate data/knots.csv from the KnotInfo snapshot shipped in the
`database_knotinfo` package (pip install database_knotinfo).

Columns: name,crossings,bridge,stick3d,pd

The stick3d column is filled only for the knots whose 3-D stick number
appears in the planar-stick bounds table (UB = stick - 1); every other row
leaves it empty.
"""

import csv
import sys

from database_knotinfo import link_list

STICK_3D = {
    "3_1": 6, "4_1": 7, "5_1": 8, "5_2": 8,
    "6_1": 8, "6_2": 8, "6_3": 8,
    "7_1": 9, "7_2": 9, "7_3": 9, "7_4": 9, "7_5": 9, "7_6": 9, "7_7": 9,
    "8_2": 10, "8_4": 10, "8_6": 10, "8_7": 10, "8_8": 10,
    "8_19": 8, "8_20": 8,
    "9_1": 10, "9_6": 11, "9_7": 10, "9_9": 10, "9_11": 11, "9_20": 10,
    "9_26": 10,
}


def main(out_path):
    rows = [r for r in link_list()[1:]
            if r["crossing_number"].isdigit() and int(r["crossing_number"]) <= 10]
    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "crossings", "bridge", "stick3d", "pd"])
        for r in rows:
            pd = r["pd_notation"].replace(" ", "")
            w.writerow([r["name"], r["crossing_number"], r["bridge_index"],
                        STICK_3D.get(r["name"], ""), pd or "[]"])


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/knots.csv")
