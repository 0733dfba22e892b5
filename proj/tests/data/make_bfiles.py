#!/usr/bin/env python3
"""Writes OEIS-style b-files for the k-bonacci sequences used as test fixtures.

Kept independent of the C++ generator. Output follows the OEIS b-file layout:
'#' header lines, then "n a(n)" pairs.
"""
import sys
from pathlib import Path

SEQUENCES = {"A000045": 2, "A000073": 3, "A000078": 4, "A001591": 5}
TERMS = 60


def kbonacci(k, count):
    terms = [0] * (k - 1) + [1]
    while len(terms) < count:
        terms.append(sum(terms[-k:]))
    return terms[:count]


def main(out_dir):
    for anum, k in SEQUENCES.items():
        path = Path(out_dir) / f"b{anum[1:]}.txt"
        with path.open("w") as f:
            f.write(f"# {anum}: order-{k} k-bonacci numbers, offset 0\n")
            f.write(f"# n a(n) for n = 0..{TERMS - 1}\n")
            for n, value in enumerate(kbonacci(k, TERMS)):
                f.write(f"{n} {value}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
