"""Print exact Schur expansions of functors of a Segre product.

For each partition of the requested size, expand the Jacobi-Trudi minor of
the Segre sequence of two polynomial classes and show the bigraded support
with coefficients.  Negative entries are the interesting part.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from jtkit.sequences import jt_minor, make_sequence, segre
from jtkit.shapes import partitions_of


def fmt(parts: tuple) -> str:
    return "(" + ",".join(map(str, parts)) + ")" if parts else "()"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=6, help="partition size to expand")
    ap.add_argument("--max-rows", type=int, default=3, help="skip wider partitions")
    ap.add_argument("--negatives-only", action="store_true")
    args = ap.parse_args(argv)

    seq = segre(make_sequence("poly", m=2), make_sequence("poly", m=2))
    for lam in partitions_of(args.size):
        if len(lam) > args.max_rows:
            continue
        value = jt_minor(seq, lam)
        entries = value.sorted_items()
        negatives = sum(1 for _, c in entries if c < 0)
        print(f"s_{fmt(lam)}: {len(entries)} terms, {negatives} negative")
        for (alpha, beta), coeff in entries:
            if args.negatives_only and coeff >= 0:
                continue
            print(f"    {fmt(alpha):14s} {fmt(beta):14s} {coeff:+d}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
