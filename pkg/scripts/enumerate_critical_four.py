"""Exhaustively list critical biconnected graphs with exactly four degree-2 vertices.

    python3 scripts/enumerate_critical_four.py --max-n 9

Prints one line per graph size with the count found and how many the chain
classifier covered, then the middle-part sequences seen.
"""

import argparse
from collections import Counter

from cutdecomp.corpus import critical_four_graphs
from cutdecomp.critical import classify_exactly_four


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    found, covered, shapes = Counter(), Counter(), Counter()
    for g in critical_four_graphs(args.max_n):
        found[g.n] += 1
        desc = classify_exactly_four(g)
        if desc is not None:
            covered[g.n] += 1
            shapes["degenerate" if desc.degenerate else "-".join(desc.kinds) or "(none)"] += 1
    for n in sorted(found):
        print(f"n={n}: {found[n]} graphs, {covered[n]} classified")
    print("middle sequences:")
    for shape, count in sorted(shapes.items()):
        print(f"  {shape}: {count}")
    missed = sum(found.values()) - sum(covered.values())
    print(f"unclassified: {missed}")


if __name__ == "__main__":
    main()
