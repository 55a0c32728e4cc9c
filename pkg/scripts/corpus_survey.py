"""Survey the seeded corpus: part kinds, single cutsets, planarity, criticality, colorings.

    python3 scripts/corpus_survey.py --count 600
"""

import argparse
import time
from collections import Counter

from cutdecomp.coloring import color_blocks_plus_one, color_parts_plus_one, color_via_augmented
from cutdecomp.corpus import random_corpus
from cutdecomp.critical import is_critical
from cutdecomp.decomposition import bt_tree
from cutdecomp.oracles import oracle_chromatic
from cutdecomp.planarity import is_planar


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=600)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    started = time.perf_counter()
    stats = Counter()
    slack = Counter()
    for g in random_corpus(args.count, seed=args.seed):
        t = bt_tree(g)
        stats["graphs"] += 1
        stats["with single cutsets"] += bool(t.cutsets)
        for a in t.parts:
            stats["block parts" if a.kind.is_block else "cycle parts"] += 1
        if g.n <= 9:
            stats["planar (n<=9)"] += is_planar(g)
        stats["critical"] += is_critical(g, t).is_critical
        chi = oracle_chromatic(g)
        for cert in (color_via_augmented(g, t), color_parts_plus_one(g, t), color_blocks_plus_one(g, t)):
            slack[(cert.strategy, cert.colors_used - chi)] += 1
    for key, value in stats.items():
        print(f"{key}: {value}")
    print("colors used minus chromatic number, per strategy:")
    for (strategy, gap), count in sorted(slack.items()):
        print(f"  {strategy:10s} +{gap}: {count}")
    print(f"elapsed: {time.perf_counter() - started:.1f}s")


if __name__ == "__main__":
    main()
