"""Run the obstruction census and write the table, per-order counts and the classification report.

    python scripts/run_census.py --max-n 8 --jobs 8 --out results/census8.tsv
"""

import argparse
import time
from collections import Counter
from pathlib import Path

from diplanar.search import CensusConfig, census_table, enumerate_quartic_eulerian, obstruction_census, verify_theorem5
from diplanar.search import OBSTRUCTION_SEARCH


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", type=Path, help="write the census table here")
    args = parser.parse_args()

    start = time.perf_counter()
    entries = obstruction_census(CensusConfig(n_max=args.max_n, jobs=args.jobs))
    took = time.perf_counter() - start

    searched = {n: sum(1 for _ in enumerate_quartic_eulerian(n, OBSTRUCTION_SEARCH)) for n in range(1, args.max_n + 1)}
    found = Counter(e.vertex_count for e in entries)
    digon_free = Counter(e.vertex_count for e in entries if not e.digons)
    print("n\tsearched\tobstructions\tdigon-free")
    for n in range(1, args.max_n + 1):
        print(f"{n}\t{searched[n]}\t{found[n]}\t{digon_free[n]}")
    print(f"total obstructions {len(entries)} in {took:.1f}s with {args.jobs} job(s)")
    unclassified = [e for e in entries if e.family.endswith("unclassified")]
    for e in unclassified:
        print(f"{e.family} n={e.vertex_count} arcs={list(e.graph.arcs)}")
    print("\n".join(verify_theorem5(entries).lines()))
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(census_table(entries))


if __name__ == "__main__":
    main()
