"""Check every named family member up to a size bound and print verdict, timing and structure."""

import argparse
import time

from diplanar.families import c3_digon_expansions, family_members
from diplanar.obstruction import is_obstruction
from diplanar.transform import find_antidigons, find_digons


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=14)
    args = parser.parse_args()

    rows = [(str(fid), g) for fid, g in family_members(args.max_n)]
    rows += [(f"c3-expansion[{i}]", g) for i, g in enumerate(c3_digon_expansions())]
    bad = 0
    print("family\tn\tdigons\tanti-digons\tcycles\tobstruction\tseconds")
    for name, g in rows:
        start = time.perf_counter()
        report = is_obstruction(g)
        took = time.perf_counter() - start
        bad += not report.verdict
        print(f"{name}\t{g.vertex_count}\t{len(find_digons(g))}\t{len(find_antidigons(g))}\t"
              f"{len(report.witnesses)}\t{'yes' if report.verdict else 'NO'}\t{took:.2f}")
    print(f"{len(rows) - bad}/{len(rows)} verified")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
