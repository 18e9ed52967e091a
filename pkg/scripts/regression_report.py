#!/usr/bin/env python3
"""Run the embedded fixtures and write a grouped report (stdout or a file).

    python3 scripts/regression_report.py --scope all --out report.txt
"""

import argparse
import sys
import time
from collections import Counter, defaultdict

from twyang.fixtures import SCOPES, run


def main() -> int:
    ap = argparse.ArgumentParser(description="grouped fixture report")
    ap.add_argument("--scope", choices=SCOPES, default="all")
    ap.add_argument("--max-rank", type=int, default=8)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    t0 = time.perf_counter()
    results = run(args.scope, args.max_rank)
    by_status = defaultdict(list)
    for r in results:
        by_status[r.status].append(r)
    lines = []
    counts = Counter(r.status for r in results)
    lines.append(f"scope={args.scope} max_rank={args.max_rank} "
                 f"time={time.perf_counter() - t0:.1f}s  " + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
    for status in ("FAIL", "FLAGGED"):
        if by_status[status]:
            lines.append(f"\n{status}")
            lines += [f"  [{r.criterion or '-'}] {r.case}  {r.detail}" for r in by_status[status]]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if counts["FAIL"] else 0


if __name__ == "__main__":
    sys.exit(main())
