#!/usr/bin/env python3
"""Regenerate src/twyang/data/exceptional_pairs.json from root data.

    python3 scripts/build_catalogue.py          # rewrite the shipped file
    python3 scripts/build_catalogue.py --check  # exit 1 if it is stale
"""

import argparse
import sys
from pathlib import Path

from twyang.exceptional import catalogue_text

TARGET = Path(__file__).resolve().parents[1] / "src" / "twyang" / "data" / "exceptional_pairs.json"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    text = catalogue_text()
    if args.check:
        same = TARGET.exists() and TARGET.read_text(encoding="utf-8") == text
        print("up to date" if same else f"{TARGET} differs from the derivation")
        return 0 if same else 1
    TARGET.write_text(text, encoding="utf-8")
    print(f"wrote {TARGET}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
