#!/usr/bin/env python3
"""Run every built-in worked example and print the verdict table.

Equivalent to `veroav corpus`, kept as a script so the whole reproduction is
one command from a fresh checkout:

    python scripts/reproduce_worked_examples.py [--jobs N]
"""

import argparse
import sys

from veroav.corpus import run_corpus


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    results = run_corpus(jobs=args.jobs)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  verdict={str(r.verdict):<5}  {status}  {r.elapsed_ms:8.1f} ms")
        for failure in r.failures:
            print(f"    {failure}")
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} worked examples reproduced")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
