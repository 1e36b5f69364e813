#!/usr/bin/env python3
"""Run every verification suite at its default (acceptance) size and
print a per-check report.  Exit code 0 iff everything passes.

Usage: python3 scripts/run_all_checks.py [suite ...]
"""

import sys
import time

from mockeis import verify


def main() -> int:
    names = sys.argv[1:] or list(verify.SUITES)
    failures = 0
    total = 0
    for name in names:
        start = time.perf_counter()
        results = verify.run_suite(name)
        elapsed = time.perf_counter() - start
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            detail = f" [{result.detail}]" if result.detail else ""
            print(f"{status} {result.name}{detail}")
            failures += 0 if result.passed else 1
        total += len(results)
        print(f"-- suite {name}: {len(results)} checks in {elapsed:.2f}s")
    print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
