#!/usr/bin/env python3
"""Run the full verification suite and write the summary JSON.

Usage: python scripts/run_verification.py [OUT.json]
"""

import sys
import time

from arrangement_lab.jsonio import atomic_write_text, canonical_dumps, suite_to_obj
from arrangement_lab.verify import run_suite


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "verification_summary.json"
    start = time.time()
    summary = run_suite(["all"])
    elapsed = time.time() - start
    width = max(len(r.prop) for r in summary.results)
    for result in summary.results:
        params = " ".join(f"{k}={v}" for k, v in result.params.items())
        print(f"{result.prop:<{width}}  {result.verdict:<4}  {params}")
    print(f"\n{len(summary.results)} checks, all_pass={summary.all_pass}, {elapsed:.1f}s")
    atomic_write_text(out, canonical_dumps(suite_to_obj(summary)))
    print(f"summary written to {out}")
    return 0 if summary.all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
