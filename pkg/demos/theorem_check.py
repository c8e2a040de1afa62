"""Check the counting theorems over a small range and print the reports.

Run with ``python3 demos/theorem_check.py [max_sum]``.
"""
import sys

from benzels.verify import Budget, run_suite

max_sum = int(sys.argv[1]) if len(sys.argv) > 1 else 14
reports = run_suite("all", Budget(cells=150), max_sum)
for report in reports:
    print(report.summary())
print("all passed" if all(r.passed for r in reports) else "some checks failed")
