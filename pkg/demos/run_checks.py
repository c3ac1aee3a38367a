"""Run every check suite over a handful of small types and summarise the outcome."""

import sys

from fusscat.checks import SUITES, report, run_suites

GROUPS = ["A2", "A3", "B2", "B3", "G2", "H3", "I2(5)"]

if __name__ == "__main__":
    recs = run_suites(list(SUITES), GROUPS, ks=(1, 2), ls=(1, 2))
    for r in recs:
        if r.status.endswith("FAIL"):
            print("failure:", r.id, r.parameters, r.witness)
    print(report(recs)["summary"])
    sys.exit(1 if any(r.status == "THEOREM_FAIL" for r in recs) else 0)
