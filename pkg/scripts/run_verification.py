#!/usr/bin/env python3
"""Run the default claim suite and write the report files.

Usage:
    python scripts/run_verification.py [report_dir] [--quick]

Equivalent to `arfrf verify --suite default --report-dir reports`, kept as a
plain script so a suite run is one command away from a fresh checkout.
"""

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from arfrf.verifier import SUITES, VerifyConfig, aggregate_ok, verify_all


def main() -> int:
    args = [a for a in sys.argv[1:] if not a.startswith("--")]
    report_dir = Path(args[0]) if args else Path("reports")
    suite = "quick" if "--quick" in sys.argv[1:] else "default"
    config = VerifyConfig(**SUITES[suite])

    report_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    reports = verify_all(config)
    for report in reports:
        print(f"{report.claim_id:20s} {report.status:24s} checked={report.checked}")
        path = report_dir / f"{report.claim_id}.json"
        path.write_text(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    ok = aggregate_ok(reports)
    print(f"{len(reports)} claims in {time.perf_counter() - started:.1f}s "
          f"-> {'ok' if ok else 'FAIL'} (reports in {report_dir})")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
