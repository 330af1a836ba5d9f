#!/usr/bin/env python3
"""Run the full verification suite and write a JSON report.

Exit status is nonzero when any check fails, so this doubles as a CI
gate.  Use --n-max to deepen or shallow every check uniformly."""
import argparse
import json
import sys

from snake_atlas.verify import run_all


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=None)
    parser.add_argument("--out", default=None, help="optional JSON report path")
    args = parser.parse_args()

    reports = run_all(args.n_max)
    for r in reports:
        line = f"{r.check_id:18s} {r.status:4s} {r.elapsed:8.2f}s"
        if r.counterexample:
            line += f"  {r.counterexample}"
        print(line)
    payload = [r.to_json() for r in reports]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
        print(f"report written to {args.out}")
    failures = [r for r in reports if r.status != "pass"]
    print(f"{len(reports) - len(failures)}/{len(reports)} checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
