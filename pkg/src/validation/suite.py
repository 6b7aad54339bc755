"""
Shared plumbing for the acceptance-suite runners

Every suite is a list of timed sections. A section returns (checks,
failures) and passes when it has no failures and finished inside its
budget; the suite passes when every section does.
"""
import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from runlog import RunLog
from schemas import check_document


def banner(title):
    print("=" * 70)
    print(title)
    print("=" * 70)


def run_section(name, budget_s, body, log):
    """
    Time one section and print its gate line

    Parameters
    ----------
    name : str
    budget_s : float
    body : callable () -> (int, list of dict)
    log : RunLog

    Returns
    -------
    dict
    """
    print(f"\n[{name}]")
    start = time.perf_counter()
    checks, failures = body()
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed <= budget_s

    mark = "✓ PASS" if passed else "✗ FAIL"
    print(f"{mark}: {checks - len(failures)}/{checks} checks in {elapsed:.2f}s (budget {budget_s:.0f}s)")
    for failure in failures[:10]:
        print(f"    {failure}")
    if len(failures) > 10:
        print(f"    ... {len(failures) - 10} more")

    log.record(name, ok=passed, checks=checks, failures=len(failures),
               elapsed_s=round(elapsed, 3), budget_s=budget_s)
    return {
        "name": name,
        "checks": checks,
        "failures": failures,
        "elapsed_s": elapsed,
        "budget_s": budget_s,
        "passed": passed,
    }


def finish_suite(suite, sections, log, **extra):
    """Fold section results into one suite document and save the run log"""
    results = {
        "suite": suite,
        "checks": sum(s["checks"] for s in sections),
        "failures": [dict(f, section=s["name"]) for s in sections for f in s["failures"]],
        "elapsed_s": sum(s["elapsed_s"] for s in sections),
        "budget_s": sum(s["budget_s"] for s in sections),
        "passed": all(s["passed"] for s in sections),
        "sections": sections,
    }
    results.update(extra)
    check_document("suite", results)

    print()
    banner(f"{suite.upper()} SUITE: {'✓ PASS' if results['passed'] else '✗ FAIL'}")
    log.record("suite", ok=results["passed"], checks=results["checks"],
               failures=len(results["failures"]))
    log.save_log()
    return results, results["passed"]


def main(run, description):
    """argparse `--out` entry point shared by the runners"""
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--out", type=str, required=True, help="Output JSON file")
    args = parser.parse_args()

    results, passed = run()

    outpath = Path(args.out)
    outpath.parent.mkdir(parents=True, exist_ok=True)
    with open(outpath, "w") as f:
        json.dump(results, f, indent=2, default=str)

    print(f"\n✓ Results saved to {outpath}")
    sys.exit(0 if passed else 1)


def new_log(suite):
    return RunLog(f"validate_{suite}")
