"""
Even-Type Validation

Random non-empty even-type schemes:
- the profile has no breakpoint at 1/4 and sig_x = sig_{1/2 - x}
- sig + nul ≡ l - 1 (mod 2)
- |sig - σ₋₁| + nul <= η₋₁ in each of the three cases
  (l even / l odd with one outer oval / l odd with several)

Acceptance gate: zero failures inside Gates.even_type_s
"""
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Corpus, Gates, Seeds
from curve import HALF, QUARTER, even_bounds_check, mirror_symmetric, profile
from errors import CurveSigError
from scheme import Kind
from validation.corpus import random_scheme
from validation.suite import banner, finish_suite, main, new_log, run_section


def check_even(schemes, cases):
    points = [Fraction(x) for x in Corpus.even_symmetry_points]
    checks, failures = 0, []
    for scheme in tqdm(schemes, desc="even type"):
        name = str(scheme)
        try:
            prof = profile(scheme)
            report = even_bounds_check(scheme)
        except CurveSigError as e:
            checks += 1
            failures.append({"scheme": name, "check": "raised", "error": str(e)})
            continue

        cases[report.case] = cases.get(report.case, 0) + 1
        problems = []
        if QUARTER in prof.breakpoints:
            problems.append("jump at 1/4")
        if not mirror_symmetric(prof):
            problems.append("profile not symmetric about 1/4")
        for x in points:
            if prof.sig_at(x) != prof.sig_at(HALF - x):
                problems.append(f"sig at {x} != sig at {HALF - x}")
        if not report.parity_ok:
            problems.append(f"sig + nul = {report.sig + report.nul}, l = {report.l}")
        if not report.bound_ok:
            problems.append(f"{report.case}: {report.lhs} > {report.rhs}")

        checks += 4 + len(points)
        if problems:
            failures.append({"scheme": name, "check": "even_type", "problems": problems})
    return checks, failures


def run_even_type():
    """
    Returns
    -------
    results : dict
    passed : bool
    """
    rng = np.random.default_rng(Seeds.master + 1)

    banner("EVEN-TYPE VALIDATION")
    print(f"\nSchemes: {Corpus.even_schemes} (1 <= l <= {Corpus.even_max_ovals})")
    log = new_log("even_type")

    schemes = [random_scheme(rng, Corpus.even_max_ovals, Corpus.crosscheck_max_depth, Kind.EVEN)
               for _ in range(Corpus.even_schemes)]
    cases = {}
    sections = [
        run_section("even_type", Gates.even_type_s, lambda: check_even(schemes, cases), log),
    ]
    for case, count in sorted(cases.items()):
        print(f"  {case}: {count} schemes")
    return finish_suite("even_type", sections, log, cases=cases)


if __name__ == "__main__":
    main(run_even_type, "Even-type validation")
