"""
Golden-Value Validation

Exact reproductions against fixed reference values:
- sig/η of J 1⁻⟨2⁻⟩ 2⁺ at p = 7, b = 2
- the full step-function listing of the same scheme (tests/golden)
- the p = 3 hand formulas for three families, α + β <= 12
- p = 3 prohibition of the odd_nest and double_nest M-schemes
- the u2-u3 fiber linking number of Γ(J)

Acceptance gate: zero failures, each section inside its time budget
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Families, Gates, Paths
from curve import curve_data, family_scheme_text, hand_formula, profile, sig_eta, HAND_FAMILIES
from exact import fiber_linking, format_rational, linking_matrix, solve
from graph import plumbing_matrix
from prohibit import Verdict, family, mt_check, rohlin_mishachev
from scheme import parse_scheme
from validation.suite import banner, finish_suite, main, new_log, run_section

ROOT = Path(__file__).parent.parent.parent
GOLDEN_PROFILE = ROOT / Paths.golden / "sample_profile.json"

# (|sig_{1/3}|, η_3) at the p = 3 witness
FAMILY_WITNESSES = {
    ("odd_nest", 4): (6, 26),
    ("odd_nest", 7): (30, 89),
    ("odd_nest", 10): (70, 188),
    ("double_nest", 5): (11, 42),
    ("double_nest", 6): (19, 63),
    ("double_nest", 8): (41, 117),
}


def load_golden():
    with open(GOLDEN_PROFILE) as f:
        return json.load(f)


def check_sample_value(golden):
    ref = golden["invariants"]
    value = sig_eta(parse_scheme(golden["scheme"]), ref["p"], ref["b"])
    got = [value.sig, value.eta]
    if got == [ref["sig"], ref["eta"]]:
        return 1, []
    return 1, [{"p": ref["p"], "b": ref["b"], "expected": [ref["sig"], ref["eta"]], "got": got}]


def check_golden_profile(golden):
    prof = profile(parse_scheme(golden["scheme"]))
    lines = prof.lines()
    expected = golden["lines"]
    failures = [
        {"line": i, "expected": want, "got": got}
        for i, (want, got) in enumerate(zip(expected, lines))
        if want != got
    ]
    if len(lines) != len(expected):
        failures.append({"expected_lines": len(expected), "got_lines": len(lines)})
    if prof.nul != golden["nul"]:
        failures.append({"expected_nul": golden["nul"], "got_nul": prof.nul})
    return len(expected) + 1, failures


def check_hand_formulas():
    cases = [
        (fam, alpha, beta)
        for fam in HAND_FAMILIES
        for alpha in range(Families.hand_formula_max_sum + 1)
        for beta in range(Families.hand_formula_max_sum + 1 - alpha)
        if alpha + beta
    ]
    failures = []
    for fam, alpha, beta in tqdm(cases, desc="hand formulas"):
        text = family_scheme_text(fam, alpha, beta)
        value = sig_eta(parse_scheme(text), 3, 1)
        expected = hand_formula(fam, alpha, beta)
        if (value.sig, value.eta) != expected:
            failures.append({"scheme": text, "expected": list(expected),
                             "got": [value.sig, value.eta]})
    return len(cases), failures


def check_families(rows):
    runs = [("odd_nest", k) for k in Families.odd_nest_k]
    runs += [("double_nest", k) for k in Families.double_nest_k]
    failures = []
    for name, k in tqdm(runs, desc="families"):
        scheme = family(name, k)
        m = 2 * k + 1
        report = mt_check(scheme, m)
        w = report.witness
        problems = []
        if not rohlin_mishachev(scheme, m):
            problems.append("Rohlin-Mishachev fails")
        if report.verdict is not Verdict.PROHIBITED:
            problems.append(f"verdict {report.verdict.value}")
        elif (w.p, w.b) != (3, 1):
            problems.append(f"witness at p={w.p}, b={w.b}")
        elif (name, k) in FAMILY_WITNESSES and (abs(w.sig), w.eta) != FAMILY_WITNESSES[(name, k)]:
            problems.append(f"witness |sig|={abs(w.sig)}, eta={w.eta}")
        else:
            print(f"  {name} k={k}: {abs(w.sig)} + {w.eta} > {w.bound}")
            rows.append({"family": name, "k": k, "m": m, "scheme": str(scheme),
                         "sig": w.sig, "eta": w.eta, "bound": w.bound})
        if problems:
            failures.append({"family": name, "k": k, "problems": problems})
    return len(runs), failures


def check_linking():
    gamma = curve_data(parse_scheme("J")).gamma
    failures = []
    if fiber_linking(gamma, 1, 2) != Fraction(1, 2):
        failures.append({"pair": "u2,u3", "got": format_rational(fiber_linking(gamma, 1, 2))})
    L = linking_matrix(gamma)
    if L[1, 2] != Fraction(1, 2) or L[2, 1] != Fraction(1, 2):
        failures.append({"pair": "u2,u3", "matrix_entry": format_rational(L[1, 2])})
    x = solve(plumbing_matrix(gamma), [0, 1, 0, 0])
    if list(x) != [1, 0, Fraction(-1, 2), Fraction(-1, 2)]:
        failures.append({"solve": [format_rational(v) for v in x]})
    return 3, failures


def run_golden():
    """
    Run every golden-value section

    Returns
    -------
    results : dict
        suite document (see schemas.SUITE_SCHEMA) with per-section detail
    passed : bool
        True if every section passed inside its budget
    """
    banner("GOLDEN-VALUE VALIDATION")
    log = new_log("golden")
    golden = load_golden()
    witnesses = []

    sections = [
        run_section("sample_value", Gates.sample_value_s,
                    lambda: check_sample_value(golden), log),
        run_section("golden_profile", Gates.golden_profile_s,
                    lambda: check_golden_profile(golden), log),
        run_section("hand_formulas", Gates.hand_formula_s, check_hand_formulas, log),
        run_section("families", Gates.families_s, lambda: check_families(witnesses), log),
        run_section("linking", Gates.sample_value_s, check_linking, log),
    ]
    listing = profile(parse_scheme(golden["scheme"])).lines()
    return finish_suite("golden", sections, log, scheme=golden["scheme"],
                        profile=listing, witnesses=witnesses)


if __name__ == "__main__":
    main(run_golden, "Golden-value validation")
