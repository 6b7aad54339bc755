"""
Curve invariants: sig/η evaluation, closed forms, profiles, hand formulas,
even-type bounds and 𝔷 shape
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from harness import run_tests

from curve import (
    QUARTER,
    c_plus,
    candidate_breakpoints,
    closed_form_c,
    closed_form_delta,
    curve_data,
    even_bounds_check,
    even_sig,
    family_scheme_text,
    generic_nullity,
    hand_formula,
    interval_samples,
    mirror_symmetric,
    profile,
    sig_eta,
    structure_check,
)
from errors import BadParametersError, NotEvenTypeError
from scheme import parse_scheme

GOLDEN = Path(__file__).parent / "golden" / "sample_profile.json"
SAMPLE = parse_scheme("J 1-<2-> 2+")


def test_sample_value():
    value = sig_eta(SAMPLE, 7, 2)
    assert (value.sig, value.eta) == (-10, 1)


def test_bad_parameters():
    for p, b in ((9, 1), (2, 1), (7, 0), (7, 4), (-3, 1)):
        with pytest.raises(BadParametersError):
            sig_eta(SAMPLE, p, b)


def test_closed_forms_sample():
    assert closed_form_delta(SAMPLE) == -40
    assert curve_data(SAMPLE).delta == -40
    expected = (-6, 2, 3, 1, -3, 5, 5, 1, 1, 14, -10, -10, -2, -2)
    assert closed_form_c(SAMPLE) == expected
    assert curve_data(SAMPLE).c == expected


def test_closed_forms_even():
    s = parse_scheme("1+")
    assert closed_form_delta(s) == -4
    assert closed_form_c(s) == (4, -2, -2, 0, 2, -4)
    assert c_plus(s) == (4, -2, -2, 0, 2, -4, -2)


def test_j_alone_vanishes():
    s = parse_scheme("J")
    assert curve_data(s).c == (-2, 0, 1, 1)
    for p in (3, 5, 7):
        for b in range(1, (p - 1) // 2 + 1):
            value = sig_eta(s, p, b)
            assert (value.sig, value.eta) == (0, 0)
    assert profile(s).lines() == ["(0/1, 1/2) --> (0, 0)"]


def test_golden_profile_listing():
    with open(GOLDEN) as f:
        golden = json.load(f)
    prof = profile(parse_scheme(golden["scheme"]))
    assert prof.lines() == golden["lines"]
    assert prof.nul == golden["nul"] == 0


def test_composite_point_is_average_of_limits():
    prof = profile(SAMPLE)
    x = Fraction(3, 10)
    assert x in prof.breakpoints
    assert prof.sig_at(x) == -9
    assert prof.sig_at(Fraction(29, 100)) == -11
    assert prof.sig_at(Fraction(31, 100)) == -7


def test_breakpoints_come_from_c_plus():
    cuts = candidate_breakpoints(SAMPLE)
    assert Fraction(1, 14) in cuts and Fraction(3, 7) in cuts
    assert all(0 < x < Fraction(1, 2) for x in cuts)
    assert set(profile(SAMPLE).breakpoints) <= set(cuts)


def test_interval_samples_are_interior():
    lo, hi = Fraction(2, 7), Fraction(3, 10)
    samples = interval_samples(lo, hi, 14)
    assert len(samples) == 2 and samples[0][0] < samples[1][0]
    for p, b in samples:
        assert p > 14
        assert lo < Fraction(b, p) < hi


def test_sig_at_outside_range():
    with pytest.raises(BadParametersError):
        profile(SAMPLE).sig_at(Fraction(1, 2))


def test_odd_type_generic_nullity_is_zero():
    for text in ("J", "J 1+", "J 1-<1+>", "J 3+<1-> 1-"):
        assert generic_nullity(parse_scheme(text)) == 0


def test_eta_independent_of_b():
    for p in (5, 7, 11, 13):
        etas = {sig_eta(SAMPLE, p, b).eta for b in range(1, (p - 1) // 2 + 1)}
        assert len(etas) == 1, p


def test_hand_formula_spot_values():
    assert hand_formula("A", 0, 1) == (0, 0)
    value = sig_eta(parse_scheme("J 1-<1+>"), 3, 1)
    assert (value.sig, value.eta) == (0, 0)
    assert hand_formula("A", 12, 15)[1] == 26


def test_hand_formula_family_b():
    assert hand_formula("B", 0, 1) == (-1, 1)
    assert hand_formula("B", 1, 0) == (0, 0)
    assert hand_formula("B", 0, 2) == (-3, 0)
    for text, expected in (("J 1+<1+>", (-1, 1)), ("J 1+<1->", (0, 0))):
        value = sig_eta(parse_scheme(text), 3, 1)
        assert (value.sig, value.eta) == expected, text


def test_hand_formulas_respect_parity():
    # sig + η ≡ l (mod 2), with l = α + β + 1 for A and B, α + β + 2 for C
    for family, extra in (("A", 1), ("B", 1), ("C", 2)):
        for alpha in range(13):
            for beta in range(13 - alpha):
                if alpha + beta == 0:
                    continue
                sig, eta = hand_formula(family, alpha, beta)
                assert (sig + eta - alpha - beta - extra) % 2 == 0, (family, alpha, beta)


def test_hand_formulas_small_range():
    for family in ("A", "B", "C"):
        for alpha in range(5):
            for beta in range(5 - alpha):
                if alpha + beta == 0:
                    continue
                scheme = parse_scheme(family_scheme_text(family, alpha, beta))
                value = sig_eta(scheme, 3, 1)
                assert (value.sig, value.eta) == hand_formula(family, alpha, beta), \
                    (family, alpha, beta)


def test_family_scheme_text_omits_zero_counts():
    assert family_scheme_text("A", 0, 2) == "J 1-<2+>"
    assert family_scheme_text("C", 3, 1) == "J 1+<1+<3- 1+>>"
    with pytest.raises(BadParametersError):
        hand_formula("A", 0, 0)
    with pytest.raises(BadParametersError):
        hand_formula("D", 1, 1)


def test_even_type_at_bound():
    s = parse_scheme("1+<1->")
    prof = profile(s)
    assert prof.lines() == ["(0/1, 1/2) --> (1, 0)"]
    report = even_bounds_check(s)
    assert report.case == "l_even"
    assert (report.sigma_limit, report.eta_limit) == (1, 0)
    assert report.lhs == report.rhs == 0
    assert report.passed


def test_even_bounds_cases():
    for text, case in (("1+", "l_odd_one_outer"), ("3+", "l_odd_many_outer"),
                       ("2+", "l_even"), ("1-<2+>", "l_odd_one_outer")):
        s = parse_scheme(text)
        report = even_bounds_check(s)
        assert report.case == case
        assert report.passed, report
        assert QUARTER not in profile(s).breakpoints
        assert mirror_symmetric(profile(s))


def test_mirror_skips_prime_against_composite():
    # 1/3 carries its own value, its mirror 1/6 the average of its limits
    prof = profile(parse_scheme("1-<1-<1-<1+ 1->>> 1-<1+> 1-"))
    assert prof.sig_at(Fraction(1, 3)) == -7
    assert prof.sig_at(Fraction(1, 6)) == -6
    assert mirror_symmetric(prof)


def test_even_sig_requires_even_type():
    with pytest.raises(NotEvenTypeError):
        even_sig(SAMPLE)
    assert even_sig(parse_scheme("1+")) == 0


def test_structure_of_frak_z():
    for p in (3, 5, 7, 11, 13):
        assert structure_check(SAMPLE, p).conforms
        assert structure_check(parse_scheme("1+<1-> 2-"), p).conforms
    report = structure_check(SAMPLE, 3)
    assert report.frak_z == ("2:2(u3)",)


if __name__ == "__main__":
    sys.exit(run_tests(globals(), "CURVE INVARIANT TESTS"))
