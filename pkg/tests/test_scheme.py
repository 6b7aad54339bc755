"""
Scheme parsing, rendering and numerical characteristics
"""
import sys

import pytest

from harness import run_tests

from errors import EmptySchemeError, SchemeSyntaxError
from scheme import ComplexScheme, Kind, Oval, parse_scheme, preorder, render_scheme, stats

SAMPLE = "J 1-<2-> 2+"


def test_parse_sample_scheme():
    s = parse_scheme(SAMPLE)
    assert s.kind is Kind.ODD
    inner = Oval(-1)
    assert s.top == (Oval(-1, (inner, inner)), Oval(1), Oval(1))


def test_whitespace_is_ignored():
    assert parse_scheme(" J1-< 2- >2+ ") == parse_scheme(SAMPLE)
    assert parse_scheme("1+\t<\n1->") == parse_scheme("1+<1->")


def test_j_anywhere_at_top_level():
    assert parse_scheme("2+ J 1-<2->") == parse_scheme("J 2+ 1-<2->")
    assert render_scheme(parse_scheme("2+ J")) == "J 2+"


def test_empty_odd_scheme():
    s = parse_scheme("J")
    assert s.is_odd and s.top == ()
    assert render_scheme(s) == "J"


SYNTAX_ERRORS = [
    ("J 1-<", 4),
    ("1+<>", 3),
    ("0+", 0),
    ("1*", 1),
    ("J J", 2),
    ("1+<J>", 3),
    ("1", 1),
]


def test_syntax_errors_carry_position():
    for text, position in SYNTAX_ERRORS:
        with pytest.raises(SchemeSyntaxError) as info:
            parse_scheme(text)
        assert info.value.position == position, text


def test_empty_even_scheme_rejected():
    with pytest.raises(EmptySchemeError):
        parse_scheme("   ")
    with pytest.raises(EmptySchemeError):
        ComplexScheme(Kind.EVEN, ())


def test_render_collapses_equal_neighbours():
    s = ComplexScheme(Kind.EVEN, (Oval(1), Oval(1), Oval(-1), Oval(1)))
    assert render_scheme(s) == "2+ 1- 1+"
    assert str(parse_scheme("1+ 1+<1- 1->")) == "1+ 1+<2->"


def test_preorder_depths_and_parents():
    flat = preorder(parse_scheme(SAMPLE))
    assert [d for _, d, _ in flat] == [0, 1, 1, 0, 0]
    assert [p for _, _, p in flat] == [None, 0, 0, None, None]


def test_sample_counts():
    st = stats(parse_scheme(SAMPLE))
    assert (st.l, st.lambda_plus, st.lambda_minus) == (5, 2, 3)
    # both inner ovals share the outer sign: two negative pairs
    assert (st.pi_plus, st.pi_minus) == (0, 2)
    assert st.beta0 == 6
    assert st.outer_ovals == 3
    assert (st.n, st.n_plus, st.n_zero, st.n_minus) == (2, 2, 0, 0)


def test_region_parity_and_euler():
    st = stats(parse_scheme(SAMPLE))
    assert [r.parity for r in st.regions] == [0, 1, 0, 0, 1, 1]
    assert [r.euler for r in st.regions] == [-2, -1, 1, 1, 1, 1]
    assert [(r.lambda_plus, r.lambda_minus) for r in st.regions] == [
        (0, 0), (0, 1), (0, 2), (0, 2), (1, 0), (1, 0)]


def test_positive_pair_when_signs_differ():
    st = stats(parse_scheme("1+<1->"))
    assert (st.pi_plus, st.pi_minus) == (1, 0)
    assert [o.pi_plus for o in st.ovals] == [1, 1]
    assert st.kind is Kind.EVEN and st.beta0 == 2


def test_odd_oval_classes():
    # odd ovals: depth 1 with 0, 1 and 2 children
    st = stats(parse_scheme("1+<1+ 1-<1+> 1+<2->>"))
    assert (st.n, st.n_plus, st.n_zero, st.n_minus) == (3, 1, 1, 1)


def test_summary_is_plain_dict():
    summary = stats(parse_scheme(SAMPLE)).summary()
    assert summary["kind"] == "odd"
    assert summary["l"] == 5


if __name__ == "__main__":
    sys.exit(run_tests(globals(), "SCHEME TESTS"))
