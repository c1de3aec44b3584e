"""Finite-range growth audits: traces, flags, verdicts, closure checks."""

from fractions import Fraction
from math import factorial

import pytest

from seqasym import catalog
from seqasym.audit import (
    audit,
    audit_sequence,
    perturbation_check,
    product_closure_check,
    reduced_values,
)
from seqasym.errors import RangeError

SURVEY_N = 40

EXPECTED_VERDICTS = {
    "tournaments(d=1)": "evidence-consistent",
    "tournaments(d=2)": "evidence-consistent",
    "tournaments(d=3)": "evidence-consistent",
    "linear_orders(d=1)": "visibly-failing",
    "linear_orders(d=2)": "evidence-consistent",
    "linear_orders(d=3)": "evidence-consistent",
    "permutations(d=1)": "evidence-consistent",
    "permutations(d=2)": "evidence-consistent",
    "permutations(d=3)": "evidence-consistent",
    "matchings(d=1)": "evidence-consistent",
    "matchings(d=2)": "evidence-consistent",
    "matchings(d=3)": "evidence-consistent",
    "linear_matchings[/2]": "evidence-consistent",
    "unlabeled_tournaments": "evidence-consistent",
    "constant-1": "visibly-failing",
}


@pytest.mark.parametrize("A", catalog.catalog_classes(), ids=lambda A: A.name)
def test_catalog_survey_verdicts(A):
    rep = audit(A, SURVEY_N)
    assert rep.verdict == EXPECTED_VERDICTS[rep.class_name]


def test_tournament_ratio_trace_closed_form(tournaments1):
    rep = audit(tournaments1, SURVEY_N)
    for n in range(1, SURVEY_N + 1):
        assert rep.ratio(n) == Fraction(n, 2 ** (n - 1))
    # the ratio trace is strictly decreasing from n = 2 on
    assert all(b < a for a, b in zip(rep.ratio_trace[1:], rep.ratio_trace[2:]))
    assert rep.ratio_linear_bound and rep.midpoint_monotone
    assert rep.ratio_linear_witness == max(
        Fraction(n * n, 2 ** (n - 1)) for n in range(1, SURVEY_N + 1)
    )
    with pytest.raises(RangeError):
        rep.ratio(0)


def test_convolution_trace_concentrates_at_the_ends(tournaments1):
    """S_{n,r} is the normalized central convolution; it must stay near 2 u_r.

    Both boundary summands contribute exactly u_r, so S >= 2 u_r always, and
    for a sequence with fast-growing terms the interior adds almost nothing.
    """
    rep = audit(tournaments1, SURVEY_N)
    u = reduced_values(tournaments1, SURVEY_N)
    for r in (1, 2, 3):
        trace = rep.convolution_trace[r]
        assert len(trace) == SURVEY_N - 2 * r + 1
        for s in trace[-10:]:
            assert 2 * u[r] <= s <= 3 * u[r]


def test_flat_sequence_fails_visibly():
    rep = audit(catalog.constant_ones(), SURVEY_N)
    assert rep.verdict == "visibly-failing"
    assert set(rep.ratio_trace) == {Fraction(1)}
    assert not rep.ratio_linear_bound


def test_even_support_reindexing_changes_the_audited_object():
    # The raw even-index matching counts, reduced by (2i)!, shrink like
    # 1/(2^i i!), so the ratio trace grows linearly and the audit must say so.
    rep = audit(catalog.matchings_labeled(), SURVEY_N)
    assert rep.class_name == "matchings_labeled[/2]"
    assert rep.verdict == "visibly-failing"
    assert rep.ratio(SURVEY_N) == 2 * SURVEY_N
    # The same pairs counted with full linear labels pass.
    assert audit(catalog.linear_matchings(), SURVEY_N).verdict == "evidence-consistent"


def test_zero_inside_range_is_reported():
    rep = audit_sequence("gappy", [1, 1, 0, 1] + [1] * 47, 12)
    assert rep.verdict == "visibly-failing"
    assert rep.notes and "u_2 = 0" in rep.notes[0]
    assert rep.ratio_trace == (Fraction(1),)


def test_audit_domain_errors(tournaments1):
    with pytest.raises(RangeError):
        audit(tournaments1, 9)
    with pytest.raises(RangeError):
        audit(tournaments1, 20, r_max=0)
    with pytest.raises(RangeError):
        audit_sequence("short", [1, 2, 3], 12)


def test_product_closure(tournaments1, permutations1):
    rep = product_closure_check(permutations1, permutations1, SURVEY_N)
    assert rep.class_name == "permutations(d=1) * permutations(d=1)"
    assert rep.verdict == "evidence-consistent"
    assert product_closure_check(tournaments1, permutations1, SURVEY_N).verdict == (
        "evidence-consistent"
    )
    ones = catalog.constant_ones()
    assert product_closure_check(ones, ones, SURVEY_N).verdict == "visibly-failing"


def test_perturbation_reduces_to_plain_audit_when_zero(tournaments1):
    rep = perturbation_check(tournaments1, [0] * (SURVEY_N + 1), 1, SURVEY_N)
    base = audit(tournaments1, SURVEY_N)
    assert rep.ratio_trace == base.ratio_trace
    assert rep.convolution_trace == base.convolution_trace
    assert rep.verdict == base.verdict == "evidence-consistent"


def test_perturbation_unlabeled_tournaments_inherit(tournaments1):
    """t~_n = t_n/n! + (exponentially smaller symmetry terms)."""
    TU = catalog.unlabeled_tournaments()
    b = [
        Fraction(TU.value(n)) - Fraction(tournaments1.value(n), factorial(n))
        for n in range(21)
    ]
    rep = perturbation_check(tournaments1, b, 1, 20)
    assert rep.verdict == "evidence-consistent"
    assert rep.class_name == "1*tournaments(d=1) + perturbation"
    assert rep.notes and "|b/a| witness" in rep.notes[0]
    assert "(not shrinking)" not in rep.notes[0]
    # the perturbed sequence IS the unlabeled count, so traces coincide
    assert rep.ratio_trace == audit(TU, 20).ratio_trace


def test_perturbation_scaled_explicit_base():
    a = [Fraction(factorial(n)) for n in range(SURVEY_N + 1)]
    b = [Fraction(0)] + [Fraction(factorial(n - 1)) for n in range(1, SURVEY_N + 1)]
    rep = perturbation_check(a, b, 2, SURVEY_N)
    assert rep.verdict == "evidence-consistent"
    assert rep.class_name == "2*base + perturbation"
    assert "1/31 at n=31 -> 1/40 at n=40" in rep.notes[0]


def test_perturbation_length_checks(tournaments1):
    with pytest.raises(RangeError):
        perturbation_check(tournaments1, [0] * 10, 1, 20)
    with pytest.raises(RangeError):
        perturbation_check([1] * 10, [0] * 30, 1, 20)
