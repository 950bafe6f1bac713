import dataclasses
from fractions import Fraction

import pytest

from domroots.dompoly import compose_with_complete, dom_poly_bruteforce
from domroots.errors import BudgetExhaustedError, DomainError
from domroots.graph import substitute_complete
from domroots.realroots import NOTE_EXACT, RationalInterval, RootEnclosure
from domroots.witness import (
    CASE_11,
    CASE_2,
    CASE_EXACT,
    SearchBudget,
    certificate_from_json,
    certificate_to_json,
    construct_witness,
    family_graph,
    family_polynomial,
    target_interval,
    verify_certificate,
)


def F(x):
    return Fraction(x)


def test_target_interval_identity():
    i = target_interval(F("-1.5"), F("0.1"), 1)
    assert (i.lo, i.hi) == (F("-1.6"), F("-1.4"))


def test_target_interval_cubed():
    i = target_interval(F("-1.5"), F("0.1"), 3)
    assert (i.lo, i.hi) == (F("-152/125"), F("-133/125"))  # (-1.216, -1.064)


def test_target_interval_case2_widening_example():
    i = target_interval(F(-3), F("0.5"), 3)
    assert (i.lo, i.hi) == (F("-133/8"), F("-35/8"))  # (-16.625, -4.375)


def test_target_interval_rejects_even_m():
    with pytest.raises(DomainError):
        target_interval(F(-1), F("0.1"), 2)


def test_target_interval_rejects_bad_eps():
    with pytest.raises(DomainError):
        target_interval(F(-1), F(0), 3)


def test_target_interval_monotone_and_widening():
    # lo < hi always for odd m; widths grow without bound left of -2
    for z in (F("-2.5"), F(-5), F(-10)):
        prev = None
        for m in (1, 3, 5):
            i = target_interval(z, F("0.1"), m)
            assert i.lo < i.hi
            if prev is not None:
                assert i.width > prev
            prev = i.width


def test_exact_shortcut_zero():
    cert = construct_witness(F(0), F("0.5"))
    assert cert.case_tag == CASE_EXACT
    assert cert.family_kind == "exact_K2"
    assert cert.enclosure.note == NOTE_EXACT
    assert cert.enclosure.interval.lo == 0
    assert verify_certificate(cert).ok


def test_exact_shortcut_minus_two():
    cert = construct_witness(F(-2), F("0.05"))
    assert cert.enclosure.interval.lo == -2
    assert verify_certificate(cert).ok


def test_witness_case_11():
    cert = construct_witness(F("-1.5"), F("0.05"))
    assert cert.case_tag == CASE_11
    assert cert.family_kind == "K_2_ell"
    assert cert.family_param % 2 == 1
    assert cert.m % 2 == 1
    enc = cert.enclosure
    assert F("-1.55") < enc.interval.lo and enc.interval.hi < F("-1.45")
    assert verify_certificate(cert).ok


def test_witness_small_enough_to_bruteforce():
    # K_{3,3}[K_1] has 6 vertices: the composed polynomial must equal the
    # brute-force domination polynomial of the substituted graph
    cert = construct_witness(F("-0.75"), F("0.1"))
    g = family_graph(cert.family_kind, cert.family_param)
    assert g.n * cert.m <= 20
    composed = compose_with_complete(family_polynomial(cert.family_kind, cert.family_param), cert.m)
    direct = dom_poly_bruteforce(substitute_complete(g, cert.m))
    assert composed.coeffs == direct.coeffs
    assert verify_certificate(cert).ok


def test_witness_case_2_star_sequence():
    cert = construct_witness(F(-7), F("0.5"))
    assert cert.case_tag == CASE_2
    assert cert.family_kind == "star"
    # a star root certified near 7 exists (r_12 is the first above 6.5)
    assert cert.m == 1 and cert.family_param == 12
    enc = cert.enclosure
    assert F("-7.5") < enc.interval.lo and enc.interval.hi < F("-6.5")
    # 13 vertices: cross-validate against the actual graph
    g = family_graph(cert.family_kind, cert.family_param)
    composed = compose_with_complete(family_polynomial(cert.family_kind, cert.family_param), cert.m)
    assert composed.coeffs == dom_poly_bruteforce(substitute_complete(g, 1)).coeffs
    assert verify_certificate(cert).ok


def test_witness_straddling_minus_one_clips_left():
    cert = construct_witness(F(-1), F("0.1"))
    assert cert.case_tag == CASE_11
    assert cert.enclosure.interval.hi < -1
    assert verify_certificate(cert).ok


def test_witness_determinism():
    a = construct_witness(F("-1.9"), F("0.01"))
    b = construct_witness(F("-1.9"), F("0.01"))
    assert a == b


def test_witness_rejects_positive_target():
    with pytest.raises(DomainError):
        construct_witness(F(1), F("0.1"))


def test_witness_rejects_bad_eps():
    with pytest.raises(DomainError):
        construct_witness(F(-1), F(0))


def test_budget_exhaustion_carries_frontier():
    tiny = SearchBudget(max_m=1, max_param=3, max_degree=10)
    with pytest.raises(BudgetExhaustedError) as exc:
        construct_witness(F("-9.37"), F("1/1000"), tiny)
    frontier = exc.value.frontier
    assert frontier["max_param"] == 3
    assert frontier["cells_tested"] >= 1
    assert "nonexistence" in str(exc.value)


def test_budget_validation():
    with pytest.raises(DomainError):
        SearchBudget(max_m=0)


def test_verify_rejects_tampered_interval():
    cert = construct_witness(F("-1.5"), F("0.05"))
    shifted = RootEnclosure(
        RationalInterval(
            cert.enclosure.interval.lo + F("1/2"), cert.enclosure.interval.hi + F("1/2")
        ),
        cert.enclosure.sign_lo,
        cert.enclosure.sign_hi,
        cert.enclosure.note,
    )
    bad = dataclasses.replace(cert, enclosure=shifted)
    report = verify_certificate(bad)
    assert not report.ok
    failed = {c.name for c in report.checks if not c.passed}
    assert "enclosure_within_window" in failed


def test_verify_rejects_even_m():
    cert = construct_witness(F("-1.5"), F("0.05"))
    bad = dataclasses.replace(cert, m=cert.m + 1, composed_degree=cert.composed_degree)
    report = verify_certificate(bad)
    assert not report.ok
    failed = {c.name for c in report.checks if not c.passed}
    assert "substitution_order_odd" in failed


def test_verify_rejects_even_family_parameter():
    cert = construct_witness(F("-0.75"), F("0.1"))
    bad = dataclasses.replace(cert, family_param=cert.family_param + 1)
    report = verify_certificate(bad)
    assert not report.ok


def test_verify_rejects_wrong_degree():
    cert = construct_witness(F("-1.5"), F("0.05"))
    bad = dataclasses.replace(cert, composed_degree=cert.composed_degree + 1)
    assert not verify_certificate(bad).ok


def test_verify_report_is_readable():
    report = verify_certificate(construct_witness(F(0), F("0.1")))
    text = str(report)
    assert "[pass]" in text and "FAIL" not in text


def test_certificate_json_round_trip():
    cert = construct_witness(F("-1.9"), F("0.1"))
    assert certificate_from_json(certificate_to_json(cert)) == cert


def test_certificate_json_fields():
    import json

    cert = construct_witness(F("-2.5"), F("0.1"))
    obj = json.loads(certificate_to_json(cert))
    assert obj["family"]["kind"] == "star"
    assert obj["case_tag"] == "case-2"
    assert "/" in obj["enclosure"]["lo"]
    assert obj["enclosure"]["sign_lo"] * obj["enclosure"]["sign_hi"] == -1
