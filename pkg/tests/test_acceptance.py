"""Acceptance suite: one test per criterion, every check exact.

Each criterion runs its full grid at the stated scale and asserts both
correctness (zero tolerance -- these are identities and congruences
over exact integers/rationals) and the stated wall-time budget.
`pytest -v` therefore prints one pass/fail line per criterion.
"""

import json
import random
import time
from fractions import Fraction

from ivpverify import cli
from ivpverify.combinat import binom_int, catalan
from ivpverify.congruences import (
    check_catalan_form,
    check_conjecture_final,
    check_lemma_schmidt,
    check_theorem1,
    check_theorem2,
    conjecture_final_value,
)
from ivpverify.identities import (
    verify_chu_vandermonde,
    verify_recurrence,
    verify_sun_identity_one,
    verify_sun_identity_two,
    verify_telescoped_sum,
    verify_transformation,
)
from ivpverify.qpoly import check_q_sun, q_binom, q_specialization_check, q_sun_sum
from ivpverify.ratpoly import RatPoly, to_binomial_basis


def _within(budget_s, *reports):
    """Assert every report passed and the combined runtime fits the budget."""
    elapsed = sum(r.wall_time_s for r in reports)
    for r in reports:
        bad = [f"{c.label}: {c.witness}" for c in r.failures()]
        assert r.ok, f"{r.task} failed {r.failed}/{r.total}: {bad[:5]}"
    assert elapsed < budget_s, f"took {elapsed:.1f}s, budget {budget_s}s"
    cases = sum(r.total for r in reports)
    print(f"PASS {cases} cases in {elapsed:.2f}s (budget {budget_s}s)")


def test_criterion_01_transformation_identity_to_n40():
    _within(30, verify_transformation(40))


def test_criterion_02_recurrence_both_closed_forms_to_n38():
    report = verify_recurrence(40)
    families = {dict(c.key)["family"] for c in report.cases}
    assert families == {"base", "lhs", "rhs"}
    shifts = [dict(c.key)["n"] for c in report.cases if dict(c.key)["family"] == "lhs"]
    assert max(shifts) == 38
    _within(30, report)


def test_criterion_03_chu_vandermonde_to_k30():
    _within(5, verify_chu_vandermonde(30))


def test_criterion_04_weighted_sums_integer_valued_l4_n25():
    _within(120, check_theorem1(4, 25))


def test_criterion_05_squared_weight_theorem_and_catalan_form():
    _within(
        60,
        check_theorem2(25),
        check_catalan_form(25),
        verify_telescoped_sum(100),
    )


def test_criterion_06_schmidt_coefficients_divisible_l3_n20():
    _within(30, check_lemma_schmidt(3, 20))


def test_criterion_07_congruence_mod_n_squared_l4_n50():
    report = check_conjecture_final(4, 50)
    # Open rows must be distinguishable from proved ones in the output.
    for c in report.cases:
        expected = "theorem" if dict(c.key)["l"] == 1 else "conjecture"
        assert c.severity == expected
    _within(120, report)


def test_criterion_08_q_congruence_and_specialization_n20():
    q_report = check_q_sun(20)
    q1_report = q_specialization_check(20)
    # Cell-for-cell match against the classical l=1 column.
    for n in range(1, 21):
        for k in range(n):
            assert q_sun_sum(n, k).eval_at_one() == conjecture_final_value(1, n, k).value
    _within(60, q_report, q1_report)


def test_criterion_09_half_integer_identities_to_n30():
    _within(10, verify_sun_identity_one(30), verify_sun_identity_two(30))


def test_criterion_10_property_suites_and_determinism(tmp_path):
    t0 = time.perf_counter()

    # Binomial-basis round-trip at degree 60 with denominators up to 1000.
    rng = random.Random(20230814)
    for _ in range(12):
        coeffs = [
            Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000)) for _ in range(61)
        ]
        p = RatPoly(coeffs)
        assert to_binomial_basis(p).to_poly() == p

    # q-Pascal and symmetry through n = 30.
    for n in range(1, 31):
        for k in range(n + 1):
            v = q_binom(n, k).value
            step = q_binom(n - 1, k).value.shift(k)
            rhs = q_binom(n - 1, k - 1).value + step if k else step
            assert v == rhs
            assert v == q_binom(n, n - k).value
            assert v.eval_at_one() == binom_int(n, k)

    # Pascal and negation identities for the scalar binomial.
    for n in range(-20, 21):
        for k in range(1, 21):
            assert binom_int(n, k) == binom_int(n - 1, k - 1) + binom_int(n - 1, k)
    for n in range(1, 16):
        for k in range(16):
            assert binom_int(-n, k) == (-1) ** k * binom_int(n + k - 1, k)

    # Catalan consistency.
    for k in range(201):
        assert catalan(k) * (k + 1) == binom_int(2 * k, k)

    # Parallel output is byte-identical to serial, wall time aside.
    serial_csv, parallel_csv = tmp_path / "s.csv", tmp_path / "p.csv"
    base = ["conjecture-final", "--l-max", "2", "--n-max", "12", "--format", "csv"]
    assert cli.main(base + ["--jobs", "1", "--out", str(serial_csv)]) == 0
    assert cli.main(base + ["--jobs", "4", "--out", str(parallel_csv)]) == 0
    assert serial_csv.read_bytes() == parallel_csv.read_bytes()

    serial_json, parallel_json = tmp_path / "s.json", tmp_path / "p.json"
    base = ["all", "--l-max", "1", "--n-max", "6", "--k-max", "6",
            "--x-min", "-3", "--x-max", "3", "--format", "json"]
    assert cli.main(base + ["--jobs", "1", "--out", str(serial_json)]) == 0
    assert cli.main(base + ["--jobs", "3", "--out", str(parallel_json)]) == 0
    left = json.loads(serial_json.read_text())
    right = json.loads(parallel_json.read_text())
    left.pop("meta"), right.pop("meta")
    assert left == right

    print(f"PASS property suites + determinism in {time.perf_counter() - t0:.2f}s")
