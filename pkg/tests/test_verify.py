import random

import pytest

from hfree.cnf import formula
from hfree.graphs import Graph
from hfree.minones import MinOnesInstance
from hfree.patterns import cycle_graph, house_graph, make_pattern, named_pattern
from hfree.reductions import Polynomial
from hfree.solver import COMPLETION, DELETION, SandwichInstance
from hfree.verify import (
    EQUIVALENCE_TARGETS,
    VerificationReport,
    verify_duality,
    verify_gadget_contracts,
    verify_gap,
    verify_opt_scaling,
    verify_sat_equivalence,
)

GROW = Polynomial(1, 1, 1)


def test_equivalence_passes_on_every_target():
    f = formula(3, [(1, -2, 3)])
    for target in EQUIVALENCE_TARGETS:
        pattern = named_pattern("wheel4") if target.startswith("general") else None
        report = verify_sat_equivalence(f, target, pattern)
        assert report.verdict == "pass", report.result_line()
        assert report.details["sat"] == report.details["sandwich"] == "yes"


def test_equivalence_sees_unsatisfiable_formulas():
    unsat = formula(1, [(1, 1, 1), (-1, -1, -1)])
    for target in ("general-del", "general-comp"):
        report = verify_sat_equivalence(unsat, target, named_pattern("wheel4"))
        assert report.verdict == "pass"
        assert report.details["sat"] == report.details["sandwich"] == "no"


def test_equivalence_guards_and_argument_checks():
    big = formula(9, [(1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7)])
    report = verify_sat_equivalence(big, "c4-del")
    assert report.verdict == "skipped" and "guard" in report.details["reason"]
    f = formula(3, [(1, 2, 3)])
    with pytest.raises(ValueError, match="unknown equivalence target"):
        verify_sat_equivalence(f, "c6-del")
    with pytest.raises(ValueError, match="needs a pattern"):
        verify_sat_equivalence(f, "general-del")
    with pytest.raises(ValueError, match="fixes its own pattern"):
        verify_sat_equivalence(f, "c4-del", named_pattern("c4"))


def test_gap_yes_and_no_sides():
    square = cycle_graph(4)
    yes = SandwichInstance(square, named_pattern("c4"), DELETION, {(0, 1)})
    report = verify_gap(yes, "c4-del", GROW)
    assert report.verdict == "pass" and report.details["side"] == "yes"

    no = SandwichInstance(square, named_pattern("c4"), DELETION, set())
    report = verify_gap(no, "c4-del", GROW)
    assert report.verdict == "pass" and report.details["side"] == "no"

    sealed = SandwichInstance(square, named_pattern("c4"), COMPLETION, set())
    report = verify_gap(sealed, "c4-comp", GROW)
    assert report.verdict == "pass" and report.details["side"] == "no"

    roofless = SandwichInstance(house_graph(), named_pattern("house"), COMPLETION, set())
    report = verify_gap(roofless, "house-comp", GROW)
    assert report.verdict == "pass" and report.details["side"] == "no"

    wheel = named_pattern("wheel4")
    report = verify_gap(SandwichInstance(wheel.graph, wheel, DELETION, {(0, 1)}), "general-del", GROW)
    assert report.verdict == "pass" and report.details["side"] == "yes"

    report = verify_gap(yes, "house-del", GROW)
    assert report.verdict == "pass" and report.details["side"] == "yes"


def test_gap_guard_and_family_check():
    pentagon = cycle_graph(5)
    oversized = SandwichInstance(pentagon, named_pattern("c5"), DELETION, pentagon.edges)
    octa = named_pattern("octahedron")
    report = verify_gap(
        SandwichInstance(octa.graph, octa, DELETION, octa.graph.edges), "general-del", GROW
    )
    assert report.verdict == "skipped"
    with pytest.raises(ValueError, match="unknown lift family"):
        verify_gap(oversized, "c6-del", GROW)


def test_duality_on_random_graphs():
    rng = random.Random(19)
    for _ in range(8):
        n = rng.randint(4, 7)
        edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5}
        g = Graph(n, edges)
        name = rng.choice(("house", "c5", "p5"))
        report = verify_duality(g, named_pattern(name), rng.randint(0, 3))
        assert report.verdict == "pass", report.result_line()


def test_duality_guards():
    assert verify_duality(Graph(8, []), named_pattern("house"), 1).verdict == "skipped"
    assert verify_duality(Graph(5, []), named_pattern("house"), 4).verdict == "skipped"


def test_opt_scaling_reports():
    report = verify_opt_scaling(
        MinOnesInstance(2, (("f1", (0, 1, 1)), ("f2", (0,)))), 5, pendant_base=6
    )
    assert report.verdict == "pass"
    assert report.details["cost"] == 8 * report.details["ones"]

    report = verify_opt_scaling(MinOnesInstance(1, (("f2", (0,)),)), 5)
    assert report.verdict == "pass" and report.details["cost"] == 11

    report = verify_opt_scaling(MinOnesInstance(2, (("f2", (0,)),)), 5)
    assert report.verdict == "skipped" and "guard" in report.details["reason"]


def test_gadget_contract_report():
    report = verify_gadget_contracts()
    assert report.verdict == "pass"
    assert report.details["contracts"] == 6
    assert report.details["subsets"] > 1000


def test_fail_reports_carry_a_witness(monkeypatch):
    # a solver that refuses everything makes the satisfiable side disagree
    monkeypatch.setattr("hfree.verify.solve_sandwich", lambda *a, **k: None)
    report = verify_sat_equivalence(formula(3, [(1, 2, 3)]), "c4-del")
    assert report.verdict == "fail"
    assert "witness" in report.details
    assert report.result_line().startswith("RESULT fail sat-equivalence")


def test_result_lines_are_deterministic():
    f = formula(3, [(1, -2, 3)])
    first = verify_sat_equivalence(f, "c4-del").result_line()
    second = verify_sat_equivalence(f, "c4-del").result_line()
    assert first == second
    other = verify_sat_equivalence(formula(3, [(1, 2, 3)]), "c4-del").result_line()
    assert first.split()[3] != other.split()[3]


def test_report_line_shape():
    report = VerificationReport("demo", "abcdef123456", "pass", {"k": 1})
    assert report.result_line() == "RESULT pass demo digest=abcdef123456 k=1"
