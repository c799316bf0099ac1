import pytest

from distcat import checks


class TestFinsetChecks:
    @pytest.mark.parametrize("name", checks.CHECK_NAMES)
    def test_passes_at_mixed_sizes(self, name):
        report = checks.run_check(name, "finset", sizes=(2, 1, 3), seed=5)
        assert report.verdict == "pass"
        assert report.params["sizes"] == [2, 1, 3]
        assert report.encodings == "lex/1"

    def test_degenerate_sizes(self):
        for name in checks.CHECK_NAMES:
            assert checks.run_check(name, "finset", sizes=(0, 0, 0)).verdict == "pass"

    def test_negative_sizes_rejected(self):
        report = checks.run_check("distrib", "finset", sizes=(-1, 1, 1))
        assert report.verdict == "rejected-input"

    def test_oversized_exponential_rejected(self):
        report = checks.run_check("curry", "finset", sizes=(3, 3, 3 + 7))
        assert report.verdict == "rejected-input"
        assert "cap" in report.detail


class TestHeytingChecks:
    def test_divisor_lattice_all_triples(self):
        report = checks.run_check(
            "distrib", "heyting", lattice={"kind": "divisors", "n": 30}
        )
        assert report.verdict == "pass"
        assert "512" in report.detail

    def test_single_triple_reports_value(self):
        report = checks.run_check(
            "distrib",
            "heyting",
            lattice={"kind": "divisors", "n": 30},
            objects=["6", "10", "15"],
        )
        assert report.verdict == "pass"
        assert report.detail.endswith("= 6")

    def test_unknown_object_rejected(self):
        report = checks.run_check(
            "distrib",
            "heyting",
            lattice={"kind": "divisors", "n": 30},
            objects=["6", "10", "7"],
        )
        assert report.verdict == "rejected-input"

    def test_m3_rejected_with_witness(self):
        elements = ["0", "x", "y", "z", "1"]
        leq = [[i == j or i == 0 or j == 4 for j in range(5)] for i in range(5)]
        report = checks.run_check(
            "mediator",
            "heyting",
            lattice={"kind": "explicit", "elements": elements, "leq": leq},
        )
        assert report.verdict == "rejected-input"
        assert len(report.counterexample["witness"]) == 3

    def test_missing_lattice(self):
        report = checks.run_check("distrib", "heyting")
        assert report.verdict == "rejected-input"

    def test_downset_spec(self):
        report = checks.run_check(
            "curry",
            "heyting",
            lattice={"kind": "downset", "points": ["p", "q"], "relation": []},
        )
        assert report.verdict == "pass"


class TestTermChecks:
    @pytest.mark.parametrize("name", checks.CHECK_NAMES)
    def test_passes(self, name):
        report = checks.run_check(name, "terms", trials=4, seed=11)
        assert report.verdict == "pass"
        assert "indistinguishable-under-trials" in report.detail

    def test_term_eq_pass(self):
        left = "dom: X×X\ncod: X\nterm: π₁\n"
        report = checks.check_term_eq(left, left, trials=4, max_base_size=2, seed=0)
        assert report.verdict == "pass"

    def test_term_eq_distinct(self):
        left = "dom: X×X\ncod: X\nterm: π₁\n"
        right = "dom: X×X\ncod: X\nterm: π₂\n"
        report = checks.check_term_eq(left, right, trials=4, max_base_size=2, seed=0)
        assert report.verdict == "fail"
        assert report.counterexample["witness_sizes"] == {"X": 2}
        assert report.counterexample["left_table"]["map"] != report.counterexample[
            "right_table"
        ]["map"]

    def test_term_eq_parse_error(self):
        report = checks.check_term_eq("nonsense", "dom: X\ncod: X\nterm: id_X\n", 4, 2, 0)
        assert report.verdict == "rejected-input"

    def test_term_eq_type_mismatch(self):
        left = "dom: X\ncod: X\nterm: id_X\n"
        right = "dom: Y\ncod: Y\nterm: id_Y\n"
        report = checks.check_term_eq(left, right, trials=4, max_base_size=2, seed=0)
        assert report.verdict == "rejected-input"


class TestSweeps:
    def test_finset_sweep_counts(self):
        reports = checks.sweep_finset(1, seed=7)
        assert len(reports) == 8 * len(checks.CHECK_NAMES)
        assert checks.summarize(reports)["passed"] == len(reports)

    def test_heyting_sweep(self):
        reports = checks.sweep_heyting(2, seed=0)
        # 1 + 1 + 3 posets, four checks each.
        assert len(reports) == 5 * len(checks.CHECK_NAMES)
        assert checks.summarize(reports)["passed"] == len(reports)
        assert all("poset" in r.params for r in reports)

    def test_exit_codes(self):
        passing = checks.run_check("distrib", "finset", sizes=(1, 1, 1))
        rejected = checks.run_check("distrib", "heyting")
        failing = checks.check_term_eq(
            "dom: X×X\ncod: X\nterm: π₁\n", "dom: X×X\ncod: X\nterm: π₂\n", 4, 2, 0
        )
        assert checks.exit_code([passing]) == 0
        assert checks.exit_code([passing, failing]) == 1
        assert checks.exit_code([passing, failing, rejected]) == 2

    def test_mediator_side_scan(self):
        n1, n2 = checks.mediator_side_scan((2, 1, 1))
        assert n1 == 4**2 and n2 == 4**2
