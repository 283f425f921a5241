from fractions import Fraction

import pytest

from bassinv.errors import (InconsistentDeductionError, InconsistentInputsError,
                            NoGradedFiberError)
from bassinv.invariants import (Bound, FamilyReport, Fiber, bass_verdict,
                                build_table, deduce_family)


def wahl_graded():
    return build_table(18, 1, 0, 0, graded=True)


def wahl_deformed():
    return build_table(16, 1, 0, 0, graded=False)


def wahl_report(deformed=None):
    fibers = (Fiber(Fraction(0), None, wahl_graded()),
              Fiber(Fraction(1), None, deformed or wahl_deformed()))
    return FamilyReport(family=None, fibers=fibers, graded_fiber_index=0,
                        chi_assumed_invariant=True)


class TestBound:
    def test_exact(self):
        b = Bound.exact(5)
        assert b.is_exact and b.value == 5 and b.render() == "5"

    def test_interval_collapses(self):
        assert Bound.interval(3, 3) == Bound.exact(3)
        assert Bound.interval(0, 2).render() == "[0,2]"

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            Bound.interval(2, 1)

    def test_unknown(self):
        b = Bound.unknown()
        assert not b.is_exact and b.render() == "?"
        with pytest.raises(ValueError):
            b.value


class TestBuildTable:
    def test_example_43(self):
        t = wahl_graded()
        assert t.b01 == Bound.exact(1)
        assert t.b11 == Bound.exact(1)
        assert t.b10 == Bound.exact(17)
        assert t.b20 == Bound.exact(17)
        assert (t.chi0, t.chi1, t.chi2) == \
            (Bound.exact(-1), Bound.exact(16), Bound.exact(-1))
        assert t.chi(3) == Bound.exact(0)
        assert t.alpha() == Bound.exact(0)

    def test_a1(self):
        t = build_table(1, 0, 0, 0, graded=True)
        assert t.b01 == Bound.exact(0) and t.b11 == Bound.exact(0)
        assert t.b10 == Bound.exact(1) and t.b20 == Bound.exact(1)
        assert (t.chi0.value, t.chi1.value, t.chi2.value) == (0, 1, 0)

    def test_deformed_fiber_before_deduction(self):
        t = wahl_deformed()
        assert t.b01 == Bound.exact(1)
        assert t.b10 == Bound.interval(0, 16)
        assert t.b11 == Bound.unknown()
        assert t.b20 == Bound.exact(15)
        assert t.chi2 == Bound.exact(-1)
        assert t.chi1 == Bound.unknown()

    def test_inconsistent_inputs(self):
        with pytest.raises(InconsistentInputsError):
            build_table(5, 6, 0, 0, graded=True)  # p_g > tau
        with pytest.raises(InconsistentInputsError):
            build_table(5, 1, 1, 1, graded=True)  # p_g < g + l
        with pytest.raises(InconsistentInputsError):
            build_table(-1, 0, 0, 0, graded=True)

    def test_genus_and_loops_enter_b01(self):
        t = build_table(10, 4, 1, 2, graded=True)
        assert t.b01 == Bound.exact(1)
        assert t.chi0 == Bound.exact(-1)


class TestTablePattern:
    @pytest.mark.parametrize("table", [wahl_graded(), wahl_deformed(),
                                       build_table(1, 0, 0, 0, True)])
    def test_vanishing_off_diagonals(self, table):
        for p in range(0, 7):
            for q in range(-5, 4):
                if p + q not in (1, 2):
                    assert table.entry(p, q) == Bound.exact(0), (p, q)

    @pytest.mark.parametrize("table", [wahl_graded(), wahl_deformed()])
    def test_h2_row_vanishes(self, table):
        for p in range(0, 7):
            assert table.entry(p, 2) == Bound.exact(0)

    @pytest.mark.parametrize("table", [wahl_graded(), wahl_deformed()])
    def test_negative_q_diagonals_equal_tau(self, table):
        for q in range(-1, -5, -1):
            assert table.entry(1 - q, q) == Bound.exact(table.tau)
            assert table.entry(2 - q, q) == Bound.exact(table.tau)

    @pytest.mark.parametrize("table", [wahl_graded(), wahl_deformed(),
                                       build_table(1, 0, 0, 0, True)])
    def test_chi_vanishes_for_p_ge_3(self, table):
        for p in range(3, 9):
            assert table.chi(p) == Bound.exact(0)

    @pytest.mark.parametrize("tau,p_g", [(18, 1), (1, 0), (8, 1), (4, 0)])
    def test_chi2_is_minus_pg(self, tau, p_g):
        for graded in (True, False):
            t = build_table(tau, p_g, 0, 0, graded)
            assert t.chi2 == Bound.exact(-p_g)

    @pytest.mark.parametrize("tau,p_g,g,l", [(18, 1, 0, 0), (1, 0, 0, 0),
                                             (10, 4, 1, 2), (7, 3, 0, 1)])
    def test_graded_alternating_sums_vanish(self, tau, p_g, g, l):
        t = build_table(tau, p_g, g, l, graded=True)
        for q in range(-6, 3):
            total = sum((-1) ** p * t.entry(p, q).value for p in range(0, 10))
            assert total == 0, q

    def test_chi_consistent_with_entries_when_graded(self):
        t = wahl_graded()
        for p in range(0, 6):
            total = sum((-1) ** q * t.entry(p, q).value
                        for q in range(-6, 3))
            assert t.chi(p).value == total


class TestDeduceFamily:
    def test_wahl_deduction(self):
        out = deduce_family(wahl_report())
        t = out.fibers[1].table
        assert t.b11 == Bound.exact(0)
        assert t.b10 == Bound.exact(16)
        assert t.b01 == Bound.exact(1)
        assert t.chi1 == Bound.exact(16)
        assert t.alpha() == Bound.exact(1)

    def test_graded_fiber_not_contradicted(self):
        out = deduce_family(wahl_report())
        t = out.fibers[0].table
        assert t.b11 == Bound.exact(1)
        assert t.b10 == Bound.exact(17)

    def test_idempotent(self):
        once = deduce_family(wahl_report())
        twice = deduce_family(once)
        assert once == twice

    def test_intervals_only_shrink(self):
        before = wahl_report()
        after = deduce_family(before)
        for f0, f1 in zip(before.fibers, after.fibers):
            for name in ("b01", "b10", "b11"):
                b0 = getattr(f0.table, name).bounds_or(0, None)
                b1 = getattr(f1.table, name).bounds_or(0, None)
                assert b1[0] >= b0[0]
                assert b0[1] is None or (b1[1] is not None and b1[1] <= b0[1])

    def test_tau_15_is_inconsistent(self):
        bad = wahl_report(deformed=build_table(15, 1, 0, 0, graded=False))
        with pytest.raises(InconsistentDeductionError):
            deduce_family(bad)

    def test_requires_acknowledgment(self):
        report = wahl_report()
        report = FamilyReport(report.family, report.fibers, 0,
                              chi_assumed_invariant=False)
        with pytest.raises(InconsistentDeductionError):
            deduce_family(report)

    def test_requires_fully_exact_graded_fiber(self):
        fibers = (Fiber(Fraction(0), None, wahl_deformed()),)
        report = FamilyReport(None, fibers, 0, True)
        with pytest.raises(NoGradedFiberError):
            deduce_family(report)


class TestBassVerdict:
    def test_negative_answer(self):
        t = deduce_family(wahl_report()).fibers[1].table
        v = bass_verdict(t)
        assert v.nk0_vanishes == "yes"
        assert v.nk_minus1_rank == Bound.exact(1)
        assert v.answer_to_bass == "negative"
        assert "K_0(R) ⊕ stF[s,t]" in v.k0_polynomial_ring_description

    def test_graded_fiber_criterion_not_met(self):
        v = bass_verdict(wahl_graded())
        assert v.nk0_vanishes == "no"
        assert v.answer_to_bass == "not_a_counterexample"

    def test_a1_not_a_counterexample(self):
        v = bass_verdict(build_table(1, 0, 0, 0, graded=True))
        assert v.nk0_vanishes == "yes"
        assert v.nk_minus1_rank == Bound.exact(0)
        assert v.answer_to_bass == "not_a_counterexample"

    def test_undetermined_without_deduction(self):
        v = bass_verdict(wahl_deformed())
        assert v.nk0_vanishes == "undetermined"
        assert v.answer_to_bass == "undetermined"

    def test_higher_rank_description(self):
        t = build_table(10, 3, 0, 0, graded=False)
        t = deduce_family(FamilyReport(
            None,
            (Fiber(Fraction(0), None, build_table(10, 3, 0, 0, True)),
             Fiber(Fraction(1), None, t)),
            0, True)).fibers[1].table
        # chi1 = 7 - 3 = 4; tau = 10 gives b11 in [0, 6]: undetermined here
        assert bass_verdict(t).answer_to_bass == "undetermined"


class TestRendering:
    def test_text_grid_shows_forced_zero_marker(self):
        text = wahl_graded().render_text()
        assert "·" in text
        assert "chi^1 = 16" in text

    def test_json_and_text_agree(self):
        for table in (wahl_graded(), wahl_deformed(),
                      deduce_family(wahl_report()).fibers[1].table):
            doc = table.to_json()
            for cell in doc["entries"]:
                bound = table.entry(cell["p"], cell["q"])
                assert bound.to_json().items() <= cell.items()
                if cell["forced_zero"]:
                    assert cell == {**cell, "kind": "exact", "value": 0}
            for p in range(3):
                assert doc["chi"][str(p)] == table.chi(p).to_json()

    def test_interval_and_unknown_render(self):
        t = wahl_deformed()
        text = t.render_text()
        assert "[0,16]" in text and "?" in text
