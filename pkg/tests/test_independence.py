from hypothesis import given

from ordindep import (
    TRUE,
    And,
    Atom,
    Dist,
    Not,
    Or,
    Vocabulary,
    classify,
    cond_weak_indep,
    contraction_dep,
    poss,
    recover_strict_order,
    related_z,
    strong_indep,
    strong_indep_direct,
    weak_indep,
    weak_indep_direct,
)

from strategies import dist_with_formulas

AC = Vocabulary(("a", "c"))
A, C = Atom(0), Atom(1)

WORKED = Dist(AC, 3, (1, 1, 2, 3))


class TestWorkedExample:
    def test_classify_report(self):
        rep = classify(WORKED, A, C)
        assert rep.unrelated_z
        assert rep.weak
        assert rep.strong
        assert (rep.poss_ac, rep.poss_a_nc, rep.poss_na_c, rep.poss_na_nc) == (3, 1, 2, 1)

    def test_strong_both_routes(self):
        assert strong_indep(WORKED, A, C)
        assert strong_indep_direct(WORKED, A, C)

    def test_disjunctive_evidence_still_strong(self):
        assert strong_indep(WORKED, Or(A, Not(C)), C)

    def test_no_contraction_dependence(self):
        assert not contraction_dep(WORKED, A, C)

    def test_conditional_weak_form(self):
        assert cond_weak_indep(WORKED, C, TRUE, A)

    def test_order_recovery(self):
        # poss(a) = 3 is not strictly above poss(c) = 3, but beats poss(!c) = 1
        assert not recover_strict_order(WORKED, A, C)
        assert recover_strict_order(WORKED, A, Not(C))


class TestFrozenWitnesses:
    def test_zadeh_relatedness(self):
        d = Dist(AC, 3, (1, 3, 2, 0))
        assert related_z(d, A, C)
        assert not related_z(WORKED, A, C)

    def test_weak_without_strong(self):
        d = Dist(AC, 3, (2, 0, 3, 2))
        assert weak_indep(d, A, C)
        assert not strong_indep(d, A, C)

    def test_strong_is_asymmetric(self):
        d = Dist(AC, 3, (0, 0, 3, 1))
        assert strong_indep(d, A, C)
        assert not strong_indep(d, C, A)

    def test_contraction_dependence_witness(self):
        d = Dist(AC, 3, (0, 0, 0, 3))
        assert contraction_dep(d, A, C)


class TestDefinitionAgreement:
    @given(dist_with_formulas(count=2))
    def test_strong_routes_agree(self, dfg):
        d, a, c = dfg
        assert strong_indep(d, a, c) == strong_indep_direct(d, a, c)

    @given(dist_with_formulas(count=2))
    def test_weak_routes_agree(self, dfg):
        d, a, c = dfg
        assert weak_indep(d, a, c) == weak_indep_direct(d, a, c)


class TestRelationChain:
    @given(dist_with_formulas(count=2))
    def test_strong_implies_weak_implies_unrelated(self, dfg):
        d, a, c = dfg
        rep = classify(d, a, c)
        if rep.strong:
            assert rep.weak
        if rep.weak:
            assert rep.unrelated_z

    @given(dist_with_formulas(count=2))
    def test_classify_matches_pieces(self, dfg):
        d, a, c = dfg
        rep = classify(d, a, c)
        assert rep.unrelated_z == (not related_z(d, a, c))
        assert rep.weak == weak_indep(d, a, c)
        assert rep.strong == strong_indep(d, a, c)

    @given(dist_with_formulas(count=2))
    def test_cells_populate_report(self, dfg):
        d, a, c = dfg
        rep = classify(d, a, c)
        assert rep.poss_ac == poss(d, And(a, c))
        assert rep.poss_a_nc == poss(d, And(a, Not(c)))
        assert rep.poss_na_c == poss(d, And(Not(a), c))
        assert rep.poss_na_nc == poss(d, And(Not(a), Not(c)))


class TestOrderRecovery:
    @given(dist_with_formulas(count=2))
    def test_matches_strict_level_comparison(self, dfg):
        d, a, c = dfg
        assert recover_strict_order(d, a, c) == (poss(d, a) > poss(d, c))
