import itertools

import pytest

from ordindep import (
    CATALOG,
    BudgetError,
    Vocabulary,
    check_law,
    completeness_probe_exact,
    completeness_probe_sampled,
    count_dists,
    criteria_table,
    enumerate_dists,
    generator_formulas,
    lab_vocabulary,
    law_by_id,
    realized_relation,
    relation_axioms_hold,
    run_catalog,
)
from ordindep import independence as ind
from ordindep.lawlab import (
    CRITERIA,
    RELATIONS,
    DistEnsemble,
    EnsembleOps,
    ScalarOps,
    _realized_relations,
    law_cost,
)

# confirmed by machine enumeration over both desk grids; every entry
# re-verified by the scalar backend on its concrete counterexample
FAILING_LAWS = frozenset({
    "strong-dep-disjunction-merge",
    "strong-symmetric",
    "strong-negation-transparent",
    "weak-min-form-not-implied",
    "weak-contraposition-split",
    "weak-or-merge-printed",
    "weak-or-conjunction-printed",
    "weak-disjunction-iff",
})

# criteria table at atoms=2, top=3; Weak x CCD flips to False at (3, 2)
TABLE_2_3 = {
    ("Zadeh", "CCD"): False, ("Zadeh", "CCI"): False,
    ("Zadeh", "CCD-r"): False, ("Zadeh", "CCI-r"): False,
    ("Zadeh", "DCI"): True, ("Zadeh", "DCI-r"): True,
    ("Zadeh", "DCD"): True, ("Zadeh", "DCD-r"): True,
    ("Strong", "CCD"): True, ("Strong", "CCI"): False,
    ("Strong", "CCD-r"): True, ("Strong", "CCI-r"): True,
    ("Strong", "DCI"): True, ("Strong", "DCI-r"): False,
    ("Strong", "DCD"): False, ("Strong", "DCD-r"): False,
    ("Weak", "CCD"): True, ("Weak", "CCI"): False,
    ("Weak", "CCD-r"): True, ("Weak", "CCI-r"): True,
    ("Weak", "DCI"): True, ("Weak", "DCI-r"): True,
    ("Weak", "DCD"): True, ("Weak", "DCD-r"): False,
}


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,top,expected",
        [(1, 1, 3), (1, 2, 5), (1, 3, 7), (2, 1, 15), (2, 2, 65),
         (2, 3, 175), (3, 1, 255), (3, 2, 6305), (3, 3, 58975)],
    )
    def test_count_matches_closed_form(self, n, top, expected):
        assert count_dists(n, top) == expected
        assert sum(1 for _ in enumerate_dists(n, top, budget=10**9)) == expected

    def test_all_normalized_and_unique(self):
        seen = set()
        for d in enumerate_dists(2, 2):
            assert max(d.levels) == d.top == 2
            assert d.levels not in seen
            seen.add(d.levels)

    def test_product_order(self):
        dists = list(enumerate_dists(2, 1))
        assert dists[0].levels == (0, 0, 0, 1)
        assert dists[-1].levels == (1, 1, 1, 1)

    def test_closed_under_world_permutation(self):
        tuples = {d.levels for d in enumerate_dists(2, 2)}
        for perm in itertools.permutations(range(4)):
            assert {tuple(t[p] for p in perm) for t in tuples} == tuples

    @pytest.mark.parametrize("n,top", [(0, 1), (4, 1), (1, 0), (1, 4)])
    def test_grid_bounds(self, n, top):
        with pytest.raises(ValueError):
            list(enumerate_dists(n, top))

    def test_budget_gate(self):
        with pytest.raises(BudgetError, match="exceeds budget"):
            list(enumerate_dists(3, 3, budget=10))


class TestGeneratorFormulas:
    @pytest.mark.parametrize("n,expected", [(1, 4), (2, 14), (3, 16)])
    def test_sizes(self, n, expected):
        vocab = lab_vocabulary(n)
        forms = generator_formulas(vocab)
        assert len(forms) == expected
        assert len(set(forms)) == expected


class TestBackendAgreement:
    def test_ops_agree_on_subsample(self):
        ens = DistEnsemble(2, 2)
        vec = EnsembleOps(ens)
        forms = generator_formulas(ens.vocab)
        picked = range(0, ens.count, 7)
        for a, c in itertools.product(forms[:7], forms[7:]):
            rows = {
                name: getattr(vec, name)(a, c)
                for name in ("related_z", "strong_indep", "weak_indep",
                             "strong_indep_direct", "weak_indep_direct")
            }
            for i in picked:
                sca = ScalarOps(ens.dist_at(i))
                for name, row in rows.items():
                    assert bool(row[i]) == getattr(sca, name)(a, c), (name, i)


class TestCheckLaw:
    def test_true_law_reports_full_cost(self):
        law = law_by_id("poss-disjunction-max")
        rep = check_law(law, 2, 2)
        assert rep.holds
        assert rep.counterexample is None
        assert rep.evaluations == law_cost(law, 65, 14)

    def test_false_law_counterexample_reverifies(self):
        rep = check_law(law_by_id("strong-symmetric"), 2, 2)
        assert not rep.holds
        ce = rep.counterexample
        a, c = ce.formulas
        assert ind.strong_indep(ce.dist, a, c) != ind.strong_indep(ce.dist, c, a)

    def test_first_counterexample_is_deterministic(self):
        r1 = check_law(law_by_id("weak-contraposition-split"), 2, 2)
        r2 = check_law(law_by_id("weak-contraposition-split"), 2, 2)
        assert r1.counterexample == r2.counterexample

    def test_budget_gate(self):
        with pytest.raises(BudgetError):
            check_law(law_by_id("strong-symmetric"), 2, 3, budget=10)

    def test_law_by_id_unknown(self):
        with pytest.raises(KeyError):
            law_by_id("no-such-law")


class TestCatalog:
    def test_shape(self):
        assert len(CATALOG) == 72
        ids = [law.law_id for law in CATALOG]
        assert len(set(ids)) == 72
        assert all(0 <= law.arity <= 3 for law in CATALOG)
        assert all(law.note for law in CATALOG)

    def test_verdicts_at_2_3(self):
        reports = run_catalog(2, 3)
        assert {r.law_id for r in reports if not r.holds} == FAILING_LAWS
        for r in reports:
            assert r.holds == (r.counterexample is None)

    def test_budget_gate(self):
        with pytest.raises(BudgetError, match="full catalog"):
            run_catalog(2, 3, budget=1000)


class TestCriteriaTable:
    def test_verdicts_at_2_3(self):
        cells = criteria_table(2, 3, budget=20_000_000)
        assert len(cells) == len(RELATIONS) * len(CRITERIA) == 24
        got = {(c.relation, c.criterion): c.holds for c in cells}
        assert got == TABLE_2_3

    def test_default_budget_is_too_small_here(self):
        # the 24 cells at (2, 3) cost ~11.5M evaluations; callers must opt in
        with pytest.raises(BudgetError, match="criteria table"):
            criteria_table(2, 3)

    def test_failing_cells_carry_counterexamples(self):
        cells = criteria_table(2, 2)
        for c in cells:
            assert c.holds == (c.counterexample is None)


class TestRelationProbe:
    def test_realized_relation_counts(self):
        assert len(_realized_relations(1)) == 5
        assert len(_realized_relations(2)) == 125

    def test_exact_probe_printed(self):
        rep = completeness_probe_exact(mode="printed")
        assert (rep.atoms, rep.candidates, rep.satisfying, rep.realized) == (1, 256, 60, 5)
        assert len(rep.unrealized) == 55

    def test_exact_probe_schema(self):
        rep = completeness_probe_exact(mode="schema")
        assert (rep.atoms, rep.candidates, rep.satisfying, rep.realized) == (1, 64, 20, 5)
        assert len(rep.unrealized) == 15

    def test_axioms_sound_on_realized(self):
        for bits in _realized_relations(1):
            assert relation_axioms_hold(bits, 1, mode="printed")
            assert relation_axioms_hold(bits, 1, mode="schema")

    def test_unrealized_satisfier_exists(self):
        rep = completeness_probe_exact(mode="schema")
        bits = rep.unrealized[0]
        assert relation_axioms_hold(bits, 1, mode="schema")
        assert bits not in _realized_relations(1)

    def test_sampled_probe_pinned(self):
        rep = completeness_probe_sampled(samples=120, seed=0)
        assert (rep.candidates, rep.satisfying, rep.realized) == (120, 23, 0)
        rep = completeness_probe_sampled(samples=120, seed=0, mode="schema")
        assert (rep.candidates, rep.satisfying, rep.realized) == (120, 11, 0)

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            completeness_probe_exact(mode="nonsense")


class TestRealizedRelationKey:
    def test_relation_depends_only_on_preorder_and_zero_set(self):
        # the impossibility level is an absolute anchor: two distributions
        # with the same world preorder can still differ on which worlds sit
        # at level 0, and that changes the realized relation
        seen = {}
        for d in enumerate_dists(2, 3):
            order = sorted(set(d.levels))
            ranks = tuple(order.index(x) for x in d.levels)
            zeros = tuple(x == 0 for x in d.levels)
            rel = realized_relation(d)
            key = (ranks, zeros)
            assert seen.setdefault(key, rel) == rel
        assert len(seen) == 125
