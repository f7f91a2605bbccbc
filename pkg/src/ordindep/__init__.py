"""Ordinal possibility distributions, qualitative independence relations,
and exception-tolerant ranking of default-rule bases."""

from .logic import (
    FALSE,
    TRUE,
    And,
    Atom,
    Formula,
    Not,
    Or,
    Vocabulary,
    format_formula,
    iff,
    implies,
    model_mask,
    models,
)
from .measures import (
    Dist,
    TriState,
    cond_nec,
    cond_poss,
    entails,
    nec,
    poss,
    qpo_geq,
)
from .independence import (
    IndepReport,
    classify,
    cond_weak_indep,
    contraction_dep,
    recover_strict_order,
    related_z,
    strong_indep,
    strong_indep_direct,
    weak_indep,
    weak_indep_direct,
)
from .ranking import (
    ConsistencyError,
    Rule,
    RuleBase,
    RuleOrigin,
    StratifiedRanking,
    check_rational_monotony,
    compute_pi_star,
    inject_independence,
    priority_necessities,
    query,
    stratify,
    tolerates,
)
from .parsing import (
    IndepDirective,
    ParseError,
    ParsedDocument,
    format_dist,
    format_rule,
    parse_dist,
    parse_formula,
    parse_kb,
)
from .lawlab import (
    CATALOG,
    DEFAULT_BUDGET,
    BudgetError,
    Counterexample,
    CriterionReport,
    DistEnsemble,
    Law,
    LawReport,
    ProbeReport,
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

__version__ = "0.1.0"

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Atom",
    "Formula",
    "Not",
    "Or",
    "Vocabulary",
    "format_formula",
    "iff",
    "implies",
    "model_mask",
    "models",
    "Dist",
    "TriState",
    "cond_nec",
    "cond_poss",
    "entails",
    "nec",
    "poss",
    "qpo_geq",
    "IndepReport",
    "classify",
    "cond_weak_indep",
    "contraction_dep",
    "recover_strict_order",
    "related_z",
    "strong_indep",
    "strong_indep_direct",
    "weak_indep",
    "weak_indep_direct",
    "ConsistencyError",
    "Rule",
    "RuleBase",
    "RuleOrigin",
    "StratifiedRanking",
    "check_rational_monotony",
    "compute_pi_star",
    "inject_independence",
    "priority_necessities",
    "query",
    "stratify",
    "tolerates",
    "IndepDirective",
    "ParseError",
    "ParsedDocument",
    "format_dist",
    "format_rule",
    "parse_dist",
    "parse_formula",
    "parse_kb",
    "CATALOG",
    "DEFAULT_BUDGET",
    "BudgetError",
    "Counterexample",
    "CriterionReport",
    "DistEnsemble",
    "Law",
    "LawReport",
    "ProbeReport",
    "check_law",
    "completeness_probe_exact",
    "completeness_probe_sampled",
    "count_dists",
    "criteria_table",
    "enumerate_dists",
    "generator_formulas",
    "lab_vocabulary",
    "law_by_id",
    "realized_relation",
    "relation_axioms_hold",
    "run_catalog",
]
