"""Exception-tolerant default rules and the ranking they induce.

A rule "A |~ B" reads "if A, normally B".  A rule is tolerated by a set
of rules when some world verifies it (satisfies A and B) while breaking
no rule in the set.  Repeatedly peeling off the tolerated rules splits a
consistent base into strata of increasing specificity; a base where the
peeling gets stuck is inconsistent.

The induced distribution puts every world as high as the strata allow:
top for worlds violating nothing, and one step below the top stratum it
violates otherwise.  Each rule then holds with necessity equal to its
stratum index plus one, which is reported as the rule's priority.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .logic import And, Formula, Not, Or, Vocabulary, model_mask
from .measures import Dist, TriState, cond_nec, entails, nec


class RuleOrigin(enum.Enum):
    USER = "user"
    INDEPENDENCE = "independence"


@dataclass(frozen=True)
class Rule:
    """Default rule: antecedent normally brings about the consequent."""

    antecedent: Formula
    consequent: Formula
    origin: RuleOrigin = RuleOrigin.USER

    def material(self) -> Formula:
        """Material counterpart, satisfied unless the rule is violated."""
        return Or(Not(self.antecedent), self.consequent)


@dataclass(frozen=True)
class RuleBase:
    vocab: Vocabulary
    rules: tuple[Rule, ...]

    def deduped(self) -> "RuleBase":
        """Drop structural repeats of (antecedent, consequent), keeping the first."""
        seen = set()
        kept = []
        for r in self.rules:
            key = (r.antecedent, r.consequent)
            if key not in seen:
                seen.add(key)
                kept.append(r)
        return RuleBase(self.vocab, tuple(kept))

    def extended(self, rule: Rule) -> "RuleBase":
        return RuleBase(self.vocab, self.rules + (rule,))


class ConsistencyError(Exception):
    """Raised when no remaining rule is tolerated by the rest."""

    def __init__(self, residual: tuple[Rule, ...], vocab: Vocabulary):
        self.residual = residual
        self.vocab = vocab
        super().__init__(f"inconsistent rule base: {len(residual)} rule(s) tolerate no order")


def _verif_mask(rule: Rule, n: int) -> int:
    return model_mask(rule.antecedent, n) & model_mask(rule.consequent, n)


def _viol_mask(rule: Rule, n: int) -> int:
    full = (1 << (1 << n)) - 1
    return model_mask(rule.antecedent, n) & (full ^ model_mask(rule.consequent, n))


def tolerates(others: tuple[Rule, ...], rule: Rule, vocab: Vocabulary) -> bool:
    """Some world verifies the rule while breaking none of the others.

    Including the rule itself among the others changes nothing, since a
    verifying world always satisfies the rule's own material form.
    """
    n = vocab.n
    mask = _verif_mask(rule, n)
    for other in others:
        if not mask:
            return False
        mask &= model_mask(other.material(), n)
    return mask != 0


def stratify(kb: RuleBase) -> tuple[frozenset[int], ...]:
    """Partition rule indices into tolerance strata, most general first.

    Works on the base as given (callers wanting dedup do it beforehand).
    Raises ConsistencyError when the remaining rules tolerate none of
    their own, and ValueError on an empty base.
    """
    if not kb.rules:
        raise ValueError("rule base has no rules")
    remaining = list(range(len(kb.rules)))
    strata: list[frozenset[int]] = []
    while remaining:
        pool = tuple(kb.rules[j] for j in remaining)
        tolerated = [i for i in remaining if tolerates(pool, kb.rules[i], kb.vocab)]
        if not tolerated:
            raise ConsistencyError(tuple(kb.rules[i] for i in remaining), kb.vocab)
        strata.append(frozenset(tolerated))
        remaining = [i for i in remaining if i not in set(tolerated)]
    return tuple(strata)


@dataclass(frozen=True)
class StratifiedRanking:
    """Stratification result plus the induced distribution.

    ``rules`` is the deduped rule tuple the strata and priorities refer
    to; ``priorities[i]`` is one plus the stratum of ``rules[i]``.
    """

    vocab: Vocabulary
    rules: tuple[Rule, ...]
    strata: tuple[frozenset[int], ...]
    pi_star: Dist
    priorities: tuple[int, ...]

    def query(self, evidence: Formula, conclusion: Formula) -> TriState:
        return entails(self.pi_star, evidence, conclusion)


def compute_pi_star(kb: RuleBase) -> StratifiedRanking:
    """Stratify the base and build its maximally compact distribution.

    Every world sits at the top level unless it violates a rule, in which
    case it sits one step below the level band of its highest violated
    stratum.  The result is checked to actually accept every rule; a
    failure there means the construction itself is broken.
    """
    base = kb.deduped()
    strata = stratify(base)
    vocab = base.vocab
    n = vocab.n
    m = len(strata)

    stratum_of = {}
    for s, members in enumerate(strata):
        for i in members:
            stratum_of[i] = s
    priorities = tuple(stratum_of[i] + 1 for i in range(len(base.rules)))

    viol_masks = [_viol_mask(r, n) for r in base.rules]
    levels = []
    for w in range(vocab.world_count):
        worst = -1
        for i, vm in enumerate(viol_masks):
            if (vm >> w) & 1 and stratum_of[i] > worst:
                worst = stratum_of[i]
        levels.append(m if worst < 0 else m - 1 - worst)
    pi_star = Dist(vocab, m, tuple(levels))

    for i, rule in enumerate(base.rules):
        if pi_star.poss_mask(_verif_mask(rule, n)) <= pi_star.poss_mask(viol_masks[i]):
            raise RuntimeError(f"ranking failed to accept rule {i}; stratification is broken")
    return StratifiedRanking(vocab, base.rules, strata, pi_star, priorities)


def priority_necessities(ranking: StratifiedRanking) -> tuple[int, ...]:
    """Necessity of each rule's material form under the induced distribution.

    For rules whose violation is satisfiable this matches the reported
    priority; a rule that cannot be violated pins at the top instead.
    """
    return tuple(nec(ranking.pi_star, r.material()) for r in ranking.rules)


def query(kb: RuleBase, evidence: Formula, conclusion: Formula) -> TriState:
    """One-shot: rank the base, then test the conclusion on the evidence."""
    return compute_pi_star(kb).query(evidence, conclusion)


def inject_independence(kb: RuleBase, context: Formula, extra: Formula, conclusion: Formula) -> RuleBase:
    """Append the rule "context and extra normally keep the conclusion".

    This is how an independence judgment enters the base: the extra fact
    must not disturb the conclusion inside the context.
    """
    return kb.extended(Rule(And(context, extra), conclusion, RuleOrigin.INDEPENDENCE))


def check_rational_monotony(d: Dist, a: Formula, b: Formula, c: Formula) -> bool:
    """Accepted conclusions survive extra evidence that is not itself rejected."""
    premise = cond_nec(d, a, b) > 0 and cond_nec(d, Not(c), b) == 0
    return (not premise) or cond_nec(d, a, And(b, c)) > 0
