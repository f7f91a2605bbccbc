"""Qualitative independence relations between propositions.

Three relations over one distribution, from weakest to strongest test:

* Zadeh relatedness: the conjunction's possibility departs from the min
  of the conjuncts' possibilities.
* weak independence: the conclusion stays accepted when conditioning on
  the other proposition.
* strong independence: the conclusion keeps its exact positive necessity
  when conditioning on the other proposition.

Each of the latter two also has a "direct" formulation written purely in
terms of the four cell possibilities; the pairs must agree everywhere,
which the law catalog checks exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .logic import Formula, Not, Or, model_mask
from .measures import Dist, cond_nec, nec, poss


@dataclass(frozen=True)
class IndepReport:
    """Relation verdicts plus the four cell possibilities behind them."""

    unrelated_z: bool
    weak: bool
    strong: bool
    poss_ac: int
    poss_a_nc: int
    poss_na_c: int
    poss_na_nc: int


def _cells(d: Dist, a: Formula, c: Formula) -> tuple[int, int, int, int]:
    n = d.vocab.n
    full = (1 << d.vocab.world_count) - 1
    a_mask = model_mask(a, n)
    c_mask = model_mask(c, n)
    return (
        d.poss_mask(a_mask & c_mask),
        d.poss_mask(a_mask & (full ^ c_mask)),
        d.poss_mask((full ^ a_mask) & c_mask),
        d.poss_mask((full ^ a_mask) & (full ^ c_mask)),
    )


def related_z(d: Dist, a: Formula, c: Formula) -> bool:
    """Zadeh relatedness: poss(a & c) differs from min(poss(a), poss(c))."""
    pac, panc, pnac, _ = _cells(d, a, c)
    pa = max(pac, panc)
    pc = max(pac, pnac)
    return pac != min(pa, pc)


def strong_indep(d: Dist, a: Formula, c: Formula) -> bool:
    """Conditioning on a leaves the conclusion's necessity positive and unchanged."""
    n_c = nec(d, c)
    return n_c > 0 and cond_nec(d, c, a) == n_c


def strong_indep_direct(d: Dist, a: Formula, c: Formula) -> bool:
    """Cell form of strong independence: poss(a) > poss(!c) = poss(a & !c)."""
    pac, panc, pnac, pnanc = _cells(d, a, c)
    pa = max(pac, panc)
    pnc = max(panc, pnanc)
    return pa > pnc and pnc == panc


def weak_indep(d: Dist, a: Formula, c: Formula) -> bool:
    """Conclusion accepted outright and still accepted given a."""
    return nec(d, c) > 0 and cond_nec(d, c, a) > 0


def weak_indep_direct(d: Dist, a: Formula, c: Formula) -> bool:
    """Cell form of weak independence."""
    pac, panc, pnac, pnanc = _cells(d, a, c)
    return pac > panc and max(pac, pnac) > pnanc


def contraction_dep(d: Dist, a: Formula, c: Formula) -> bool:
    """Accepted conclusion whose disjunction with a adds nothing to a's necessity."""
    return nec(d, c) > 0 and nec(d, a) >= nec(d, Or(a, c))


def cond_weak_indep(d: Dist, conclusion: Formula, context: Formula, extra: Formula) -> bool:
    """Conclusion accepted in the context and still accepted with the extra fact."""
    if cond_nec(d, conclusion, context) <= 0:
        return False
    return cond_nec(d, conclusion, context & extra) > 0


def classify(d: Dist, a: Formula, c: Formula) -> IndepReport:
    """All three relation verdicts for the pair, with witness cells."""
    pac, panc, pnac, pnanc = _cells(d, a, c)
    pa = max(pac, panc)
    pc = max(pac, pnac)
    pnc = max(panc, pnanc)
    return IndepReport(
        unrelated_z=pac == min(pa, pc),
        weak=pac > panc and pc > pnanc,
        strong=pa > pnc and pnc == panc,
        poss_ac=pac,
        poss_a_nc=panc,
        poss_na_c=pnac,
        poss_na_nc=pnanc,
    )


def recover_strict_order(d: Dist, a: Formula, c: Formula) -> bool:
    """Strict comparative possibility poss(a) > poss(c), read off a strong
    independence test between the disjunction and the negated side."""
    return strong_indep(d, Or(a, c), Not(c))
