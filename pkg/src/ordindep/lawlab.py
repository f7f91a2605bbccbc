"""Exhaustive desk-scale checking of candidate laws.

Everything here quantifies over *all* normalized distributions for a small
vocabulary (up to 3 atoms) and scale (top up to 3), crossed with a fixed
finite formula generator set.  A law that survives such a sweep is not
proved, but a law that fails is definitively refuted, and every reported
counterexample is re-verified through the plain scalar implementations
before it is returned.

Two evaluation backends share one predicate catalog: EnsembleOps runs a
predicate over every distribution at once on a numpy level matrix, and
ScalarOps runs it on a single Dist through the ordinary library calls.
The checker uses the fast backend to search and the slow one to confirm.

The formula generator set is fixed and documented: the constants, every
literal, and the four sign variants of conjunction and disjunction over
the first two atoms.  Sizes: 4 formulas at n=1, 14 at n=2, 16 at n=3.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .logic import (
    FALSE,
    TRUE,
    And,
    Formula,
    Not,
    Or,
    Vocabulary,
    format_formula,
    model_mask,
)
from . import independence as indep
from . import measures
from .measures import Dist

DEFAULT_BUDGET = 10_000_000

MAX_LAB_ATOMS = 3
MAX_LAB_TOP = 3

LAB_ATOM_NAMES = ("a", "b", "c")


class BudgetError(RuntimeError):
    """A requested sweep exceeds the evaluation budget."""


def lab_vocabulary(n: int) -> Vocabulary:
    if not (1 <= n <= MAX_LAB_ATOMS):
        raise ValueError(f"lab vocabulary supports 1..{MAX_LAB_ATOMS} atoms, got {n}")
    return Vocabulary(LAB_ATOM_NAMES[:n])


def enumerate_dists(n: int, top: int, budget: int = DEFAULT_BUDGET) -> Iterator[Dist]:
    """Every normalized distribution over n atoms at the given scale.

    Deterministic order: levels run through the plain product order with
    the last world varying fastest; non-normalized tuples are skipped.
    """
    if not (1 <= n <= MAX_LAB_ATOMS):
        raise ValueError(f"atom count must be 1..{MAX_LAB_ATOMS}, got {n}")
    if not (1 <= top <= MAX_LAB_TOP):
        raise ValueError(f"scale top must be 1..{MAX_LAB_TOP}, got {top}")
    vocab = lab_vocabulary(n)
    raw = (top + 1) ** vocab.world_count
    if raw > budget:
        raise BudgetError(f"enumerating {raw} level tuples exceeds budget {budget}")
    for levels in itertools.product(range(top + 1), repeat=vocab.world_count):
        if max(levels) == top:
            yield Dist(vocab, top, levels)


def count_dists(n: int, top: int) -> int:
    """Closed form for the size of enumerate_dists' output."""
    w = 1 << n
    return (top + 1) ** w - top**w


def generator_formulas(vocab: Vocabulary) -> tuple[Formula, ...]:
    """The fixed formula pool quantified over by every law check."""
    gens: list[Formula] = [TRUE, FALSE]
    for i in range(vocab.n):
        x = vocab.atom(i)
        gens.append(x)
        gens.append(Not(x))
    if vocab.n >= 2:
        a, b = vocab.atom(0), vocab.atom(1)
        for left in (a, Not(a)):
            for right in (b, Not(b)):
                gens.append(And(left, right))
        for left in (a, Not(a)):
            for right in (b, Not(b)):
                gens.append(Or(left, right))
    return tuple(gens)


class DistEnsemble:
    """All enumerated distributions for one (n, top), as a level matrix."""

    def __init__(self, n: int, top: int, budget: int = DEFAULT_BUDGET):
        self.vocab = lab_vocabulary(n)
        self.top = top
        self._dists = tuple(enumerate_dists(n, top, budget))
        self.levels = np.array([d.levels for d in self._dists], dtype=np.int16)
        self._poss_cache: dict[int, np.ndarray] = {}

    @property
    def count(self) -> int:
        return len(self._dists)

    def dist_at(self, i: int) -> Dist:
        return self._dists[i]

    def poss_rows(self, mask: int) -> np.ndarray:
        """Column-wise max over the worlds in the mask, one entry per dist."""
        vec = self._poss_cache.get(mask)
        if vec is None:
            if mask == 0:
                vec = np.zeros(self.count, dtype=np.int16)
            else:
                cols = [w for w in range(self.vocab.world_count) if (mask >> w) & 1]
                vec = self.levels[:, cols].max(axis=1)
            self._poss_cache[mask] = vec
        return vec


class EnsembleOps:
    """Vectorized measure and relation evaluations across an ensemble.

    Only poss_rows results are cached (few distinct masks exist at desk
    scale); everything else is a couple of elementwise operations.
    """

    def __init__(self, ensemble: DistEnsemble):
        self.ensemble = ensemble
        self.top = ensemble.top
        self._n = ensemble.vocab.n
        self._full = (1 << ensemble.vocab.world_count) - 1

    def _mask(self, f: Formula) -> int:
        return model_mask(f, self._n)

    def poss(self, f: Formula) -> np.ndarray:
        return self.ensemble.poss_rows(self._mask(f))

    def nec(self, f: Formula) -> np.ndarray:
        return self.top - self.ensemble.poss_rows(self._full ^ self._mask(f))

    def _cond_poss_masks(self, c_mask: int, a_mask: int) -> np.ndarray:
        pa = self.ensemble.poss_rows(a_mask)
        pac = self.ensemble.poss_rows(a_mask & c_mask)
        return np.where(pac == pa, np.int16(self.top), pac)

    def cond_poss(self, c: Formula, a: Formula) -> np.ndarray:
        return self._cond_poss_masks(self._mask(c), self._mask(a))

    def cond_nec(self, c: Formula, a: Formula) -> np.ndarray:
        return self.top - self._cond_poss_masks(self._full ^ self._mask(c), self._mask(a))

    def _cells(self, a: Formula, c: Formula):
        am, cm = self._mask(a), self._mask(c)
        rows = self.ensemble.poss_rows
        return (
            rows(am & cm),
            rows(am & (self._full ^ cm)),
            rows((self._full ^ am) & cm),
            rows((self._full ^ am) & (self._full ^ cm)),
        )

    def related_z(self, a: Formula, c: Formula) -> np.ndarray:
        pac, panc, pnac, _ = self._cells(a, c)
        return pac != np.minimum(np.maximum(pac, panc), np.maximum(pac, pnac))

    def strong_indep(self, a: Formula, c: Formula) -> np.ndarray:
        n_c = self.nec(c)
        return (n_c > 0) & (self.cond_nec(c, a) == n_c)

    def strong_indep_direct(self, a: Formula, c: Formula) -> np.ndarray:
        pac, panc, pnac, pnanc = self._cells(a, c)
        pa = np.maximum(pac, panc)
        pnc = np.maximum(panc, pnanc)
        return (pa > pnc) & (pnc == panc)

    def weak_indep(self, a: Formula, c: Formula) -> np.ndarray:
        return (self.nec(c) > 0) & (self.cond_nec(c, a) > 0)

    def weak_indep_direct(self, a: Formula, c: Formula) -> np.ndarray:
        pac, panc, pnac, pnanc = self._cells(a, c)
        return (pac > panc) & (np.maximum(pac, pnac) > pnanc)

    def entails_classically(self, a: Formula, b: Formula) -> bool:
        return (self._mask(a) & (self._full ^ self._mask(b))) == 0


class ScalarOps:
    """The same interface evaluated on one Dist via the plain library calls."""

    def __init__(self, dist: Dist):
        self.dist = dist
        self.top = dist.top

    def poss(self, f: Formula) -> int:
        return measures.poss(self.dist, f)

    def nec(self, f: Formula) -> int:
        return measures.nec(self.dist, f)

    def cond_poss(self, c: Formula, a: Formula) -> int:
        return measures.cond_poss(self.dist, c, a)

    def cond_nec(self, c: Formula, a: Formula) -> int:
        return measures.cond_nec(self.dist, c, a)

    def related_z(self, a: Formula, c: Formula) -> bool:
        return indep.related_z(self.dist, a, c)

    def strong_indep(self, a: Formula, c: Formula) -> bool:
        return indep.strong_indep(self.dist, a, c)

    def strong_indep_direct(self, a: Formula, c: Formula) -> bool:
        return indep.strong_indep_direct(self.dist, a, c)

    def weak_indep(self, a: Formula, c: Formula) -> bool:
        return indep.weak_indep(self.dist, a, c)

    def weak_indep_direct(self, a: Formula, c: Formula) -> bool:
        return indep.weak_indep_direct(self.dist, a, c)

    def entails_classically(self, a: Formula, b: Formula) -> bool:
        n = self.dist.vocab.n
        full = (1 << self.dist.vocab.world_count) - 1
        return (model_mask(a, n) & (full ^ model_mask(b, n))) == 0


def _imp(p, q):
    return np.logical_or(np.logical_not(p), q)


def _iff(p, q):
    return np.logical_not(np.logical_xor(np.asarray(p, dtype=bool), np.asarray(q, dtype=bool)))


@dataclass(frozen=True)
class Law:
    """One universally quantified candidate property.

    The predicate takes an ops backend plus `arity` formulas and returns
    per-distribution truth; the note is a one-line human statement.
    """

    law_id: str
    arity: int
    note: str
    predicate: Callable


@dataclass(frozen=True)
class Counterexample:
    dist: Dist
    formulas: tuple[Formula, ...]


def format_counterexample(ce: Counterexample, indent: int = 4) -> str:
    """Two-line rendering: the instantiating formulas, then the distribution."""
    pad = " " * indent
    vocab = ce.dist.vocab
    if ce.formulas:
        shown = ", ".join(format_formula(f, vocab) for f in ce.formulas)
    else:
        shown = "(none)"
    cells = "; ".join(
        f"{vocab.format_world(w)}={lv}" for w, lv in enumerate(ce.dist.levels)
    )
    return f"{pad}formulas: {shown}\n{pad}dist (top {ce.dist.top}): {cells}"


@dataclass(frozen=True)
class LawReport:
    law_id: str
    atoms: int
    top: int
    evaluations: int
    holds: bool
    counterexample: Optional[Counterexample]


def _catalog() -> tuple[Law, ...]:
    laws: list[Law] = []

    def add(law_id: str, arity: int, note: str, predicate: Callable):
        laws.append(Law(law_id, arity, note, predicate))

    # -- measure layer ------------------------------------------------

    add(
        "poss-disjunction-max", 2,
        "poss(a|b) = max(poss(a), poss(b))",
        lambda o, a, b: o.poss(Or(a, b)) == np.maximum(o.poss(a), o.poss(b)),
    )
    add(
        "nec-conjunction-min", 2,
        "nec(a&b) = min(nec(a), nec(b))",
        lambda o, a, b: o.nec(And(a, b)) == np.minimum(o.nec(a), o.nec(b)),
    )
    add(
        "poss-normalization", 1,
        "max(poss(a), poss(!a)) = top",
        lambda o, a: np.maximum(o.poss(a), o.poss(Not(a))) == o.top,
    )
    add(
        "acceptance-one-sided", 1,
        "nec(a) > 0 implies nec(!a) = 0",
        lambda o, a: _imp(o.nec(a) > 0, o.nec(Not(a)) == 0),
    )
    add(
        "qpo-nontriviality", 0,
        "poss(true) > poss(false)",
        lambda o: o.poss(TRUE) > o.poss(FALSE),
    )
    add(
        "qpo-tautology", 1,
        "poss(true) >= poss(a)",
        lambda o, a: o.poss(TRUE) >= o.poss(a),
    )
    add(
        "qpo-transitivity", 3,
        "poss(a) >= poss(b) and poss(b) >= poss(c) imply poss(a) >= poss(c)",
        lambda o, a, b, c: _imp(
            (o.poss(a) >= o.poss(b)) & (o.poss(b) >= o.poss(c)), o.poss(a) >= o.poss(c)
        ),
    )
    add(
        "qpo-disjunctiveness", 2,
        "poss(a|b) <= poss(a) or poss(a|b) <= poss(b)",
        lambda o, a, b: (o.poss(Or(a, b)) <= o.poss(a)) | (o.poss(Or(a, b)) <= o.poss(b)),
    )
    add(
        "qpo-dominance", 2,
        "a entails b classically implies poss(a) <= poss(b)",
        lambda o, a, b: _imp(o.entails_classically(a, b), o.poss(a) <= o.poss(b)),
    )
    add(
        "cond-impossible-antecedent", 2,
        "poss(a) = 0 implies cond_poss(c, a) = top",
        lambda o, a, c: _imp(o.poss(a) == 0, o.cond_poss(c, a) == o.top),
    )
    add(
        "cond-full-conjunction", 2,
        "poss(a&c) = top implies cond_poss(c, a) = top",
        lambda o, a, c: _imp(o.poss(And(a, c)) == o.top, o.cond_poss(c, a) == o.top),
    )
    add(
        "cond-impossible-conclusion", 2,
        "poss(a) > 0 and poss(c) = 0 imply cond_poss(c, a) = 0",
        lambda o, a, c: _imp((o.poss(a) > 0) & (o.poss(c) == 0), o.cond_poss(c, a) == 0),
    )
    add(
        "cond-self-contradiction-top", 1,
        "cond_poss(c, !c) = top iff poss(!c) = 0",
        lambda o, c: _iff(o.cond_poss(c, Not(c)) == o.top, o.poss(Not(c)) == 0),
    )
    add(
        "cond-self-contradiction-zero", 1,
        "cond_poss(c, !c) = 0 iff poss(!c) > 0",
        lambda o, c: _iff(o.cond_poss(c, Not(c)) == 0, o.poss(Not(c)) > 0),
    )
    add(
        "cond-min-decomposition", 2,
        "min(cond_poss(c, a), poss(a)) = poss(a&c)",
        lambda o, a, c: np.minimum(o.cond_poss(c, a), o.poss(a)) == o.poss(And(a, c)),
    )
    add(
        "acceptance-strict-comparison", 2,
        "cond_nec(c, a) > 0 iff poss(a&c) > poss(a&!c)",
        lambda o, a, c: _iff(
            o.cond_nec(c, a) > 0, o.poss(And(a, c)) > o.poss(And(a, Not(c)))
        ),
    )
    add(
        "cond-nec-material-when-positive", 2,
        "cond_nec(c, a) > 0 implies cond_nec(c, a) = nec(!a|c)",
        lambda o, a, c: _imp(
            o.cond_nec(c, a) > 0, o.cond_nec(c, a) == o.nec(Or(Not(a), c))
        ),
    )

    # -- Zadeh relatedness --------------------------------------------

    add(
        "zadeh-unrelated-cell-bound", 2,
        "unrelated iff poss(a&c) >= min(poss(a&!c), poss(!a&c))",
        lambda o, a, c: _iff(
            np.logical_not(o.related_z(a, c)),
            o.poss(And(a, c))
            >= np.minimum(o.poss(And(a, Not(c))), o.poss(And(Not(a), c))),
        ),
    )
    add(
        "zadeh-related-mutual-rejection", 2,
        "related iff cond_nec(!c, a) > 0 and cond_nec(!a, c) > 0",
        lambda o, a, c: _iff(
            o.related_z(a, c),
            (o.cond_nec(Not(c), a) > 0) & (o.cond_nec(Not(a), c) > 0),
        ),
    )
    add(
        "zadeh-symmetry", 2,
        "related(a, c) iff related(c, a)",
        lambda o, a, c: _iff(o.related_z(a, c), o.related_z(c, a)),
    )
    add(
        "zadeh-split-disjunction-conclusion", 3,
        "related(a, b|c) implies related(a, b) or related(a, c)",
        lambda o, a, b, c: _imp(
            o.related_z(a, Or(b, c)), o.related_z(a, b) | o.related_z(a, c)
        ),
    )
    add(
        "zadeh-split-disjunction-antecedent", 3,
        "related(a|b, c) implies related(a, c) or related(b, c)",
        lambda o, a, b, c: _imp(
            o.related_z(Or(a, b), c), o.related_z(a, c) | o.related_z(b, c)
        ),
    )
    add(
        "zadeh-merge-disjunction-antecedent", 3,
        "related(a, c) and related(b, c) imply related(a|b, c)",
        lambda o, a, b, c: _imp(
            o.related_z(a, c) & o.related_z(b, c), o.related_z(Or(a, b), c)
        ),
    )
    add(
        "zadeh-merge-disjunction-conclusion", 3,
        "related(a, b) and related(a, c) imply related(a, b|c)",
        lambda o, a, b, c: _imp(
            o.related_z(a, b) & o.related_z(a, c), o.related_z(a, Or(b, c))
        ),
    )
    add(
        "zadeh-false-unrelated", 1,
        "false is unrelated to everything",
        lambda o, a: np.logical_not(o.related_z(FALSE, a)),
    )
    add(
        "zadeh-true-unrelated", 1,
        "true is unrelated to everything",
        lambda o, a: np.logical_not(o.related_z(TRUE, a)),
    )
    add(
        "zadeh-self-unrelated", 1,
        "a is unrelated to itself",
        lambda o, a: np.logical_not(o.related_z(a, a)),
    )
    add(
        "zadeh-negation-pair", 1,
        "a unrelated to !a iff poss(a) = 0 or poss(!a) = 0",
        lambda o, a: _iff(
            np.logical_not(o.related_z(a, Not(a))),
            (o.poss(a) == 0) | (o.poss(Not(a)) == 0),
        ),
    )
    add(
        "zadeh-absorption-unrelated", 2,
        "a|c is unrelated to a",
        lambda o, a, c: np.logical_not(o.related_z(Or(a, c), a)),
    )

    # -- strong independence ------------------------------------------

    add(
        "strong-defs-agree", 2,
        "conditional-necessity and cell forms of strong independence coincide",
        lambda o, a, c: _iff(o.strong_indep(a, c), o.strong_indep_direct(a, c)),
    )

    def necessity_cases(o, a, c):
        cn = o.cond_nec(c, a)
        n0 = o.nec(c)
        pac = o.poss(And(a, c))
        panc = o.poss(And(a, Not(c)))
        pnanc = o.poss(And(Not(a), Not(c)))
        case_i = (np.maximum(pnanc, panc) == o.top) & (panc >= pac)
        case_ii = (pac > panc) & (panc >= pnanc)
        out = _iff(cn == n0, np.logical_or(case_i, case_ii))
        out = np.logical_and(out, _iff(case_i, (cn == 0) & (n0 == 0)))
        return np.logical_and(out, _iff(case_ii, (cn == n0) & (n0 > 0)))

    add(
        "strong-necessity-cases", 2,
        "cond_nec(c,a) = nec(c) splits into the zero case and the strict case",
        necessity_cases,
    )
    add(
        "strong-char-min-form", 2,
        "strong iff poss(a&!c) = min(poss(a), poss(!c)) and poss(!c) < poss(a)",
        lambda o, a, c: _iff(
            o.strong_indep(a, c),
            (o.poss(And(a, Not(c))) == np.minimum(o.poss(a), o.poss(Not(c))))
            & (o.poss(Not(c)) < o.poss(a)),
        ),
    )
    add(
        "strong-dep-char-negation", 2,
        "dependent iff poss(a) <= poss(!c) or poss(!c) > poss(a&!c)",
        lambda o, a, c: _iff(
            np.logical_not(o.strong_indep(a, c)),
            (o.poss(a) <= o.poss(Not(c))) | (o.poss(Not(c)) > o.poss(And(a, Not(c)))),
        ),
    )
    add(
        "strong-implies-conjunction-min", 2,
        "strong independence forces poss(a&c) = min(poss(a), poss(c))",
        lambda o, a, c: _imp(
            o.strong_indep(a, c),
            o.poss(And(a, c)) == np.minimum(o.poss(a), o.poss(c)),
        ),
    )
    add(
        "strong-blocked-by-negation-level", 2,
        "poss(!c) >= poss(a) forces dependence",
        lambda o, a, c: _imp(
            o.poss(Not(c)) >= o.poss(a), np.logical_not(o.strong_indep(a, c))
        ),
    )
    add(
        "strong-dep-conjunction-split", 3,
        "dep(a, b&c) implies dep(a, b) or dep(a, c)",
        lambda o, a, b, c: _imp(
            np.logical_not(o.strong_indep(a, And(b, c))),
            np.logical_not(o.strong_indep(a, b)) | np.logical_not(o.strong_indep(a, c)),
        ),
    )
    add(
        "strong-dep-antecedent-split", 3,
        "dep(a|b, c) implies dep(a, c) or dep(b, c)",
        lambda o, a, b, c: _imp(
            np.logical_not(o.strong_indep(Or(a, b), c)),
            np.logical_not(o.strong_indep(a, c)) | np.logical_not(o.strong_indep(b, c)),
        ),
    )
    add(
        "strong-dep-disjunction-merge", 3,
        "dep(a, c) and dep(b, c) imply dep(a|b, c)",
        lambda o, a, b, c: _imp(
            np.logical_not(o.strong_indep(a, c)) & np.logical_not(o.strong_indep(b, c)),
            np.logical_not(o.strong_indep(Or(a, b), c)),
        ),
    )
    add(
        "strong-dep-consequent-merge", 3,
        "dep(a, b) and dep(a, c) imply dep(a, b&c)",
        lambda o, a, b, c: _imp(
            np.logical_not(o.strong_indep(a, b)) & np.logical_not(o.strong_indep(a, c)),
            np.logical_not(o.strong_indep(a, And(b, c))),
        ),
    )
    add(
        "strong-false-antecedent-dep", 1,
        "false is dependent with everything (antecedent side)",
        lambda o, c: np.logical_not(o.strong_indep(FALSE, c)),
    )
    add(
        "strong-true-antecedent", 1,
        "true is strongly independent of c iff nec(c) > 0",
        lambda o, c: _iff(o.strong_indep(TRUE, c), o.nec(c) > 0),
    )
    add(
        "strong-false-consequent-dep", 1,
        "everything is dependent with false (consequent side)",
        lambda o, a: np.logical_not(o.strong_indep(a, FALSE)),
    )
    add(
        "strong-true-consequent", 1,
        "a is strongly independent of true iff poss(a) > 0",
        lambda o, a: _iff(o.strong_indep(a, TRUE), o.poss(a) > 0),
    )
    add(
        "strong-disjoint-conjunctions-dep", 3,
        "a&b is dependent with !b&c",
        lambda o, a, b, c: np.logical_not(o.strong_indep(And(a, b), And(Not(b), c))),
    )
    add(
        "strong-exclusion-dep", 2,
        "a entailing !c classically forces dependence",
        lambda o, a, c: _imp(
            o.entails_classically(a, Not(c)), np.logical_not(o.strong_indep(a, c))
        ),
    )
    add(
        "strong-order-embedding-strict", 2,
        "strong_indep(a|c, !c) iff poss(a) > poss(c)",
        lambda o, a, c: _iff(o.strong_indep(Or(a, c), Not(c)), o.poss(a) > o.poss(c)),
    )
    add(
        "strong-self", 1,
        "a is strongly independent of itself iff nec(a) = top",
        lambda o, a: _iff(o.strong_indep(a, a), o.nec(a) == o.top),
    )
    add(
        "strong-impossible-antecedent-dep", 2,
        "poss(a) = 0 forces dependence",
        lambda o, a, c: _imp(o.poss(a) == 0, np.logical_not(o.strong_indep(a, c))),
    )
    add(
        "strong-certain-negation-dep", 2,
        "poss(c) = top forces dependence of anything with !c",
        lambda o, a, c: _imp(
            o.poss(c) == o.top, np.logical_not(o.strong_indep(a, Not(c)))
        ),
    )
    add(
        "strong-contraposition-split", 2,
        "dep(a, c) or dep(!c, !a)",
        lambda o, a, c: np.logical_not(o.strong_indep(a, c))
        | np.logical_not(o.strong_indep(Not(c), Not(a))),
    )
    add(
        "strong-order-embedding-weak-form", 2,
        "dep(a|c, !a) iff poss(a) >= poss(c)",
        lambda o, a, c: _iff(
            np.logical_not(o.strong_indep(Or(a, c), Not(a))), o.poss(a) >= o.poss(c)
        ),
    )
    add(
        "nec-order-embedding", 2,
        "dep(!a|!c, c) iff nec(a) >= nec(c)",
        lambda o, a, c: _iff(
            np.logical_not(o.strong_indep(Or(Not(a), Not(c)), c)),
            o.nec(a) >= o.nec(c),
        ),
    )
    add(
        "dep-axiom-tautology-pair", 0,
        "true is strongly independent of true",
        lambda o: o.strong_indep(TRUE, TRUE),
    )
    add(
        "dep-axiom-transitivity", 3,
        "dep(a|b, !b) and dep(b|c, !c) imply dep(a|c, !c)",
        lambda o, a, b, c: _imp(
            np.logical_not(o.strong_indep(Or(a, b), Not(b)))
            & np.logical_not(o.strong_indep(Or(b, c), Not(c))),
            np.logical_not(o.strong_indep(Or(a, c), Not(c))),
        ),
    )
    add(
        "dep-axiom-self-negation", 1,
        "a is dependent with !a",
        lambda o, a: np.logical_not(o.strong_indep(a, Not(a))),
    )
    add(
        "strong-symmetric", 2,
        "strong independence would be symmetric (it is not)",
        lambda o, a, c: _iff(o.strong_indep(a, c), o.strong_indep(c, a)),
    )
    add(
        "strong-negation-transparent", 2,
        "strong_indep(a, c) would imply strong_indep(a, !c) (it does not)",
        lambda o, a, c: _imp(o.strong_indep(a, c), o.strong_indep(a, Not(c))),
    )
    add(
        "strong-via-zadeh-negation", 2,
        "strong iff unrelated to the negation and poss(!c) < poss(a)",
        lambda o, a, c: _iff(
            o.strong_indep(a, c),
            np.logical_not(o.related_z(a, Not(c))) & (o.poss(Not(c)) < o.poss(a)),
        ),
    )

    # -- weak independence --------------------------------------------

    add(
        "weak-defs-agree", 2,
        "conditional-necessity and cell forms of weak independence coincide",
        lambda o, a, c: _iff(o.weak_indep(a, c), o.weak_indep_direct(a, c)),
    )
    add(
        "weak-strong-decomposition", 2,
        "strong iff weak plus poss(a&!c) = poss(!c)",
        lambda o, a, c: _iff(
            o.strong_indep(a, c),
            o.weak_indep(a, c) & (o.poss(And(a, Not(c))) == o.poss(Not(c))),
        ),
    )
    add(
        "weak-implies-unrelated", 2,
        "weak independence implies unrelatedness",
        lambda o, a, c: _imp(o.weak_indep(a, c), np.logical_not(o.related_z(a, c))),
    )
    add(
        "strong-implies-weak", 2,
        "strong independence implies weak independence",
        lambda o, a, c: _imp(o.strong_indep(a, c), o.weak_indep(a, c)),
    )
    add(
        "weak-min-form-not-implied", 2,
        "weak would force poss(a&!c) = min(poss(a), poss(!c)) (it does not)",
        lambda o, a, c: _imp(
            o.weak_indep(a, c),
            o.poss(And(a, Not(c))) == np.minimum(o.poss(a), o.poss(Not(c))),
        ),
    )
    add(
        "weak-self", 1,
        "a is weakly independent of itself iff nec(a) > 0",
        lambda o, a: _iff(o.weak_indep(a, a), o.nec(a) > 0),
    )
    add(
        "weak-contraposition-split", 2,
        "weak dep(a, c) or weak dep(!c, !a) (fails: both can be independent)",
        lambda o, a, c: np.logical_not(o.weak_indep(a, c))
        | np.logical_not(o.weak_indep(Not(c), Not(a))),
    )
    add(
        "weak-contraposition-pair-char", 2,
        "the exact cell condition for weak independence in both directions",
        lambda o, a, c: _iff(
            o.weak_indep(a, c) & o.weak_indep(Not(c), Not(a)),
            (
                o.poss(And(Not(a), c))
                > np.maximum(o.poss(And(a, c)), o.poss(And(Not(a), Not(c))))
            )
            & (
                np.minimum(o.poss(And(a, c)), o.poss(And(Not(a), Not(c))))
                > o.poss(And(a, Not(c)))
            ),
        ),
    )
    add(
        "weak-or-merge-printed", 3,
        "wi(a, c) or wi(b, c) would imply wi(a|b, c) (one-premise form)",
        lambda o, a, b, c: _imp(
            o.weak_indep(a, c) | o.weak_indep(b, c), o.weak_indep(Or(a, b), c)
        ),
    )
    add(
        "weak-or-conjunction-printed", 3,
        "wi(a, b) or wi(a, c) would imply wi(a, b&c) (one-premise form)",
        lambda o, a, b, c: _imp(
            o.weak_indep(a, b) | o.weak_indep(a, c), o.weak_indep(a, And(b, c))
        ),
    )
    add(
        "weak-conjunction-iff", 3,
        "wi(a, b&c) iff wi(a, b) and wi(a, c)",
        lambda o, a, b, c: _iff(
            o.weak_indep(a, And(b, c)), o.weak_indep(a, b) & o.weak_indep(a, c)
        ),
    )
    add(
        "weak-disjunction-iff", 3,
        "wi(a|b, c) iff wi(a, c) and wi(b, c)",
        lambda o, a, b, c: _iff(
            o.weak_indep(Or(a, b), c), o.weak_indep(a, c) & o.weak_indep(b, c)
        ),
    )
    add(
        "weak-strong-collapse-on-cover", 2,
        "wi(a|!c, c) iff strong_indep(a|!c, c)",
        lambda o, a, c: _iff(
            o.weak_indep(Or(a, Not(c)), c), o.strong_indep(Or(a, Not(c)), c)
        ),
    )

    # -- plausible inference ------------------------------------------

    add(
        "rational-monotony", 3,
        "accepted conclusions survive evidence that was not rejected",
        lambda o, a, b, c: _imp(
            (o.cond_nec(a, b) > 0) & (o.cond_nec(Not(c), b) == 0),
            o.cond_nec(a, And(b, c)) > 0,
        ),
    )

    return tuple(laws)


CATALOG: tuple[Law, ...] = _catalog()

_CATALOG_BY_ID = {law.law_id: law for law in CATALOG}


def law_by_id(law_id: str) -> Law:
    try:
        return _CATALOG_BY_ID[law_id]
    except KeyError:
        raise KeyError(f"unknown law id: {law_id!r}") from None


def law_cost(law: Law, dist_count: int, generator_count: int) -> int:
    return dist_count * generator_count**law.arity


def check_law(
    law: Law,
    n: int,
    top: int,
    budget: int = DEFAULT_BUDGET,
    ensemble: Optional[DistEnsemble] = None,
) -> LawReport:
    """Quantify one law over the full enumeration and the generator set.

    The first failing (formula tuple, distribution) pair in deterministic
    order becomes the counterexample, after the scalar backend confirms
    that it really falsifies the law.
    """
    if ensemble is None:
        ensemble = DistEnsemble(n, top, budget)
    gens = generator_formulas(ensemble.vocab)
    cost = law_cost(law, ensemble.count, len(gens))
    if cost > budget:
        raise BudgetError(f"law {law.law_id} needs {cost} evaluations, budget is {budget}")
    ops = EnsembleOps(ensemble)
    done = 0
    for combo in itertools.product(gens, repeat=law.arity):
        vec = np.broadcast_to(np.asarray(law.predicate(ops, *combo), dtype=bool), (ensemble.count,))
        done += ensemble.count
        if not vec.all():
            i = int(np.argmin(vec))
            dist = ensemble.dist_at(i)
            if bool(np.asarray(law.predicate(ScalarOps(dist), *combo)).all()):
                raise RuntimeError(
                    f"backend disagreement on law {law.law_id}: vector run failed, scalar run passed"
                )
            return LawReport(law.law_id, n, top, done, False, Counterexample(dist, combo))
    return LawReport(law.law_id, n, top, done, True, None)


def run_catalog(n: int, top: int, budget: int = DEFAULT_BUDGET) -> list[LawReport]:
    """Check every cataloged law at one (n, top); budget covers the total."""
    ensemble = DistEnsemble(n, top, budget)
    gens = len(generator_formulas(ensemble.vocab))
    total = sum(law_cost(law, ensemble.count, gens) for law in CATALOG)
    if total > budget:
        raise BudgetError(f"full catalog needs {total} evaluations, budget is {budget}")
    return [check_law(law, n, top, budget, ensemble) for law in CATALOG]


# -- criteria table ----------------------------------------------------

CRITERIA = ("CCD", "CCI", "CCD-r", "CCI-r", "DCI", "DCI-r", "DCD", "DCD-r")

RELATIONS = ("Zadeh", "Strong", "Weak")


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    relation: str
    atoms: int
    top: int
    holds: bool
    counterexample: Optional[Counterexample]


def _relation_ind(relation: str) -> Callable:
    if relation == "Zadeh":
        return lambda o, x, y: np.logical_not(o.related_z(x, y))
    if relation == "Strong":
        return lambda o, x, y: o.strong_indep(x, y)
    if relation == "Weak":
        return lambda o, x, y: o.weak_indep(x, y)
    raise ValueError(f"unknown relation: {relation!r}")


def _criterion_predicate(criterion: str, ind: Callable) -> Callable:
    def dep(o, x, y):
        return np.logical_not(ind(o, x, y))

    if criterion == "CCD":
        return lambda o, a, b, c: _imp(dep(o, a, c) & dep(o, b, c), dep(o, And(a, b), c))
    if criterion == "CCI":
        return lambda o, a, b, c: _imp(ind(o, a, c) & ind(o, b, c), ind(o, And(a, b), c))
    if criterion == "CCD-r":
        return lambda o, a, b, c: _imp(dep(o, a, b) & dep(o, a, c), dep(o, a, And(b, c)))
    if criterion == "CCI-r":
        return lambda o, a, b, c: _imp(ind(o, a, b) & ind(o, a, c), ind(o, a, And(b, c)))
    if criterion == "DCI":
        return lambda o, a, b, c: _imp(ind(o, a, c) & ind(o, b, c), ind(o, Or(a, b), c))
    if criterion == "DCI-r":
        return lambda o, a, b, c: _imp(ind(o, a, b) & ind(o, a, c), ind(o, a, Or(b, c)))
    if criterion == "DCD":
        return lambda o, a, b, c: _imp(dep(o, a, c) & dep(o, b, c), dep(o, Or(a, b), c))
    if criterion == "DCD-r":
        return lambda o, a, b, c: _imp(dep(o, a, b) & dep(o, a, c), dep(o, a, Or(b, c)))
    raise ValueError(f"unknown criterion: {criterion!r}")


def criteria_table(n: int, top: int, budget: int = DEFAULT_BUDGET) -> list[CriterionReport]:
    """All 8 composition criteria crossed with the 3 relations."""
    ensemble = DistEnsemble(n, top, budget)
    gens = len(generator_formulas(ensemble.vocab))
    total = len(CRITERIA) * len(RELATIONS) * ensemble.count * gens**3
    if total > budget:
        raise BudgetError(f"criteria table needs {total} evaluations, budget is {budget}")
    reports = []
    for relation in RELATIONS:
        ind = _relation_ind(relation)
        for criterion in CRITERIA:
            law = Law(f"{relation.lower()}-{criterion.lower()}", 3, "", _criterion_predicate(criterion, ind))
            rep = check_law(law, n, top, budget, ensemble)
            reports.append(
                CriterionReport(criterion, relation, n, top, rep.holds, rep.counterexample)
            )
    return reports


# -- completeness probe ------------------------------------------------

# The abstract side of the axiomatization: a candidate dependence relation
# is a set of (event, event) pairs, events being world-set bitmasks.  The
# probe filters candidates by the five closure axioms and then hunts for a
# distribution whose strong-dependence relation matches exactly.


def _dep_pair(levels: tuple[int, ...], full: int, x: int, y: int) -> bool:
    # dependence = not strong independence, straight off the cell levels
    def pm(mask: int) -> int:
        best = 0
        m = mask
        while m:
            low = m & -m
            lv = levels[low.bit_length() - 1]
            if lv > best:
                best = lv
            m ^= low
        return best

    pa = pm(x)
    pny = pm(full ^ y)
    pany = pm(x & (full ^ y))
    return not (pa > pny and pny == pany)


def realized_relation(d: Dist) -> int:
    """Strong-dependence relation of a distribution, packed as a bitset."""
    events = 1 << d.vocab.world_count
    full = events - 1
    bits = 0
    idx = 0
    for x in range(events):
        for y in range(events):
            if _dep_pair(d.levels, full, x, y):
                bits |= 1 << idx
            idx += 1
    return bits


def _forced_pairs(events: int, full: int, mode: str) -> tuple[set, set]:
    """Pairs pinned by the non-conditional axioms, per reading of the
    self-negation axiom: 'printed' pins only (a, full), (a, not a); 'schema'
    pins every disjoint pair."""
    forced_in = set()
    if mode == "printed":
        for x in range(events):
            forced_in.add((x, 0))
            forced_in.add((x, full ^ x))
    elif mode == "schema":
        for x in range(events):
            for y in range(events):
                if x & y == 0:
                    forced_in.add((x, y))
    else:
        raise ValueError(f"unknown axiom mode: {mode!r}")
    return forced_in, {(full, full)}


def relation_axioms_hold(bits: int, n: int, mode: str = "printed") -> bool:
    """The five dependence axioms, read over event bitmasks."""
    events = 1 << (1 << n)
    full = events - 1

    def dep(x: int, y: int) -> bool:
        return bool((bits >> (x * events + y)) & 1)

    forced_in, forced_out = _forced_pairs(events, full, mode)
    if any(not dep(x, y) for x, y in forced_in):
        return False
    if any(dep(x, y) for x, y in forced_out):
        return False
    for x in range(events):
        for y in range(events):
            for z in range(events):
                if dep(x | y, full ^ y) and dep(y | z, full ^ z) and not dep(x | z, full ^ z):
                    return False
                if dep(x, y & z) and not (dep(x, y) or dep(x, z)):
                    return False
    return True


@dataclass(frozen=True)
class ProbeReport:
    atoms: int
    candidates: int
    satisfying: int
    realized: int
    unrealized: tuple[int, ...]


def _realized_relations(n: int, tops=(1, 2, 3)) -> set[int]:
    seen = set()
    for top in tops:
        for d in enumerate_dists(n, top):
            seen.add(realized_relation(d))
    return seen


def completeness_probe_exact(tops=(1, 2, 3), mode: str = "printed") -> ProbeReport:
    """Single-atom case: every abstract relation, checked outright.

    With one atom there are 4 events and 16 pairs; the axiom-forced pair
    slots are fixed up front and the loop only expands the free ones.
    """
    n = 1
    events = 1 << (1 << n)
    full = events - 1
    forced_in, forced_out = _forced_pairs(events, full, mode)
    free = [
        (x, y)
        for x in range(events)
        for y in range(events)
        if (x, y) not in forced_in and (x, y) not in forced_out
    ]
    base = 0
    for x, y in forced_in:
        base |= 1 << (x * events + y)
    realized = _realized_relations(n, tops)
    candidates = 0
    satisfying = 0
    unrealized = []
    for picks in itertools.product((0, 1), repeat=len(free)):
        bits = base
        for take, (x, y) in zip(picks, free):
            if take:
                bits |= 1 << (x * events + y)
        candidates += 1
        if relation_axioms_hold(bits, n, mode):
            satisfying += 1
            if bits not in realized:
                unrealized.append(bits)
    return ProbeReport(n, candidates, satisfying, satisfying - len(unrealized), tuple(unrealized))


def completeness_probe_sampled(
    samples: int = 500, flips: int = 3, seed: int = 0, tops=(1, 2, 3), mode: str = "printed"
) -> ProbeReport:
    """Two-atom case: 2**256 candidate relations rule out enumeration, so
    mutate realized relations pairwise and keep the axiom-satisfying ones."""
    n = 2
    events = 1 << (1 << n)
    pair_count = events * events
    realized = _realized_relations(n, tops)
    rng = random.Random(seed)
    pool = sorted(realized)
    candidates = 0
    satisfying = 0
    unrealized = []
    seen = set()
    for _ in range(samples):
        bits = rng.choice(pool)
        for _ in range(rng.randint(1, flips)):
            bits ^= 1 << rng.randrange(pair_count)
        if bits in seen:
            continue
        seen.add(bits)
        candidates += 1
        if relation_axioms_hold(bits, n, mode):
            satisfying += 1
            if bits not in realized:
                unrealized.append(bits)
    return ProbeReport(n, candidates, satisfying, satisfying - len(unrealized), tuple(unrealized))
