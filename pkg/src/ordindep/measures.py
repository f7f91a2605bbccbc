"""Ordinal possibility distributions and the measures they induce.

Levels live on an integer scale 0..top.  A distribution assigns one level
to every world and must put at least one world at the top; possibility of
a set of worlds is the max level over the set (0 for the empty set), and
necessity of a formula is top minus the possibility of its complement.

Conditioning is min-based: the level of the conclusion-and-antecedent
region is promoted to top when it realizes the antecedent's possibility,
and kept as is otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .logic import Formula, Vocabulary, model_mask


class TriState(enum.Enum):
    """Outcome of asking whether evidence makes a conclusion accepted."""

    ACCEPTED = "Accepted"
    REJECTED = "Rejected"
    IGNORED = "Ignored"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Dist:
    """Normalized possibility distribution over the worlds of a vocabulary."""

    vocab: Vocabulary
    top: int
    levels: tuple[int, ...]
    _poss_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.top < 1:
            raise ValueError(f"top level must be at least 1, got {self.top}")
        if len(self.levels) != self.vocab.world_count:
            raise ValueError(
                f"need {self.vocab.world_count} levels for {self.vocab.n} atoms, got {len(self.levels)}"
            )
        for w, lv in enumerate(self.levels):
            if not (0 <= lv <= self.top):
                raise ValueError(f"level {lv} at world {w} outside 0..{self.top}")
        if max(self.levels) != self.top:
            raise ValueError("distribution is not normalized: no world at the top level")

    def poss_mask(self, mask: int) -> int:
        """Max level over a world bitmask; 0 for the empty mask."""
        cached = self._poss_cache.get(mask)
        if cached is not None:
            return cached
        best = 0
        m = mask
        levels = self.levels
        while m:
            low = m & -m
            best_here = levels[low.bit_length() - 1]
            if best_here > best:
                best = best_here
                if best == self.top:
                    break
            m ^= low
        self._poss_cache[mask] = best
        return best

    def is_total_order(self) -> bool:
        """True when no two worlds share a level."""
        return len(set(self.levels)) == len(self.levels)


def _full_mask(d: Dist) -> int:
    return (1 << d.vocab.world_count) - 1


def poss(d: Dist, f: Formula) -> int:
    """Possibility of a formula: max level over its models."""
    return d.poss_mask(model_mask(f, d.vocab.n))


def nec(d: Dist, f: Formula) -> int:
    """Necessity: top minus the possibility of the complement."""
    mask = model_mask(f, d.vocab.n)
    return d.top - d.poss_mask(_full_mask(d) ^ mask)


def _cond_poss_masks(d: Dist, c_mask: int, a_mask: int) -> int:
    pa = d.poss_mask(a_mask)
    pac = d.poss_mask(a_mask & c_mask)
    return d.top if pac == pa else pac


def cond_poss(d: Dist, conclusion: Formula, given: Formula) -> int:
    """Min-based conditional possibility of conclusion given antecedent."""
    n = d.vocab.n
    return _cond_poss_masks(d, model_mask(conclusion, n), model_mask(given, n))


def cond_nec(d: Dist, conclusion: Formula, given: Formula) -> int:
    """Conditional necessity, dual of conditional possibility."""
    n = d.vocab.n
    c_mask = model_mask(conclusion, n)
    a_mask = model_mask(given, n)
    return d.top - _cond_poss_masks(d, _full_mask(d) ^ c_mask, a_mask)


def entails(d: Dist, evidence: Formula, conclusion: Formula) -> TriState:
    """Acceptance by strict comparison of the two evidence cells.

    Accepted iff evidence-and-conclusion is strictly more possible than
    evidence-and-not-conclusion; Rejected for the mirror case; Ignored on
    ties (including an impossible evidence formula).
    """
    n = d.vocab.n
    e_mask = model_mask(evidence, n)
    c_mask = model_mask(conclusion, n)
    keep = d.poss_mask(e_mask & c_mask)
    drop = d.poss_mask(e_mask & (_full_mask(d) ^ c_mask))
    if keep > drop:
        return TriState.ACCEPTED
    if keep < drop:
        return TriState.REJECTED
    return TriState.IGNORED


def qpo_geq(d: Dist, a: Formula, b: Formula) -> bool:
    """Qualitative possibility ordering: a is at least as possible as b."""
    return poss(d, a) >= poss(d, b)
