"""Propositional worlds, formulas, and model masks.

A world over n atoms is an int in [0, 2**n); bit i is the truth value of
atom i.  A set of worlds is an int bitmask over 2**n worlds: bit w is set
iff world w belongs to the set.  All semantic computation downstream runs
on these masks, so formula evaluation happens once per (formula, n) pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

MAX_ATOMS = 16

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

RESERVED_WORDS = frozenset({"true", "false", "wrt", "given"})


@dataclass(frozen=True)
class Vocabulary:
    """Ordered atom names; fixes the world encoding (atom i = bit i)."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        if not (1 <= len(self.atoms) <= MAX_ATOMS):
            raise ValueError(f"need between 1 and {MAX_ATOMS} atoms, got {len(self.atoms)}")
        seen = {}
        for i, name in enumerate(self.atoms):
            if not _NAME_RE.match(name):
                raise ValueError(f"bad atom name: {name!r}")
            if name in RESERVED_WORDS:
                raise ValueError(f"atom name {name!r} is a reserved word")
            if name in seen:
                raise ValueError(f"duplicate atom name: {name!r}")
            seen[name] = i
        object.__setattr__(self, "_index", seen)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def world_count(self) -> int:
        return 1 << len(self.atoms)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown atom: {name!r}") from None

    def atom(self, i: int) -> "Atom":
        if not (0 <= i < len(self.atoms)):
            raise IndexError(f"atom index {i} out of range for {len(self.atoms)} atoms")
        return Atom(i)

    def format_world(self, world: int) -> str:
        """Literal form of one world, e.g. 'p !b f'."""
        if not (0 <= world < self.world_count):
            raise ValueError(f"world {world} out of range")
        parts = []
        for i, name in enumerate(self.atoms):
            parts.append(name if (world >> i) & 1 else "!" + name)
        return " ".join(parts)


class Formula:
    """Base class; subclasses are immutable after __init__.

    Equality and hashing are structural, so formulas can key memo tables.
    """

    __slots__ = ("_hash", "_masks")

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def _key(self):
        raise NotImplementedError

    def _compute_mask(self, n: int) -> int:
        raise NotImplementedError

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Formula):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return self._hash


class TrueFormula(Formula):
    __slots__ = ()

    def __init__(self):
        object.__setattr__(self, "_hash", hash(("true",)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("true",)

    def _compute_mask(self, n: int) -> int:
        return (1 << (1 << n)) - 1

    def __repr__(self):
        return "TRUE"


class FalseFormula(Formula):
    __slots__ = ()

    def __init__(self):
        object.__setattr__(self, "_hash", hash(("false",)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("false",)

    def _compute_mask(self, n: int) -> int:
        return 0

    def __repr__(self):
        return "FALSE"


TRUE = TrueFormula()
FALSE = FalseFormula()


@lru_cache(maxsize=None)
def _atom_pattern(i: int, n: int) -> int:
    # worlds are consecutive bits, so atom i's models form a fixed stripe
    mask = 0
    for w in range(1 << n):
        if (w >> i) & 1:
            mask |= 1 << w
    return mask


class Atom(Formula):
    __slots__ = ("index",)

    def __init__(self, index: int):
        if not (0 <= index < MAX_ATOMS):
            raise ValueError(f"atom index {index} out of range")
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "_hash", hash(("atom", index)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("atom", self.index)

    def _compute_mask(self, n: int) -> int:
        if self.index >= n:
            raise ValueError(f"atom index {self.index} out of range for {n} atoms")
        return _atom_pattern(self.index, n)

    def __repr__(self):
        return f"Atom({self.index})"


class Not(Formula):
    __slots__ = ("child",)

    def __init__(self, child: Formula):
        object.__setattr__(self, "child", child)
        object.__setattr__(self, "_hash", hash(("not", child._hash)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("not", self.child._key())

    def _compute_mask(self, n: int) -> int:
        full = (1 << (1 << n)) - 1
        return full ^ model_mask(self.child, n)

    def __repr__(self):
        return f"Not({self.child!r})"


class And(Formula):
    __slots__ = ("left", "right")

    def __init__(self, left: Formula, right: Formula):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash(("and", left._hash, right._hash)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("and", self.left._key(), self.right._key())

    def _compute_mask(self, n: int) -> int:
        return model_mask(self.left, n) & model_mask(self.right, n)

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


class Or(Formula):
    __slots__ = ("left", "right")

    def __init__(self, left: Formula, right: Formula):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash(("or", left._hash, right._hash)))
        object.__setattr__(self, "_masks", {})

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def _key(self):
        return ("or", self.left._key(), self.right._key())

    def _compute_mask(self, n: int) -> int:
        return model_mask(self.left, n) | model_mask(self.right, n)

    def __repr__(self):
        return f"Or({self.left!r}, {self.right!r})"


def model_mask(formula: Formula, n: int) -> int:
    """Bitmask of the formula's models over 2**n worlds (memoized)."""
    cached = formula._masks.get(n)
    if cached is None:
        cached = formula._compute_mask(n)
        formula._masks[n] = cached
    return cached


def evaluate(world: int, formula: Formula) -> bool:
    """Truth value at one world via direct AST recursion.

    Kept independent of the mask route so the two can cross-check
    each other in tests.
    """
    if isinstance(formula, Atom):
        return bool((world >> formula.index) & 1)
    if isinstance(formula, Not):
        return not evaluate(world, formula.child)
    if isinstance(formula, And):
        return evaluate(world, formula.left) and evaluate(world, formula.right)
    if isinstance(formula, Or):
        return evaluate(world, formula.left) or evaluate(world, formula.right)
    if isinstance(formula, TrueFormula):
        return True
    if isinstance(formula, FalseFormula):
        return False
    raise TypeError(f"not a formula: {formula!r}")


def models(formula: Formula, vocab: Vocabulary) -> tuple[int, ...]:
    """All worlds satisfying the formula, ascending."""
    mask = model_mask(formula, vocab.n)
    return tuple(w for w in range(vocab.world_count) if (mask >> w) & 1)


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    return Or(Not(antecedent), consequent)


def iff(left: Formula, right: Formula) -> Formula:
    return And(Or(Not(left), right), Or(Not(right), left))


_PREC_OR = 1
_PREC_AND = 2
_PREC_UNARY = 3


def _fmt(formula: Formula, vocab: Vocabulary | None, prec: int) -> str:
    if isinstance(formula, TrueFormula):
        return "true"
    if isinstance(formula, FalseFormula):
        return "false"
    if isinstance(formula, Atom):
        if vocab is None:
            return f"x{formula.index}"
        return vocab.atoms[formula.index]
    if isinstance(formula, Not):
        return "!" + _fmt(formula.child, vocab, _PREC_UNARY)
    if isinstance(formula, And):
        # right side one level tighter so a reparse rebuilds the same tree
        text = _fmt(formula.left, vocab, _PREC_AND) + " & " + _fmt(formula.right, vocab, _PREC_AND + 1)
        return "(" + text + ")" if prec > _PREC_AND else text
    if isinstance(formula, Or):
        text = _fmt(formula.left, vocab, _PREC_OR) + " | " + _fmt(formula.right, vocab, _PREC_OR + 1)
        return "(" + text + ")" if prec > _PREC_OR else text
    raise TypeError(f"not a formula: {formula!r}")


def format_formula(formula: Formula, vocab: Vocabulary | None = None) -> str:
    """Concrete syntax; reparsing yields a structurally equal formula."""
    return _fmt(formula, vocab, 0)
