"""Text formats: formulas, rule bases, and distribution files.

Formula grammar, loosest to tightest: `<->`, `->` (right associative),
`|`, `&`, `!`, parentheses.  `true` and `false` are constants; `wrt` and
`given` are reserved for indep directives and rejected inside formulas.

A rule base file holds one `atoms:` line, then `rule:` and `indep:` lines
in any order; `#` starts a comment.  A distribution file holds `atoms:`,
`top:`, then one line per world.  World keys are either a bitstring read
as a binary number (bit i of the value is atom i, so the leftmost digit
is the last atom) or a pattern of literals naming every atom once, like
`a !c`.  Unlisted worlds sit at level 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .logic import FALSE, TRUE, Atom, Formula, Not, And, Or, Vocabulary, iff, implies
from .measures import Dist
from .ranking import Rule, RuleBase, inject_independence

RULE_SEPARATOR = "|~"


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line:
            return f"line {self.line}, column {self.column}: {self.message}"
        return self.message


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<iff><->)"
    r"|(?P<implies>->)"
    r"|(?P<not>!)"
    r"|(?P<and>&)"
    r"|(?P<or>\|)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(text: str, line: int, col_offset: int) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, col_offset + pos + 1
            )
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), col_offset + m.start() + 1))
        pos = m.end()
    return tokens


class _FormulaParser:
    def __init__(self, tokens: list[_Token], vocab: Vocabulary, line: int, end_column: int):
        self.tokens = tokens
        self.vocab = vocab
        self.line = line
        self.end_column = end_column
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of formula", self.line, self.end_column)
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.parse_iff()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok.text!r}", self.line, tok.column)
        return f

    def parse_iff(self) -> Formula:
        left = self.parse_implies()
        while (tok := self.peek()) is not None and tok.kind == "iff":
            self.take()
            left = iff(left, self.parse_implies())
        return left

    def parse_implies(self) -> Formula:
        left = self.parse_or()
        if (tok := self.peek()) is not None and tok.kind == "implies":
            self.take()
            return implies(left, self.parse_implies())
        return left

    def parse_or(self) -> Formula:
        left = self.parse_and()
        while (tok := self.peek()) is not None and tok.kind == "or":
            self.take()
            left = Or(left, self.parse_and())
        return left

    def parse_and(self) -> Formula:
        left = self.parse_unary()
        while (tok := self.peek()) is not None and tok.kind == "and":
            self.take()
            left = And(left, self.parse_unary())
        return left

    def parse_unary(self) -> Formula:
        tok = self.take()
        if tok.kind == "not":
            return Not(self.parse_unary())
        if tok.kind == "lparen":
            inner = self.parse_iff()
            closing = self.take()
            if closing.kind != "rparen":
                raise ParseError(
                    f"expected ')', got {closing.text!r}", self.line, closing.column
                )
            return inner
        if tok.kind == "name":
            lowered = tok.text.lower()
            if lowered == "true":
                return TRUE
            if lowered == "false":
                return FALSE
            if lowered in ("wrt", "given"):
                raise ParseError(
                    f"reserved word {tok.text!r} cannot appear in a formula",
                    self.line,
                    tok.column,
                )
            try:
                return Atom(self.vocab.index(tok.text))
            except KeyError:
                raise ParseError(f"unknown atom: {tok.text}", self.line, tok.column) from None
        raise ParseError(f"unexpected token {tok.text!r}", self.line, tok.column)


def parse_formula(
    text: str, vocab: Vocabulary, line: int = 0, col_offset: int = 0
) -> Formula:
    tokens = _tokenize(text, line, col_offset)
    end_column = col_offset + len(text) + 1
    return _FormulaParser(tokens, vocab, line, end_column).parse()


# -- rule base files -----------------------------------------------------


@dataclass(frozen=True)
class IndepDirective:
    """One `indep: <conclusion> wrt <extra> given <context>` line."""

    conclusion: Formula
    extra: Formula
    context: Formula
    line: int


@dataclass(frozen=True)
class ParsedDocument:
    vocab: Vocabulary
    rules: tuple[Rule, ...]
    rule_lines: tuple[int, ...]
    directives: tuple[IndepDirective, ...]

    def base(self) -> RuleBase:
        return RuleBase(self.vocab, self.rules)

    def injected_base(self) -> RuleBase:
        """The rule base with every indep directive turned into a rule."""
        kb = self.base()
        for d in self.directives:
            kb = inject_independence(kb, d.context, d.extra, d.conclusion)
        return kb


def _split_directive(line_text: str, line: int) -> tuple[str, str, int]:
    head, sep, rest = line_text.partition(":")
    if not sep:
        raise ParseError(f"expected ':' in {line_text.strip()!r}", line, 1)
    return head.strip(), rest, len(head) + len(sep)


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0]


def parse_kb(text: str) -> ParsedDocument:
    vocab: Vocabulary | None = None
    rules: list[Rule] = []
    rule_lines: list[int] = []
    directives: list[IndepDirective] = []
    for line, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if not stripped.strip():
            continue
        head, rest, rest_offset = _split_directive(stripped, line)
        if head == "atoms":
            if vocab is not None:
                raise ParseError("duplicate atoms line", line, 1)
            names = rest.split()
            if not names:
                raise ParseError("atoms line names no atoms", line, rest_offset + 1)
            try:
                vocab = Vocabulary(tuple(names))
            except ValueError as e:
                raise ParseError(str(e), line, rest_offset + 1) from None
        elif head == "rule":
            if vocab is None:
                raise ParseError("rule appears before the atoms line", line, 1)
            if rest.count(RULE_SEPARATOR) != 1:
                raise ParseError(
                    f"a rule needs exactly one {RULE_SEPARATOR!r}", line, rest_offset + 1
                )
            split_at = rest.index(RULE_SEPARATOR)
            antecedent = parse_formula(rest[:split_at], vocab, line, rest_offset)
            consequent = parse_formula(
                rest[split_at + len(RULE_SEPARATOR) :],
                vocab,
                line,
                rest_offset + split_at + len(RULE_SEPARATOR),
            )
            rules.append(Rule(antecedent, consequent))
            rule_lines.append(line)
        elif head == "indep":
            if vocab is None:
                raise ParseError("indep appears before the atoms line", line, 1)
            wrt_hits = list(re.finditer(r"\bwrt\b", rest))
            given_hits = list(re.finditer(r"\bgiven\b", rest))
            if len(wrt_hits) != 1 or len(given_hits) != 1:
                raise ParseError(
                    "an indep directive is '<conclusion> wrt <extra> given <context>'",
                    line,
                    rest_offset + 1,
                )
            wrt_m, given_m = wrt_hits[0], given_hits[0]
            if wrt_m.start() > given_m.start():
                raise ParseError("'wrt' must come before 'given'", line, rest_offset + wrt_m.start() + 1)
            conclusion = parse_formula(rest[: wrt_m.start()], vocab, line, rest_offset)
            extra = parse_formula(
                rest[wrt_m.end() : given_m.start()], vocab, line, rest_offset + wrt_m.end()
            )
            context = parse_formula(rest[given_m.end() :], vocab, line, rest_offset + given_m.end())
            directives.append(IndepDirective(conclusion, extra, context, line))
        else:
            raise ParseError(f"unknown directive: {head!r}", line, 1)
    if vocab is None:
        raise ParseError("missing atoms line", 0, 0)
    if not rules:
        raise ParseError("the file declares no rules", 0, 0)
    return ParsedDocument(vocab, tuple(rules), tuple(rule_lines), tuple(directives))


def format_rule(rule: Rule, vocab: Vocabulary) -> str:
    from .logic import format_formula

    return (
        f"{format_formula(rule.antecedent, vocab)} {RULE_SEPARATOR} "
        f"{format_formula(rule.consequent, vocab)}"
    )


# -- distribution files ---------------------------------------------------


def _world_from_key(key: str, vocab: Vocabulary, line: int) -> int:
    key = key.strip()
    if re.fullmatch(r"[01]+", key):
        if len(key) != vocab.n:
            raise ParseError(
                f"bitstring {key!r} has {len(key)} digits, expected {vocab.n}", line, 1
            )
        return int(key, 2)
    world = 0
    seen = set()
    for tok in key.split():
        name = tok[1:] if tok.startswith("!") else tok
        try:
            i = vocab.index(name)
        except KeyError:
            raise ParseError(f"unknown atom: {name}", line, 1) from None
        if i in seen:
            raise ParseError(f"atom {name!r} appears twice in world pattern", line, 1)
        seen.add(i)
        if not tok.startswith("!"):
            world |= 1 << i
    if len(seen) != vocab.n:
        raise ParseError(
            f"world pattern {key!r} must mention every atom exactly once", line, 1
        )
    return world


def parse_dist(text: str) -> Dist:
    vocab: Vocabulary | None = None
    top: int | None = None
    top_line = 0
    levels: dict[int, int] = {}
    for line, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if not stripped.strip():
            continue
        head, rest, rest_offset = _split_directive(stripped, line)
        if head == "atoms":
            if vocab is not None:
                raise ParseError("duplicate atoms line", line, 1)
            names = rest.split()
            if not names:
                raise ParseError("atoms line names no atoms", line, rest_offset + 1)
            try:
                vocab = Vocabulary(tuple(names))
            except ValueError as e:
                raise ParseError(str(e), line, rest_offset + 1) from None
        elif head == "top":
            if top is not None:
                raise ParseError("duplicate top line", line, 1)
            try:
                top = int(rest.strip())
            except ValueError:
                raise ParseError(f"top must be an integer, got {rest.strip()!r}", line, rest_offset + 1) from None
            if top < 1:
                raise ParseError("top must be at least 1", line, rest_offset + 1)
            top_line = line
        else:
            if vocab is None:
                raise ParseError("world line appears before the atoms line", line, 1)
            if top is None:
                raise ParseError("world line appears before the top line", line, 1)
            world = _world_from_key(head, vocab, line)
            if world in levels:
                raise ParseError(f"duplicate world {head.strip()!r}", line, 1)
            try:
                level = int(rest.strip())
            except ValueError:
                raise ParseError(
                    f"level must be an integer, got {rest.strip()!r}", line, rest_offset + 1
                ) from None
            if not (0 <= level <= top):
                raise ParseError(f"level {level} out of range 0..{top}", line, rest_offset + 1)
            levels[world] = level
    if vocab is None:
        raise ParseError("missing atoms line", 0, 0)
    if top is None:
        raise ParseError("missing top line", 0, 0)
    filled = tuple(levels.get(w, 0) for w in range(vocab.world_count))
    if max(filled) != top:
        raise ParseError("distribution has no world at the top level", top_line, 1)
    return Dist(vocab, top, filled)


def format_dist(d: Dist) -> str:
    lines = [f"atoms: {' '.join(d.vocab.atoms)}", f"top: {d.top}"]
    for w in range(d.vocab.world_count):
        lines.append(f"{d.vocab.format_world(w)}: {d.levels[w]}")
    return "\n".join(lines) + "\n"
