"""Normal logic program syntax: parsing, pretty-printing and Herbrand grounding.

The surface grammar is Prolog-like::

    rule    := atom ( ":-" body )? "."
    body    := literal ("," literal)*
    literal := "not" atom | atom
    atom    := ident ( "(" term ("," term)* ")" )?

Variables start with an uppercase letter or ``_``; predicates and constants
start with a lowercase letter or a digit. Identifiers may end in ``*`` or
``'`` so that primed atoms such as ``alive*`` can be written directly.
``%`` starts a line comment.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GroundingBudgetError, LPError, ParseError, SafetyError

DEFAULT_MAX_BASE = 10_000


def is_variable(term: str) -> bool:
    return term[0].isupper() or term[0] == "_"


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.predicate:
            raise ValueError("atom predicate must be nonempty")

    def __str__(self):
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"

    def __repr__(self):
        return f"Atom({str(self)!r})"

    def __lt__(self, other: "Atom"):
        return str(self) < str(other)

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(t) for t in self.args)

    @property
    def signature(self) -> tuple[str, int]:
        return (self.predicate, len(self.args))

    def variables(self) -> list[str]:
        return [t for t in self.args if is_variable(t)]

    def substitute(self, binding: dict[str, str]) -> "Atom":
        if not self.args:
            return self
        return Atom(self.predicate, tuple(binding.get(t, t) for t in self.args))


@dataclass(frozen=True)
class Literal:
    atom: Atom
    naf: bool = False

    def __str__(self):
        return f"not {self.atom}" if self.naf else str(self.atom)


@dataclass(frozen=True)
class Rule:
    head: Atom
    body: tuple[Literal, ...] = ()

    def __str__(self):
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.body))}."

    @property
    def positive(self) -> tuple[Atom, ...]:
        return tuple(lit.atom for lit in self.body if not lit.naf)

    @property
    def negative(self) -> tuple[Atom, ...]:
        return tuple(lit.atom for lit in self.body if lit.naf)

    def atoms(self) -> Iterable[Atom]:
        yield self.head
        for lit in self.body:
            yield lit.atom

    def variables(self) -> list[str]:
        """Distinct variables in order of first occurrence."""
        seen: dict[str, None] = {}
        for atom in self.atoms():
            for v in atom.variables():
                seen.setdefault(v)
        return list(seen)

    def substitute(self, binding: dict[str, str]) -> "Rule":
        return Rule(
            self.head.substitute(binding),
            tuple(Literal(l.atom.substitute(binding), l.naf) for l in self.body),
        )


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...]
    constants: frozenset[str] = frozenset()

    def __str__(self):
        return format_rules(self.rules)


@dataclass(frozen=True)
class GroundProgram:
    """A variable-free program together with its ordered Herbrand base.

    Atom identifiers are positions in ``herbrand_base``, which is sorted by
    printed name; every model listing in the package relies on that order.
    """

    rules: tuple[Rule, ...]
    herbrand_base: tuple[Atom, ...]
    constants: frozenset[str] = field(default=frozenset())

    def __str__(self):
        return format_rules(self.rules)

    def __len__(self):
        return len(self.rules)

    @cached_property
    def index(self) -> dict[Atom, int]:
        return {a: i for i, a in enumerate(self.herbrand_base)}

    @cached_property
    def masks(self) -> tuple[list[int], list[int], list[int]]:
        """Rules as parallel lists (head index, positive-body mask, naf-body mask)."""
        idx = self.index
        heads, pos, neg = [], [], []
        for r in self.rules:
            heads.append(idx[r.head])
            p = n = 0
            for lit in r.body:
                if lit.naf:
                    n |= 1 << idx[lit.atom]
                else:
                    p |= 1 << idx[lit.atom]
            pos.append(p)
            neg.append(n)
        return heads, pos, neg

    @property
    def full_mask(self) -> int:
        return (1 << len(self.herbrand_base)) - 1

    def to_mask(self, atoms: Iterable[Atom]) -> int:
        m = 0
        for a in atoms:
            m |= 1 << self.index[a]
        return m

    def from_mask(self, mask: int) -> frozenset[Atom]:
        base = self.herbrand_base
        return frozenset(base[i] for i in range(len(base)) if mask >> i & 1)

    @property
    def is_definite(self) -> bool:
        return not any(lit.naf for r in self.rules for lit in r.body)

    def atom(self, name: str) -> Atom:
        for a in self.herbrand_base:
            if str(a) == name:
                return a
        raise KeyError(name)


def format_rules(rules: Iterable[Rule]) -> str:
    return "".join(f"{r}\n" for r in rules)


def sort_atoms(atoms: Iterable[Atom]) -> list[Atom]:
    return sorted(atoms, key=str)


def model_key(atoms: Iterable[Atom]) -> tuple[str, ...]:
    """Sort key realising the lexicographic order on sorted atom-name sets."""
    return tuple(sorted(str(a) for a in atoms))


# --------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<if>:-)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*[*']*|[0-9]+)
  | (?P<punct>[(),.])
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
            continue
        if kind in ("ws", "comment"):
            continue
        if kind == "bad":
            ch = m.group()
            if ch in "|;":
                raise ParseError("disjunctive heads are not supported", line, col)
            if ch in "-~":
                raise ParseError("strong negation is not supported", line, col)
            raise ParseError(f"unexpected character {ch!r}", line, col)
        tokens.append(_Token(kind, m.group(), line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.eof_line = text.count("\n") + 1
        self.eof_col = len(text) - text.rfind("\n")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, message, tok=None):
        tok = tok or self.peek()
        if tok is None:
            return ParseError(message + " (at end of input)", self.eof_line, self.eof_col)
        return ParseError(message, tok.line, tok.col)

    def expect(self, text):
        tok = self.peek()
        if tok is None or tok.text != text:
            found = "end of input" if tok is None else repr(tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        self.pos += 1
        return tok

    def program(self) -> list[Rule]:
        rules = []
        while self.peek() is not None:
            rules.append(self.rule())
        return rules

    def rule(self) -> Rule:
        tok = self.peek()
        if tok.kind == "if":
            raise self.error("rules must have a head (constraints are not supported)")
        if tok.text == "not":
            raise self.error("negation as failure is not allowed in rule heads")
        head = self.atom()
        body: list[Literal] = []
        nxt = self.peek()
        if nxt is not None and nxt.text == ",":
            raise self.error("disjunctive heads are not supported")
        if nxt is not None and nxt.kind == "if":
            self.pos += 1
            body.append(self.literal())
            while self.peek() is not None and self.peek().text == ",":
                self.pos += 1
                body.append(self.literal())
        self.expect(".")
        return Rule(head, tuple(body))

    def literal(self) -> Literal:
        tok = self.peek()
        if tok is not None and tok.text == "not":
            after = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if after is not None and after.kind == "ident":
                self.pos += 1
                return Literal(self.atom(), naf=True)
        return Literal(self.atom())

    def atom(self) -> Atom:
        tok = self.peek()
        if tok is None or tok.kind != "ident":
            raise self.error("expected an atom")
        if is_variable(tok.text) or tok.text[0].isdigit():
            raise self.error(f"{tok.text!r} cannot be used as a predicate")
        self.pos += 1
        args: list[str] = []
        if self.peek() is not None and self.peek().text == "(":
            self.pos += 1
            args.append(self.term())
            while self.peek() is not None and self.peek().text == ",":
                self.pos += 1
                args.append(self.term())
            self.expect(")")
        return Atom(tok.text, tuple(args))

    def term(self) -> str:
        tok = self.peek()
        if tok is None or tok.kind != "ident":
            raise self.error("expected a constant or variable")
        if self.tokens[self.pos + 1 : self.pos + 2] and self.tokens[self.pos + 1].text == "(":
            raise self.error("function symbols are not supported")
        self.pos += 1
        return tok.text


def check_safety(rule: Rule) -> None:
    bound = {v for a in rule.positive for v in a.variables()}
    for atom in (rule.head, *rule.negative):
        for v in atom.variables():
            if v not in bound:
                raise SafetyError(v, str(rule))


def parse_program(text: str) -> Program:
    """Parse program text, preserving rule order, and check rule safety."""
    rules = _Parser(text).program()
    for r in rules:
        check_safety(r)
    constants = frozenset(
        t for r in rules for a in r.atoms() for t in a.args if not is_variable(t)
    )
    return Program(tuple(rules), constants)


# --------------------------------------------------------------------------
# Grounding


def ground(p: Program | GroundProgram, max_base: int = DEFAULT_MAX_BASE) -> GroundProgram:
    """Instantiate every rule over the program constants.

    The Herbrand base holds every atom buildable from the program's predicate
    signatures and constants, so atoms with an empty definition still belong
    to the vocabulary. Identical ground instances are kept once.
    """
    consts = sorted(p.constants)
    signatures = {a.signature for r in p.rules for a in r.atoms()}
    size = sum(len(consts) ** arity for _, arity in signatures)
    if size > max_base:
        raise GroundingBudgetError("Herbrand base", size, max_base)

    base = [
        Atom(name, args)
        for name, arity in signatures
        for args in itertools.product(consts, repeat=arity)
    ]
    seen: dict[Rule, None] = {}
    for r in p.rules:
        vs = r.variables()
        if not vs:
            seen.setdefault(r)
            continue
        for values in itertools.product(consts, repeat=len(vs)):
            seen.setdefault(r.substitute(dict(zip(vs, values))))
    return GroundProgram(tuple(seen), tuple(sort_atoms(base)), frozenset(consts))


def ground_text(text: str, max_base: int = DEFAULT_MAX_BASE) -> GroundProgram:
    return ground(parse_program(text), max_base=max_base)


def project(model: Iterable[Atom], onto: Sequence[Atom]) -> frozenset[Atom]:
    keep = set(onto)
    return frozenset(a for a in model if a in keep)


def split_atom_list(text: str) -> list[str]:
    """Split ``"p(a,b),q"`` on top-level commas."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur).strip())
    return [p for p in parts if p]


def parse_atom(text: str) -> Atom:
    parser = _Parser(text)
    atom = parser.atom()
    if parser.peek() is not None:
        raise parser.error("trailing input after atom")
    if not atom.is_ground:
        raise LPError(f"atom {atom} is not ground")
    return atom
