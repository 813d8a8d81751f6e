"""Dialectical frameworks: per-argument acceptance conditions over parent arguments.

Conditions are propositional formulas (negation, conjunction, disjunction,
constants) evaluated in strong Kleene three-valued logic. The grounded
assignment is the least fixpoint reached by re-evaluating every condition
until no argument changes; externally verified arguments keep their
declared truth throughout. Plain attack frameworks embed by giving each
argument the conjunction of its negated attackers.
"""

import re
from dataclasses import dataclass
from enum import Enum

from .core import Argument, ArgumentationFramework, Label, Labelling
from .errors import (
    ConditionSyntaxError,
    ConflictingExternal,
    MissingAssignment,
    MissingCondition,
    TooLarge,
    UndeclaredArgument,
)


class TriValue(str, Enum):
    T = "T"
    F = "F"
    U = "U"


LABEL_OF_TRIVALUE = {TriValue.T: Label.IN, TriValue.F: Label.OUT, TriValue.U: Label.UNDEC}


# --- condition expression trees -------------------------------------------

@dataclass(frozen=True)
class Condition:
    def referenced_ids(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True)
class Const(Condition):
    value: bool

    def __str__(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Var(Condition):
    name: str

    def referenced_ids(self) -> frozenset[str]:
        return frozenset({self.name})

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not(Condition):
    operand: Condition

    def referenced_ids(self) -> frozenset[str]:
        return self.operand.referenced_ids()

    def __str__(self) -> str:
        inner = str(self.operand)
        if isinstance(self.operand, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"


@dataclass(frozen=True)
class And(Condition):
    left: Condition
    right: Condition

    def referenced_ids(self) -> frozenset[str]:
        return self.left.referenced_ids() | self.right.referenced_ids()

    def __str__(self) -> str:
        left = f"({self.left})" if isinstance(self.left, Or) else str(self.left)
        right = str(self.right)
        if isinstance(self.right, (And, Or)):
            right = f"({right})"
        return f"{left} & {right}"


@dataclass(frozen=True)
class Or(Condition):
    left: Condition
    right: Condition

    def referenced_ids(self) -> frozenset[str]:
        return self.left.referenced_ids() | self.right.referenced_ids()

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Or) else str(self.right)
        return f"{self.left} | {right}"


TRUE = Const(True)
FALSE = Const(False)


# --- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<lparen>\()|(?P<rparen>\))"
    r"|(?P<not>!|¬)|(?P<and>&&?|∧)|(?P<or>\|\|?|∨)"
    r"|(?P<word>[A-Za-z0-9_]+))"
)
_KEYWORDS = {"true": "true", "false": "false", "not": "not", "and": "and", "or": "or"}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            at = len(text) - len(stripped)
            if not stripped:
                break
            raise ConditionSyntaxError(at, "an operator, identifier or parenthesis")
        kind = m.lastgroup
        if kind == "word":
            word = m.group("word")
            kind = _KEYWORDS.get(word.lower(), "ident")
            tokens.append((kind if kind != "ident" else f"ident:{word}", m.start("word")))
        else:
            tokens.append((kind, m.start(kind)))
        pos = m.end()
    tokens.append(("end", len(text)))
    return tokens


class _Parser:
    """Recursive descent over: or-expr > and-expr > unary > atom."""

    def __init__(self, text: str, declared: frozenset[str]):
        self.tokens = _tokenize(text)
        self.index = 0
        self.declared = declared

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def parse(self) -> Condition:
        expr = self.parse_or()
        kind, pos = self.peek()
        if kind != "end":
            raise ConditionSyntaxError(pos, "end of input or an operator")
        return expr

    def parse_or(self) -> Condition:
        expr = self.parse_and()
        while self.peek()[0] == "or":
            self.advance()
            expr = Or(expr, self.parse_and())
        return expr

    def parse_and(self) -> Condition:
        expr = self.parse_unary()
        while self.peek()[0] == "and":
            self.advance()
            expr = And(expr, self.parse_unary())
        return expr

    def parse_unary(self) -> Condition:
        kind, pos = self.peek()
        if kind == "not":
            self.advance()
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Condition:
        kind, pos = self.advance()
        if kind == "lparen":
            expr = self.parse_or()
            closing, cpos = self.advance()
            if closing != "rparen":
                raise ConditionSyntaxError(cpos, "')'")
            return expr
        if kind == "true":
            return TRUE
        if kind == "false":
            return FALSE
        if kind.startswith("ident:"):
            name = kind[len("ident:"):]
            if name not in self.declared:
                raise UndeclaredArgument(name)
            return Var(name)
        raise ConditionSyntaxError(pos, "an identifier, constant, '!' or '('")


def parse_condition(text: str, declared) -> Condition:
    """Parse condition text; precedence not > and > or, left-associative."""
    return _Parser(text, frozenset(declared)).parse()


def serialize_condition(c: Condition) -> str:
    """Canonical ASCII form; reparses to an identical tree."""
    return str(c)


# --- evaluation -------------------------------------------------------------

def condition_polarities(c: Condition) -> dict[str, set[bool]]:
    """Occurrence polarities per referenced id: True positive, False negated."""
    found: dict[str, set[bool]] = {}

    def walk(node: Condition, positive: bool) -> None:
        if isinstance(node, Var):
            found.setdefault(node.name, set()).add(positive)
        elif isinstance(node, Not):
            walk(node.operand, not positive)
        elif isinstance(node, (And, Or)):
            walk(node.left, positive)
            walk(node.right, positive)

    walk(c, True)
    return found


def evaluate_condition(c: Condition, assignment: dict[str, TriValue]) -> TriValue:
    """Strong Kleene evaluation under a (possibly partial-information) assignment."""
    if isinstance(c, Const):
        return TriValue.T if c.value else TriValue.F
    if isinstance(c, Var):
        if c.name not in assignment:
            raise MissingAssignment(c.name)
        return assignment[c.name]
    if isinstance(c, Not):
        v = evaluate_condition(c.operand, assignment)
        return {TriValue.T: TriValue.F, TriValue.F: TriValue.T, TriValue.U: TriValue.U}[v]
    if isinstance(c, And):
        left = evaluate_condition(c.left, assignment)
        right = evaluate_condition(c.right, assignment)
        if TriValue.F in (left, right):
            return TriValue.F
        if TriValue.U in (left, right):
            return TriValue.U
        return TriValue.T
    if isinstance(c, Or):
        left = evaluate_condition(c.left, assignment)
        right = evaluate_condition(c.right, assignment)
        if TriValue.T in (left, right):
            return TriValue.T
        if TriValue.U in (left, right):
            return TriValue.U
        return TriValue.F
    raise TypeError(f"not a condition node: {c!r}")


# --- dialectical framework ---------------------------------------------------

class DialecticalFramework:
    """Arguments with acceptance conditions; some may be externally decided."""

    def __init__(
        self,
        arguments,
        condition_of: dict[str, Condition],
        externals: dict[str, bool] | None = None,
    ) -> None:
        table: dict[str, Argument] = {}
        for item in arguments:
            arg = item if isinstance(item, Argument) else Argument(id=str(item))
            table[arg.id] = arg
        self.arguments = table
        self.externals = dict(externals or {})
        self.condition_of = dict(condition_of)
        for arg_id in self.externals:
            if arg_id not in table:
                raise UndeclaredArgument(arg_id)
            cond = self.condition_of.get(arg_id)
            if cond is None:
                continue
            if not isinstance(cond, Const):
                raise ConflictingExternal(arg_id)
            if cond.value != self.externals[arg_id]:
                raise ConflictingExternal(arg_id)
        for arg_id, cond in self.condition_of.items():
            if arg_id not in table:
                raise UndeclaredArgument(arg_id)
            for ref in cond.referenced_ids():
                if ref not in table:
                    raise UndeclaredArgument(ref)
        for arg_id in table:
            if arg_id not in self.condition_of and arg_id not in self.externals:
                raise MissingCondition(arg_id)

    def sorted_ids(self) -> list[str]:
        return sorted(self.arguments)

    def is_external(self, arg_id: str) -> bool:
        return arg_id in self.externals

    def __eq__(self, other) -> bool:
        if not isinstance(other, DialecticalFramework):
            return NotImplemented
        return (
            set(self.arguments) == set(other.arguments)
            and self.condition_of == other.condition_of
            and self.externals == other.externals
        )


def adf_grounded(d: DialecticalFramework, schedule=None) -> dict[str, TriValue]:
    """Least fixpoint: externals keep their declared truth, conditions are
    re-evaluated until no argument gains a decided value.

    The fixpoint is schedule-independent; `schedule` only changes the sweep
    order (useful for verifying exactly that).
    """
    order = list(schedule) if schedule is not None else d.sorted_ids()
    assignment = {a: TriValue.U for a in d.arguments}
    for arg_id, truth in d.externals.items():
        assignment[arg_id] = TriValue.T if truth else TriValue.F
    changed = True
    while changed:
        changed = False
        for arg_id in order:
            if d.is_external(arg_id) or assignment[arg_id] != TriValue.U:
                continue
            value = evaluate_condition(d.condition_of[arg_id], assignment)
            if value != TriValue.U:
                assignment[arg_id] = value
                changed = True
    return assignment


def adf_grounded_labelling(d: DialecticalFramework) -> Labelling:
    """Grounded statuses mapped onto the in/out/undecided vocabulary."""
    return {a: LABEL_OF_TRIVALUE[v] for a, v in adf_grounded(d).items()}


DEFAULT_MODEL_BOUND = 16


def adf_two_valued_models(
    d: DialecticalFramework, bound: int = DEFAULT_MODEL_BOUND
) -> list[dict[str, TriValue]]:
    """All total T/F assignments where each argument equals its condition
    classically and externals match their declaration."""
    ids = d.sorted_ids()
    if len(ids) > bound:
        raise TooLarge(len(ids), bound)
    free = [a for a in ids if not d.is_external(a)]
    fixed = {a: TriValue.T if d.externals[a] else TriValue.F for a in ids if d.is_external(a)}
    models: list[dict[str, TriValue]] = []
    for mask in range(1 << len(free)):
        assignment = dict(fixed)
        for i, arg_id in enumerate(free):
            assignment[arg_id] = TriValue.T if mask >> i & 1 else TriValue.F
        ok = True
        for arg_id in free:
            if evaluate_condition(d.condition_of[arg_id], assignment) != assignment[arg_id]:
                ok = False
                break
        if ok:
            models.append({a: assignment[a] for a in ids})
    models.sort(key=lambda m: (-sum(v == TriValue.T for v in m.values()),
                               sorted(a for a, v in m.items() if v == TriValue.T)))
    return models


def aaf_as_adf(f: ArgumentationFramework) -> DialecticalFramework:
    """Encode an attack framework: each condition is the conjunction of
    negated attackers, the empty conjunction being true."""
    conditions: dict[str, Condition] = {}
    for arg_id in f.sorted_ids():
        cond: Condition | None = None
        for attacker in sorted(f.attackers_of(arg_id)):
            negated = Not(Var(attacker))
            cond = negated if cond is None else And(cond, negated)
        conditions[arg_id] = cond if cond is not None else TRUE
    return DialecticalFramework(f.arguments.values(), conditions)
