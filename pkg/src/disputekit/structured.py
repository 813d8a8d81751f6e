"""Toulmin-structured arguments and their flattening into attack graphs.

Each structured argument carries a claim, premises, the warrant linking
them, optional backing and qualifier, and the ids of the arguments that
rebut it. Flattening produces one abstract argument per structured one and
an attack from every rebutting argument toward the argument it rebuts;
structurally incomplete arguments are dropped from the graph and reported.
"""

from dataclasses import dataclass, field
from enum import Enum

from .core import Argument, ArgumentationFramework, new_framework
from .errors import DuplicateArgumentId, InvalidCase


class ViolationKind(str, Enum):
    MISSING_WARRANT = "missing_warrant"
    EMPTY_PREMISES = "empty_premises"
    MISSING_BACKING = "missing_backing"
    DANGLING_REBUTTAL = "dangling_rebuttal"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    argument_id: str
    detail: str = ""

    def __str__(self) -> str:
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{self.kind.value}: {self.argument_id}{suffix}"


@dataclass(frozen=True)
class ToulminArgument:
    """Claim with supporting structure; rebuttals reference opposing arguments."""

    id: str
    claim: str
    premises: tuple[str, ...] = ()
    warrant: str = ""
    backing: str | None = None
    qualifier: str = "certainly"
    rebuttals: tuple[str, ...] = ()

    def __post_init__(self):
        Argument(self.id)  # enforce the id format rules
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "rebuttals", tuple(self.rebuttals))


@dataclass
class CaseFile:
    """A dispute: the structured arguments plus optional party attribution."""

    arguments: dict[str, ToulminArgument] = field(default_factory=dict)
    party_of: dict[str, str] = field(default_factory=dict)

    @staticmethod
    def of(arguments, party_of: dict[str, str] | None = None) -> "CaseFile":
        table: dict[str, ToulminArgument] = {}
        for arg in arguments:
            if arg.id in table:
                raise DuplicateArgumentId(arg.id)
            table[arg.id] = arg
        return CaseFile(table, dict(party_of or {}))

    def sorted_ids(self) -> list[str]:
        return sorted(self.arguments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CaseFile):
            return NotImplemented
        return self.arguments == other.arguments and self.party_of == other.party_of


def validate_toulmin(case: CaseFile, require_backing: bool = False) -> list[Violation]:
    """Structural check; an empty list means the case is well-formed."""
    violations: list[Violation] = []
    for arg_id in case.sorted_ids():
        arg = case.arguments[arg_id]
        if not arg.premises:
            violations.append(Violation(ViolationKind.EMPTY_PREMISES, arg_id))
        if not arg.warrant:
            violations.append(Violation(ViolationKind.MISSING_WARRANT, arg_id))
        if require_backing and not arg.backing:
            violations.append(Violation(ViolationKind.MISSING_BACKING, arg_id))
        for ref in arg.rebuttals:
            if ref not in case.arguments:
                violations.append(
                    Violation(ViolationKind.DANGLING_REBUTTAL, arg_id, f"references {ref}")
                )
    return violations


@dataclass(frozen=True)
class FlattenResult:
    """Flattened framework plus the violations of any excluded arguments."""

    framework: ArgumentationFramework
    excluded: tuple[Violation, ...]


def flatten_toulmin(case: CaseFile, require_backing: bool = False) -> FlattenResult:
    """One abstract argument per valid structured argument; each rebuttal
    becomes an attack from the rebutting argument toward the rebutted one.

    Arguments failing validation are excluded (with their attack edges) and
    reported in the result. Rebuttal references to ids absent from the case
    cannot be repaired by exclusion and raise InvalidCase.
    """
    violations = validate_toulmin(case, require_backing)
    dangling = [v for v in violations if v.kind == ViolationKind.DANGLING_REBUTTAL]
    if dangling:
        raise InvalidCase(dangling)
    excluded_ids = {v.argument_id for v in violations}
    included = [a for a in case.sorted_ids() if a not in excluded_ids]
    arguments = [
        Argument(id=arg_id, label=case.arguments[arg_id].claim,
                 metadata={"qualifier": case.arguments[arg_id].qualifier})
        for arg_id in included
    ]
    attacks = {
        (rebutter, arg_id)
        for arg_id in included
        for rebutter in case.arguments[arg_id].rebuttals
        if rebutter not in excluded_ids
    }
    return FlattenResult(new_framework(arguments, attacks), tuple(violations))


def case_from_framework(f: ArgumentationFramework) -> CaseFile:
    """Recast an attack graph as a case: one structured argument per node,
    rebuttals being the node's attackers."""
    args = [
        ToulminArgument(
            id=arg_id,
            claim=f.arguments[arg_id].label or arg_id,
            premises=("as stated",),
            warrant="as stated",
            rebuttals=tuple(sorted(f.attackers_of(arg_id))),
        )
        for arg_id in f.sorted_ids()
    ]
    return CaseFile.of(args)
