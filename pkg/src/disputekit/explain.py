"""Contestable explanations: status reports, dispute trees and what-if deltas.

A status report summarizes each argument's standing (three-valued status,
credulous and skeptical acceptance) together with who defeats it and who
defends it. A dispute tree replays the reinstatement game that certifies
grounded acceptance: the opponent raises every attacker, the proponent
answers each with one already-grounded defender. What-if applies
hypothetical edits to a copy of any framework kind and reports which
arguments changed standing.
"""

from dataclasses import dataclass, field, replace
from enum import Enum

from .adf import (
    Const,
    DialecticalFramework,
    LABEL_OF_TRIVALUE,
    TriValue,
    adf_grounded,
    adf_two_valued_models,
    condition_polarities,
    parse_condition,
    serialize_condition,
)
from .core import (
    AcceptanceMode,
    Argument,
    ArgumentationFramework,
    Extension,
    Label,
    Semantics,
    characteristic_function,
    enumerate_extensions,
    grounded_labelling,
    new_framework,
)
from .errors import BadAudienceOrder, EditConflict, UnknownArgument
from .structured import CaseFile, ToulminArgument, flatten_toulmin
from .variants import (
    AudienceOrder,
    BipolarFramework,
    ValuedFramework,
    baf_to_aaf,
    vaf_to_aaf,
)

AnyFramework = (
    ArgumentationFramework | BipolarFramework | ValuedFramework | DialecticalFramework | CaseFile
)

NO_STABLE_NOTE = "no stable extension exists"


def reduce_framework(
    framework: AnyFramework,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
) -> ArgumentationFramework:
    """Project any framework kind onto a plain attack graph for solving."""
    if isinstance(framework, ArgumentationFramework):
        return framework
    if isinstance(framework, BipolarFramework):
        return baf_to_aaf(framework)
    if isinstance(framework, ValuedFramework):
        if audience is None:
            raise BadAudienceOrder("an audience order is required for value-based frameworks")
        return vaf_to_aaf(framework, audience)
    if isinstance(framework, CaseFile):
        return flatten_toulmin(framework, require_backing).framework
    raise TypeError(f"cannot reduce {type(framework).__name__} to an attack graph")


# --- standings ---------------------------------------------------------------

@dataclass(frozen=True)
class Standing:
    """One argument's acceptance summary under a fixed semantics."""

    status: Label
    credulous: bool
    skeptical: bool


def compute_standings(
    framework: AnyFramework,
    semantics: Semantics = Semantics.GROUNDED,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
) -> dict[str, Standing]:
    """Per-argument standing: grounded status plus extension-membership flags.

    Dialectical frameworks use their own grounded assignment; their
    credulous/skeptical flags quantify over the two-valued models.
    """
    if isinstance(framework, DialecticalFramework):
        grounded = adf_grounded(framework)
        models = adf_two_valued_models(framework)
        standings = {}
        for arg_id, value in grounded.items():
            true_somewhere = any(m[arg_id] == TriValue.T for m in models)
            true_everywhere = all(m[arg_id] == TriValue.T for m in models)
            standings[arg_id] = Standing(
                LABEL_OF_TRIVALUE[value], true_somewhere, true_everywhere
            )
        return standings
    f = reduce_framework(framework, audience, require_backing)
    labelling = grounded_labelling(f)
    if semantics == Semantics.GROUNDED:
        return {
            a: Standing(lab, lab == Label.IN, lab == Label.IN) for a, lab in labelling.items()
        }
    extensions = enumerate_extensions(f, semantics)
    standings = {}
    for a in f.sorted_ids():
        credulous = any(a in e for e in extensions)
        skeptical = all(a in e for e in extensions)
        standings[a] = Standing(labelling[a], credulous, skeptical)
    return standings


# --- status report -----------------------------------------------------------

@dataclass(frozen=True)
class StatusEntry:
    """Report row: standing plus defeaters (standing attackers) and, for
    every attacker, the ids that strike back at it."""

    id: str
    label: str | None
    status: Label
    credulous: bool
    skeptical: bool
    defeaters: tuple[str, ...]
    defenders: dict[str, tuple[str, ...]]
    condition: str | None = None
    external: bool | None = None


@dataclass(frozen=True)
class StatusReport:
    semantics: Semantics
    entries: tuple[StatusEntry, ...]
    extension_count: int
    notes: tuple[str, ...] = ()

    def entry(self, arg_id: str) -> StatusEntry:
        for e in self.entries:
            if e.id == arg_id:
                return e
        raise UnknownArgument(arg_id)


def status_report(
    framework: AnyFramework,
    semantics: Semantics = Semantics.GROUNDED,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
) -> StatusReport:
    """Summary-level explanation of every argument's standing."""
    if isinstance(framework, DialecticalFramework):
        return _adf_status_report(framework)
    f = reduce_framework(framework, audience, require_backing)
    standings = compute_standings(framework, semantics, audience, require_backing)
    labelling = grounded_labelling(f)
    entries = []
    for arg_id in f.sorted_ids():
        attackers = sorted(f.attackers_of(arg_id))
        defeaters = tuple(b for b in attackers if labelling[b] == Label.IN)
        defenders = {b: tuple(sorted(f.attackers_of(b))) for b in attackers}
        s = standings[arg_id]
        entries.append(
            StatusEntry(
                id=arg_id,
                label=f.arguments[arg_id].label,
                status=s.status,
                credulous=s.credulous,
                skeptical=s.skeptical,
                defeaters=defeaters,
                defenders=defenders,
            )
        )
    extensions = enumerate_extensions(f, semantics)
    notes = ()
    if semantics == Semantics.STABLE and not extensions:
        notes = (NO_STABLE_NOTE,)
    return StatusReport(semantics, tuple(entries), len(extensions), notes)


def _adf_status_report(d: DialecticalFramework) -> StatusReport:
    standings = compute_standings(d)
    grounded = adf_grounded(d)
    entries = []
    for arg_id in d.sorted_ids():
        cond = d.condition_of.get(arg_id)
        polar = condition_polarities(cond) if cond is not None else {}
        negative_parents = sorted(p for p, signs in polar.items() if False in signs)
        defeaters = tuple(p for p in negative_parents if grounded[p] == TriValue.T)
        defenders = {}
        for p in negative_parents:
            p_cond = d.condition_of.get(p)
            p_polar = condition_polarities(p_cond) if p_cond is not None else {}
            defenders[p] = tuple(
                sorted(
                    q
                    for q, signs in p_polar.items()
                    if False in signs and grounded[q] == TriValue.T
                )
            )
        s = standings[arg_id]
        entries.append(
            StatusEntry(
                id=arg_id,
                label=d.arguments[arg_id].label,
                status=s.status,
                credulous=s.credulous,
                skeptical=s.skeptical,
                defeaters=defeaters,
                defenders=defenders,
                condition=serialize_condition(cond) if cond is not None else None,
                external=d.is_external(arg_id) or None,
            )
        )
    models = adf_two_valued_models(d)
    return StatusReport(Semantics.GROUNDED, tuple(entries), len(models))


# --- dispute tree -------------------------------------------------------------

class Role(str, Enum):
    PROPONENT = "proponent"
    OPPONENT = "opponent"


@dataclass(frozen=True)
class DisputeNode:
    argument: str
    role: Role
    children: tuple["DisputeNode", ...]
    countered: bool
    """For opponent nodes: whether the proponent found a standing reply.
    For proponent nodes: whether every objection below is countered."""


@dataclass(frozen=True)
class DisputeTree:
    target: str
    root: DisputeNode
    proponent_wins: bool


def _defense_ranks(f: ArgumentationFramework) -> dict[str, int]:
    """Iteration index at which each grounded argument enters the fixpoint."""
    ranks: dict[str, int] = {}
    current: set[str] = set()
    stage = 0
    while True:
        step = characteristic_function(f, current)
        if step == current:
            return ranks
        stage += 1
        for a in step - current:
            ranks[a] = stage
        current = step


def dispute_tree(f: ArgumentationFramework, arg_id: str) -> DisputeTree:
    """Reinstatement game for `arg_id`: the proponent wins exactly when the
    argument is grounded-accepted.

    Opponent nodes raise every attacker; the proponent answers an objection
    with one grounded defender of minimal defense rank, never reusing an
    argument along a branch.
    """
    f._check_known(arg_id)
    labelling = grounded_labelling(f)
    ranks = _defense_ranks(f)

    def proponent(a: str, used: frozenset[str]) -> DisputeNode:
        children = [opponent(b, used) for b in sorted(f.attackers_of(a))]
        return DisputeNode(a, Role.PROPONENT, tuple(children), all(c.countered for c in children))

    def opponent(b: str, used: frozenset[str]) -> DisputeNode:
        candidates = [
            d
            for d in f.attackers_of(b)
            if labelling[d] == Label.IN and d not in used
        ]
        if labelling[b] != Label.OUT or not candidates:
            return DisputeNode(b, Role.OPPONENT, (), False)
        defender = min(candidates, key=lambda d: (ranks[d], d))
        reply = proponent(defender, used | {defender})
        return DisputeNode(b, Role.OPPONENT, (reply,), reply.countered)

    root = proponent(arg_id, frozenset({arg_id}))
    return DisputeTree(arg_id, root, root.countered and labelling[arg_id] == Label.IN)


# --- hypothetical edits --------------------------------------------------------

@dataclass(frozen=True)
class AddArgument:
    id: str
    label: str | None = None
    value: str | None = None
    condition: str | None = None
    external: bool | None = None
    toulmin: ToulminArgument | None = None


@dataclass(frozen=True)
class RemoveArgument:
    id: str


@dataclass(frozen=True)
class AddAttack:
    source: str
    target: str


@dataclass(frozen=True)
class RemoveAttack:
    source: str
    target: str


@dataclass(frozen=True)
class AddSupport:
    source: str
    target: str


@dataclass(frozen=True)
class RemoveSupport:
    source: str
    target: str


@dataclass(frozen=True)
class SetAudience:
    values: tuple[str, ...]


@dataclass(frozen=True)
class SetExternal:
    id: str
    truth: bool | None


Edit = (
    AddArgument
    | RemoveArgument
    | AddAttack
    | RemoveAttack
    | AddSupport
    | RemoveSupport
    | SetAudience
    | SetExternal
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise EditConflict(message)


def _apply_one(
    framework: AnyFramework, audience: AudienceOrder | None, edit: Edit
) -> tuple[AnyFramework, AudienceOrder | None]:
    if isinstance(edit, SetAudience):
        _require(
            isinstance(framework, ValuedFramework),
            "audience order applies to value-based frameworks only",
        )
        return framework, AudienceOrder(edit.values)
    if isinstance(edit, SetExternal):
        _require(
            isinstance(framework, DialecticalFramework),
            "external truth applies to dialectical frameworks only",
        )
        _require(edit.id in framework.arguments, f"unknown argument {edit.id}")
        externals = dict(framework.externals)
        if edit.truth is None:
            _require(edit.id in externals, f"{edit.id} is not externally declared")
            _require(
                edit.id in framework.condition_of,
                f"{edit.id} has no condition to fall back to",
            )
            del externals[edit.id]
        else:
            cond = framework.condition_of.get(edit.id)
            _require(
                cond is None or isinstance(cond, Const),
                f"{edit.id} has a non-constant condition",
            )
            externals[edit.id] = edit.truth
        return (
            DialecticalFramework(
                framework.arguments.values(), framework.condition_of, externals
            ),
            audience,
        )

    if isinstance(framework, ArgumentationFramework):
        return _apply_aaf(framework, edit), audience
    if isinstance(framework, BipolarFramework):
        return _apply_baf(framework, edit), audience
    if isinstance(framework, ValuedFramework):
        return _apply_vaf(framework, edit), audience
    if isinstance(framework, DialecticalFramework):
        return _apply_adf(framework, edit), audience
    if isinstance(framework, CaseFile):
        return _apply_case(framework, edit), audience
    raise TypeError(f"cannot edit {type(framework).__name__}")


def _plain_argument(edit: AddArgument) -> Argument:
    return Argument(edit.id, edit.label)


def _apply_aaf(f: ArgumentationFramework, edit: Edit) -> ArgumentationFramework:
    args = dict(f.arguments)
    attacks = set(f.attacks)
    if isinstance(edit, AddArgument):
        _require(
            edit.value is None and edit.condition is None
            and edit.external is None and edit.toulmin is None,
            "plain frameworks take only id and label",
        )
        _require(edit.id not in args, f"argument {edit.id} already exists")
        args[edit.id] = _plain_argument(edit)
    elif isinstance(edit, RemoveArgument):
        _require(edit.id in args, f"unknown argument {edit.id}")
        del args[edit.id]
        attacks = {(s, t) for (s, t) in attacks if edit.id not in (s, t)}
    elif isinstance(edit, AddAttack):
        pair = (edit.source, edit.target)
        _require(edit.source in args and edit.target in args, f"attack {pair} names unknown arguments")
        _require(pair not in attacks, f"attack {pair} already present")
        attacks.add(pair)
    elif isinstance(edit, RemoveAttack):
        pair = (edit.source, edit.target)
        _require(pair in attacks, f"attack {pair} not present")
        attacks.remove(pair)
    else:
        raise EditConflict(f"{type(edit).__name__} does not apply to a plain framework")
    return new_framework(args.values(), attacks)


def _apply_baf(b: BipolarFramework, edit: Edit) -> BipolarFramework:
    supports = set(b.supports)
    if isinstance(edit, AddSupport):
        pair = (edit.source, edit.target)
        _require(
            edit.source in b.base.arguments and edit.target in b.base.arguments,
            f"support {pair} names unknown arguments",
        )
        _require(pair not in supports, f"support {pair} already present")
        supports.add(pair)
        return BipolarFramework(b.base, supports)
    if isinstance(edit, RemoveSupport):
        pair = (edit.source, edit.target)
        _require(pair in supports, f"support {pair} not present")
        supports.remove(pair)
        return BipolarFramework(b.base, supports)
    if isinstance(edit, AddArgument):
        _require(
            edit.value is None and edit.condition is None
            and edit.external is None and edit.toulmin is None,
            "bipolar frameworks take only id and label",
        )
    if isinstance(edit, RemoveArgument):
        supports = {(s, t) for (s, t) in supports if edit.id not in (s, t)}
    return BipolarFramework(_apply_aaf(b.base, edit), supports)


def _apply_vaf(v: ValuedFramework, edit: Edit) -> ValuedFramework:
    values = dict(v.value_of)
    if isinstance(edit, AddArgument):
        _require(edit.value is not None, "value-based frameworks require a value per argument")
        _require(
            edit.condition is None and edit.external is None and edit.toulmin is None,
            "value-based frameworks take id, label and value",
        )
        base = _apply_aaf(v.base, AddArgument(edit.id, edit.label))
        values[edit.id] = edit.value
        return ValuedFramework(base, values)
    if isinstance(edit, RemoveArgument):
        values.pop(edit.id, None)
    return ValuedFramework(_apply_aaf(v.base, edit), values)


def _apply_adf(d: DialecticalFramework, edit: Edit) -> DialecticalFramework:
    args = dict(d.arguments)
    conditions = dict(d.condition_of)
    externals = dict(d.externals)
    if isinstance(edit, AddArgument):
        _require(edit.id not in args, f"argument {edit.id} already exists")
        _require(edit.value is None and edit.toulmin is None, "dialectical arguments take a condition or an external truth")
        _require(
            edit.condition is not None or edit.external is not None,
            "a dialectical argument needs a condition or an external truth",
        )
        args[edit.id] = Argument(edit.id, edit.label)
        if edit.condition is not None:
            conditions[edit.id] = parse_condition(edit.condition, frozenset(args))
        if edit.external is not None:
            externals[edit.id] = edit.external
    elif isinstance(edit, RemoveArgument):
        _require(edit.id in args, f"unknown argument {edit.id}")
        for other, cond in conditions.items():
            if other != edit.id and edit.id in cond.referenced_ids():
                raise EditConflict(
                    f"argument {edit.id} is referenced by the condition of {other}"
                )
        del args[edit.id]
        conditions.pop(edit.id, None)
        externals.pop(edit.id, None)
    else:
        raise EditConflict(
            f"{type(edit).__name__} does not apply to a dialectical framework"
        )
    return DialecticalFramework(args.values(), conditions, externals)


def _apply_case(c: CaseFile, edit: Edit) -> CaseFile:
    args = dict(c.arguments)
    party = dict(c.party_of)
    if isinstance(edit, AddArgument):
        _require(edit.toulmin is not None, "case files take structured arguments")
        _require(edit.toulmin.id == edit.id, "edit id must match the structured argument id")
        _require(edit.id not in args, f"argument {edit.id} already exists")
        for ref in edit.toulmin.rebuttals:
            _require(ref in args, f"rebuttal reference {ref} is unknown")
        args[edit.id] = edit.toulmin
    elif isinstance(edit, RemoveArgument):
        _require(edit.id in args, f"unknown argument {edit.id}")
        del args[edit.id]
        party.pop(edit.id, None)
        for other_id, other in list(args.items()):
            if edit.id in other.rebuttals:
                args[other_id] = replace(
                    other, rebuttals=tuple(r for r in other.rebuttals if r != edit.id)
                )
    elif isinstance(edit, AddAttack):
        _require(edit.source in args and edit.target in args, "rebuttal names unknown arguments")
        target = args[edit.target]
        _require(edit.source not in target.rebuttals, "rebuttal already present")
        args[edit.target] = replace(target, rebuttals=target.rebuttals + (edit.source,))
    elif isinstance(edit, RemoveAttack):
        _require(edit.target in args, f"unknown argument {edit.target}")
        target = args[edit.target]
        _require(edit.source in target.rebuttals, "rebuttal not present")
        args[edit.target] = replace(
            target, rebuttals=tuple(r for r in target.rebuttals if r != edit.source)
        )
    else:
        raise EditConflict(f"{type(edit).__name__} does not apply to a case file")
    return CaseFile(args, party)


def apply_edits(
    framework: AnyFramework, edits, audience: AudienceOrder | None = None
) -> tuple[AnyFramework, AudienceOrder | None]:
    """Apply edits to copies; the inputs are never mutated."""
    current, current_audience = framework, audience
    for edit in edits:
        current, current_audience = _apply_one(current, current_audience, edit)
    return current, current_audience


def invert_edits(
    framework: AnyFramework, edits, audience: AudienceOrder | None = None
) -> list[Edit]:
    """Edit list that undoes `edits` when applied to the edited framework."""
    groups: list[list[Edit]] = []
    current, current_audience = framework, audience
    for edit in edits:
        groups.append(_invert_one(current, current_audience, edit))
        current, current_audience = _apply_one(current, current_audience, edit)
    return [inverse for group in reversed(groups) for inverse in group]


def _invert_one(
    framework: AnyFramework, audience: AudienceOrder | None, edit: Edit
) -> list[Edit]:
    if isinstance(edit, AddArgument):
        return [RemoveArgument(edit.id)]
    if isinstance(edit, RemoveArgument):
        return _restore_argument(framework, edit.id)
    if isinstance(edit, AddAttack):
        return [RemoveAttack(edit.source, edit.target)]
    if isinstance(edit, RemoveAttack):
        return [AddAttack(edit.source, edit.target)]
    if isinstance(edit, AddSupport):
        return [RemoveSupport(edit.source, edit.target)]
    if isinstance(edit, RemoveSupport):
        return [AddSupport(edit.source, edit.target)]
    if isinstance(edit, SetAudience):
        _require(audience is not None, "no audience order to restore")
        return [SetAudience(tuple(audience.values))]
    if isinstance(edit, SetExternal):
        assert isinstance(framework, DialecticalFramework)
        previous = framework.externals.get(edit.id)
        return [SetExternal(edit.id, previous)]
    raise EditConflict(f"cannot invert {type(edit).__name__}")


def _restore_argument(framework: AnyFramework, arg_id: str) -> list[Edit]:
    if isinstance(framework, CaseFile):
        _require(arg_id in framework.arguments, f"unknown argument {arg_id}")
        original = framework.arguments[arg_id]
        outgoing = [
            AddAttack(arg_id, other_id)
            for other_id, other in sorted(framework.arguments.items())
            if other_id != arg_id and arg_id in other.rebuttals
        ]
        stripped = replace(
            original, rebuttals=tuple(r for r in original.rebuttals if r != arg_id)
        )
        add = AddArgument(arg_id, toulmin=stripped)
        restore_self = (
            [AddAttack(arg_id, arg_id)] if arg_id in original.rebuttals else []
        )
        return [add] + restore_self + outgoing
    if isinstance(framework, DialecticalFramework):
        _require(arg_id in framework.arguments, f"unknown argument {arg_id}")
        cond = framework.condition_of.get(arg_id)
        return [
            AddArgument(
                arg_id,
                label=framework.arguments[arg_id].label,
                condition=serialize_condition(cond) if cond is not None else None,
                external=framework.externals.get(arg_id),
            )
        ]
    base = framework if isinstance(framework, ArgumentationFramework) else framework.base
    _require(arg_id in base.arguments, f"unknown argument {arg_id}")
    value = framework.value_of[arg_id] if isinstance(framework, ValuedFramework) else None
    edits: list[Edit] = [
        AddArgument(arg_id, label=base.arguments[arg_id].label, value=value)
    ]
    for src, dst in sorted(base.attacks):
        if arg_id in (src, dst):
            edits.append(AddAttack(src, dst))
    if isinstance(framework, BipolarFramework):
        for src, dst in sorted(framework.supports):
            if arg_id in (src, dst):
                edits.append(AddSupport(src, dst))
    return edits


@dataclass(frozen=True)
class WhatIfDelta:
    """Standings before and after a hypothetical edit batch."""

    edits: tuple[Edit, ...]
    before: dict[str, Standing]
    after: dict[str, Standing]
    changed: frozenset[str]


def what_if(
    framework: AnyFramework,
    edits,
    semantics: Semantics = Semantics.GROUNDED,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
) -> WhatIfDelta:
    """Solve, apply edits to a copy, re-solve, and report the flipped arguments."""
    before = compute_standings(framework, semantics, audience, require_backing)
    edited, edited_audience = apply_edits(framework, edits, audience)
    after = compute_standings(edited, semantics, edited_audience, require_backing)
    changed = frozenset(
        a for a in set(before) | set(after) if before.get(a) != after.get(a)
    )
    return WhatIfDelta(tuple(edits), before, after, changed)


# --- fixed-template text rendering ---------------------------------------------

_STATUS_PHRASE = {
    Label.IN: "accepted",
    Label.OUT: "rejected",
    Label.UNDEC: "undecided",
}


def render_status_report(report: StatusReport, verbosity: int = 1) -> str:
    """Human-readable report; verbosity 0 keeps one line per argument."""
    lines = []
    for e in report.entries:
        headline = f"{e.id}: {_STATUS_PHRASE[e.status]}"
        if report.semantics != Semantics.GROUNDED:
            flags = []
            if e.skeptical:
                flags.append("in every extension")
            elif e.credulous:
                flags.append("in some extension")
            else:
                flags.append("in no extension")
            headline += f" ({', '.join(flags)})"
        lines.append(headline)
        if verbosity == 0:
            continue
        if e.label:
            lines.append(f"  claim: {e.label}")
        if e.condition is not None:
            lines.append(f"  acceptance condition: {e.condition}")
        if e.external:
            lines.append("  settled by external evidence")
        if e.defeaters:
            lines.append(f"  defeated by: {', '.join(e.defeaters)}")
        if verbosity >= 2:
            for attacker, defenders in sorted(e.defenders.items()):
                if defenders:
                    lines.append(
                        f"  against {attacker}: defended by {', '.join(defenders)}"
                    )
                else:
                    lines.append(f"  against {attacker}: no defender")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_dispute_tree(
    tree: DisputeTree, framework: AnyFramework | None = None, verbosity: int = 1
) -> str:
    """Indented pro/con dialogue; proponent lines alternate with objections."""
    labels = {}
    if isinstance(framework, ArgumentationFramework):
        labels = {a: arg.label for a, arg in framework.arguments.items()}

    lines = [
        f"dispute over {tree.target}: "
        + ("proponent wins" if tree.proponent_wins else "proponent loses")
    ]

    def emit(node: DisputeNode, depth: int) -> None:
        tag = "PRO" if node.role == Role.PROPONENT else "CON"
        line = "  " * depth + f"{tag} {node.argument}"
        if verbosity >= 1 and labels.get(node.argument):
            line += f" ({labels[node.argument]})"
        if verbosity >= 2:
            if node.role == Role.OPPONENT and not node.children:
                line += " [unanswered]" if not node.countered else ""
            if node.role == Role.OPPONENT and not node.countered and node.children:
                line += " [reply fails]"
        lines.append(line)
        for child in node.children:
            emit(child, depth + 1)

    emit(tree.root, 0)
    return "\n".join(lines) + "\n"
