"""File formats, deterministic serialization and solver task plumbing.

Three input formats: TGF and APX cover plain attack graphs; the extended
JSON document is the single format that also carries supports, values,
acceptance conditions and structured arguments. JSON serialization is
canonical (fixed key order, lexicographically sorted arguments and pairs)
so outputs are byte-stable.
"""

import json
import re
from dataclasses import dataclass
from enum import Enum

from .adf import (
    DialecticalFramework,
    TriValue,
    adf_grounded,
    adf_two_valued_models,
    condition_polarities,
    parse_condition,
    serialize_condition,
)
from .core import (
    Argument,
    ArgumentationFramework,
    Extension,
    Semantics,
    enumerate_extensions,
    new_framework,
)
from .errors import (
    ApxSyntaxError,
    BadLine,
    IncompatibleTask,
    MissingSeparator,
    SchemaError,
    UnknownArgument,
)
from .explain import (
    AddArgument,
    AddAttack,
    AddSupport,
    AnyFramework,
    Edit,
    RemoveArgument,
    RemoveAttack,
    RemoveSupport,
    SetAudience,
    SetExternal,
    Standing,
    WhatIfDelta,
    reduce_framework,
)
from .oracle import brute_force_sweep
from .structured import CaseFile, ToulminArgument
from .variants import AudienceOrder, BipolarFramework, ValuedFramework


# --- TGF ---------------------------------------------------------------------

def parse_tgf(text: str) -> ArgumentationFramework:
    """Node lines (`id [label]`), a lone `#`, then edge lines (`src dst`)."""
    arguments: list[Argument] = []
    attacks: list[tuple[str, str]] = []
    seen_separator = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if seen_separator:
                raise BadLine(line_no, raw)
            seen_separator = True
            continue
        tokens = line.split()
        if not seen_separator:
            label = " ".join(tokens[1:]) or None
            arguments.append(Argument(tokens[0], label))
        else:
            if len(tokens) != 2:
                raise BadLine(line_no, raw)
            attacks.append((tokens[0], tokens[1]))
    if not seen_separator:
        raise MissingSeparator()
    return new_framework(arguments, attacks)


def serialize_tgf(f: ArgumentationFramework) -> str:
    lines = []
    for arg_id in f.sorted_ids():
        label = f.arguments[arg_id].label
        lines.append(f"{arg_id} {label}" if label else arg_id)
    lines.append("#")
    for src, dst in sorted(f.attacks):
        lines.append(f"{src} {dst}")
    return "\n".join(lines) + "\n"


# --- APX ---------------------------------------------------------------------

_APX_FACT = re.compile(
    r"(?P<pred>arg|att)\s*\(\s*(?P<a>[^,()\s]+)\s*(?:,\s*(?P<b>[^,()\s]+)\s*)?\)\s*\."
)


def parse_apx(text: str) -> ArgumentationFramework:
    """`arg(x).` and `att(x,y).` facts in any order; `%` comments."""
    stripped = re.sub(r"%[^\n]*", lambda m: " " * len(m.group(0)), text)
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _APX_FACT.match(stripped, pos)
        if m is None:
            raise ApxSyntaxError(pos, "expected `arg(x).` or `att(x,y).`")
        pred, a, b = m.group("pred"), m.group("a"), m.group("b")
        if pred == "arg":
            if b is not None:
                raise ApxSyntaxError(pos, "arg takes one term")
            arguments.append(a)
        else:
            if b is None:
                raise ApxSyntaxError(pos, "att takes two terms")
            attacks.append((a, b))
        pos = m.end()
    return new_framework(arguments, attacks)


def serialize_apx(f: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in f.sorted_ids()]
    lines += [f"att({s},{t})." for s, t in sorted(f.attacks)]
    return "\n".join(lines) + "\n"


# --- extended JSON documents ----------------------------------------------------

class DocumentKind(str, Enum):
    AAF = "aaf"
    BAF = "baf"
    VAF = "vaf"
    ADF = "adf"
    CASEFILE = "casefile"


@dataclass(frozen=True)
class Document:
    """A framework of any kind plus the optional document-level audience order."""

    kind: DocumentKind
    framework: AnyFramework
    audience: AudienceOrder | None = None


def document_of(framework: AnyFramework, audience: AudienceOrder | None = None) -> Document:
    kind = {
        ArgumentationFramework: DocumentKind.AAF,
        BipolarFramework: DocumentKind.BAF,
        ValuedFramework: DocumentKind.VAF,
        DialecticalFramework: DocumentKind.ADF,
        CaseFile: DocumentKind.CASEFILE,
    }[type(framework)]
    return Document(kind, framework, audience)


def _expect(obj, path: str, types, reason: str):
    if not isinstance(obj, types):
        raise SchemaError(path, reason)
    return obj


def _parse_pairs(obj, path: str) -> list[tuple[str, str]]:
    pairs = []
    items = _expect(obj, path, list, "must be a list of [source, target] pairs")
    for i, item in enumerate(items):
        entry = _expect(item, f"{path}[{i}]", list, "must be a [source, target] pair")
        if len(entry) != 2 or not all(isinstance(x, str) for x in entry):
            raise SchemaError(f"{path}[{i}]", "must be a pair of argument ids")
        pairs.append((entry[0], entry[1]))
    return pairs


_ARGUMENT_KEYS = {"id", "label", "value", "condition", "external", "toulmin"}
_TOULMIN_KEYS = {"claim", "qualifier", "premises", "warrant", "backing", "rebuttals", "party"}


def _parse_toulmin(obj, path: str, arg_id: str) -> tuple[ToulminArgument, str | None]:
    fields = _expect(obj, path, dict, "must be an object")
    unknown = set(fields) - _TOULMIN_KEYS
    if unknown:
        raise SchemaError(path, f"unknown keys: {', '.join(sorted(unknown))}")
    claim = _expect(fields.get("claim", ""), f"{path}.claim", str, "must be a string")
    premises = _expect(fields.get("premises", []), f"{path}.premises", list, "must be a list")
    rebuttals = _expect(fields.get("rebuttals", []), f"{path}.rebuttals", list, "must be a list")
    toulmin = ToulminArgument(
        id=arg_id,
        claim=claim,
        premises=tuple(premises),
        warrant=fields.get("warrant", ""),
        backing=fields.get("backing"),
        qualifier=fields.get("qualifier", "certainly"),
        rebuttals=tuple(rebuttals),
    )
    return toulmin, fields.get("party")


def parse_document(text: str) -> Document:
    """Parse the extended JSON format; framework validation errors propagate."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    return document_from_obj(obj)


def document_from_obj(obj) -> Document:
    body = _expect(obj, "$", dict, "document must be a JSON object")
    try:
        kind = DocumentKind(_expect(body.get("kind"), "$.kind", str, "missing document kind"))
    except ValueError:
        raise SchemaError("$.kind", f"unknown kind {body.get('kind')!r}")
    raw_args = _expect(body.get("arguments"), "$.arguments", list, "missing arguments list")
    attacks = _parse_pairs(body.get("attacks", []), "$.attacks")
    supports = _parse_pairs(body.get("supports", []), "$.supports")
    if supports and kind not in (DocumentKind.BAF, DocumentKind.ADF):
        raise SchemaError("$.supports", f"supports are not part of a {kind.value} document")
    value_order = body.get("value_order")
    if value_order is not None and kind != DocumentKind.VAF:
        raise SchemaError("$.value_order", f"value_order is not part of a {kind.value} document")

    arguments: list[Argument] = []
    values: dict[str, str] = {}
    conditions_text: dict[str, str] = {}
    externals: dict[str, bool] = {}
    toulmins: list[ToulminArgument] = []
    party_of: dict[str, str] = {}
    for i, raw in enumerate(raw_args):
        path = f"$.arguments[{i}]"
        entry = _expect(raw, path, dict, "must be an object")
        unknown = set(entry) - _ARGUMENT_KEYS
        if unknown:
            raise SchemaError(path, f"unknown keys: {', '.join(sorted(unknown))}")
        arg_id = _expect(entry.get("id"), f"{path}.id", str, "missing argument id")
        label = entry.get("label")
        if label is not None:
            _expect(label, f"{path}.label", str, "must be a string")
        arguments.append(Argument(arg_id, label))
        for key in ("value", "condition", "external", "toulmin"):
            if key in entry and entry[key] is not None:
                allowed = {
                    "value": (DocumentKind.VAF,),
                    "condition": (DocumentKind.ADF,),
                    "external": (DocumentKind.ADF,),
                    "toulmin": (DocumentKind.CASEFILE,),
                }[key]
                if kind not in allowed:
                    raise SchemaError(f"{path}.{key}", f"not part of a {kind.value} document")
        if kind == DocumentKind.VAF:
            value = _expect(entry.get("value"), f"{path}.value", str, "every argument needs a value")
            values[arg_id] = value
        if kind == DocumentKind.ADF:
            if entry.get("condition") is not None:
                conditions_text[arg_id] = _expect(
                    entry["condition"], f"{path}.condition", str, "must be a string"
                )
            if entry.get("external") is not None:
                externals[arg_id] = _expect(
                    entry["external"], f"{path}.external", bool, "must be a boolean"
                )
        if kind == DocumentKind.CASEFILE:
            if entry.get("toulmin") is None:
                raise SchemaError(f"{path}.toulmin", "every case-file argument needs one")
            toulmin, party = _parse_toulmin(entry["toulmin"], f"{path}.toulmin", arg_id)
            toulmins.append(toulmin)
            if party is not None:
                party_of[arg_id] = party

    if kind == DocumentKind.AAF:
        return Document(kind, new_framework(arguments, attacks))
    if kind == DocumentKind.BAF:
        return Document(kind, BipolarFramework(new_framework(arguments, attacks), supports))
    if kind == DocumentKind.VAF:
        framework = ValuedFramework(new_framework(arguments, attacks), values)
        audience = AudienceOrder(value_order) if value_order is not None else None
        return Document(kind, framework, audience)
    if kind == DocumentKind.ADF:
        declared = frozenset(a.id for a in arguments)
        conditions = {
            arg_id: parse_condition(text, declared)
            for arg_id, text in conditions_text.items()
        }
        # attack/support pairs on an ADF are display-only; conditions are the definition
        return Document(kind, DialecticalFramework(arguments, conditions, externals))
    return Document(kind, CaseFile({t.id: t for t in toulmins}, party_of))


def _argument_objs(doc: Document) -> list[dict]:
    entries = []
    framework = doc.framework
    if isinstance(framework, CaseFile):
        for arg_id in framework.sorted_ids():
            t = framework.arguments[arg_id]
            toulmin: dict = {"claim": t.claim, "qualifier": t.qualifier,
                             "premises": list(t.premises), "warrant": t.warrant}
            if t.backing is not None:
                toulmin["backing"] = t.backing
            toulmin["rebuttals"] = sorted(t.rebuttals)
            if arg_id in framework.party_of:
                toulmin["party"] = framework.party_of[arg_id]
            entries.append({"id": arg_id, "toulmin": toulmin})
        return entries
    base = framework.base if isinstance(framework, (BipolarFramework, ValuedFramework)) else framework
    for arg_id in sorted(base.arguments):
        arg = base.arguments[arg_id]
        entry: dict = {"id": arg_id}
        if arg.label is not None:
            entry["label"] = arg.label
        if isinstance(framework, ValuedFramework):
            entry["value"] = framework.value_of[arg_id]
        if isinstance(framework, DialecticalFramework):
            cond = framework.condition_of.get(arg_id)
            if cond is not None:
                entry["condition"] = serialize_condition(cond)
            if framework.is_external(arg_id):
                entry["external"] = framework.externals[arg_id]
        entries.append(entry)
    return entries


def _display_edges(doc: Document) -> tuple[list[list[str]], list[list[str]]]:
    framework = doc.framework
    if isinstance(framework, ArgumentationFramework):
        return [list(p) for p in sorted(framework.attacks)], []
    if isinstance(framework, (BipolarFramework,)):
        return (
            [list(p) for p in sorted(framework.base.attacks)],
            [list(p) for p in sorted(framework.supports)],
        )
    if isinstance(framework, ValuedFramework):
        return [list(p) for p in sorted(framework.base.attacks)], []
    if isinstance(framework, DialecticalFramework):
        attacks, supports = set(), set()
        for arg_id, cond in framework.condition_of.items():
            for parent, signs in condition_polarities(cond).items():
                if False in signs:
                    attacks.add((parent, arg_id))
                if True in signs:
                    supports.add((parent, arg_id))
        return [list(p) for p in sorted(attacks)], [list(p) for p in sorted(supports)]
    rebuttal_pairs = {
        (r, arg_id)
        for arg_id, t in framework.arguments.items()
        for r in t.rebuttals
    }
    return [list(p) for p in sorted(rebuttal_pairs)], []


def serialize_document(doc: Document) -> str:
    """Canonical byte-stable form: fixed key order, sorted arguments and pairs."""
    attacks, supports = _display_edges(doc)
    body: dict = {"kind": doc.kind.value, "arguments": _argument_objs(doc), "attacks": attacks}
    if doc.kind in (DocumentKind.BAF, DocumentKind.ADF):
        body["supports"] = supports
    if doc.kind == DocumentKind.VAF and doc.audience is not None:
        body["value_order"] = list(doc.audience.values)
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"


# --- edits over the wire ---------------------------------------------------------

_EDIT_OPS = {
    "add_argument": AddArgument,
    "remove_argument": RemoveArgument,
    "add_attack": AddAttack,
    "remove_attack": RemoveAttack,
    "add_support": AddSupport,
    "remove_support": RemoveSupport,
    "set_audience": SetAudience,
    "set_external": SetExternal,
}


def edit_from_obj(obj, path: str = "$") -> Edit:
    body = _expect(obj, path, dict, "edit must be an object")
    op = _expect(body.get("op"), f"{path}.op", str, "missing edit op")
    if op not in _EDIT_OPS:
        raise SchemaError(f"{path}.op", f"unknown edit op {op!r}")
    fields = {k: v for k, v in body.items() if k != "op"}
    if op == "add_argument" and fields.get("toulmin") is not None:
        toulmin, party = _parse_toulmin(
            fields["toulmin"], f"{path}.toulmin", fields.get("id", "")
        )
        fields["toulmin"] = toulmin
    if op == "set_audience":
        values = _expect(fields.get("values"), f"{path}.values", list, "missing values list")
        fields["values"] = tuple(values)
    try:
        return _EDIT_OPS[op](**fields)
    except TypeError as exc:
        raise SchemaError(path, f"bad fields for {op}: {exc}")


def edit_to_obj(edit: Edit) -> dict:
    if isinstance(edit, AddArgument):
        body: dict = {"op": "add_argument", "id": edit.id}
        for key in ("label", "value", "condition", "external"):
            val = getattr(edit, key)
            if val is not None:
                body[key] = val
        if edit.toulmin is not None:
            t = edit.toulmin
            body["toulmin"] = {
                "claim": t.claim,
                "qualifier": t.qualifier,
                "premises": list(t.premises),
                "warrant": t.warrant,
                **({"backing": t.backing} if t.backing is not None else {}),
                "rebuttals": list(t.rebuttals),
            }
        return body
    if isinstance(edit, RemoveArgument):
        return {"op": "remove_argument", "id": edit.id}
    if isinstance(edit, (AddAttack, RemoveAttack, AddSupport, RemoveSupport)):
        op = {
            AddAttack: "add_attack",
            RemoveAttack: "remove_attack",
            AddSupport: "add_support",
            RemoveSupport: "remove_support",
        }[type(edit)]
        return {"op": op, "source": edit.source, "target": edit.target}
    if isinstance(edit, SetAudience):
        return {"op": "set_audience", "values": list(edit.values)}
    if isinstance(edit, SetExternal):
        return {"op": "set_external", "id": edit.id, "truth": edit.truth}
    raise TypeError(f"not an edit: {edit!r}")


def standing_to_obj(standing: Standing) -> dict:
    return {
        "status": standing.status.value,
        "credulous": standing.credulous,
        "skeptical": standing.skeptical,
    }


def delta_to_obj(delta: WhatIfDelta) -> dict:
    return {
        "edits": [edit_to_obj(e) for e in delta.edits],
        "before": {a: standing_to_obj(s) for a, s in sorted(delta.before.items())},
        "after": {a: standing_to_obj(s) for a, s in sorted(delta.after.items())},
        "changed": sorted(delta.changed),
    }


# --- tasks ------------------------------------------------------------------------

class TaskKind(str, Enum):
    SE = "SE"  # some extension
    EE = "EE"  # every extension
    DC = "DC"  # credulous decision
    DS = "DS"  # skeptical decision
    MODELS = "MODELS"  # two-valued models of a dialectical framework


@dataclass(frozen=True)
class ProblemTask:
    task: TaskKind
    semantics: Semantics
    argument: str | None = None

    def __post_init__(self):
        if self.task in (TaskKind.DC, TaskKind.DS) and self.argument is None:
            raise IncompatibleTask(f"{self.task.value} requires a query argument")
        if self.task in (TaskKind.SE, TaskKind.EE, TaskKind.MODELS) and self.argument is not None:
            raise IncompatibleTask(f"{self.task.value} does not take a query argument")


def format_extension(e: Extension | frozenset[str] | set[str]) -> str:
    """`[id1,id2,...]`, members lexicographically sorted, no spaces."""
    members = e.sorted_members() if isinstance(e, Extension) else sorted(e)
    return "[" + ",".join(members) + "]"


def _format_trivalues(assignment: dict[str, TriValue]) -> str:
    return "\n".join(f"{a}={assignment[a].value}" for a in sorted(assignment)) + "\n"


def run_task(
    doc: Document,
    task: ProblemTask,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
) -> str:
    """Solve one task against a document and return the printable result."""
    effective_audience = audience if audience is not None else doc.audience
    if isinstance(doc.framework, DialecticalFramework):
        return _run_adf_task(doc.framework, task)
    if task.task == TaskKind.MODELS:
        raise IncompatibleTask("MODELS applies to dialectical frameworks only")
    f = reduce_framework(doc.framework, effective_audience, require_backing)
    if task.argument is not None:
        f._check_known(task.argument)
    extensions = enumerate_extensions(f, task.semantics)
    if task.task == TaskKind.SE:
        return (format_extension(extensions[0]) if extensions else "NO") + "\n"
    if task.task == TaskKind.EE:
        return "".join(format_extension(e) + "\n" for e in extensions)
    if task.task == TaskKind.DC:
        return ("YES" if any(task.argument in e for e in extensions) else "NO") + "\n"
    return ("YES" if all(task.argument in e for e in extensions) else "NO") + "\n"


def _run_adf_task(d: DialecticalFramework, task: ProblemTask) -> str:
    if task.task == TaskKind.MODELS:
        models = adf_two_valued_models(d)
        return "".join(
            format_extension(frozenset(a for a, v in m.items() if v == TriValue.T)) + "\n"
            for m in models
        )
    if task.semantics != Semantics.GROUNDED:
        raise IncompatibleTask(
            "dialectical frameworks support the grounded semantics and MODELS"
        )
    assignment = adf_grounded(d)
    if task.task in (TaskKind.SE, TaskKind.EE):
        return _format_trivalues(assignment)
    if task.argument not in assignment:
        raise UnknownArgument(task.argument)
    value = assignment[task.argument]
    return ("YES" if value == TriValue.T else "NO") + "\n"


# --- oracle cross-checking ---------------------------------------------------------

class OracleMismatch(Exception):
    def __init__(self, semantics: Semantics, solver, oracle):
        self.semantics = semantics
        super().__init__(
            f"solver and oracle disagree under {semantics.name}: "
            f"{[sorted(e.members) for e in solver]} vs {[sorted(e.members) for e in oracle]}"
        )


def cross_check(
    doc: Document,
    audience: AudienceOrder | None = None,
    require_backing: bool = False,
    bound: int = 16,
) -> None:
    """Verify solver output against the brute-force oracle; raise on mismatch."""
    if isinstance(doc.framework, DialecticalFramework):
        d = doc.framework
        grounded = adf_grounded(d)
        shuffled = adf_grounded(d, schedule=sorted(d.arguments, reverse=True))
        if grounded != shuffled:
            raise OracleMismatch(Semantics.GROUNDED, [], [])
        for model in adf_two_valued_models(d):
            for arg_id, value in grounded.items():
                if value != TriValue.U and model[arg_id] != value:
                    raise OracleMismatch(Semantics.GROUNDED, [], [])
        return
    effective_audience = audience if audience is not None else doc.audience
    f = reduce_framework(doc.framework, effective_audience, require_backing)
    sweep = brute_force_sweep(f, bound)
    for sem in Semantics:
        solver = enumerate_extensions(f, sem)
        oracle = sweep[sem]
        if [e.members for e in solver] != [e.members for e in oracle]:
            raise OracleMismatch(sem, solver, oracle)
