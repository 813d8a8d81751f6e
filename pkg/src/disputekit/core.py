"""Abstract argumentation frameworks and the four Dung semantics.

An argumentation framework is a set of arguments plus a binary attack
relation. Acceptance is decided by semantics: grounded (least fixpoint of
the defense function), complete (all conflict-free fixpoints), preferred
(maximal admissible sets) and stable (conflict-free sets attacking every
outsider). Extension enumeration uses a labelling search that branches on
undecided arguments after constraint propagation; `oracle.py` holds the
independent brute-force reference.
"""

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DuplicateArgumentId,
    InvalidArgumentId,
    UnknownArgument,
    UnknownArgumentInAttack,
)


class Semantics(str, Enum):
    GROUNDED = "GR"
    COMPLETE = "CO"
    PREFERRED = "PR"
    STABLE = "ST"


class Label(str, Enum):
    """Three-valued acceptance status of a single argument."""

    IN = "in"
    OUT = "out"
    UNDEC = "undec"


class AcceptanceMode(str, Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"


# Labelling: total mapping argument-id -> Label.
Labelling = dict[str, Label]


@dataclass(frozen=True)
class Argument:
    """A node of the dispute graph; `label` is the human-readable sentence."""

    id: str
    label: str | None = None
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not self.id:
            raise InvalidArgumentId(self.id, "empty")
        if any(ch.isspace() for ch in self.id) or "," in self.id:
            raise InvalidArgumentId(self.id, "must not contain whitespace or commas")


@dataclass(frozen=True)
class Extension:
    """A collectively acceptable set of arguments, tagged with its semantics."""

    members: frozenset[str]
    semantics: Semantics

    def sorted_members(self) -> list[str]:
        return sorted(self.members)

    def __contains__(self, arg_id: str) -> bool:
        return arg_id in self.members


def extension_sort_key(e: Extension):
    """Deterministic order: size descending, then lexicographic member list."""
    return (-len(e.members), e.sorted_members())


class ArgumentationFramework:
    """Immutable framework; solver operations are pure and thread-safe."""

    def __init__(self, arguments: dict[str, Argument], attacks: frozenset[tuple[str, str]]):
        self._arguments = arguments
        self._attacks = attacks
        self._attackers: dict[str, frozenset[str]] = {}
        self._targets: dict[str, frozenset[str]] = {}
        by_target: dict[str, set[str]] = {a: set() for a in arguments}
        by_source: dict[str, set[str]] = {a: set() for a in arguments}
        for src, dst in attacks:
            by_source[src].add(dst)
            by_target[dst].add(src)
        for a in arguments:
            self._attackers[a] = frozenset(by_target[a])
            self._targets[a] = frozenset(by_source[a])

    @property
    def arguments(self) -> dict[str, Argument]:
        return self._arguments

    @property
    def argument_ids(self) -> frozenset[str]:
        return frozenset(self._arguments)

    @property
    def attacks(self) -> frozenset[tuple[str, str]]:
        return self._attacks

    def attackers_of(self, arg_id: str) -> frozenset[str]:
        self._check_known(arg_id)
        return self._attackers[arg_id]

    def targets_of(self, arg_id: str) -> frozenset[str]:
        self._check_known(arg_id)
        return self._targets[arg_id]

    def sorted_ids(self) -> list[str]:
        return sorted(self._arguments)

    def _check_known(self, arg_id: str) -> None:
        if arg_id not in self._arguments:
            raise UnknownArgument(arg_id)

    def _check_subset(self, ids) -> set[str]:
        s = set(ids)
        for a in s:
            self._check_known(a)
        return s

    def __len__(self) -> int:
        return len(self._arguments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.argument_ids == other.argument_ids and self._attacks == other._attacks

    def __repr__(self) -> str:
        return f"ArgumentationFramework({len(self._arguments)} arguments, {len(self._attacks)} attacks)"


def new_framework(arguments, attacks=()) -> ArgumentationFramework:
    """Validate and build a framework from arguments (ids or Argument) and attack pairs."""
    table: dict[str, Argument] = {}
    for item in arguments:
        arg = item if isinstance(item, Argument) else Argument(id=str(item))
        if arg.id in table:
            raise DuplicateArgumentId(arg.id)
        table[arg.id] = arg
    pairs: set[tuple[str, str]] = set()
    for pair in attacks:
        src, dst = pair
        if src not in table or dst not in table:
            raise UnknownArgumentInAttack((src, dst))
        pairs.add((src, dst))
    return ArgumentationFramework(table, frozenset(pairs))


def is_conflict_free(f: ArgumentationFramework, s) -> bool:
    """True iff no member of `s` attacks another member."""
    members = f._check_subset(s)
    return not any(t in members for a in members for t in f.targets_of(a))


def characteristic_function(f: ArgumentationFramework, s) -> set[str]:
    """All arguments whose every attacker is attacked by `s` (the defense function)."""
    members = f._check_subset(s)
    attacked = set()
    for a in members:
        attacked |= f.targets_of(a)
    return {a for a in f.argument_ids if f.attackers_of(a) <= attacked}


def is_admissible(f: ArgumentationFramework, s) -> bool:
    """Conflict-free and self-defending: every attacker of a member is counter-attacked."""
    members = f._check_subset(s)
    return is_conflict_free(f, members) and members <= characteristic_function(f, members)


def grounded_extension(f: ArgumentationFramework) -> Extension:
    """Least fixpoint of the defense function, iterated from the empty set."""
    current: set[str] = set()
    while True:
        step = characteristic_function(f, current)
        if step == current:
            return Extension(frozenset(current), Semantics.GROUNDED)
        current = step


def grounded_labelling(f: ArgumentationFramework) -> Labelling:
    """Three-valued statuses induced by the grounded extension."""
    return labelling_from_extension(f, grounded_extension(f))


def labelling_from_extension(f: ArgumentationFramework, e: Extension) -> Labelling:
    """IN the members, OUT everything they attack, UNDEC the rest."""
    labelling: Labelling = {}
    attacked = set()
    for a in e.members:
        attacked |= f.targets_of(a)
    for a in f.argument_ids:
        if a in e.members:
            labelling[a] = Label.IN
        elif a in attacked:
            labelling[a] = Label.OUT
        else:
            labelling[a] = Label.UNDEC
    return labelling


def is_legal_labelling(f: ArgumentationFramework, labelling: Labelling) -> bool:
    """Check the labelling laws: OUT iff some attacker IN, IN iff all attackers OUT."""
    for a in f.argument_ids:
        attacker_labels = {labelling[b] for b in f.attackers_of(a)}
        if labelling[a] == Label.IN and not attacker_labels <= {Label.OUT}:
            return False
        if labelling[a] == Label.OUT and Label.IN not in attacker_labels:
            return False
        if labelling[a] == Label.UNDEC:
            if Label.IN in attacker_labels or attacker_labels <= {Label.OUT}:
                return False
    return True


def _complete_labellings(f: ArgumentationFramework):
    """Yield every legal labelling via propagation plus branching on undecided arguments.

    A partial state maps each argument to a Label or None (not yet known,
    conceptually still undecided). Propagation commits forced labels; on
    contradiction the branch is pruned; fully labelled states are checked
    against the labelling laws before being emitted.
    """
    order = f.sorted_ids()
    attackers = {a: sorted(f.attackers_of(a)) for a in order}

    def propagate(state: dict[str, Label | None]) -> bool:
        changed = True
        while changed:
            changed = False
            for a in order:
                atts = attackers[a]
                labels = [state[b] for b in atts]
                current = state[a]
                if current is None:
                    if all(lab == Label.OUT for lab in labels):
                        state[a] = Label.IN
                        changed = True
                    elif any(lab == Label.IN for lab in labels):
                        state[a] = Label.OUT
                        changed = True
                    elif all(lab is not None for lab in labels):
                        state[a] = Label.UNDEC
                        changed = True
                elif current == Label.IN:
                    for b in atts:
                        if state[b] is None:
                            state[b] = Label.OUT
                            changed = True
                        elif state[b] != Label.OUT:
                            return False
                elif current == Label.OUT:
                    if any(lab == Label.IN for lab in labels):
                        continue
                    unknown = [b for b in atts if state[b] is None]
                    if not unknown:
                        return False
                    if len(unknown) == 1:
                        state[unknown[0]] = Label.IN
                        changed = True
                else:  # UNDEC: no IN attacker, and not all attackers OUT
                    if any(lab == Label.IN for lab in labels):
                        return False
                    unknown = [b for b in atts if state[b] is None]
                    if not unknown and all(lab == Label.OUT for lab in labels):
                        return False
                    if len(unknown) == 1 and all(
                        state[b] == Label.OUT for b in atts if state[b] is not None
                    ):
                        state[unknown[0]] = Label.UNDEC
                        changed = True
        return True

    def search(state: dict[str, Label | None]):
        if not propagate(state):
            return
        open_args = [a for a in order if state[a] is None]
        if not open_args:
            labelling = dict(state)
            if is_legal_labelling(f, labelling):
                yield labelling
            return
        pivot = open_args[0]
        for choice in (Label.IN, Label.OUT, Label.UNDEC):
            branch = dict(state)
            branch[pivot] = choice
            yield from search(branch)

    yield from search({a: None for a in order})


def enumerate_extensions(f: ArgumentationFramework, sem: Semantics) -> list[Extension]:
    """All extensions under `sem`, ordered by size descending then member list."""
    if sem == Semantics.GROUNDED:
        return [grounded_extension(f)]
    labellings = list(_complete_labellings(f))
    in_sets = {frozenset(a for a, lab in l.items() if lab == Label.IN) for l in labellings}
    if sem == Semantics.COMPLETE:
        chosen = in_sets
    elif sem == Semantics.PREFERRED:
        chosen = {s for s in in_sets if not any(s < t for t in in_sets)}
    elif sem == Semantics.STABLE:
        chosen = {
            frozenset(a for a, lab in l.items() if lab == Label.IN)
            for l in labellings
            if Label.UNDEC not in l.values()
        }
    else:
        raise ValueError(f"unsupported semantics: {sem}")
    extensions = [Extension(s, sem) for s in chosen]
    extensions.sort(key=extension_sort_key)
    return extensions


def acceptance_status(
    f: ArgumentationFramework, arg_id: str, sem: Semantics, mode: AcceptanceMode
) -> bool:
    """Credulous: member of some extension; skeptical: member of every one.

    Skeptical acceptance over zero stable extensions is vacuously true;
    report layers flag the empty stable case separately.
    """
    f._check_known(arg_id)
    extensions = enumerate_extensions(f, sem)
    if mode == AcceptanceMode.CREDULOUS:
        return any(arg_id in e for e in extensions)
    return all(arg_id in e for e in extensions)
