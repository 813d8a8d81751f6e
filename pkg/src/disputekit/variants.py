"""Bipolar and value-based frameworks, reduced to plain attack graphs.

Bipolar frameworks add a support relation; they are flattened through
supported attacks (a supporter of an attacker attacks the target) and
secondary attacks (attacking a supporter attacks what it supports), after
which the Dung semantics of `core` apply. Value-based frameworks keep only
the attacks that succeed as defeats under an audience's value ranking.
"""

from dataclasses import dataclass
from enum import Enum

from .core import Argument, ArgumentationFramework, new_framework
from .errors import (
    BadAudienceOrder,
    CyclicSupport,
    IncompleteValueMapping,
    SupportAttackOverlap,
    UnknownArgumentInAttack,
    UnrankedValue,
)


class AttackKind(str, Enum):
    DIRECT = "direct"
    SUPPORTED = "supported"
    SECONDARY = "secondary"


@dataclass(frozen=True)
class DerivedAttack:
    """An attack pair with its provenance and a replayable witness path.

    The witness lists the arguments along the deriving chain: for supported
    attacks a support chain ending in a direct attack, for secondary attacks
    a direct attack followed by a support chain.
    """

    attacker: str
    target: str
    kind: AttackKind
    witness: tuple[str, ...]


class BipolarFramework:
    """Attack framework extended with an acyclic support relation."""

    def __init__(self, base: ArgumentationFramework, supports) -> None:
        pairs = set()
        for pair in supports:
            src, dst = pair
            if src not in base.arguments or dst not in base.arguments:
                raise UnknownArgumentInAttack((src, dst))
            if (src, dst) in base.attacks:
                raise SupportAttackOverlap((src, dst))
            pairs.add((src, dst))
        self.base = base
        self.supports = frozenset(pairs)
        self._supported_by: dict[str, list[str]] = {a: [] for a in base.arguments}
        for src, dst in sorted(pairs):
            self._supported_by[src].append(dst)
        cycle = self._find_support_cycle()
        if cycle is not None:
            raise CyclicSupport(cycle)

    def _find_support_cycle(self) -> list[str] | None:
        color: dict[str, int] = {}
        stack: list[str] = []

        def visit(node: str) -> list[str] | None:
            color[node] = 1
            stack.append(node)
            for nxt in self._supported_by[node]:
                if color.get(nxt, 0) == 1:
                    return stack[stack.index(nxt):] + [nxt]
                if color.get(nxt, 0) == 0:
                    found = visit(nxt)
                    if found:
                        return found
            stack.pop()
            color[node] = 2
            return None

        for a in self.base.sorted_ids():
            if color.get(a, 0) == 0:
                found = visit(a)
                if found:
                    return found
        return None

    def support_chains(self) -> dict[str, dict[str, tuple[str, ...]]]:
        """For each argument, the transitively supported arguments with a shortest chain."""
        chains: dict[str, dict[str, tuple[str, ...]]] = {}
        for start in self.base.sorted_ids():
            reached: dict[str, tuple[str, ...]] = {}
            frontier = [(start,)]
            while frontier:
                nxt: list[tuple[str, ...]] = []
                for path in frontier:
                    for succ in self._supported_by[path[-1]]:
                        if succ not in reached and succ != start:
                            reached[succ] = path + (succ,)
                            nxt.append(path + (succ,))
                frontier = nxt
            chains[start] = reached
        return chains

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipolarFramework):
            return NotImplemented
        return self.base == other.base and self.supports == other.supports


def derived_attacks(b: BipolarFramework) -> list[DerivedAttack]:
    """Direct, supported and secondary attacks, each with one shortest witness."""
    chains = b.support_chains()
    found: dict[tuple[str, str, AttackKind], tuple[str, ...]] = {}

    def record(attacker: str, target: str, kind: AttackKind, witness: tuple[str, ...]):
        key = (attacker, target, kind)
        best = found.get(key)
        if best is None or (len(witness), witness) < (len(best), best):
            found[key] = witness

    for src, dst in b.base.attacks:
        record(src, dst, AttackKind.DIRECT, (src, dst))
    for start, reached in chains.items():
        for mid, chain in reached.items():
            for target in b.base.targets_of(mid):
                record(start, target, AttackKind.SUPPORTED, chain + (target,))
    for src, dst in b.base.attacks:
        for target, chain in chains[dst].items():
            record(src, target, AttackKind.SECONDARY, (src,) + chain)
    attacks = [
        DerivedAttack(attacker, target, kind, witness)
        for (attacker, target, kind), witness in found.items()
    ]
    attacks.sort(key=lambda d: (d.attacker, d.target, d.kind.value))
    return attacks


def baf_to_aaf(b: BipolarFramework) -> ArgumentationFramework:
    """Flatten to a plain framework whose attacks are the derived pairs."""
    pairs = {(d.attacker, d.target) for d in derived_attacks(b)}
    return new_framework(b.base.arguments.values(), pairs)


def verify_witness(b: BipolarFramework, attack: DerivedAttack) -> bool:
    """Replay a witness path against the declared relations."""
    path = attack.witness
    if len(path) < 2 or path[0] != attack.attacker or path[-1] != attack.target:
        return False
    if attack.kind == AttackKind.DIRECT:
        return len(path) == 2 and (path[0], path[1]) in b.base.attacks
    if attack.kind == AttackKind.SUPPORTED:
        links = list(zip(path, path[1:]))
        return all(l in b.supports for l in links[:-1]) and links[-1] in b.base.attacks
    links = list(zip(path, path[1:]))
    return links[0] in b.base.attacks and all(l in b.supports for l in links[1:])


class AudienceOrder:
    """Strict total order over value names, most-preferred first."""

    def __init__(self, values) -> None:
        names = list(values)
        if len(set(names)) != len(names):
            raise BadAudienceOrder("duplicate value names")
        if not all(isinstance(v, str) and v for v in names):
            raise BadAudienceOrder("value names must be non-empty strings")
        self.values = tuple(names)
        self._rank = {v: i for i, v in enumerate(names)}

    def rank(self, value: str) -> int:
        if value not in self._rank:
            raise UnrankedValue(value)
        return self._rank[value]

    def prefers(self, a: str, b: str) -> bool:
        """True iff value `a` is strictly preferred to value `b`."""
        return self.rank(a) < self.rank(b)

    def reversed(self) -> "AudienceOrder":
        return AudienceOrder(reversed(self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AudienceOrder):
            return NotImplemented
        return self.values == other.values

    def __iter__(self):
        return iter(self.values)


class ValuedFramework:
    """Attack framework whose arguments each promote one named value."""

    def __init__(self, base: ArgumentationFramework, value_of: dict[str, str]) -> None:
        missing = set(base.arguments) - set(value_of)
        if missing:
            raise IncompleteValueMapping(missing)
        self.base = base
        self.value_of = {a: value_of[a] for a in base.arguments}

    def values_used(self) -> set[str]:
        return set(self.value_of.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValuedFramework):
            return NotImplemented
        return self.base == other.base and self.value_of == other.value_of


def vaf_defeats(v: ValuedFramework, audience: AudienceOrder) -> set[tuple[str, str]]:
    """Attacks that succeed: kept unless the target's value strictly outranks the attacker's."""
    for name in sorted(v.values_used()):
        audience.rank(name)  # raises UnrankedValue on gaps
    return {
        (a, b)
        for (a, b) in v.base.attacks
        if not audience.prefers(v.value_of[b], v.value_of[a])
    }


def vaf_to_aaf(v: ValuedFramework, audience: AudienceOrder) -> ArgumentationFramework:
    """Framework over the same arguments whose attacks are the defeats."""
    return new_framework(v.base.arguments.values(), vaf_defeats(v, audience))
