"""Brute-force reference oracle: literal semantics definitions over all 2^n subsets.

Independent of the labelling search in `core`; used to cross-check every
solver result on small frameworks. Subsets are bitmasks for speed.
"""

from .core import ArgumentationFramework, Extension, Semantics, extension_sort_key
from .errors import TooLarge

DEFAULT_BOUND = 16


def _sweep(f: ArgumentationFramework, bound: int) -> dict[Semantics, list[frozenset[str]]]:
    ids = f.sorted_ids()
    n = len(ids)
    if n > bound:
        raise TooLarge(n, bound)
    index = {a: i for i, a in enumerate(ids)}
    target_mask = [0] * n
    attacker_mask = [0] * n
    for src, dst in f.attacks:
        target_mask[index[src]] |= 1 << index[dst]
        attacker_mask[index[dst]] |= 1 << index[src]
    full = (1 << n) - 1

    admissible: list[int] = []
    complete: list[int] = []
    stable: list[int] = []
    for s in range(1 << n):
        members = [i for i in range(n) if s >> i & 1]
        attacked = 0
        for i in members:
            attacked |= target_mask[i]
        if attacked & s:
            continue  # not conflict-free
        defended = 0
        for i in range(n):
            if attacker_mask[i] & ~attacked == 0:
                defended |= 1 << i
        if s & ~defended == 0:
            admissible.append(s)
            if s == defended:
                complete.append(s)
        if attacked & ~s == full & ~s:
            stable.append(s)

    preferred = [s for s in admissible if not any(s != t and s & ~t == 0 for t in admissible)]
    grounded = [min(complete, key=lambda s: bin(s).count("1"))]

    def to_sets(masks: list[int]) -> list[frozenset[str]]:
        return [frozenset(ids[i] for i in range(n) if m >> i & 1) for m in masks]

    return {
        Semantics.GROUNDED: to_sets(grounded),
        Semantics.COMPLETE: to_sets(complete),
        Semantics.PREFERRED: to_sets(preferred),
        Semantics.STABLE: to_sets(stable),
    }


def brute_force_sweep(
    f: ArgumentationFramework, bound: int = DEFAULT_BOUND
) -> dict[Semantics, list[Extension]]:
    """One exhaustive pass computing the extensions of all four semantics."""
    raw = _sweep(f, bound)
    result = {}
    for sem, sets in raw.items():
        extensions = [Extension(s, sem) for s in sets]
        extensions.sort(key=extension_sort_key)
        result[sem] = extensions
    return result


def brute_force_oracle(
    f: ArgumentationFramework, sem: Semantics, bound: int = DEFAULT_BOUND
) -> list[Extension]:
    """Reference enumeration for one semantics; same output contract as the solver."""
    return brute_force_sweep(f, bound)[sem]
