"""Set families over a finite universe: shattering, VC and Littlestone dimension.

Members are bitmasks over the universe order (bit ``i`` is ``universe[i]``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Hashable, Iterable, Sequence

from .tree_core import LeafSet, Node


@dataclass(frozen=True)
class SetFamily:
    universe: tuple[Hashable, ...]
    members: frozenset[int]

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe elements must be distinct")
        full = (1 << len(self.universe)) - 1
        for F in self.members:
            if F & ~full or F < 0:
                raise ValueError(f"member {F:b} is not a subset of the universe")

    @classmethod
    def from_sets(cls, universe: Sequence[Hashable], sets: Iterable[Iterable[Hashable]]) -> "SetFamily":
        pos = {x: i for i, x in enumerate(universe)}
        members = set()
        for S in sets:
            mask = 0
            for x in S:
                if x not in pos:
                    raise KeyError(f"unknown universe element {x!r}")
                mask |= 1 << pos[x]
            members.add(mask)
        return cls(tuple(universe), frozenset(members))

    @classmethod
    def powerset(cls, universe: Sequence[Hashable]) -> "SetFamily":
        return cls(tuple(universe), frozenset(range(1 << len(universe))))

    def position(self, x: Hashable) -> int:
        try:
            return self.universe.index(x)
        except ValueError:
            raise KeyError(f"unknown universe element {x!r}") from None

    def mask_of(self, A: Iterable[Hashable]) -> int:
        mask = 0
        for x in A:
            mask |= 1 << self.position(x)
        return mask

    def sets(self) -> list[frozenset]:
        return [frozenset(x for i, x in enumerate(self.universe) if F >> i & 1) for F in sorted(self.members)]

    def __len__(self) -> int:
        return len(self.members)


def traces(F: SetFamily, A: Iterable[Hashable]) -> set[int]:
    """``{F ∩ A}`` as masks."""
    a = F.mask_of(A)
    return {G & a for G in F.members}


def shatters(F: SetFamily, A: Iterable[Hashable]) -> bool:
    A = list(A)
    return len(traces(F, A)) == 1 << len(set(A))


def _shatters_mask(members: frozenset[int], a: int) -> bool:
    return len({G & a for G in members}) == 1 << a.bit_count()


def vc_dim(F: SetFamily) -> int:
    if not F.members:
        return -1
    k = len(F.universe)
    best = 0
    # shattering is hereditary, so grow the size until nothing of that size is shattered
    for size in range(1, k + 1):
        if (1 << size) > len(F.members):
            break
        if any(_shatters_mask(F.members, sum(1 << i for i in S)) for S in combinations(range(k), size)):
            best = size
        else:
            break
    return best


def chi_tuple(F: SetFamily, points: Sequence[Hashable]) -> LeafSet:
    """Image of ``F`` under ``G -> (1 if a_i in G else 0)_i``."""
    pos = [F.position(x) for x in points]
    leaves = {tuple(G >> p & 1 for p in pos) for G in F.members}
    return LeafSet(2, len(pos), frozenset(leaves))


@dataclass(frozen=True)
class Labeling:
    """Assignment of a universe element to every binary node of length below ``n``."""

    n: int
    labels: tuple[tuple[Node, Hashable], ...]

    def __post_init__(self):
        got = {a for a, _ in self.labels}
        need = set(_internal_nodes(self.n))
        if got != need:
            raise ValueError("labeling must be total on the nodes of length < n")

    @classmethod
    def from_dict(cls, n: int, labels: dict[Node, Hashable]) -> "Labeling":
        return cls(n, tuple(sorted(labels.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def as_dict(self) -> dict[Node, Hashable]:
        return dict(self.labels)


def _internal_nodes(n: int) -> list[Node]:
    out: list[Node] = []
    level: list[Node] = [()]
    for _ in range(n):
        out.extend(level)
        level = [a + (c,) for a in level for c in range(2)]
    return out


def chi_labeling(F: SetFamily, alpha: Labeling) -> LeafSet:
    """Image of ``F`` when each member walks down the tree, going right exactly when it contains the label."""
    label_pos = {a: F.position(x) for a, x in alpha.labels}
    leaves = set()
    for G in F.members:
        s: Node = ()
        for _ in range(alpha.n):
            s = s + (G >> label_pos[s] & 1,)
        leaves.add(s)
    return LeafSet(2, alpha.n, frozenset(leaves))


def all_labelings(universe: Sequence[Hashable], n: int) -> Iterable[Labeling]:
    nodes = _internal_nodes(n)
    for choice in product(universe, repeat=len(nodes)):
        yield Labeling(n, tuple(zip(nodes, choice)))


def littlestone_dim(F: SetFamily) -> int:
    """Mistake-tree recursion: ``LD >= d+1`` iff some point splits ``F`` into two parts of ``LD >= d``."""
    return _ld(F.members, len(F.universe))


@lru_cache(maxsize=1 << 16)
def _ld(members: frozenset[int], k: int) -> int:
    if not members:
        return -1
    if len(members) == 1:
        return 0
    best = 0
    for i in range(k):
        bit = 1 << i
        inside = frozenset(G for G in members if G & bit)
        if not inside or len(inside) == len(members):
            continue
        outside = members - inside
        # 2^(best+1) members are needed on each side to improve
        if min(len(inside), len(outside)) < 1 << best:
            continue
        best = max(best, 1 + min(_ld(inside, k), _ld(outside, k)))
    return best


def littlestone_by_labelings(F: SetFamily) -> int:
    """Littlestone dimension straight from the labeling definition (doubly exponential; small universes only)."""
    if not F.members:
        return -1
    best = 0
    d = 1
    while (1 << d) <= len(F.members):
        target = 1 << d
        if any(len(chi_labeling(F, alpha)) == target for alpha in all_labelings(F.universe, d)):
            best = d
            d += 1
        else:
            break
    return best
