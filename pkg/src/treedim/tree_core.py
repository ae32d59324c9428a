"""Nodes, leaf sets and branch tries over m-ary trees of finite height.

A node is a plain tuple of digits in ``0..m-1``.  Nodes are ordered by
length first and lexicographically within a length (see :func:`node_key`);
that order is used wherever iteration order would otherwise be arbitrary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

Node = tuple[int, ...]

ROOT: Node = ()


def node_key(a: Node) -> tuple[int, Node]:
    return (len(a), a)


def sorted_nodes(nodes: Iterable[Node]) -> list[Node]:
    return sorted(nodes, key=node_key)


def parse_node(text: str) -> Node:
    """Parse a digit string such as ``"0212"``; the empty string is the root."""
    if text in ("", "ε", "e"):
        return ROOT
    if not text.isdigit():
        raise ValueError(f"not a digit string: {text!r}")
    return tuple(int(c) for c in text)


def node_str(a: Node) -> str:
    return "".join(str(x) for x in a) if a else "ε"


def is_prefix(a: Node, b: Node) -> bool:
    """True when ``a`` is an initial segment of ``b`` (``a == b`` allowed)."""
    return len(a) <= len(b) and b[: len(a)] == a


def precedes(a: Node, b: Node) -> bool:
    """Strict ancestor relation."""
    return len(a) < len(b) and b[: len(a)] == a


def meet(a: Node, b: Node) -> Node:
    """Longest common prefix."""
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return a[:k]


def norm(a: Node) -> int:
    """Digit sum of a binary node."""
    if any(x > 1 for x in a):
        raise ValueError("norm is only defined for binary nodes; use norm_ell")
    return sum(a)


def norm_ell(a: Node, ell: int, m: int | None = None) -> int:
    """Number of positions carrying a digit ``>= ell - 1``."""
    if ell < 2 or (m is not None and ell > m):
        raise ValueError(f"ell={ell} out of range for m={m}")
    t = ell - 1
    return sum(1 for x in a if x >= t)


def set_norm(nodes: Iterable[Node], ell: int = 2) -> int:
    """Maximum member norm, or -1 for the empty set."""
    return max((norm_ell(a, ell) for a in nodes), default=-1)


def restrict(nodes: Iterable[Node], a: Node) -> set[Node]:
    k = len(a)
    return {x for x in nodes if len(x) >= k and x[:k] == a}


def swap(a: Node, k: int, x: Node) -> Node:
    """Exchange digits ``k`` and ``k+1`` directly below ``a``; fix everything else.

    With ``k=0`` this is the binary automorphism that swaps the two subtrees of ``a``.
    """
    i = len(a)
    if len(x) <= i or x[:i] != a:
        return x
    digit = x[i]
    if digit == k:
        return x[:i] + (k + 1,) + x[i + 1 :]
    if digit == k + 1:
        return x[:i] + (k,) + x[i + 1 :]
    return x


def all_nodes(m: int, n: int) -> Iterator[Node]:
    """Every node of ``m^{<=n}`` in canonical order."""
    level: list[Node] = [ROOT]
    for _ in range(n + 1):
        yield from level
        level = [a + (c,) for a in level for c in range(m)]


def all_leaves(m: int, n: int) -> list[Node]:
    level: list[Node] = [ROOT]
    for _ in range(n):
        level = [a + (c,) for a in level for c in range(m)]
    return level


def leaf_index(b: Node, m: int) -> int:
    """Position of a leaf in lexicographic order, i.e. its value in base m."""
    v = 0
    for x in b:
        v = v * m + x
    return v


def index_leaf(v: int, m: int, n: int) -> Node:
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        v, digits[i] = divmod(v, m)
    return tuple(digits)


@dataclass(frozen=True)
class LeafSet:
    """A set of length-``n`` nodes over the alphabet ``0..m-1``."""

    m: int
    n: int
    leaves: frozenset[Node] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("arity must be at least 2")
        if self.n < 0:
            raise ValueError("height must be nonnegative")
        leaves = frozenset(tuple(b) for b in self.leaves)
        for b in leaves:
            if len(b) != self.n or any(not 0 <= x < self.m for x in b):
                raise ValueError(f"{node_str(b)} is not a leaf of the {self.m}-ary tree of height {self.n}")
        object.__setattr__(self, "leaves", leaves)

    @classmethod
    def from_strings(cls, strings: Iterable[str], m: int = 2, n: int | None = None) -> "LeafSet":
        leaves = [parse_node(s) for s in strings]
        if n is None:
            if not leaves:
                raise ValueError("height required for an empty leaf set")
            n = len(leaves[0])
        return cls(m, n, frozenset(leaves))

    @classmethod
    def from_indices(cls, indices: Iterable[int], m: int, n: int) -> "LeafSet":
        return cls(m, n, frozenset(index_leaf(v, m, n) for v in indices))

    @classmethod
    def from_mask(cls, mask: int, n: int, m: int = 2) -> "LeafSet":
        """Bit ``v`` of ``mask`` selects the leaf with lexicographic index ``v``."""
        return cls.from_indices((v for v in range(m**n) if mask >> v & 1), m, n)

    @classmethod
    def full(cls, m: int, n: int) -> "LeafSet":
        return cls(m, n, frozenset(all_leaves(m, n)))

    def to_mask(self) -> int:
        mask = 0
        for b in self.leaves:
            mask |= 1 << leaf_index(b, self.m)
        return mask

    def indices(self) -> list[int]:
        return sorted(leaf_index(b, self.m) for b in self.leaves)

    def sorted(self) -> list[Node]:
        return sorted(self.leaves)

    def with_leaves(self, leaves: Iterable[Node]) -> "LeafSet":
        return LeafSet(self.m, self.n, frozenset(leaves))

    def __len__(self) -> int:
        return len(self.leaves)

    def __iter__(self) -> Iterator[Node]:
        return iter(self.sorted())

    def __contains__(self, b) -> bool:
        return tuple(b) in self.leaves

    def __str__(self) -> str:
        return "{" + ", ".join(node_str(b) for b in self.sorted()) + "}"


@dataclass(frozen=True)
class BranchTrie:
    """Prefix-closed set of nodes; the union of the branches of a leaf set."""

    m: int
    n: int
    nodes: frozenset[Node]

    def __post_init__(self):
        for v in self.nodes:
            if v and v[:-1] not in self.nodes:
                raise ValueError(f"not prefix-closed: parent of {node_str(v)} missing")

    @cached_property
    def ordered(self) -> list[Node]:
        return sorted_nodes(self.nodes)

    @cached_property
    def child_map(self) -> dict[Node, list[Node]]:
        kids: dict[Node, list[Node]] = {v: [] for v in self.nodes}
        for v in self.ordered:
            if v:
                kids[v[:-1]].append(v)
        return kids

    def children(self, v: Node) -> list[Node]:
        return self.child_map[v]

    @cached_property
    def heights(self) -> dict[Node, int]:
        """Height of the subtree hanging from each node."""
        h: dict[Node, int] = {}
        for v in reversed(self.ordered):
            h[v] = max((h[c] + 1 for c in self.child_map[v]), default=0)
        return h

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.nodes

    def __iter__(self) -> Iterator[Node]:
        return iter(self.ordered)

    def leaves(self) -> list[Node]:
        return [v for v in self.ordered if not self.child_map[v]]


def branch(b: Node) -> set[Node]:
    return {b[:i] for i in range(len(b) + 1)}


def branch_closure(B: LeafSet) -> BranchTrie:
    nodes: set[Node] = set()
    for b in B.leaves:
        nodes.update(branch(b))
    return BranchTrie(B.m, B.n, frozenset(nodes))


def swap_set(B: LeafSet, a: Node, k: int = 0) -> LeafSet:
    if not 0 <= k < B.m - 1:
        raise ValueError(f"k={k} out of range for m={B.m}")
    if len(a) >= B.n:
        raise ValueError("swap node must be strictly above the leaves")
    return B.with_leaves(swap(a, k, b) for b in B.leaves)


def split_projection(B: LeafSet, ell: int = 2) -> tuple[LeafSet, LeafSet]:
    """Project a height-n leaf set to two height-(n-1) sets.

    The first holds every length-(n-1) prefix of a member; the second holds
    those prefixes with at least ``ell`` members below them.
    """
    if B.n == 0:
        raise ValueError("cannot project a height-0 leaf set")
    counts: dict[Node, int] = {}
    for b in B.leaves:
        counts[b[:-1]] = counts.get(b[:-1], 0) + 1
    a1 = LeafSet(B.m, B.n - 1, frozenset(counts))
    a2 = LeafSet(B.m, B.n - 1, frozenset(a for a, c in counts.items() if c >= ell))
    return a1, a2
