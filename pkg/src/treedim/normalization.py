"""Swap-automorphism normalization of leaf sets.

Both procedures visit every internal node ``a`` of the full tree, deepest
first, and swap the subtrees below ``a`` whenever that lowers the norm on
``a``'s part of the set.  The final set's norm equals the plain tree
dimension (binary) or the meeted ``ell``-ary dimension (m-ary).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .tree_core import LeafSet, Node, all_nodes, norm_ell, set_norm, swap


@dataclass(frozen=True)
class NormalizationTrace:
    initial: LeafSet
    final: LeafSet
    ell: int
    swaps: tuple[tuple[Node, int], ...] = field(default=())

    @property
    def final_norm(self) -> int:
        return set_norm(self.final.leaves, self.ell)

    def replay(self) -> LeafSet:
        leaves = set(self.initial.leaves)
        for a, k in self.swaps:
            leaves = {swap(a, k, b) for b in leaves}
        return self.initial.with_leaves(leaves)


def lex_order(m: int, n: int) -> list[Node]:
    """Internal nodes, longer first, lexicographic within a length."""
    nodes = [a for a in all_nodes(m, n - 1)] if n > 0 else []
    return sorted(nodes, key=lambda a: (-len(a), a))


def reverse_lex_order(m: int, n: int) -> list[Node]:
    nodes = [a for a in all_nodes(m, n - 1)] if n > 0 else []
    return sorted(nodes, key=lambda a: (-len(a), tuple(-x for x in a)))


def _below(leaves: set[Node], a: Node) -> list[Node]:
    k = len(a)
    return [b for b in leaves if b[:k] == a]


def normalize_binary(
    B: LeafSet, order: Callable[[int, int], list[Node]] = lex_order
) -> tuple[LeafSet, NormalizationTrace]:
    """Keep ``B_i`` when ``||B_i restricted to a_i|| <= ||swap_{a_i}(same)||``, otherwise swap."""
    if B.m != 2:
        raise ValueError("normalize_binary needs a binary leaf set; use normalize_mary")
    leaves = set(B.leaves)
    swaps: list[tuple[Node, int]] = []
    for a in order(2, B.n):
        part = _below(leaves, a)
        before = max((sum(b) for b in part), default=-1)
        after = max((sum(swap(a, 0, b)) for b in part), default=-1)
        if before <= after:
            continue
        leaves = {swap(a, 0, b) for b in leaves}
        swaps.append((a, 0))
    final = B.with_leaves(leaves)
    return final, NormalizationTrace(B, final, 2, tuple(swaps))


def normalize_mary(
    B: LeafSet, ell: int, order: Callable[[int, int], list[Node]] = lex_order
) -> tuple[LeafSet, NormalizationTrace]:
    """``ell``-ary normalization: ``m-1`` bubble passes over the children of each node.

    Pass ``j`` compares adjacent children ``k, k+1`` for ``k < m-j-1`` and swaps
    them when ``||part below a^k||_ell - ||a^k||_ell`` is smaller than the same
    quantity for ``a^(k+1)``.
    """
    m = B.m
    if not 2 <= ell <= m:
        raise ValueError(f"ell={ell} out of range for m={m}")
    leaves = set(B.leaves)
    swaps: list[tuple[Node, int]] = []

    def excess(a: Node) -> int:
        return set_norm(_below(leaves, a), ell) - norm_ell(a, ell)

    for a in order(m, B.n):
        for j in range(m - 1):
            for k in range(m - j - 1):
                if excess(a + (k,)) >= excess(a + (k + 1,)):
                    continue
                leaves = {swap(a, k, b) for b in leaves}
                swaps.append((a, k))
    final = B.with_leaves(leaves)
    return final, NormalizationTrace(B, final, ell, tuple(swaps))
