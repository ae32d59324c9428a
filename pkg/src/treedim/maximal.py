"""Maximal leaf sets, canonical balls, tree isomorphism and the maximality searches."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .dimension import DimensionReport, binomial_bound, dimension_report, ltd_indices, mtd_indices, td_ell_indices
from .tree_core import BranchTrie, LeafSet, Node, all_leaves, branch_closure, index_leaf, norm_ell

KINDS = ("td", "mtd", "ltd")

_FAST: dict[str, Callable[[Iterable[int], int, int, int], int]] = {
    "td": td_ell_indices,
    "mtd": mtd_indices,
    "ltd": ltd_indices,
}


def dimension_function(kind: str) -> Callable[[Iterable[int], int, int, int], int]:
    try:
        return _FAST[kind]
    except KeyError:
        raise ValueError(f"unknown dimension kind {kind!r}; expected one of {KINDS}") from None


def dimension(B: LeafSet, kind: str, ell: int = 2) -> int:
    if not 2 <= ell <= B.m:
        raise ValueError(f"ell={ell} out of range for m={B.m}")
    return dimension_function(kind)(B.indices(), B.m, B.n, ell)


def canonical_ball(n: int, d: int, m: int = 2, ell: int = 2) -> LeafSet:
    """All leaves of ``m^n`` with ``ell``-ary norm at most ``d``."""
    if not 2 <= ell <= m:
        raise ValueError(f"ell={ell} out of range for m={m}")
    return LeafSet(m, n, frozenset(b for b in all_leaves(m, n) if norm_ell(b, ell) <= d))


@dataclass(frozen=True)
class MaximalityCertificate:
    leafset: LeafSet
    kind: str
    ell: int
    value: int
    # dimension after adding each absent leaf, in lexicographic leaf order
    extensions: tuple[tuple[Node, int], ...]

    def verify(self, dim: Callable[[LeafSet, str, int], int] = dimension) -> bool:
        B = self.leafset
        if dim(B, self.kind, self.ell) != self.value:
            return False
        absent = [b for b in all_leaves(B.m, B.n) if b not in B.leaves]
        if [b for b, _ in self.extensions] != absent:
            return False
        for b, value in self.extensions:
            grown = dim(B.with_leaves(B.leaves | {b}), self.kind, self.ell)
            if grown != value or grown <= self.value:
                return False
        return True


def is_maximal(B: LeafSet, kind: str, ell: int = 2) -> MaximalityCertificate | None:
    """Certificate that every one-leaf extension raises the dimension, else None."""
    fn = dimension_function(kind)
    idx = B.indices()
    value = fn(idx, B.m, B.n, ell)
    present = set(idx)
    ext = []
    for v in range(B.m**B.n):
        if v in present:
            continue
        grown = fn(idx + [v], B.m, B.n, ell)
        if grown <= value:
            return None
        ext.append((index_leaf(v, B.m, B.n), grown))
    return MaximalityCertificate(B, kind, ell, value, tuple(ext))


class _Counter:
    def __init__(self, fn, m, n, ell):
        self.fn, self.m, self.n, self.ell = fn, m, n, ell
        self.calls = 0

    def __call__(self, idx) -> int:
        self.calls += 1
        return self.fn(idx, self.m, self.n, self.ell)


def _greedy(start: list[int], order: list[int], dim: _Counter, d: int) -> list[int]:
    # dimensions only grow with the set, so a leaf rejected once stays rejected
    cur = list(start)
    have = set(cur)
    for v in order:
        if v in have:
            continue
        if dim(cur + [v]) <= d:
            cur.append(v)
            have.add(v)
    return sorted(cur)


def greedy_complete(B: LeafSet, kind: str, ell: int, d: int, seed: int | None = None) -> LeafSet:
    """Add leaves (lexicographic order, or shuffled by ``seed``) while the dimension stays ``<= d``."""
    dim = _Counter(dimension_function(kind), B.m, B.n, ell)
    idx = B.indices()
    if dim(idx) > d:
        raise ValueError(f"starting set already has {kind} > {d}")
    order = list(range(B.m**B.n))
    if seed is not None:
        random.Random(seed).shuffle(order)
    return LeafSet.from_indices(_greedy(idx, order, dim, d), B.m, B.n)


def canonical_form(trie: BranchTrie, v: Node = ()) -> str:
    """AHU encoding of the unordered rooted tree hanging from ``v``; empty for an empty trie."""
    if not trie.nodes:
        return ""
    codes: dict[Node, str] = {}
    for u in reversed(trie.ordered):
        codes[u] = "(" + "".join(sorted(codes[c] for c in trie.children(u))) + ")"
    return codes[v]


def tree_isomorphic(A: BranchTrie, B: BranchTrie) -> bool:
    return canonical_form(A) == canonical_form(B)


@dataclass
class CounterexampleResult:
    leafset: LeafSet
    report: DimensionReport
    seed: int
    trial: int
    evaluations: int


def _local_moves(
    cur: list[int], dim: _Counter, d: int, rng: random.Random, total: int, target: int, rounds: int
) -> list[int] | None:
    """Remove up to two leaves, re-complete greedily and keep smaller maximal sets."""
    best = cur
    for _ in range(rounds):
        k = rng.choice((1, 2))
        drop = set(rng.sample(best, min(k, len(best))))
        kept = [v for v in best if v not in drop]
        order = list(range(total))
        rng.shuffle(order)
        cand = _greedy(kept, order, dim, d)
        if len(cand) <= len(best) and dim(cand) == d:
            best = cand
        if len(best) < target:
            return best
    return None


def search_counterexample(
    n: int, d: int, budget: int = 10**7, seed: int = 0, local_rounds: int = 20
) -> CounterexampleResult | None:
    """Search for a binary LTD-maximal set of dimension ``d`` with fewer than ``binomial_bound(n, d)`` leaves.

    Each trial is a seeded greedy completion of the empty set, followed by a
    short local-move phase; ``budget`` caps the number of LTD evaluations.
    """
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    dim = _Counter(ltd_indices, 2, n, 2)
    total = 1 << n
    target = binomial_bound(n, d)
    rng = random.Random(seed)
    trial = 0
    while dim.calls < budget:
        order = list(range(total))
        rng.shuffle(order)
        cur = _greedy([], order, dim, d)
        hit = cur if len(cur) < target else None
        if hit is None and local_rounds:
            hit = _local_moves(cur, dim, d, rng, total, target, local_rounds)
        if hit is not None:
            B = LeafSet.from_indices(hit, 2, n)
            cert = is_maximal(B, "ltd", 2)
            if cert is None or cert.value != d:
                raise AssertionError(f"search produced a non-maximal set {B}")
            return CounterexampleResult(B, dimension_report(B, 2), seed, trial, dim.calls)
        trial += 1
    return None


def all_masks(n: int, m: int = 2) -> range:
    return range(1 << (m**n))


def mask_indices(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def dimension_table(n: int, kind: str, m: int = 2, ell: int = 2) -> list[int]:
    """Dimension of every subset of ``m^n``, indexed by leaf mask (exhaustive; small ``m^n`` only)."""
    fn = dimension_function(kind)
    return [fn(mask_indices(mask), m, n, ell) for mask in all_masks(n, m)]


def maximal_masks(table: list[int], leaves: int) -> Iterable[int]:
    """Masks whose every one-leaf extension has strictly larger dimension."""
    for mask, value in enumerate(table):
        if all(mask >> v & 1 or table[mask | 1 << v] > value for v in range(leaves)):
            yield mask


def ball_isomorphic(B: LeafSet, d: int, ell: int = 2) -> bool:
    return tree_isomorphic(branch_closure(B), branch_closure(canonical_ball(B.n, d, B.m, ell)))


def random_leafset(rng: random.Random, m: int, n: int) -> LeafSet:
    """Random subset with a random density, so sparse and dense sets both occur."""
    p = rng.random()
    return LeafSet.from_indices([v for v in range(m**n) if rng.random() < p], m, n)


__all__ = [
    "KINDS",
    "MaximalityCertificate",
    "CounterexampleResult",
    "dimension",
    "dimension_function",
    "canonical_ball",
    "is_maximal",
    "greedy_complete",
    "canonical_form",
    "tree_isomorphic",
    "search_counterexample",
    "dimension_table",
    "maximal_masks",
    "ball_isomorphic",
    "random_leafset",
]
