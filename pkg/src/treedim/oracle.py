"""Brute-force embedding search; the reference semantics for every dimension.

A pattern tree of height ``d`` and branching ``ell`` is mapped into a branch
trie by backtracking.  Three notions of embedding are supported:

* ``PLAIN``   -- ancestor relation preserved in both directions;
* ``MEETED``  -- additionally meets are preserved;
* ``LEVELED`` -- additionally "same length" is preserved in both directions.

The fast routines in :mod:`treedim.dimension` are checked against this module.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .tree_core import BranchTrie, LeafSet, Node, branch_closure, meet, node_key, node_str, precedes


class EmbeddingKind(enum.Enum):
    PLAIN = "plain"
    MEETED = "meeted"
    LEVELED = "leveled"


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class EmbeddingWitness:
    """Map from pattern nodes (sequences over ``0..ell-1``) to trie nodes."""

    d: int
    ell: int
    mapping: tuple[tuple[Node, Node], ...]

    def as_dict(self) -> dict[Node, Node]:
        return dict(self.mapping)

    def pairs(self) -> dict[str, str]:
        """Pattern node to target node, as digit strings (the root is ``ε``)."""
        return {node_str(p): node_str(t) for p, t in self.mapping}


@lru_cache(maxsize=None)
def pattern_nodes(d: int, ell: int) -> tuple[Node, ...]:
    """Nodes of the complete ``ell``-ary tree of height ``d``, breadth first."""
    out: list[Node] = []
    level: list[Node] = [()]
    for _ in range(d + 1):
        out.extend(level)
        level = [a + (c,) for a in level for c in range(ell)]
    return tuple(out)


@lru_cache(maxsize=None)
def _preorder(d: int, ell: int) -> tuple[Node, ...]:
    out: list[Node] = []

    def walk(a: Node) -> None:
        out.append(a)
        if len(a) < d:
            for c in range(ell):
                walk(a + (c,))

    walk(())
    return tuple(out)


def is_embedding(w: EmbeddingWitness, kind: EmbeddingKind, target: BranchTrie) -> bool:
    """Check injectivity and the conditions of ``kind`` over all pairs of pattern nodes."""
    f = w.as_dict()
    pattern = pattern_nodes(w.d, w.ell)
    if set(f) != set(pattern):
        raise EmbeddingError("witness does not cover the pattern tree")
    for v in f.values():
        if v not in target:
            raise EmbeddingError(f"image {node_str(v)} is not in the target trie")
    if len(set(f.values())) != len(f):
        return False
    for a in pattern:
        fa = f[a]
        for b in pattern:
            fb = f[b]
            if precedes(a, b) != precedes(fa, fb):
                return False
            if kind is EmbeddingKind.PLAIN:
                continue
            if f[meet(a, b)] != meet(fa, fb):
                return False
            if kind is EmbeddingKind.LEVELED and (len(a) == len(b)) != (len(fa) == len(fb)):
                return False
    return True


class _Target:
    """Index tables for a branch trie so the search can use list lookups."""

    def __init__(self, trie: BranchTrie):
        self.nodes = trie.ordered
        index = {v: i for i, v in enumerate(self.nodes)}
        self.index = index
        self.length = [len(v) for v in self.nodes]
        heights = trie.heights
        self.height = [heights[v] for v in self.nodes]
        leaves_below = {v: 0 for v in self.nodes}
        for v in trie.leaves():
            for k in range(len(v) + 1):
                leaves_below[v[:k]] += 1
        self.leaf_count = [leaves_below[v] for v in self.nodes]
        size = len(self.nodes)
        self.desc: list[list[int]] = [[] for _ in range(size)]
        for j, v in enumerate(self.nodes):
            for k in range(len(v)):
                self.desc[index[v[:k]]].append(j)
        self.anc = [[False] * size for _ in range(size)]
        for i in range(size):
            for j in self.desc[i]:
                self.anc[i][j] = True
        self.prefix = [[index[v[:k]] for k in range(len(v) + 1)] for v in self.nodes]
        self._meet: dict[tuple[int, int], int] = {}

    def meet(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        hit = self._meet.get(key)
        if hit is None:
            pi, pj = self.prefix[i], self.prefix[j]
            k = min(len(pi), len(pj)) - 1
            while pi[k] != pj[k]:
                k -= 1
            hit = self._meet[key] = pi[k]
        return hit


@lru_cache(maxsize=None)
def _pattern_tables(d: int, ell: int):
    # preorder keeps each subtree contiguous, so a failing subtree backtracks locally
    nodes = _preorder(d, ell)
    index = {v: i for i, v in enumerate(nodes)}
    parent = [index[v[:-1]] if v else -1 for v in nodes]
    prev_sibling = [index[v[:-1] + (v[-1] - 1,)] if v and v[-1] > 0 else -1 for v in nodes]
    # relations against every earlier node: (j, j_precedes_i, meet_index, same_level)
    rel = []
    for i, a in enumerate(nodes):
        rel.append(tuple((j, precedes(b, a), index[meet(a, b)], len(a) == len(b)) for j, b in enumerate(nodes[:i])))
    return nodes, parent, prev_sibling, tuple(rel)


def _search(d: int, ell: int, kind: EmbeddingKind, t: _Target, levels: tuple[int, ...] | None) -> list[int] | None:
    nodes, parent, prev_sibling, rel = _pattern_tables(d, ell)
    size = len(nodes)
    plen = [len(v) for v in nodes]
    f = [-1] * size
    used = [False] * len(t.nodes)
    check_meet = kind is not EmbeddingKind.PLAIN
    check_level = kind is EmbeddingKind.LEVELED
    anc, tmeet, tlen, theight, tleaves = t.anc, t.meet, t.length, t.height, t.leaf_count

    def candidates(i: int) -> list[int]:
        need = d - plen[i]
        need_leaves = ell**need
        pool = range(len(t.nodes)) if parent[i] < 0 else t.desc[f[parent[i]]]
        lo = f[prev_sibling[i]] if prev_sibling[i] >= 0 else -1
        out = []
        for c in pool:
            # siblings may be permuted freely, so their images are taken in increasing order
            if c <= lo or used[c] or theight[c] < need or tleaves[c] < need_leaves:
                continue
            if levels is not None and tlen[c] != levels[plen[i]]:
                continue
            out.append(c)
        return out

    def consistent(i: int, c: int) -> bool:
        for j, j_prec_i, mi, same in rel[i]:
            fj = f[j]
            if anc[fj][c] != j_prec_i or anc[c][fj]:
                return False
            if check_meet and tmeet(fj, c) != f[mi]:
                return False
            if check_level and (tlen[fj] == tlen[c]) != same:
                return False
        return True

    def place(i: int) -> bool:
        if i == size:
            return True
        for c in candidates(i):
            if not consistent(i, c):
                continue
            f[i] = c
            used[c] = True
            if place(i + 1):
                return True
            used[c] = False
            f[i] = -1
        return False

    return f if place(0) else None


def _find(d: int, ell: int, kind: EmbeddingKind, t: _Target, n: int) -> EmbeddingWitness | None:
    if kind is EmbeddingKind.LEVELED:
        level_choices = combinations(range(n + 1), d + 1)
    else:
        level_choices = [None]
    for levels in level_choices:
        f = _search(d, ell, kind, t, levels)
        if f is not None:
            pairs = sorted(zip(_preorder(d, ell), (t.nodes[j] for j in f)), key=lambda pair: node_key(pair[0]))
            return EmbeddingWitness(d, ell, tuple(pairs))
    return None


def embed_exists(d: int, ell: int, kind: EmbeddingKind, target: BranchTrie) -> EmbeddingWitness | None:
    """Return a witness that the height-``d`` pattern embeds in ``target``, or None."""
    if d < 0:
        raise ValueError("pattern height must be nonnegative")
    if not 2 <= ell <= target.m:
        raise ValueError(f"ell={ell} out of range for m={target.m}")
    if not target.nodes:
        return None
    return _find(d, ell, kind, _Target(target), target.n)


def brute_dimension(B: LeafSet, ell: int, kind: EmbeddingKind) -> int:
    """Largest ``d`` whose pattern embeds in the branch trie of ``B``; -1 if ``B`` is empty."""
    if not 2 <= ell <= B.m:
        raise ValueError(f"ell={ell} out of range for m={B.m}")
    if not B.leaves:
        return -1
    t = _Target(branch_closure(B))
    d = 0
    while d < B.n and _find(d + 1, ell, kind, t, B.n) is not None:
        d += 1
    return d


def brute_witness(B: LeafSet, ell: int, kind: EmbeddingKind) -> EmbeddingWitness | None:
    d = brute_dimension(B, ell, kind)
    if d < 0:
        return None
    return embed_exists(d, ell, kind, branch_closure(B))


__all__ = [
    "EmbeddingKind",
    "EmbeddingError",
    "EmbeddingWitness",
    "pattern_nodes",
    "is_embedding",
    "embed_exists",
    "brute_dimension",
    "brute_witness",
]
