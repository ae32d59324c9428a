"""Fast tree-dimension computations and the two size bounds.

All routines work bottom-up over the branch trie, addressing a node of
length ``L`` by its value in base ``m`` (so the parent of ``v`` is ``v // m``).
Each has a brute-force counterpart in :mod:`treedim.oracle`; ``verify=True``
runs both and raises :class:`OracleMismatch` on disagreement.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .oracle import EmbeddingKind, brute_dimension
from .tree_core import LeafSet


class OracleMismatch(AssertionError):
    """A fast path disagreed with the brute-force embedding search."""

    def __init__(self, what: str, B: LeafSet, fast: int, brute: int):
        super().__init__(f"{what}: fast={fast} brute={brute} on m={B.m} n={B.n} B={B}")
        self.what = what
        self.leafset = B
        self.fast = fast
        self.brute = brute


def binomial_bound(n: int, d: int) -> int:
    """``C(n,0) + ... + C(n,d)``; 0 for ``d = -1``."""
    if n < 0 or d < -1:
        raise ValueError(f"bad bound parameters n={n} d={d}")
    return sum(comb(n, i) for i in range(min(d, n) + 1))


def mary_bound(n: int, d: int, m: int, ell: int) -> int:
    """``sum_{i<=d} C(n,i) (m-ell+1)^i (ell-1)^(n-i)``."""
    if not m >= ell >= 2:
        raise ValueError(f"need m >= ell >= 2, got m={m} ell={ell}")
    if n < 0 or d < -1:
        raise ValueError(f"bad bound parameters n={n} d={d}")
    hi, lo = m - ell + 1, ell - 1
    return sum(comb(n, i) * hi**i * lo ** (n - i) for i in range(min(d, n) + 1))


def _check_ell(m: int, ell: int) -> None:
    if not 2 <= ell <= m:
        raise ValueError(f"ell={ell} out of range for m={m}")


def _levels(indices: Iterable[int], m: int, n: int) -> list[dict[int, list[int]]]:
    """Children lists per level: ``levels[L][v]`` are the child indices of node ``v`` at length ``L``."""
    levels: list[dict[int, list[int]]] = [dict() for _ in range(n)]
    current = sorted(set(indices))
    for L in range(n - 1, -1, -1):
        kids = levels[L]
        for v in current:
            kids.setdefault(v // m, []).append(v)
        current = list(kids)
    return levels


@lru_cache(maxsize=None)
def _popcount_masks(n: int) -> tuple[int, ...]:
    # masks[k] has bit P set for every position set P (a subset of range(n)) with |P| = k
    masks = [0] * (n + 1)
    for P in range(1 << n):
        masks[P.bit_count()] |= 1 << P
    return tuple(masks)


def _at_least(fams: list[int], k: int) -> int:
    """Bits present in at least ``k`` of the given bitsets."""
    if len(fams) < k:
        return 0
    counts = [0] * k
    for f in fams:
        for j in range(k - 1, 0, -1):
            counts[j] |= counts[j - 1] & f
        counts[0] |= f
    return counts[k - 1]


def shattered_positions(indices: Iterable[int], m: int, n: int, ell: int) -> int:
    """Family of strongly shattered position sets, as a bitset indexed by position masks.

    Position set ``P`` is strongly shattered when the leaves below some node
    realise a leveled ``ell``-ary tree whose levels branch exactly at the
    positions of ``P``.  The family of a node is the union of its children's
    families together with ``{L} | Q`` for every ``Q`` shattered below at least
    ``ell`` distinct children.
    """
    indices = list(indices)
    if not indices:
        return 0
    if n == 0:
        return 1
    fam = {v: 1 for v in indices}
    levels = _levels(indices, m, n)
    for L in range(n - 1, -1, -1):
        shift = 1 << L
        nxt = {}
        for v, kids in levels[L].items():
            fs = [fam[c] for c in kids]
            union = 0
            for f in fs:
                union |= f
            if len(fs) >= ell:
                union |= _at_least(fs, ell) << shift
            nxt[v] = union
        fam = nxt
    return fam[0]


def ltd_indices(indices: Iterable[int], m: int, n: int, ell: int = 2) -> int:
    fam = shattered_positions(indices, m, n, ell)
    if not fam:
        return -1
    masks = _popcount_masks(n)
    for k in range(n, -1, -1):
        if fam & masks[k]:
            return k
    raise AssertionError("unreachable: the empty position set is always shattered")


def mtd_indices(indices: Iterable[int], m: int, n: int, ell: int = 2) -> int:
    indices = list(indices)
    if not indices:
        return -1
    g = {v: 0 for v in indices}
    levels = _levels(indices, m, n)
    for L in range(n - 1, -1, -1):
        nxt = {}
        for v, kids in levels[L].items():
            vals = sorted((g[c] for c in kids), reverse=True)
            best = vals[0]
            if len(vals) >= ell:
                best = max(best, 1 + vals[ell - 1])
            nxt[v] = best
        g = nxt
    return g[0]


def td_ell_indices(indices: Iterable[int], m: int, n: int, ell: int = 2) -> int:
    """Plain dimension by thresholding.

    ``rank(v) >= t + 1`` iff the strict descendants of ``v`` contain an antichain
    of ``ell`` nodes of rank ``>= t``; the largest such antichain below a node is
    found by taking a node itself or summing over its children.
    """
    indices = list(indices)
    if not indices:
        return -1
    levels = _levels(indices, m, n)
    # nodes as (L, v); children lists per node, bottom-up order
    order = [(L, v) for L in range(n - 1, -1, -1) for v in levels[L]]
    rank = {(n, v): 0 for v in indices}
    for key in order:
        rank[key] = 0
    t = 0
    while True:
        best: dict[tuple[int, int], int] = {(n, v): int(rank[(n, v)] >= t) for v in indices}
        promoted = []
        for L, v in order:
            below = 0
            for c in levels[L][v]:
                below += best[(L + 1, c)]
            if below > ell:
                below = ell
            here = int(rank[(L, v)] >= t)
            best[(L, v)] = max(here, below)
            if here and below >= ell:
                promoted.append((L, v))
        if not promoted:
            return rank[(0, 0)]
        for key in promoted:
            rank[key] = t + 1
        t += 1


def _indices(B: LeafSet) -> list[int]:
    return B.indices()


def _verified(what: str, B: LeafSet, fast: int, ell: int, kind: EmbeddingKind) -> int:
    brute = brute_dimension(B, ell, kind)
    if brute != fast:
        raise OracleMismatch(what, B, fast, brute)
    return fast


def td(B: LeafSet, verify: bool = False) -> int:
    """Tree dimension of a binary leaf set."""
    if B.m != 2:
        raise ValueError("td is for binary leaf sets; use td_ell")
    value = td_ell_indices(_indices(B), 2, B.n, 2)
    return _verified("td", B, value, 2, EmbeddingKind.PLAIN) if verify else value


def ltd(B: LeafSet, ell: int = 2, verify: bool = False) -> int:
    _check_ell(B.m, ell)
    value = ltd_indices(_indices(B), B.m, B.n, ell)
    return _verified("ltd", B, value, ell, EmbeddingKind.LEVELED) if verify else value


def mtd_ell(B: LeafSet, ell: int = 2, verify: bool = False) -> int:
    _check_ell(B.m, ell)
    value = mtd_indices(_indices(B), B.m, B.n, ell)
    return _verified("mtd", B, value, ell, EmbeddingKind.MEETED) if verify else value


def td_ell(B: LeafSet, ell: int = 2, verify: bool = False) -> int:
    _check_ell(B.m, ell)
    value = td_ell_indices(_indices(B), B.m, B.n, ell)
    return _verified("td_ell", B, value, ell, EmbeddingKind.PLAIN) if verify else value


@dataclass
class DimensionReport:
    m: int
    n: int
    size: int
    ell: int
    td: int
    mtd: int
    ltd: int
    bound: int
    bound_tight: bool

    def as_dict(self) -> dict:
        return asdict(self)


def dimension_report(B: LeafSet, ell: int = 2, verify: bool = False) -> DimensionReport:
    _check_ell(B.m, ell)
    lt = ltd(B, ell, verify)
    mt = mtd_ell(B, ell, verify)
    t = td_ell(B, ell, verify)
    bound = mary_bound(B.n, lt, B.m, ell)
    if not lt <= mt <= t:
        raise AssertionError(f"chain inequality violated on {B}: ltd={lt} mtd={mt} td={t}")
    if len(B) > bound:
        raise AssertionError(f"size bound violated on {B}: |B|={len(B)} > {bound}")
    return DimensionReport(B.m, B.n, len(B), ell, t, mt, lt, bound, len(B) == bound)
