"""Named verification suites, one per theorem or corollary being checked.

Every suite splits its work into independent chunks.  A chunk gets its own
seed derived from the suite seed and the chunk number, so results do not
depend on how many worker processes run them; tallies are merged in chunk
order.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import learning
from .dimension import binomial_bound, ltd_indices, mary_bound, mtd_indices, td_ell_indices
from .learning import SetFamily, chi_labeling, chi_tuple, littlestone_by_labelings, littlestone_dim, traces, vc_dim
from .maximal import (
    ball_isomorphic,
    canonical_ball,
    dimension_table,
    is_maximal,
    mask_indices,
    maximal_masks,
    random_leafset,
    search_counterexample,
    tree_isomorphic,
)
from .normalization import normalize_binary, normalize_mary, reverse_lex_order
from .oracle import EmbeddingKind, brute_dimension
from .tree_core import LeafSet, all_nodes, branch_closure, node_str, set_norm, split_projection, swap_set

CHUNK = 4096


@dataclass
class Check:
    passed: int = 0
    failed: int = 0
    first_failure: dict | None = None

    def as_dict(self) -> dict:
        out = {"passed": self.passed, "failed": self.failed}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        return out


@dataclass
class Tally:
    checks: dict[str, Check] = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, instance: Callable[[], dict] | dict | None = None) -> bool:
        check = self.checks.setdefault(name, Check())
        if ok:
            check.passed += 1
        else:
            check.failed += 1
            if check.first_failure is None and instance is not None:
                check.first_failure = instance() if callable(instance) else instance
        return ok

    def merge(self, other: "Tally") -> None:
        for name, c in other.checks.items():
            mine = self.checks.setdefault(name, Check())
            mine.passed += c.passed
            mine.failed += c.failed
            if mine.first_failure is None:
                mine.first_failure = c.first_failure
        for key, value in other.extras.items():
            self.extras.setdefault(key, value)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks.values())

    def as_dict(self) -> dict:
        return {name: c.as_dict() for name, c in self.checks.items()}


@dataclass
class SuiteResult:
    name: str
    params: dict
    tally: Tally

    @property
    def ok(self) -> bool:
        return self.tally.ok and bool(self.tally.checks)

    def summary_lines(self) -> list[str]:
        lines = []
        for name, c in self.tally.checks.items():
            status = "PASS" if c.failed == 0 else "FAIL"
            lines.append(f"{status} {self.name}/{name}: {c.passed} passed, {c.failed} failed")
        return lines


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TREEDIM_JOBS", "1")))
    except ValueError:
        return 1


def chunk_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index * 7919 + 12345) % (1 << 64)


def _run(fn: Callable, chunks: list[tuple], jobs: int) -> Tally:
    total = Tally()
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, chunks))
    else:
        results = [fn(c) for c in chunks]
    for t in results:
        total.merge(t)
    return total


def leafset_instance(B: LeafSet, **values) -> dict:
    return {"m": B.m, "n": B.n, "leaves": [node_str(b) for b in B.sorted()], **values}


def family_instance(F: SetFamily, **values) -> dict:
    members = ["".join("1" if G >> i & 1 else "0" for i in range(len(F.universe))) for G in sorted(F.members)]
    return {"universe": [str(x) for x in F.universe], "members": members, **values}


def _mask_chunks(n: int, m: int = 2) -> list[tuple[int, int, int]]:
    total = 1 << (m**n)
    return [(n, lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


def _sample_chunks(count: int, seed: int, *params) -> list[tuple]:
    chunks = []
    for i, lo in enumerate(range(0, count, CHUNK // 4)):
        chunks.append((*params, min(CHUNK // 4, count - lo), chunk_seed(seed, i)))
    return chunks


# ---------------------------------------------------------------- size bounds


def _bound_checks(t: Tally, B: LeafSet, ell: int) -> None:
    idx = B.indices()
    d = ltd_indices(idx, B.m, B.n, ell)
    bound = mary_bound(B.n, d, B.m, ell)
    t.record("size-bound", len(idx) <= bound, lambda: leafset_instance(B, ell=ell, ltd=d, bound=bound))
    if B.m == 2 and ell == 2:
        t.record("binary-bound-agrees", bound == binomial_bound(B.n, d), lambda: leafset_instance(B, ltd=d))
    if B.n == 0:
        return
    a1, a2 = split_projection(B, ell)
    d1 = ltd_indices(a1.indices(), B.m, B.n - 1, ell)
    d2 = ltd_indices(a2.indices(), B.m, B.n - 1, ell)
    t.record("projection-dimensions", d1 <= d and d2 <= max(d - 1, -1), lambda: leafset_instance(B, ell=ell, ltd=d, ltd_a1=d1, ltd_a2=d2))
    if B.m == 2:
        t.record("projection-count", len(B) == len(a1) + len(a2), lambda: leafset_instance(B, a1=len(a1), a2=len(a2)))
    else:
        t.record(
            "projection-count",
            len(B) <= len(a1) * (ell - 1) + len(a2) * (B.m - ell + 1),
            lambda: leafset_instance(B, ell=ell, a1=len(a1), a2=len(a2)),
        )


def _chunk_bound_masks(args) -> Tally:
    n, lo, hi, m, ells = args
    t = Tally()
    for mask in range(lo, hi):
        B = LeafSet.from_indices(mask_indices(mask), m, n)
        for ell in ells:
            _bound_checks(t, B, ell)
    return t


def _chunk_bound_random(args) -> Tally:
    m, n, ells, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        B = random_leafset(rng, m, n)
        for ell in ells:
            _bound_checks(t, B, ell)
    return t


def _chunk_tightness(args) -> Tally:
    m, ell, n = args
    t = Tally()
    for d in range(n + 1):
        ball = canonical_ball(n, d, m, ell)
        got = ltd_indices(ball.indices(), m, n, ell)
        bound = mary_bound(n, d, m, ell)
        t.record("tightness", got == d and len(ball) == bound, {"m": m, "n": n, "ell": ell, "d": d, "ltd": got, "size": len(ball), "bound": bound})
    return t


def _exhaustive_bound_chunks(n_values, m, ells) -> list[tuple]:
    return [(n, lo, hi, m, ells) for n in n_values for (_, lo, hi) in _mask_chunks(n, m)]


def suite_thm_ltd(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    t = _run(_chunk_bound_masks, _exhaustive_bound_chunks(range(max_n + 1), 2, (2,)), jobs)
    chunks = []
    for n in (5, 6):
        chunks += _sample_chunks(samples, seed + n, 2, n, (2,))
    t.merge(_run(_chunk_bound_random, chunks, jobs))
    t.merge(_run(_chunk_tightness, [(2, 2, n) for n in range(7)], jobs))
    return t


def suite_thm_ltd_mary(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    t = _run(_chunk_bound_masks, _exhaustive_bound_chunks(range(3), 3, (2, 3)), jobs)
    chunks = []
    for n in range(3, max(3, max_n) + 1):
        chunks += _sample_chunks(samples, seed + n, 3, n, (2, 3))
    t.merge(_run(_chunk_bound_random, chunks, jobs))
    tight = [(m, ell, n) for (m, ell) in ((2, 2), (3, 2), (3, 3)) for n in range(7)]
    t.merge(_run(_chunk_tightness, tight, jobs))
    return t


# ---------------------------------------------------------------- normalization


def _binary_norm_checks(t: Tally, B: LeafSet) -> None:
    final, trace = normalize_binary(B)
    want = td_ell_indices(B.indices(), 2, B.n, 2)
    got = set_norm(final.leaves)
    t.record("td-equals-norm", got == want, lambda: leafset_instance(B, td=want, norm=got, normalized=[node_str(b) for b in final.sorted()]))
    t.record("cardinality", len(final) == len(B), lambda: leafset_instance(B))
    t.record("trace-replay", trace.replay() == final, lambda: leafset_instance(B))
    t.record("shape", tree_isomorphic(branch_closure(B), branch_closure(final)), lambda: leafset_instance(B))
    rev, _ = normalize_binary(B, reverse_lex_order)
    t.record("order-independent-norm", set_norm(rev.leaves) == got, lambda: leafset_instance(B))
    mary, _ = normalize_mary(B, 2)
    t.record("mary-procedure-agrees", set_norm(mary.leaves) == got, lambda: leafset_instance(B))
    again, _ = normalize_binary(final)
    t.record("idempotent-norm", set_norm(again.leaves) == got, lambda: leafset_instance(B))


def _mary_norm_checks(t: Tally, B: LeafSet, ell: int) -> None:
    final, trace = normalize_mary(B, ell)
    want = mtd_indices(B.indices(), B.m, B.n, ell)
    got = set_norm(final.leaves, ell)
    t.record("mtd-equals-norm", got == want, lambda: leafset_instance(B, ell=ell, mtd=want, norm=got))
    t.record("cardinality", len(final) == len(B), lambda: leafset_instance(B, ell=ell))
    t.record("trace-replay", trace.replay() == final, lambda: leafset_instance(B, ell=ell))
    t.record("shape", tree_isomorphic(branch_closure(B), branch_closure(final)), lambda: leafset_instance(B, ell=ell))
    rev, _ = normalize_mary(B, ell, reverse_lex_order)
    t.record("order-independent-norm", set_norm(rev.leaves, ell) == got, lambda: leafset_instance(B, ell=ell))
    again, _ = normalize_mary(final, ell)
    t.record("idempotent-norm", set_norm(again.leaves, ell) == got, lambda: leafset_instance(B, ell=ell))


def _chunk_td_norm_masks(args) -> Tally:
    n, lo, hi = args
    t = Tally()
    for mask in range(lo, hi):
        _binary_norm_checks(t, LeafSet.from_indices(mask_indices(mask), 2, n))
    return t


def _chunk_td_norm_random(args) -> Tally:
    n, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        _binary_norm_checks(t, random_leafset(rng, 2, n))
    return t


def suite_thm_td_norm(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    chunks = [c for n in range(max_n + 1) for c in _mask_chunks(n)]
    t = _run(_chunk_td_norm_masks, chunks, jobs)
    rand = []
    for n in (5, 6):
        rand += _sample_chunks(samples, seed + n, n)
    t.merge(_run(_chunk_td_norm_random, rand, jobs))
    return t


def _chunk_mtd_norm_masks(args) -> Tally:
    n, lo, hi = args
    t = Tally()
    for mask in range(lo, hi):
        B = LeafSet.from_indices(mask_indices(mask), 3, n)
        for ell in (2, 3):
            _mary_norm_checks(t, B, ell)
    return t


def _chunk_mtd_norm_random(args) -> Tally:
    n, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        B = random_leafset(rng, 3, n)
        for ell in (2, 3):
            _mary_norm_checks(t, B, ell)
    return t


def suite_thm_mtd_norm(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    chunks = [c for n in range(3) for c in _mask_chunks(n, 3)]
    t = _run(_chunk_mtd_norm_masks, chunks, jobs)
    t.merge(_run(_chunk_mtd_norm_random, _sample_chunks(samples, seed, 3), jobs))
    return t


# ---------------------------------------------------------------- maximal sets


def _chunk_td_maximal_exhaustive(args) -> Tally:
    (n,) = args
    t = Tally()
    table = dimension_table(n, "td")
    target = {d: branch_closure(canonical_ball(n, d)) for d in range(-1, n + 1)}
    for mask in maximal_masks(table, 1 << n):
        B = LeafSet.from_indices(mask_indices(mask), 2, n)
        d = table[mask]
        t.record("td-maximal-isomorphic-to-ball", tree_isomorphic(branch_closure(B), target[d]), lambda: leafset_instance(B, td=d))
        t.record("td-maximal-size", len(B) == binomial_bound(n, d), lambda: leafset_instance(B, td=d))
    return t


def _greedy_maximal(rng: random.Random, m: int, n: int, kind: str, ell: int) -> tuple[LeafSet, int]:
    fn = {"td": td_ell_indices, "mtd": mtd_indices, "ltd": ltd_indices}[kind]
    d = rng.randrange(n + 1)
    order = list(range(m**n))
    rng.shuffle(order)
    cur: list[int] = []
    for v in order:
        if fn(cur + [v], m, n, ell) <= d:
            cur.append(v)
    return LeafSet.from_indices(cur, m, n), d


def _chunk_td_maximal_greedy(args) -> Tally:
    m, n, kind, ells, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        for ell in ells:
            B, _ = _greedy_maximal(rng, m, n, kind, ell)
            cert = is_maximal(B, kind, ell)
            t.record("greedy-result-maximal", cert is not None, lambda: leafset_instance(B, ell=ell))
            if cert is None:
                continue
            d = cert.value
            t.record(f"{kind}-maximal-isomorphic-to-ball", ball_isomorphic(B, d, ell), lambda: leafset_instance(B, ell=ell, dimension=d))
            t.record(f"{kind}-maximal-size", len(B) == mary_bound(n, d, m, ell), lambda: leafset_instance(B, ell=ell, dimension=d))
    return t


def suite_cor_isotp(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    t = _run(_chunk_td_maximal_exhaustive, [(n,) for n in range(max_n + 1)], jobs)
    chunks = []
    for n in (5, 6):
        chunks += _sample_chunks(samples, seed + n, 2, n, "td", (2,))
    t.merge(_run(_chunk_td_maximal_greedy, chunks, jobs))
    return t


def suite_cor_isotp_mary(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    chunks = []
    for n in range(1, min(max_n, 4) + 1):
        chunks += _sample_chunks(samples, seed + n, 3, n, "mtd", (2, 3))
    return _run(_chunk_td_maximal_greedy, chunks, jobs)


def _chunk_ltd_maximal_exhaustive(args) -> Tally:
    n, brute_limit = args
    t = Tally()
    table = dimension_table(n, "ltd")
    for k, mask in enumerate(maximal_masks(table, 1 << n)):
        B = LeafSet.from_indices(mask_indices(mask), 2, n)
        d = table[mask]
        t.record("ltd-maximal-size", len(B) == binomial_bound(n, d), lambda: leafset_instance(B, ltd=d))
        if k < brute_limit:
            cert = is_maximal(B, "ltd")
            ok = cert is not None and cert.verify(lambda S, kind, ell: brute_dimension(S, ell, EmbeddingKind.LEVELED))
            t.record("certificate-oracle-verified", ok, lambda: leafset_instance(B, ltd=d))
    return t


def _chunk_ltd_maximal_greedy(args) -> Tally:
    n, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        B, d = _greedy_maximal(rng, 2, n, "ltd", 2)
        got = ltd_indices(B.indices(), 2, n, 2)
        full = len(B) == 1 << n
        # a greedy completion has ltd exactly d unless it filled the whole tree
        t.record("greedy-dimension", got == d or full, lambda: leafset_instance(B, target=d, ltd=got))
        ok = len(B) == binomial_bound(n, got)
        if not ok:
            # only a genuinely maximal set counts as a counterexample
            ok = is_maximal(B, "ltd") is None
        t.record("ltd-maximal-size", ok, lambda: leafset_instance(B, ltd=got, bound=binomial_bound(n, got)))
    return t


def suite_maximal_small_n(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    t = _run(_chunk_ltd_maximal_exhaustive, [(n, 10**9 if n <= 3 else 200) for n in range(max_n + 1)], jobs)
    t.merge(_run(_chunk_ltd_maximal_greedy, _sample_chunks(samples, seed, 5), jobs))
    return t


def suite_counterexample_n6(max_n: int = 6, samples: int = 10**7, seed: int = 0, jobs: int = 1) -> Tally:
    t = Tally()
    n, d = 6, 2
    res = search_counterexample(n, d, budget=samples, seed=seed)
    t.record("found", res is not None, {"n": n, "d": d, "budget": samples, "seed": seed})
    if res is None:
        return t
    B, rep = res.leafset, res.report
    inst = leafset_instance(B, ltd=rep.ltd, td=rep.td, evaluations=res.evaluations)
    t.record("size-21", len(B) == 21, inst)
    t.record("below-bound-22", len(B) < binomial_bound(n, d) == 22, inst)
    t.record("ltd-2", rep.ltd == d, inst)
    cert = is_maximal(B, "ltd")
    t.record("ltd-maximal", cert is not None and cert.value == d, inst)
    t.record("td-4", rep.td == 4, inst)
    t.extras["counterexample"] = inst
    t.extras["trial"] = res.trial
    return t


# ---------------------------------------------------------------- oracle and chain


def _fast_vs_brute(t: Tally, B: LeafSet, ell: int) -> None:
    idx = B.indices()
    pairs = (
        ("ltd", ltd_indices, EmbeddingKind.LEVELED),
        ("mtd", mtd_indices, EmbeddingKind.MEETED),
        ("td_ell", td_ell_indices, EmbeddingKind.PLAIN),
    )
    for name, fast, kind in pairs:
        a = fast(idx, B.m, B.n, ell)
        b = brute_dimension(B, ell, kind)
        t.record(f"{name}-matches-oracle", a == b, lambda: leafset_instance(B, ell=ell, fast=a, brute=b))


def _chunk_oracle_masks(args) -> Tally:
    n, lo, hi = args
    t = Tally()
    for mask in range(lo, hi):
        _fast_vs_brute(t, LeafSet.from_indices(mask_indices(mask), 2, n), 2)
    return t


def _chunk_oracle_random(args) -> Tally:
    m, n, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        B = random_leafset(rng, m, n)
        for ell in range(2, m + 1):
            _fast_vs_brute(t, B, ell)
    return t


def suite_oracle_equiv(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    first = 3 if max_n >= 3 else 0
    chunks = [c for n in range(first, max_n + 1) for c in _mask_chunks(n)]
    t = _run(_chunk_oracle_masks, chunks, jobs)
    t.merge(_run(_chunk_oracle_random, _sample_chunks(samples, seed, 3, 3), jobs))
    return t


def _random_automorphism(rng: random.Random, B: LeafSet) -> LeafSet:
    internal = [a for a in all_nodes(B.m, B.n - 1)] if B.n else []
    for _ in range(rng.randrange(1, 8) if internal else 0):
        B = swap_set(B, rng.choice(internal), rng.randrange(B.m - 1))
    return B


def _chunk_chain(args) -> Tally:
    m, n, count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        B = random_leafset(rng, m, n)
        idx = B.indices()
        image = _random_automorphism(rng, B)
        jdx = image.indices()
        for ell in range(2, m + 1):
            lt, mt, td = ltd_indices(idx, m, n, ell), mtd_indices(idx, m, n, ell), td_ell_indices(idx, m, n, ell)
            t.record("ltd<=mtd<=td", lt <= mt <= td, lambda: leafset_instance(B, ell=ell, ltd=lt, mtd=mt, td=td))
            if ell == 2:
                t.record("mtd2==td2", mt == td, lambda: leafset_instance(B, mtd=mt, td=td))
            moved = (ltd_indices(jdx, m, n, ell), mtd_indices(jdx, m, n, ell), td_ell_indices(jdx, m, n, ell))
            t.record("automorphism-invariant", moved == (lt, mt, td), lambda: leafset_instance(B, ell=ell, image=[node_str(b) for b in image.sorted()]))
    return t


def suite_chain_ineq(max_n: int = 6, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    chunks = []
    for n in range(1, max_n + 1):
        chunks += _sample_chunks(samples, seed + n, 2, n)
    for n in range(1, min(max_n, 4) + 1):
        chunks += _sample_chunks(samples, seed + 100 + n, 3, n)
    return _run(_chunk_chain, chunks, jobs)


# ---------------------------------------------------------------- learning theory


def random_family(rng: random.Random, k: int) -> SetFamily:
    universe = tuple(f"x{i}" for i in range(k))
    p = rng.random()
    members = frozenset(G for G in range(1 << k) if rng.random() < p)
    return SetFamily(universe, members)


def _ss_checks(t: Tally, F: SetFamily, tuple_len: int) -> None:
    vc = vc_dim(F)
    k = len(F.universe)
    for mask in range(1 << k):
        if mask.bit_count() > 4:
            continue
        A = [x for i, x in enumerate(F.universe) if mask >> i & 1]
        size = len(traces(F, A))
        bound = binomial_bound(len(A), vc)
        t.record("sauer-shelah", size <= bound, lambda: family_instance(F, A=A, traces=size, vc=vc))
    for n in range(1, tuple_len + 1):
        for pts in product(F.universe, repeat=n):
            img = chi_tuple(F, pts)
            lt = ltd_indices(img.indices(), 2, n, 2)
            t.record("ltd-chi-tuple<=vc", lt <= vc, lambda: family_instance(F, tuple=list(pts), ltd=lt, vc=vc))


def _chunk_cor_ss(args) -> Tally:
    count, seed = args
    rng = random.Random(seed)
    t = Tally()
    for _ in range(count):
        F = random_family(rng, rng.randrange(1, 6))
        _ss_checks(t, F, 3 if len(F.universe) > 3 else 4)
    return t


def suite_cor_ss(max_n: int = 4, samples: int = 1000, seed: int = 0, jobs: int = 1) -> Tally:
    return _run(_chunk_cor_ss, _sample_chunks(samples, seed), jobs)


def _chunk_stable_ss(args) -> Tally:
    k, lo, hi, max_n = args
    t = Tally()
    universe = tuple(f"x{i}" for i in range(k))
    labelings = {n: list(learning.all_labelings(universe, n)) for n in range(1, max_n + 1)}
    for fam in range(lo, hi):
        F = SetFamily(universe, frozenset(G for G in range(1 << k) if fam >> G & 1))
        ld = littlestone_dim(F)
        vc = vc_dim(F)
        t.record("vc<=ld", vc <= ld, lambda: family_instance(F, vc=vc, ld=ld))
        by_def = littlestone_by_labelings(F)
        t.record("ld-recursion-matches-definition", ld == by_def, lambda: family_instance(F, recursion=ld, definition=by_def))
        for n, alphas in labelings.items():
            bound = binomial_bound(n, ld)
            for alpha in alphas:
                img = chi_labeling(F, alpha)
                idx = img.indices()
                size = len(idx)
                t.record("thicket-bound", size <= bound, lambda: family_instance(F, labeling=[[node_str(a), x] for a, x in alpha.labels], image=size, ld=ld))
                lt, td = ltd_indices(idx, 2, n, 2), td_ell_indices(idx, 2, n, 2)
                t.record("ltd<=td<=ld", lt <= td <= ld, lambda: family_instance(F, labeling=[[node_str(a), x] for a, x in alpha.labels], ltd=lt, td=td, ld=ld))
        _ss_checks(t, F, max_n)
    return t


def suite_cor_stable_ss(max_n: int = 3, samples: int = 0, seed: int = 0, jobs: int = 1) -> Tally:
    chunks = []
    for k in range(0, 4):
        total = 1 << (1 << k)
        step = 16
        chunks += [(k, lo, min(lo + step, total), max_n) for lo in range(0, total, step)]
    return _run(_chunk_stable_ss, chunks, jobs)


SUITES: dict[str, tuple[Callable[..., Tally], dict]] = {
    "thm-ltd": (suite_thm_ltd, {"max_n": 4, "samples": 1000}),
    "thm-ltd-mary": (suite_thm_ltd_mary, {"max_n": 4, "samples": 1000}),
    "thm-td-norm": (suite_thm_td_norm, {"max_n": 4, "samples": 1000}),
    "thm-mtd-norm": (suite_thm_mtd_norm, {"max_n": 3, "samples": 1000}),
    "cor-isotp": (suite_cor_isotp, {"max_n": 4, "samples": 1000}),
    "cor-isotp-mary": (suite_cor_isotp_mary, {"max_n": 4, "samples": 200}),
    "cor-ss": (suite_cor_ss, {"max_n": 4, "samples": 1000}),
    "cor-stable-ss": (suite_cor_stable_ss, {"max_n": 3, "samples": 0}),
    "oracle-equiv": (suite_oracle_equiv, {"max_n": 4, "samples": 1000}),
    "maximal-small-n": (suite_maximal_small_n, {"max_n": 4, "samples": 10000}),
    "counterexample-n6": (suite_counterexample_n6, {"max_n": 6, "samples": 10**7}),
    "chain-ineq": (suite_chain_ineq, {"max_n": 6, "samples": 1000}),
}


def run_suite(name: str, max_n: int | None = None, samples: int | None = None, seed: int = 0, jobs: int | None = None) -> SuiteResult:
    try:
        fn, defaults = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    params = {
        "max_n": defaults["max_n"] if max_n is None else max_n,
        "samples": defaults["samples"] if samples is None else samples,
        "seed": seed,
    }
    tally = fn(**params, jobs=default_jobs() if jobs is None else jobs)
    return SuiteResult(name, params, tally)
