"""DP-chromatic number by exhaustive cover enumeration, plus random falsification.

Every full m-fold cover is equivalent, up to relabelling the lists, to one
whose BFS-forest edges carry the identity, so the search space for a graph
of cycle rank r is the (m!)^r permutation vectors on the non-forest edges.
Partial covers never need to be searched: adding cross edges can only
destroy colorings.

Colorability of every cover in the space is decided with transversal
bitsets. Number the m^n transversals; for each edge and each permutation the
set of transversals that avoid that edge's matching is a bitmask. A cover is
colorable iff the AND of its edges' masks is nonzero. Walking the
permutation vectors depth-first shares prefix ANDs, and a zero prefix means
every completion is uncolorable. When m^n is too large for bitsets the
sweep falls back to backtracking cover by cover.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Optional

import numpy as np

from .cover import (
    NormalizedCover,
    SearchStats,
    bfs_forest,
    cover_from_ranks,
    cover_to_text,
    find_coloring,
    perm_rank,
    perm_tables,
    search_transversal,
)
from .graph import Graph, chromatic_number, coloring_number

# transversal bitsets are used while m^n stays below this
MAX_TRANSVERSAL_BITS = 1 << 20


@dataclass(frozen=True)
class Caps:
    max_rank: int = 8
    max_covers: int = 10**7
    time_budget: Optional[float] = None  # seconds, per top-level call
    workers: int = 1


@dataclass
class BadCoverCertificate:
    """A normalized cover with no coloring, located by its rank vector."""

    cover: NormalizedCover
    ranks: tuple[int, ...]
    index: int
    stats: SearchStats = field(default_factory=SearchStats)

    def verify(self) -> bool:
        stats = SearchStats()
        ok = find_coloring(self.cover.cover, stats) is None
        self.stats = stats
        return ok

    def to_text(self, result_line: str | None = None) -> str:
        comments = [
            f"uncolorable; ranks={' '.join(map(str, self.ranks)) or '-'} index={self.index}",
            f"exhaustive search: nodes={self.stats.nodes} dead_ends={self.stats.dead_ends}",
        ]
        text = cover_to_text(self.cover.cover, comments)
        if result_line:
            text += result_line + "\n"
        return text


@dataclass
class SweepResult:
    """Outcome of checking every normalized m-fold cover.

    ``colorable`` is ``None`` when a cap stopped the sweep; then nothing is
    claimed about m.
    """

    m: int
    colorable: Optional[bool]
    total: int
    checked: int
    certificate: Optional[BadCoverCertificate] = None
    reason: Optional[str] = None


@dataclass
class DpResult:
    value: Optional[int]
    status: str  # "exact" or "bracketed"
    lo: int
    hi: int
    evidence: dict[int, SweepResult] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def last_certificate(self) -> Optional[BadCoverCertificate]:
        for m in sorted(self.evidence, reverse=True):
            if self.evidence[m].certificate is not None:
                return self.evidence[m].certificate
        return None

    def record(self) -> str:
        value = self.value if self.value is not None else "none"
        return f"result chi_dp={value} status={self.status} lo={self.lo} hi={self.hi}"


class _OutOfTime(Exception):
    pass


class _Deadline:
    def __init__(self, budget: Optional[float]):
        self.at = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.at is not None and self.ticks & 1023 == 0 and time.monotonic() > self.at:
            raise _OutOfTime

    def expired(self) -> bool:
        return self.at is not None and time.monotonic() > self.at


def _layout(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    forest = bfs_forest(g)
    fs = set(forest)
    return forest, [e for e in g.edges() if e not in fs]


def _avoid_mask(n: int, m: int, u: int, v: int, perm: tuple[int, ...], digits: dict[int, np.ndarray]) -> int:
    """Bitmask over transversals t (vertex v is base-m digit v of t) with perm[t_u] != t_v."""
    ok = np.asarray(perm)[digits[u]] != digits[v]
    return int.from_bytes(np.packbits(ok, bitorder="little").tobytes(), "little")


class _BitsetSweep:
    def __init__(self, g: Graph, m: int):
        n = g.n
        self.forest, self.extra = _layout(g)
        self.perms = list(permutations(range(m)))
        idx = np.arange(m**n, dtype=np.int64)
        digits = {}
        for v in range(n):
            digits[v] = (idx // m**v) % m
        ident = tuple(range(m))
        base = (1 << m**n) - 1
        for u, v in self.forest:
            base &= _avoid_mask(n, m, u, v, ident, digits)
        self.base = base
        self.masks = [[_avoid_mask(n, m, u, v, p, digits) for p in self.perms] for u, v in self.extra]

    def first_bad(self, first: range, deadline: _Deadline) -> Optional[tuple[int, ...]]:
        """Lexicographically first rank vector with an uncolorable cover, first rank restricted to ``first``."""
        r = len(self.extra)
        if r == 0:
            return None if self.base else ()
        k = len(self.perms)
        masks = self.masks
        ranks = [0] * r

        def walk(depth: int, acc: int) -> bool:
            options = first if depth == 0 else range(k)
            for p in options:
                deadline.tick()
                cur = acc & masks[depth][p]
                ranks[depth] = p
                if not cur:
                    for j in range(depth + 1, r):
                        ranks[j] = 0
                    return True
                if depth + 1 < r and walk(depth + 1, cur):
                    return True
            return False

        return tuple(ranks) if walk(0, self.base) else None


def _backtrack_first_bad(g: Graph, m: int, first: range, deadline: _Deadline) -> Optional[tuple[int, ...]]:
    n = g.n
    forest, extra = _layout(g)
    perms = list(permutations(range(m)))
    ident = tuple(range(m))
    r = len(extra)
    edges = forest + extra
    sizes = [m] * n
    ranks = [0] * r

    def check() -> bool:
        deadline.tick()
        tables = perm_tables(n, edges, [ident] * len(forest) + [perms[p] for p in ranks])
        return search_transversal(sizes, tables, SearchStats()) is not None

    def walk(depth: int) -> bool:
        if depth == r:
            return not check()
        for p in first if depth == 0 else range(len(perms)):
            ranks[depth] = p
            if walk(depth + 1):
                return True
        return False

    if r == 0:
        return None if check() else ()
    return tuple(ranks) if walk(0) else None


def _first_bad(g: Graph, m: int, first: range, budget: Optional[float]) -> tuple[Optional[tuple[int, ...]], bool]:
    """``(ranks or None, timed_out)`` for one slice of the first edge's ranks."""
    deadline = _Deadline(budget)
    try:
        if m**g.n <= MAX_TRANSVERSAL_BITS:
            return _BitsetSweep(g, m).first_bad(first, deadline), False
        return _backtrack_first_bad(g, m, first, deadline), False
    except _OutOfTime:
        return None, True


def _rank_index(ranks: tuple[int, ...], m: int) -> int:
    k = factorial(m)
    index = 0
    for p in ranks:
        index = index * k + p
    return index


def _slices(k: int, workers: int) -> list[range]:
    step = -(-k // workers)
    return [range(i, min(i + step, k)) for i in range(0, k, step)]


def all_covers_colorable(g: Graph, m: int, caps: Caps = Caps()) -> SweepResult:
    """Decide whether every normalized m-fold cover of ``g`` is colorable.

    On failure the lexicographically first bad cover (by rank vector) is
    returned as a certificate. Caps turn into ``colorable=None``, never into a
    wrong answer.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    r = g.cycle_rank
    total = factorial(m) ** r
    if r > caps.max_rank:
        return SweepResult(m, None, total, 0, reason=f"cycle rank {r} exceeds max_rank {caps.max_rank}")
    if total > caps.max_covers:
        return SweepResult(m, None, total, 0, reason=f"{total} covers exceed max_covers {caps.max_covers}")
    if g.n == 0:
        return SweepResult(m, True, 1, 1)
    k = factorial(m)
    if r == 0 or caps.workers <= 1:
        ranks, timed_out = _first_bad(g, m, range(k), caps.time_budget)
        outcomes = [(ranks, timed_out)]
    else:
        jobs = _slices(k, caps.workers)
        with ProcessPoolExecutor(max_workers=caps.workers) as pool:
            outcomes = list(pool.map(_first_bad, [g] * len(jobs), [m] * len(jobs), jobs, [caps.time_budget] * len(jobs)))
    hits = [ranks for ranks, _ in outcomes if ranks is not None]
    if hits:
        # slices are in rank order, so the first hit is the global minimum;
        # an earlier slice that timed out could still hold a smaller one
        first_hit = next(i for i, (ranks, _) in enumerate(outcomes) if ranks is not None)
        if any(t for _, t in outcomes[:first_hit]):
            return SweepResult(m, None, total, 0, reason="time budget exhausted")
        ranks = hits[0]
        cert = BadCoverCertificate(cover_from_ranks(g, m, ranks), ranks, _rank_index(ranks, m))
        if not cert.verify():
            raise AssertionError("bitset sweep and backtracking disagree on a cover")
        return SweepResult(m, False, total, cert.index + 1, certificate=cert)
    if any(t for _, t in outcomes):
        return SweepResult(m, None, total, 0, reason="time budget exhausted")
    return SweepResult(m, True, total, total)


def dp_chromatic(g: Graph, caps: Caps = Caps()) -> DpResult:
    """chi_DP(g), searching m = chi(g), chi(g)+1, ... below col(g).

    col(g) is an upper bound on chi_DP, so reaching it ends the search without
    enumeration.
    """
    chi = chromatic_number(g)
    col = coloring_number(g)
    if g.n == 0:
        return DpResult(0, "exact", 0, 0)
    evidence: dict[int, SweepResult] = {}
    deadline = _Deadline(caps.time_budget)
    for m in range(chi, col):
        remaining = None if deadline.at is None else max(0.0, deadline.at - time.monotonic())
        sweep = all_covers_colorable(g, m, Caps(caps.max_rank, caps.max_covers, remaining, caps.workers))
        evidence[m] = sweep
        if sweep.colorable is None:
            return DpResult(None, "bracketed", m, col, evidence)
        if sweep.colorable:
            return DpResult(m, "exact", m, m, evidence)
    evidence[col] = SweepResult(col, True, factorial(col) ** g.cycle_rank, 0, reason="coloring number bound")
    return DpResult(col, "exact", col, col, evidence)


# -- random falsification --------------------------------------------------


def sample_permutations(seed: int, index: int, r: int, m: int) -> np.ndarray:
    """The ``r`` independent uniform permutations of sample ``index``.

    Each sample has its own PCG64 stream keyed by ``SeedSequence(seed,
    spawn_key=(index,))`` and each row is shuffled by ``Generator.permuted``
    (Fisher-Yates), so samples do not depend on how work is split.
    """
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))
    return rng.permuted(np.tile(np.arange(m), (r, 1)), axis=1)


def _falsify_range(g: Graph, m: int, seed: int, indices: range) -> Optional[int]:
    n = g.n
    forest, extra = _layout(g)
    ident = tuple(range(m))
    edges = forest + extra
    sizes = [m] * n
    for i in indices:
        perms = sample_permutations(seed, i, len(extra), m).tolist()
        tables = perm_tables(n, edges, [ident] * len(forest) + perms)
        if search_transversal(sizes, tables, SearchStats()) is None:
            return i
    return None


def falsify(g: Graph, m: int, samples: int, seed: int, workers: int = 1) -> Optional[BadCoverCertificate]:
    """Look for an uncolorable m-fold cover among ``samples`` random normalized covers.

    Returns the certificate of the lowest-index failing sample. ``None`` is
    evidence, not proof.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if workers <= 1:
        hit = _falsify_range(g, m, seed, range(samples))
    else:
        jobs = _slices(samples, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(_falsify_range, [g] * len(jobs), [m] * len(jobs), [seed] * len(jobs), jobs))
        hit = min((i for i in found if i is not None), default=None)
    if hit is None:
        return None
    _, extra = _layout(g)
    perms = sample_permutations(seed, hit, len(extra), m).tolist()
    ranks = tuple(perm_rank(p) for p in perms)
    cert = BadCoverCertificate(cover_from_ranks(g, m, ranks), ranks, hit)
    if not cert.verify():
        raise AssertionError("sampled cover colorable on recheck")
    return cert

