"""Covers of a graph: the pair (L, H) of DP-coloring.

A cover is stored in "partial matching form": for each base edge ``(u, v)``
with ``u < v`` we keep the set of pairs ``(a, b)`` meaning that element ``a``
of ``L(u)`` is adjacent in H to element ``b`` of ``L(v)``. List elements are
numbered 1..|L(v)|. The cliques on each ``L(v)`` are implicit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Iterator, Mapping, Optional, Sequence

from .formats import ParseError
from .graph import Graph, _bits

Pair = tuple[int, int]
Edge = tuple[int, int]


class ResourceLimitExceeded(Exception):
    """An enumeration would exceed a configured cap."""

    def __init__(self, message: str, required_rank: int | None = None):
        super().__init__(message)
        self.required_rank = required_rank


@dataclass(frozen=True, eq=True)
class Cover:
    base: Graph
    sizes: tuple[int, ...]
    matches: Mapping[Edge, frozenset[Pair]] = field(hash=False)

    @classmethod
    def build(
        cls,
        base: Graph,
        m: int | Sequence[int],
        matches: Mapping[Edge, Sequence[Pair]] | None = None,
    ) -> "Cover":
        """Build a cover; keys with ``u > v`` are flipped together with their pairs."""
        sizes = (m,) * base.n if isinstance(m, int) else tuple(m)
        if len(sizes) != base.n:
            raise ValueError(f"{len(sizes)} list sizes for {base.n} vertices")
        norm: dict[Edge, frozenset[Pair]] = {}
        seen = set()
        for (u, v), pairs in (matches or {}).items():
            if u > v:
                u, v = v, u
                pairs = [(b, a) for a, b in pairs]
            if (u, v) in seen:
                raise ValueError(f"edge ({u}, {v}) given twice")
            seen.add((u, v))
            frozen = frozenset((int(a), int(b)) for a, b in pairs)
            if frozen:
                norm[(u, v)] = frozen
        return cls(base, sizes, norm)

    @classmethod
    def from_permutations(cls, base: Graph, m: int, perms: Mapping[Edge, Sequence[int]]) -> "Cover":
        """Full cover from 0-based permutations: ``perm[a]`` is the partner of ``a`` (u < v).

        Edges missing from ``perms`` carry the identity.
        """
        ident = tuple(range(m))
        matches = {}
        for e in base.edges():
            p = perms.get(e, ident)
            matches[e] = [(a + 1, p[a] + 1) for a in range(m)]
        return cls.build(base, m, matches)

    @property
    def fold(self) -> Optional[int]:
        """The common list size, or ``None`` for a non-uniform cover."""
        if not self.sizes:
            return 0
        return self.sizes[0] if len(set(self.sizes)) == 1 else None

    @property
    def m(self) -> int:
        fold = self.fold
        if fold is None:
            raise ValueError("cover is not uniform")
        return fold

    def match(self, u: int, v: int) -> frozenset[Pair]:
        """Pairs ``(a, b)`` with ``a`` in L(u) and ``b`` in L(v), whichever order u, v are in."""
        if u < v:
            return self.matches.get((u, v), frozenset())
        return frozenset((b, a) for a, b in self.matches.get((v, u), frozenset()))

    def is_full(self) -> bool:
        fold = self.fold
        if fold is None:
            return False
        return all(_permutation_of(self.matches.get(e, frozenset()), fold) is not None for e in self.base.edges())

    def permutation(self, u: int, v: int) -> tuple[int, ...]:
        """0-based permutation of a full match, ``perm[a] = b``."""
        perm = _permutation_of(self.match(u, v), self.m)
        if perm is None:
            raise ValueError(f"match on ({u}, {v}) is not a bijection")
        return perm

    def cross_edge_count(self) -> int:
        return sum(len(p) for p in self.matches.values())

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {sorted(p)}" for e, p in sorted(self.matches.items()))
        return f"Cover(n={self.base.n}, sizes={self.sizes}, {{{body}}})"


def _permutation_of(pairs: frozenset[Pair], m: int) -> Optional[tuple[int, ...]]:
    if len(pairs) != m:
        return None
    perm = [-1] * m
    for a, b in pairs:
        if not (1 <= a <= m and 1 <= b <= m) or perm[a - 1] != -1:
            return None
        perm[a - 1] = b - 1
    if sorted(perm) != list(range(m)):
        return None
    return tuple(perm)


@dataclass(frozen=True)
class Violation:
    condition: str
    edge: Optional[Edge]
    detail: str

    def __str__(self) -> str:
        where = f" on edge {self.edge}" if self.edge is not None else ""
        return f"{self.condition}{where}: {self.detail}"


def validate_cover(c: Cover) -> list[Violation]:
    """Check the four cover conditions; an empty list means the cover is valid.

    Condition 1 fails when a pair names an element outside its list, 3 when a
    match sits on a non-edge, 4 when a match repeats a coordinate. Condition 2
    holds by construction since the lists are implicit cliques.
    """
    out = []
    for v, size in enumerate(c.sizes):
        if size < 0:
            out.append(Violation("condition 1", None, f"negative list size at vertex {v}"))
    for (u, v), pairs in sorted(c.matches.items()):
        if not (0 <= u < c.base.n and 0 <= v < c.base.n) or u == v:
            out.append(Violation("condition 1", (u, v), "endpoint is not a vertex pair of the base graph"))
            continue
        if pairs and not c.base.has_edge(u, v):
            out.append(Violation("condition 3", (u, v), "cross edges between lists of non-adjacent vertices"))
        for a, b in sorted(pairs):
            if not 1 <= a <= c.sizes[u]:
                out.append(Violation("condition 1", (u, v), f"index {a} outside L({u})"))
            if not 1 <= b <= c.sizes[v]:
                out.append(Violation("condition 1", (u, v), f"index {b} outside L({v})"))
        firsts = [a for a, _ in pairs]
        seconds = [b for _, b in pairs]
        for side, coords in ((u, firsts), (v, seconds)):
            dups = sorted({x for x in coords if coords.count(x) > 1})
            if dups:
                out.append(
                    Violation("not a matching", (u, v), f"element(s) {dups} of L({side}) matched more than once")
                )
    return out


# -- colorings -------------------------------------------------------------


@dataclass
class SearchStats:
    nodes: int = 0
    dead_ends: int = 0


def _later_tables(c: Cover) -> list[list[tuple[int, list[int]]]]:
    """``later[u]`` lists ``(v, table)`` for neighbours v > u; ``table[a]`` masks the L(v) elements blocked by a."""
    later: list[list[tuple[int, list[int]]]] = [[] for _ in range(c.base.n)]
    for (u, v), pairs in sorted(c.matches.items()):
        table = [0] * (c.sizes[u] + 1)
        for a, b in pairs:
            table[a] |= 1 << b
        later[u].append((v, table))
    return later


def perm_tables(n: int, edges: Sequence[Edge], perms: Sequence[Sequence[int]]) -> list[list[tuple[int, list[int]]]]:
    """Forward tables for a full cover given 0-based permutations on edges ``(u, v)``, u < v."""
    later: list[list[tuple[int, list[int]]]] = [[] for _ in range(n)]
    for (u, v), p in zip(edges, perms):
        later[u].append((v, [0] + [1 << (b + 1) for b in p]))
    return later


def search_transversal(
    sizes: Sequence[int], later: Sequence[Sequence[tuple[int, list[int]]]], stats: SearchStats
) -> Optional[tuple[int, ...]]:
    """Backtracking over vertices in label order with forward checking.

    Elements are tried in increasing order, so the first transversal found is
    the lexicographically smallest one.
    """
    n = len(sizes)
    avail = [((1 << (s + 1)) - 2) if s > 0 else 0 for s in sizes]  # bits 1..size
    choice = [0] * n

    def descend(v: int) -> bool:
        if v == n:
            return True
        for a in _bits(avail[v]):
            stats.nodes += 1
            saved = []
            ok = True
            for w, t in later[v]:
                blocked = t[a] & avail[w]
                if blocked:
                    saved.append((w, avail[w]))
                    avail[w] &= ~blocked
                    if not avail[w]:
                        ok = False
                        break
            if ok:
                choice[v] = a
                if descend(v + 1):
                    return True
            else:
                stats.dead_ends += 1
            for w, old in reversed(saved):
                avail[w] = old
        return False

    return tuple(choice) if descend(0) else None


def find_coloring(c: Cover, stats: SearchStats | None = None) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest L-coloring as a tuple of 1-based list indices.

    Backtracks over vertices 0..n-1 with forward checking; ``None`` means the
    search was exhaustive and no independent transversal exists.
    """
    problems = validate_cover(c)
    if problems:
        raise ValueError(f"invalid cover: {problems[0]}")
    return search_transversal(c.sizes, _later_tables(c), stats if stats is not None else SearchStats())


def is_coloring(c: Cover, choice: Sequence[int]) -> bool:
    if len(choice) != c.base.n:
        return False
    if any(not 1 <= choice[v] <= c.sizes[v] for v in range(c.base.n)):
        return False
    return all((choice[u], choice[v]) not in c.match(u, v) for u, v in c.base.edges())


# -- normalization and enumeration -----------------------------------------


def bfs_forest(g: Graph) -> list[Edge]:
    """Tree edges of a BFS forest grown from the smallest unvisited vertex, as ``(u, v)`` with u < v."""
    seen = [False] * g.n
    tree = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    tree.append((min(u, w), max(u, w)))
                    queue.append(w)
    return sorted(tree)


def _bfs_parents(g: Graph) -> list[tuple[int, int]]:
    """``(parent, child)`` tree edges in BFS discovery order."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    out.append((u, w))
                    queue.append(w)
    return out


@dataclass(frozen=True)
class NormalizedCover:
    """A full cover whose spanning-forest edges carry the identity."""

    cover: Cover
    forest: tuple[Edge, ...]

    @property
    def non_forest_edges(self) -> list[Edge]:
        fs = set(self.forest)
        return [e for e in self.cover.base.edges() if e not in fs]

    def ranks(self) -> tuple[int, ...]:
        """Lexicographic permutation ranks on the non-forest edges."""
        return tuple(perm_rank(self.cover.permutation(u, v)) for u, v in self.non_forest_edges)


def normalize(c: Cover) -> NormalizedCover:
    """Relabel each list along the BFS forest so that forest edges become the identity.

    Relabelling is an isomorphism of H, so colorability is unchanged.
    """
    if not c.is_full():
        raise ValueError("normalize needs a full cover (every match a bijection)")
    m = c.m
    g = c.base
    # relabel[v][a] = new 0-based index of old element a of L(v)
    relabel = [list(range(m)) for _ in range(g.n)]
    for parent, child in _bfs_parents(g):
        perm = c.permutation(parent, child)
        sigma_p = relabel[parent]
        new = [0] * m
        for a in range(m):
            new[perm[a]] = sigma_p[a]
        relabel[child] = new
    perms = {}
    for u, v in g.edges():
        perm = c.permutation(u, v)
        out = [0] * m
        for a in range(m):
            out[relabel[u][a]] = relabel[v][perm[a]]
        perms[(u, v)] = tuple(out)
    return NormalizedCover(Cover.from_permutations(g, m, perms), tuple(bfs_forest(g)))


def perm_rank(perm: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of 0..m-1."""
    m = len(perm)
    rank = 0
    rest = list(range(m))
    for i, x in enumerate(perm):
        j = rest.index(x)
        rank += j * factorial(m - 1 - i)
        rest.pop(j)
    return rank


def perm_unrank(rank: int, m: int) -> tuple[int, ...]:
    if not 0 <= rank < factorial(m):
        raise ValueError(f"rank {rank} out of range for m={m}")
    rest = list(range(m))
    out = []
    for i in range(m, 0, -1):
        j, rank = divmod(rank, factorial(i - 1))
        out.append(rest.pop(j))
    return tuple(out)


def cover_from_ranks(g: Graph, m: int, ranks: Sequence[int]) -> NormalizedCover:
    """Normalized cover with the given permutation ranks on the non-forest edges (in edge order)."""
    forest = bfs_forest(g)
    fs = set(forest)
    extra = [e for e in g.edges() if e not in fs]
    if len(ranks) != len(extra):
        raise ValueError(f"expected {len(extra)} ranks, got {len(ranks)}")
    perms = {e: perm_unrank(r, m) for e, r in zip(extra, ranks)}
    return NormalizedCover(Cover.from_permutations(g, m, perms), tuple(forest))


def enumerate_covers(
    g: Graph, m: int, *, max_rank: int = 8, prefix: Sequence[int] = ()
) -> Iterator[NormalizedCover]:
    """All (m!)^r normalized m-fold covers, r the cycle rank, in lexicographic rank order.

    ``prefix`` pins the ranks of the first non-forest edges; disjoint prefixes
    partition the stream for independent workers.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    r = g.cycle_rank
    if r > max_rank:
        raise ResourceLimitExceeded(f"cycle rank {r} exceeds cap {max_rank}", required_rank=r)
    if len(prefix) > r:
        raise ValueError("prefix longer than the cycle rank")
    forest = tuple(bfs_forest(g))
    fs = set(forest)
    extra = [e for e in g.edges() if e not in fs]
    all_perms = list(permutations(range(m)))
    for p in prefix:
        if not 0 <= p < len(all_perms):
            raise ValueError(f"prefix rank {p} out of range")
    choices = [[all_perms[p]] for p in prefix] + [all_perms] * (r - len(prefix))
    for combo in product(*choices):
        yield NormalizedCover(Cover.from_permutations(g, m, dict(zip(extra, combo))), forest)


def count_covers(g: Graph, m: int) -> int:
    return factorial(m) ** g.cycle_rank


# -- the explicit bad cover of C4 ------------------------------------------


def h0_cover() -> Cover:
    """2-fold cover of the 4-cycle x-y-u-v-x (vertices 0, 1, 2, 3) with no coloring.

    x-y, y-u and v-x carry the identity; u-v is crossed (u1-v2, u2-v1).
    """
    from .graph import make_cycle

    ident = [(1, 1), (2, 2)]
    return Cover.build(
        make_cycle(4),
        2,
        {(0, 1): ident, (1, 2): ident, (2, 3): [(1, 2), (2, 1)], (0, 3): ident},
    )


# -- text format -----------------------------------------------------------


def cover_to_text(c: Cover, comments: Sequence[str] = ()) -> str:
    """Line format: ``cover n=<n> m=<m>`` then ``u v : a1 .. am`` per edge.

    ``ai`` is the partner of (u, i) in L(v) or ``-``. Base edges are always
    written; matches on non-edges are written too so that they can be reported.
    """
    m = c.m
    lines = [f"cover n={c.base.n} m={m}"]
    keys = sorted(set(c.base.edges()) | {e for e, p in c.matches.items() if p})
    for u, v in keys:
        partner = ["-"] * m
        for a, b in sorted(c.matches.get((u, v), frozenset())):
            if partner[a - 1] != "-":
                raise ValueError(f"match on ({u}, {v}) repeats element {a} of L({u}); not representable")
            partner[a - 1] = str(b)
        lines.append(f"{u} {v} : " + " ".join(partner))
    lines.extend(f"# {text}" for text in comments)
    return "\n".join(lines) + "\n"


def cover_from_text(text: str, base: Graph) -> Cover:
    header = None
    matches: dict[Edge, list[Pair]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("result "):  # certificate files end with a result record
            continue
        if header is None:
            parts = line.split()
            try:
                if len(parts) != 3 or parts[0] != "cover":
                    raise ValueError
                kv = dict(p.split("=", 1) for p in parts[1:])
                n, m = int(kv["n"]), int(kv["m"])
            except (ValueError, KeyError):
                raise ParseError(f"expected header 'cover n=<n> m=<m>', got {line!r}", line=lineno) from None
            if n != base.n:
                raise ParseError(f"cover is for n={n} but the graph has {base.n} vertices", line=lineno)
            if m < 1 and n > 0:
                raise ParseError("m must be at least 1", line=lineno)
            header = (n, m)
            continue
        n, m = header
        if ":" not in line:
            raise ParseError(f"expected 'u v : a1 ... a{m}', got {line!r}", line=lineno)
        left, right = line.split(":", 1)
        ends = left.split()
        if len(ends) != 2 or not all(t.isdigit() for t in ends):
            raise ParseError(f"expected two vertex labels before ':', got {left.strip()!r}", line=lineno)
        u, v = int(ends[0]), int(ends[1])
        if not (u < n and v < n) or u == v:
            raise ParseError(f"bad vertex pair ({u}, {v}) for n={n}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in matches:
            raise ParseError(f"edge {key} listed twice", line=lineno)
        tokens = right.split()
        if len(tokens) != m:
            raise ParseError(f"expected {m} partner entries, got {len(tokens)}", line=lineno)
        pairs = []
        for i, tok in enumerate(tokens, start=1):
            if tok == "-":
                continue
            if not tok.isdigit() or not 1 <= int(tok) <= m:
                raise ParseError(f"partner {tok!r} is not '-' or an index in 1..{m}", line=lineno, column=i)
            b = int(tok)
            pairs.append((i, b) if u < v else (b, i))
        matches[key] = pairs
    if header is None:
        raise ParseError("missing header 'cover n=<n> m=<m>'")
    return Cover.build(base, header[1], matches)
