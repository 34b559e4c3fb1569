"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency.

Besides constructors (cycles, complete graphs, joins, induced subgraphs) this
module holds the exact solvers used everywhere else: chromatic number,
coloring number, chordality via maximum cardinality search, isomorphism and
the structural classifier for graphs with chromatic number n - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("n must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def num_components(self) -> int:
        seen = 0
        count = 0
        for v in range(self.n):
            if seen >> v & 1:
                continue
            count += 1
            frontier = 1 << v
            while frontier:
                seen |= frontier
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~seen
        return count

    @property
    def cycle_rank(self) -> int:
        """|E| - |V| + number of components."""
        return self.num_edges - self.n + self.num_components()

    def is_clique(self, mask: int) -> bool:
        for v in _bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors -----------------------------------------------------------


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, combinations(range(n), 2))


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the parts; ``g2`` is shifted by ``g1.n``."""
    n1 = g1.n
    low = (1 << n1) - 1
    high = ((1 << g2.n) - 1) << n1
    rows = [row | high for row in g1.adj] + [(row << n1) | low for row in g2.adj]
    return Graph(n1 + g2.n, tuple(rows))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``, relabelled in ascending order of ``keep``."""
    order = sorted(set(keep))
    for v in order:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(order), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


# -- cliques and colorings --------------------------------------------------


def max_clique(g: Graph) -> list[int]:
    """A maximum clique (Bron-Kerbosch with pivoting on bitsets)."""
    best = 0

    def expand(r: int, p: int, x: int) -> None:
        nonlocal best
        if not p and not x:
            if r.bit_count() > best.bit_count():
                best = r
            return
        if r.bit_count() + p.bit_count() <= best.bit_count():
            return
        pivot = max(_bits(p | x), key=lambda u: (p & g.adj[u]).bit_count())
        for v in _bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return list(_bits(best))


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges())


def _dsatur_greedy(g: Graph) -> list[int]:
    colors = [0] * g.n
    sat = [0] * g.n
    uncolored = set(range(g.n))
    while uncolored:
        v = max(uncolored, key=lambda u: (sat[u].bit_count(), g.degree(u), -u))
        c = 1
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in _bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def find_k_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper coloring with colors 1..k, or ``None`` if none exists.

    Exhaustive backtracking; the branching vertex is the uncoloured one of
    highest saturation (DSATUR order) and new colors are opened one at a time,
    which removes color-permutation symmetry.
    """
    if g.n == 0:
        return []
    if k <= 0:
        return None
    colors = [0] * g.n
    # forbid[v] bit c set <=> some coloured neighbour of v has colour c
    forbid_count = [[0] * (k + 1) for _ in range(g.n)]
    sat = [0] * g.n
    uncolored = set(range(g.n))

    def assign(v: int, c: int) -> None:
        colors[v] = c
        uncolored.discard(v)
        for u in _bits(g.adj[v]):
            forbid_count[u][c] += 1
            if forbid_count[u][c] == 1:
                sat[u] |= 1 << c

    def unassign(v: int, c: int) -> None:
        colors[v] = 0
        uncolored.add(v)
        for u in _bits(g.adj[v]):
            forbid_count[u][c] -= 1
            if forbid_count[u][c] == 0:
                sat[u] &= ~(1 << c)

    def search(used: int) -> bool:
        if not uncolored:
            return True
        v = max(uncolored, key=lambda u: (sat[u].bit_count(), g.degree(u), -u))
        if sat[v].bit_count() >= k:
            return False
        for c in range(1, min(used + 1, k) + 1):
            if sat[v] >> c & 1:
                continue
            assign(v, c)
            if search(max(used, c)):
                return True
            unassign(v, c)
        return False

    return list(colors) if search(0) else None


def optimal_coloring(g: Graph) -> tuple[int, list[int]]:
    """Chromatic number and a witness coloring using colors 1..chi."""
    if g.n == 0:
        return 0, []
    lower = len(max_clique(g))
    best = _dsatur_greedy(g)
    upper = max(best)
    for k in range(lower, upper):
        coloring = find_k_coloring(g, k)
        if coloring is not None:
            return k, coloring
    return upper, best


def chromatic_number(g: Graph) -> int:
    return optimal_coloring(g)[0]


def degeneracy_ordering(g: Graph) -> tuple[int, list[int]]:
    """Coloring number and an ordering witnessing it.

    In the returned ordering every vertex has at most ``col - 1`` neighbours
    placed before it. Vertices are peeled by minimum remaining degree (ties to
    the smallest label) and the peel order is reversed.
    """
    if g.n == 0:
        return 0, []
    remaining = (1 << g.n) - 1
    peeled = []
    worst = 0
    while remaining:
        v = min(_bits(remaining), key=lambda u: ((g.adj[u] & remaining).bit_count(), u))
        worst = max(worst, (g.adj[v] & remaining).bit_count())
        peeled.append(v)
        remaining &= ~(1 << v)
    return worst + 1, peeled[::-1]


def coloring_number(g: Graph) -> int:
    return degeneracy_ordering(g)[0]


# -- chordality ------------------------------------------------------------


def is_simplicial(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.is_clique(g.adj[v])


def is_perfect_elimination_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    """Each vertex is simplicial among itself and the vertices before it."""
    if sorted(ordering) != list(range(g.n)):
        return False
    before = 0
    for v in ordering:
        if not g.is_clique(g.adj[v] & before):
            return False
        before |= 1 << v
    return True


def chordal_peo(g: Graph) -> Optional[list[int]]:
    """A perfect elimination ordering if ``g`` is chordal, else ``None``.

    Maximum cardinality search visit order: in a chordal graph the earlier
    visited neighbours of each vertex form a clique.
    """
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in _bits(g.adj[v] & ~visited):
            weight[u] += 1
    return order if is_perfect_elimination_ordering(g, order) else None


def is_chordal(g: Graph) -> bool:
    return chordal_peo(g) is not None


# -- isomorphism -----------------------------------------------------------


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """A bijection ``phi`` with ``uv in E(g1) <=> phi[u]phi[v] in E(g2)``."""
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return None
    n = g1.n
    # map high-degree, well-connected vertices first
    order = sorted(range(n), key=lambda v: (-d1[v], v))
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or d2[w] != d1[v]:
                continue
            if all(g1.has_edge(v, order[j]) == g2.has_edge(w, phi[order[j]]) for j in range(i)):
                phi[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
                phi[v] = -1
        return False

    return phi if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)`` equal for two graphs iff they are isomorphic.

    Minimises the upper-triangle adjacency code over all relabellings that list
    vertices by non-increasing degree; fine for the n <= 8 graphs it serves.
    """
    n = g.n
    deg = g.degrees()
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    blocks = [classes[d] for d in sorted(classes, reverse=True)]
    pairs = [(i, j) for j in range(n) for i in range(j)]
    best = None

    def orders(k: int) -> Iterator[list[int]]:
        if k == len(blocks):
            yield []
            return
        for head in permutations(blocks[k]):
            for tail in orders(k + 1):
                yield list(head) + tail

    for order in orders(0):
        code = 0
        for i, j in pairs:
            code = code << 1 | g.has_edge(order[i], order[j])
        if best is None or code < best:
            best = code
    return n, best or 0


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs of order ``n``.

    Built by adding a vertex with every possible neighbourhood to each
    representative of order ``n - 1`` and deduplicating by canonical form.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    reps = [make_empty(0)]
    for size in range(n):
        seen: dict[tuple[int, int], Graph] = {}
        for g in reps:
            for nbhd in range(1 << size):
                rows = [row | ((nbhd >> v & 1) << size) for v, row in enumerate(g.adj)]
                h = Graph(size + 1, tuple(rows) + (nbhd,))
                seen.setdefault(canonical_form(h), h)
        reps = [seen[key] for key in sorted(seen, key=lambda k: k[1])]
    return reps


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on 0..n-1, one per subset of the C(n,2) pairs."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))


# -- graphs with chromatic number n - 2 ------------------------------------


@dataclass(frozen=True)
class JoinC5Complete:
    """The graph is isomorphic to C5 joined with K_s."""

    s: int


@dataclass(frozen=True)
class TwoVertexComplete:
    """Deleting ``u`` and ``v`` leaves a complete graph."""

    u: int
    v: int


@dataclass(frozen=True)
class NotApplicable:
    pass


ChiNMinus2Class = JoinC5Complete | TwoVertexComplete | NotApplicable


def classify_chi_n_minus_2(g: Graph) -> ChiNMinus2Class:
    if g.n < 3:
        raise ValueError("classification needs n >= 3")
    if chromatic_number(g) != g.n - 2:
        return NotApplicable()
    full = (1 << g.n) - 1
    for u, v in combinations(range(g.n), 2):
        if g.is_clique(full & ~(1 << u) & ~(1 << v)):
            return TwoVertexComplete(u, v)
    if g.n >= 5 and is_isomorphic(g, join(make_cycle(5), make_complete(g.n - 5))):
        return JoinC5Complete(g.n - 5)
    return NotApplicable()
