"""Upper bounds on Z_DP and the list-size condition for covers of G joined with a clique.

Z_DP(G) is the least s >= 0 with chi_DP(G v K_s) = chi(G v K_s). All bound
arithmetic is exact (``fractions.Fraction``); nothing here uses floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Mapping, Optional

from .graph import Graph, chromatic_number, coloring_number, is_isomorphic, join, make_complete, make_cycle
from .solver import Caps, all_covers_colorable


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def join_coefficient(k: int) -> Fraction:
    """4(k+1)/(2k+1): Z_DP(G) <= ceil(coefficient * |E(G)|) when 2 <= chi(G) <= n-3."""
    return Fraction(4 * (k + 1), 2 * k + 1)


def deficiency_coefficient(k: int) -> Fraction:
    """2(k+1)/(2k+1), the factor applied to the total deficiency in the list-size condition."""
    return Fraction(2 * (k + 1), 2 * k + 1)


# -- the list-size condition -----------------------------------------------


@dataclass(frozen=True)
class Theorem1Instance:
    """G joined with a clique A of ``size_a`` vertices, plus list sizes.

    ``list_sizes`` is indexed like the vertices of ``join(G, K_size_a)``:
    0..n-1 are the vertices of G and n..n+size_a-1 those of A.
    """

    graph: Graph
    k: int
    size_a: int
    list_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size_a < 0:
            raise ValueError("size_a must be non-negative")
        if len(self.list_sizes) != self.graph.n + self.size_a:
            raise ValueError(f"need {self.graph.n + self.size_a} list sizes, got {len(self.list_sizes)}")
        if any(s < 0 for s in self.list_sizes):
            raise ValueError("list sizes must be non-negative")

    @classmethod
    def uniform(cls, graph: Graph, k: int, size_a: int, fold: int) -> "Theorem1Instance":
        return cls(graph, k, size_a, (fold,) * (graph.n + size_a))

    @classmethod
    def from_mapping(cls, graph: Graph, k: int, size_a: int, sizes: Mapping[int, int]) -> "Theorem1Instance":
        return cls(graph, k, size_a, tuple(sizes[v] for v in range(graph.n + size_a)))


@dataclass(frozen=True)
class SigmaTable:
    entries: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.entries)


def _deficiency(degree: int, list_size: int, size_a: int, k: int) -> int:
    return max(degree - list_size + size_a + k, 0)


def sigma_table(inst: Theorem1Instance) -> SigmaTable:
    """Per-vertex deficiency max(d_G(v) - |L(v)| + |A| + k, 0) over the vertices of G."""
    chi = chromatic_number(inst.graph)
    if inst.k < max(chi, 1):
        raise ValueError(f"k={inst.k} is below max(chi(G), 1) = {max(chi, 1)}")
    g = inst.graph
    return SigmaTable(
        tuple(_deficiency(g.degree(v), inst.list_sizes[v], inst.size_a, inst.k) for v in range(g.n))
    )


@dataclass(frozen=True)
class Theorem1Check:
    passed: bool
    lists_ok: bool
    short_lists: tuple[int, ...]  # A-vertices with |L(a)| < |A| + chi(G)
    sigma: SigmaTable
    coefficient: Fraction
    required: Fraction  # coefficient * total deficiency
    inequality_ok: bool

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "fail"
        return (
            f"theorem1 {verdict} lists={'ok' if self.lists_ok else 'short'} "
            f"sigma={self.sigma.total} required={_fmt(self.required)} inequality={'ok' if self.inequality_ok else 'fails'}"
        )


def theorem1_check(inst: Theorem1Instance) -> Theorem1Check:
    """Check the hypotheses under which G v A is colorable from every cover with these list sizes.

    (a) every A-vertex list has at least |A| + chi(G) elements, and
    (b) |A| >= 2(k+1)/(2k+1) * sum of deficiencies.
    """
    sigma = sigma_table(inst)
    chi = chromatic_number(inst.graph)
    n = inst.graph.n
    short = tuple(
        a for a in range(n, n + inst.size_a) if inst.list_sizes[a] < inst.size_a + chi
    )
    coef = deficiency_coefficient(inst.k)
    required = coef * sigma.total
    ineq = inst.size_a >= required
    return Theorem1Check(not short and ineq, not short, short, sigma, coef, required, ineq)


def minimal_passing_size_a(g: Graph, k: Optional[int] = None, limit: int = 10_000) -> int:
    """Smallest |A| passing the check with every list of size |A| + chi(G)."""
    chi = chromatic_number(g)
    k = max(chi, 1) if k is None else k
    for size_a in range(limit + 1):
        if theorem1_check(Theorem1Instance.uniform(g, k, size_a, size_a + chi)).passed:
            return size_a
    raise ValueError(f"no passing |A| up to {limit}")


# -- bounds on Z_DP ---------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    k: int
    case: str  # "formula", "c4" or "zero"
    bound: int
    coefficient: Fraction

    def record(self) -> str:
        return f"zdp-bound case={self.case} k={self.k} m={self.m} bound={self.bound}"


def zdp_upper_bound(g: Graph) -> BoundReport:
    """Piecewise bound: 1 for C4, ceil(4(k+1)m/(2k+1)) when 2 <= k <= n-3, else 0."""
    n, m = g.n, g.num_edges
    k = chromatic_number(g)
    coef = join_coefficient(k)
    if n == 4 and is_isomorphic(g, make_cycle(4)):
        return BoundReport(n, m, k, "c4", 1, coef)
    if 2 <= k <= n - 3:
        return BoundReport(n, m, k, "formula", ceil(coef * m), coef)
    return BoundReport(n, m, k, "zero", 0, coef)


def zdp_n_upper_bound(n: int) -> Fraction:
    """n^2 - (n+3)/2, an upper bound on Z_DP(G) for every graph of order n >= 2."""
    if n < 2:
        raise ValueError("the bound is stated for n >= 2")
    return Fraction(n * n) - Fraction(n + 3, 2)


@dataclass(frozen=True)
class BoundComparison:
    this_paper: int
    ceil_2_4m: int
    prior_3m: int
    ratio: Optional[Fraction]
    in_range: bool  # 2 <= k <= n-3


def bound_comparison(g: Graph) -> BoundComparison:
    """Compare ceil(4(k+1)m/(2k+1)) with ceil(2.4 m) and the older 3m bound."""
    n, m = g.n, g.num_edges
    k = chromatic_number(g)
    ours = ceil(join_coefficient(k) * m) if k >= 0 else 0
    mid = ceil(Fraction(12, 5) * m)
    in_range = 2 <= k <= n - 3
    if in_range and not ours <= mid <= 3 * m:
        raise ArithmeticError(f"bound ordering violated: {ours} <= {mid} <= {3 * m}")
    return BoundComparison(ours, mid, 3 * m, Fraction(ours, 3 * m) if m else None, in_range)


# -- exact Z_DP for small graphs --------------------------------------------


@dataclass
class ZdpResult:
    value: Optional[int]
    status: str  # "exact" or "bracketed"
    lo: int
    hi: int
    probes: dict[int, Optional[bool]] = field(default_factory=dict)

    def record(self) -> str:
        value = self.value if self.value is not None else "none"
        return f"zdp value={value} status={self.status} lo={self.lo} hi={self.hi}"


def zdp_exact_small(g: Graph, caps: Caps = Caps()) -> ZdpResult:
    """Least s with chi_DP(g v K_s) = chi(g) + s, probing s = 0, 1, 2, ...

    Probing stops at the piecewise upper bound. For each s it is enough to
    ask whether every (chi+s)-fold cover of the join is colorable; when the
    join's coloring number already equals chi+s no enumeration is needed.
    """
    chi = chromatic_number(g)
    upper = zdp_upper_bound(g).bound
    probes: dict[int, Optional[bool]] = {}
    for s in range(upper + 1):
        h = join(g, make_complete(s))
        target = chi + s
        if coloring_number(h) <= target:
            probes[s] = True
        else:
            probes[s] = all_covers_colorable(h, target, caps).colorable
        if probes[s] is None:
            return ZdpResult(None, "bracketed", s, upper, probes)
        if probes[s]:
            return ZdpResult(s, "exact", s, s, probes)
    raise ArithmeticError(f"no s <= {upper} with chi_DP = chi; the upper bound would be violated")
