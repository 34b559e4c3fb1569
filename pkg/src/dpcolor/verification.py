"""Built-in suite reproducing the desk-checkable DP-coloring facts.

Each item is a function returning ``(passed, detail)``; ``run_items`` times
them and compares against the item's runtime limit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .bounds import (
    Theorem1Instance,
    bound_comparison,
    join_coefficient,
    minimal_passing_size_a,
    theorem1_check,
    zdp_exact_small,
    zdp_n_upper_bound,
    zdp_upper_bound,
)
from .cover import enumerate_covers, find_coloring, h0_cover, normalize, validate_cover
from .graph import (
    JoinC5Complete,
    TwoVertexComplete,
    all_labeled_graphs,
    chromatic_number,
    classify_chi_n_minus_2,
    coloring_number,
    induced_subgraph,
    is_chordal,
    join,
    make_complete,
    make_cycle,
    make_path,
    nonisomorphic_graphs,
)
from .solver import all_covers_colorable, dp_chromatic, falsify


@dataclass(frozen=True)
class Item:
    id: str
    title: str
    run: Callable[[], tuple[bool, str]]
    time_limit: float  # seconds


@dataclass(frozen=True)
class ItemResult:
    id: str
    passed: bool
    detail: str
    elapsed: float
    time_limit: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.id} ({self.elapsed:.3f}s / {self.time_limit:g}s): {self.detail}"


C4 = make_cycle(4)
WHEEL = join(C4, make_complete(1))


def c4_dp_chromatic() -> tuple[bool, str]:
    covers2 = list(enumerate_covers(C4, 2))
    bad2 = [c for c in covers2 if find_coloring(c.cover) is None]
    covers3 = list(enumerate_covers(C4, 3))
    bad3 = [c for c in covers3 if find_coloring(c.cover) is None]
    h0n = normalize(h0_cover())
    result = dp_chromatic(C4)
    ok = (
        len(covers2) == 2
        and len(bad2) == 1
        and bad2[0] == h0n
        and len(covers3) == 6
        and not bad3
        and result.exact
        and result.value == 3
    )
    return ok, f"m=2: {len(bad2)}/{len(covers2)} bad (= normalized H0: {bool(bad2) and bad2[0] == h0n}); m=3: {len(bad3)}/{len(covers3)} bad; chi_DP={result.value}"


def h0_uncolorable() -> tuple[bool, str]:
    c = h0_cover()
    problems = validate_cover(c)
    witness = find_coloring(c)
    return not problems and witness is None, f"violations={len(problems)} witness={witness}"


def wheel_c4_k1() -> tuple[bool, str]:
    covers = list(enumerate_covers(WHEEL, 3))
    bad = sum(find_coloring(c.cover) is None for c in covers)
    sweep = all_covers_colorable(WHEEL, 3)
    chi, col = chromatic_number(WHEEL), coloring_number(WHEEL)
    ok = len(covers) == 1296 and bad == 0 and sweep.colorable is True and chi == 3 and col == 4
    return ok, f"{len(covers)} normalized 3-fold covers, {bad} bad; chi={chi} col={col}"


def zdp_c4() -> tuple[bool, str]:
    z = zdp_exact_small(C4)
    ok = z.status == "exact" and z.value == 1 and z.probes == {0: False, 1: True}
    s0 = dp_chromatic(C4).value
    s1 = dp_chromatic(WHEEL).value
    ok = ok and s0 == 3 and s1 == 3
    return ok, f"Z_DP(C4)={z.value}; s=0: chi_DP={s0} vs chi=2; s=1: chi_DP={s1} vs chi=3"


def chordal_sweep() -> tuple[bool, str]:
    checked = 0
    failures = []
    for n in range(1, 7):
        for g in nonisomorphic_graphs(n):
            if not is_chordal(g) or g.cycle_rank > 6:
                continue
            chi = chromatic_number(g)
            if chi > 3:
                continue
            checked += 1
            if all_covers_colorable(g, chi).colorable is not True:
                failures.append(g)
    return not failures and checked > 0, f"{checked} chordal graphs, {len(failures)} with chi_DP != chi"


def chi_n_minus_2_classifier() -> tuple[bool, str]:
    counts = {"two-vertex": 0, "c5-join": 0}
    failures = 0
    for n in (4, 5, 6):
        target_c5 = join(make_cycle(5), make_complete(n - 5)) if n >= 5 else None
        for g in all_labeled_graphs(n):
            if chromatic_number(g) != n - 2:
                continue
            cls = classify_chi_n_minus_2(g)
            if isinstance(cls, TwoVertexComplete):
                rest = induced_subgraph(g, [w for w in range(n) if w not in (cls.u, cls.v)])
                ok = rest.num_edges == (n - 2) * (n - 3) // 2
                counts["two-vertex"] += 1
            elif isinstance(cls, JoinC5Complete):
                ok = target_c5 is not None and cls.s == n - 5 and _brute_isomorphic(g, target_c5)
                counts["c5-join"] += 1
            else:
                ok = False
            failures += not ok
    return failures == 0, f"{counts['two-vertex']} two-vertex-complete, {counts['c5-join']} C5-join, {failures} failures"


def _brute_isomorphic(g, h) -> bool:
    from itertools import permutations

    edges = {frozenset(e) for e in h.edges()}
    return g.num_edges == h.num_edges and any(
        all(frozenset((p[u], p[v])) in edges for u, v in g.edges()) for p in permutations(range(g.n))
    )


def bound_consistency() -> tuple[bool, str]:
    exact = bracketed = 0
    failures = []
    for n in range(2, 6):
        zn = zdp_n_upper_bound(n)
        for g in nonisomorphic_graphs(n):
            if g.cycle_rank > 6:
                continue
            ub = zdp_upper_bound(g).bound
            z = zdp_exact_small(g)
            if z.status == "exact":
                exact += 1
                ok = z.value <= ub <= zn
            else:
                bracketed += 1
                ok = z.lo <= ub <= zn
            if not ok:
                failures.append(g)
    return not failures, f"{exact} exact, {bracketed} bracketed, {len(failures)} violations"


def theorem1_boundary() -> tuple[bool, str]:
    pass10 = theorem1_check(Theorem1Instance.uniform(C4, 2, 10, 12))
    fail9 = theorem1_check(Theorem1Instance.uniform(C4, 2, 9, 11))
    ok = (
        pass10.passed
        and not fail9.passed
        and fail9.lists_ok
        and not fail9.inequality_ok
        and pass10.required == Fraction(48, 5)
        and fail9.required == Fraction(48, 5)
    )
    return ok, f"|A|=10: {pass10}; |A|=9: {fail9}"


def theorem1_falsify(samples: int = 10_000, seed: int = 2024) -> tuple[bool, str]:
    notes = []
    ok = True
    for name, g in (("C4", C4), ("P4", make_path(4)), ("K3", make_complete(3))):
        chi = chromatic_number(g)
        size_a = minimal_passing_size_a(g)
        fold = size_a + chi
        inst = Theorem1Instance.uniform(g, chi, size_a, fold)
        passed = theorem1_check(inst).passed
        cert = falsify(join(g, make_complete(size_a)), fold, samples, seed)
        ok = ok and passed and cert is None
        notes.append(f"{name}: |A|={size_a} fold={fold} {'no bad cover' if cert is None else 'BAD COVER'}")
    return ok, "; ".join(notes) + f" ({samples} samples each)"


def coefficient_facts() -> tuple[bool, str]:
    coefs = [join_coefficient(k) for k in range(2, 1001)]
    decreasing = all(a > b for a, b in zip(coefs, coefs[1:]))
    ok = coefs[0] == Fraction(12, 5) and decreasing and all(c > 2 for c in coefs)
    compared = 0
    for n in range(1, 7):
        for g in nonisomorphic_graphs(n):
            cmp = bound_comparison(g)
            if cmp.in_range:
                compared += 1
                ok = ok and cmp.this_paper <= cmp.ceil_2_4m <= cmp.prior_3m
    return ok, f"coefficient(2)={coefs[0]}, strictly decreasing to {coefs[-1]}; {compared} graphs compared"


ITEMS = [
    Item("c4-chi-dp", "chi_DP(C4) = 3 by full enumeration", c4_dp_chromatic, 1.0),
    Item("h0-cover", "H0 is a valid 2-fold cover of C4 with no coloring", h0_uncolorable, 0.001),
    Item("c4-join-k1", "chi_DP(C4 v K1) = chi = 3 < col = 4", wheel_c4_k1, 10.0),
    Item("zdp-c4", "Z_DP(C4) = 1", zdp_c4, 10.0),
    Item("chordal-sweep", "chordal graphs have chi_DP = chi", chordal_sweep, 600.0),
    Item("chi-n-minus-2", "graphs with chi = n-2 are C5 v K_{n-5} or K_{n-2} plus two vertices", chi_n_minus_2_classifier, 300.0),
    Item("zdp-bounds", "Z_DP(G) <= piecewise bound <= n^2 - (n+3)/2", bound_consistency, 1800.0),
    Item("theorem1-boundary", "list-size condition boundary |A| = 10 vs 9 for C4", theorem1_boundary, 1.0),
    Item("theorem1-falsify", "no bad cover found for passing instances", theorem1_falsify, 600.0),
    Item("coefficients", "4(k+1)/(2k+1) facts and bound ordering", coefficient_facts, 60.0),
]


def run_items(ids: Optional[Iterable[str]] = None) -> list[ItemResult]:
    wanted = None if ids is None else set(ids)
    if wanted is not None:
        unknown = wanted - {it.id for it in ITEMS}
        if unknown:
            raise KeyError(f"unknown item(s): {sorted(unknown)}")
    out = []
    for it in ITEMS:
        if wanted is not None and it.id not in wanted:
            continue
        start = time.perf_counter()
        try:
            passed, detail = it.run()
        except Exception as exc:  # an item crashing is a failure, not an abort
            passed, detail = False, f"error: {exc!r}"
        elapsed = time.perf_counter() - start
        if elapsed > it.time_limit:
            passed = False
            detail += " [over time limit]"
        out.append(ItemResult(it.id, passed, detail, elapsed, it.time_limit))
    return out
