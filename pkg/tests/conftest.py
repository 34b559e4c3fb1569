from itertools import combinations, permutations, product

import pytest
from hypothesis import settings

from dpcolor.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- brute-force oracles shared by several test modules --------------------


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def brute_col(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = None
    for order in permutations(range(g.n)):
        worst = max(sum(g.has_edge(v, w) for w in order[:i]) for i, v in enumerate(order))
        best = worst + 1 if best is None else min(best, worst + 1)
    return best


def brute_chordal(g: Graph) -> bool:
    """No induced cycle on four or more vertices."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            degs = [sum(g.has_edge(v, w) for w in sub) for v in sub]
            if all(d == 2 for d in degs):
                # 2-regular; a single cycle iff connected
                seen, stack = {sub[0]}, [sub[0]]
                while stack:
                    v = stack.pop()
                    for w in sub:
                        if g.has_edge(v, w) and w not in seen:
                            seen.add(w)
                            stack.append(w)
                if len(seen) == size:
                    return False
    return True


def brute_transversal(cover):
    """Lexicographically first transversal avoiding every matched pair, by full enumeration."""
    g = cover.base
    edges = [(u, v, cover.match(u, v)) for u, v in g.edges()]
    for choice in product(*(range(1, s + 1) for s in cover.sizes)):
        if all((choice[u], choice[v]) not in pairs for u, v, pairs in edges):
            return choice
    return None


@pytest.fixture
def c4():
    from dpcolor.graph import make_cycle

    return make_cycle(4)
