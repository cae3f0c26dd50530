"""Executable checks for the reduction: clique brute force, equivalence
reports, row forcing, gadget conformance and a seeded graph generator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .model import ColouredGraph, intersects, vertices_of_colour
from .reduction import Grid, ReductionInstance, Variant, reduce, selection_gadget
from .relations import classify, disjoint, kind_enabled
from .solvers import (
    BRUTE_FORCE_LIMIT,
    GuardExceeded,
    Solution,
    is_feasible,
    max_pattern_bruteforce,
    max_pattern_clique,
)

MCC_MAX_COLOURS = 8
MCC_MAX_CANDIDATES = 10**6


@dataclass(frozen=True)
class EquivalenceReport:
    graph: str
    variant: Variant
    clique_exists: bool
    max_size: int
    k_prime: int
    clique: tuple[int, ...] | None
    solution: tuple[str, ...]

    @property
    def agrees(self) -> bool:
        return self.clique_exists == (self.max_size >= self.k_prime)

    def render(self) -> str:
        verdict = "AGREE" if self.agrees else "DISAGREE"
        if self.clique_exists:
            head = f"{verdict} yes-instance ({self.max_size} = k')" if self.max_size == self.k_prime \
                else f"{verdict} yes-instance ({self.max_size} vs k'={self.k_prime})"
        else:
            head = f"{verdict} no-instance ({self.max_size} < k'={self.k_prime})" \
                if self.max_size < self.k_prime \
                else f"{verdict} no-instance ({self.max_size} >= k'={self.k_prime})"
        lines = [
            head,
            f"graph: {self.graph}",
            f"variant: {self.variant.value}",
            f"clique: {' '.join(map(str, self.clique)) if self.clique else '-'}",
            f"solution: {' '.join(self.solution) if self.solution else '-'}",
        ]
        return "\n".join(lines)


def mcc_bruteforce(g: ColouredGraph) -> tuple[int, ...] | None:
    """First multicoloured k-clique in lexicographic order, or ``None``."""
    if g.k > MCC_MAX_COLOURS:
        raise GuardExceeded(f"multicoloured clique brute force limited to k <= {MCC_MAX_COLOURS}")
    classes = [vertices_of_colour(g, c) for c in range(1, g.k + 1)]
    if prod(len(c) for c in classes) > MCC_MAX_CANDIDATES:
        raise GuardExceeded(f"more than {MCC_MAX_CANDIDATES} candidate vertex tuples")
    for pick in product(*classes):
        if all(g.has_edge(u, v) for u, v in combinations(pick, 2)):
            return pick
    return None


def check_reduction_equivalence(
    g: ColouredGraph, variant: Variant, node_budget: int | None = None
) -> EquivalenceReport:
    clique = mcc_bruteforce(g)
    r = reduce(g, variant)
    sol = max_pattern_clique(r.instance, node_budget)
    if len(r.instance) <= BRUTE_FORCE_LIMIT:
        brute = max_pattern_bruteforce(r.instance)
        if brute.size != sol.size:
            raise AssertionError(
                f"clique solver ({sol.size}) and brute force ({brute.size}) disagree"
            )
    return EquivalenceReport(
        graph=g.summary(),
        variant=r.variant,
        clique_exists=clique is not None,
        max_size=sol.size,
        k_prime=r.k_prime,
        clique=clique,
        solution=tuple(sol.sorted_labels()),
    )


def row_assignment(r: ReductionInstance, labels) -> dict[str, set[int]]:
    """Rows touched by the selection, per selection gadget (``V(c)``/``E(i,j)``)."""
    rows: dict[str, set[int]] = {}
    for label in labels:
        for part in r.provenance[label].parts:
            rows.setdefault(selection_gadget(part.gadget), set()).add(part.row)
    return rows


def check_row_forcing(r: ReductionInstance, sol: Solution | set[str]) -> bool:
    labels = sol.labels if isinstance(sol, Solution) else frozenset(sol)
    if not is_feasible(r.instance, labels):
        raise ValueError("solution is not feasible for this instance")
    if len(labels) != r.k_prime:
        raise ValueError(f"solution has {len(labels)} 2-intervals, expected k'={r.k_prime}")
    return all(len(rows) == 1 for rows in row_assignment(r, labels).values())


def gadget_mismatches(grid: Grid) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Cell pairs whose realized intersection differs from the staircase rule."""

    def expected(a: tuple[int, int], b: tuple[int, int]) -> bool:
        (r1, c1), (r2, c2) = sorted([a, b], key=lambda x: (x[1], x[0]))
        if c1 == c2:
            return True
        if c2 - c1 > 1:
            return False
        if grid.kind == "ascending":
            return r2 <= r1 - 1
        return r2 >= r1 + 1

    cells = list(grid.items())
    bad = []
    for (a, ia), (b, ib) in combinations(cells, 2):
        if intersects(ia, ib) != expected(a, b):
            bad.append((a, b))
    return bad


def incomparable_disjoint_pairs(r: ReductionInstance) -> list[tuple[str, str, str]]:
    """Disjoint 2-interval pairs whose relation is not allowed by the variant."""
    out = []
    items = r.instance.two_intervals
    for a, b in combinations(items, 2):
        if disjoint(a, b):
            rel = classify(a, b)
            if not kind_enabled(rel.kind, r.instance.relations):
                out.append((a.label, b.label, rel.kind.value))
    return out


def random_coloured_graph(k: int, n: int, p: float, seed: int) -> ColouredGraph:
    """Seeded random coloured graph.

    Vertices are ``1..n`` coloured round-robin (vertex ``v`` gets colour
    ``(v - 1) % k + 1``). Bichromatic pairs ``u < v`` are visited in
    lexicographic order and each is kept iff ``rng.random() < p``, where
    ``rng = random.Random(seed)`` is the stdlib Mersenne Twister (MT19937).
    Its output for an integer seed is fixed across platforms and Python
    versions, so a seed reproduces the same graph everywhere.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(n, int) or n < k:
        raise ValueError(f"need n >= k, got n={n!r}, k={k}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    colour_of = {v: (v - 1) % k + 1 for v in range(1, n + 1)}
    edges = []
    for u, v in combinations(range(1, n + 1), 2):
        if colour_of[u] != colour_of[v] and rng.random() < p:
            edges.append((u, v))
    return ColouredGraph(k, colour_of, frozenset(edges))
