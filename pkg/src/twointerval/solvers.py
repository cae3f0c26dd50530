"""Exact solvers for the maximum R-comparable subset problem.

Three routes are provided:

* :func:`max_pattern_clique` -- maximum clique on the comparability graph by
  branch and bound with greedy-colouring bounds (works for every relation set);
* :func:`max_pattern_chain` -- longest chain DP, valid only when the relation
  set is exactly {preceding} or exactly {nested} (both strict partial orders);
* :func:`max_pattern_bruteforce` -- subset enumeration, the reference oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .model import Instance, RelationSet
from .relations import Kind, classify, comparability_graph, comparable

BRUTE_FORCE_LIMIT = 20


class SolverError(Exception):
    pass


class GuardExceeded(SolverError):
    """Input too large for the requested method, or node budget exhausted."""


class BudgetExceeded(GuardExceeded):
    pass


class UnsupportedRelations(SolverError):
    pass


@dataclass(frozen=True)
class Solution:
    labels: frozenset[str]
    method: str

    @property
    def size(self) -> int:
        return len(self.labels)

    def sorted_labels(self) -> list[str]:
        return sorted(self.labels)


def is_feasible(inst: Instance, labels) -> bool:
    index = inst.by_label()
    chosen = list(dict.fromkeys(labels))
    unknown = [x for x in chosen if x not in index]
    if unknown:
        raise KeyError(f"unknown label(s): {', '.join(map(str, unknown))}")
    items = [index[x] for x in chosen]
    return all(comparable(a, b, inst.relations) for a, b in combinations(items, 2))


def max_pattern_bruteforce(inst: Instance) -> Solution:
    n = len(inst)
    if n > BRUTE_FORCE_LIMIT:
        raise GuardExceeded(f"brute force limited to {BRUTE_FORCE_LIMIT} 2-intervals, got {n}")
    # work over labels in sorted order so the first hit is lexicographically smallest
    order = sorted(range(n), key=lambda i: inst.labels[i])
    masks = comparability_graph(inst).bitmasks()
    for size in range(n, 0, -1):
        for combo in combinations(order, size):
            ok = True
            seen = 0
            for i in combo:
                if masks[i] & seen != seen:
                    ok = False
                    break
                seen |= 1 << i
            if ok:
                return Solution(frozenset(inst.labels[i] for i in combo), "brute")
    return Solution(frozenset(), "brute")


def _colour_sort(cands: list[int], masks: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cands`` (kept in the given order).

    Returns vertices grouped by colour class and the running colour bound for
    each, so the last vertex carries the largest bound.
    """
    classes: list[list[int]] = []
    class_masks: list[int] = []
    for v in cands:
        bit = 1 << v
        for ci, cm in enumerate(class_masks):
            if not masks[v] & cm:
                classes[ci].append(v)
                class_masks[ci] |= bit
                break
        else:
            classes.append([v])
            class_masks.append(bit)
    order, bounds = [], []
    for ci, cls in enumerate(classes, start=1):
        order.extend(cls)
        bounds.extend([ci] * len(cls))
    return order, bounds


def max_clique_indices(masks: list[int], node_budget: int | None = None) -> list[int]:
    """Maximum clique of a graph given as adjacency bitsets.

    Tomita-style branch and bound. Deterministic: candidates are coloured in
    ascending index order and expanded from the highest colour downwards.
    """
    n = len(masks)
    best: list[int] = []
    nodes = 0

    def expand(current: list[int], cands: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceeded(f"clique search exceeded node budget of {node_budget}")
        order, bounds = _colour_sort(cands, masks)
        remaining = 0
        for v in order:
            remaining |= 1 << v
        for pos in range(len(order) - 1, -1, -1):
            if len(current) + bounds[pos] <= len(best):
                return
            v = order[pos]
            current.append(v)
            nxt = masks[v] & remaining
            if nxt:
                expand(current, [u for u in range(n) if nxt >> u & 1])
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            remaining &= ~(1 << v)

    if n:
        expand([], list(range(n)))
    return sorted(best)


def max_pattern_clique(inst: Instance, node_budget: int | None = None) -> Solution:
    graph = comparability_graph(inst)
    picked = max_clique_indices(graph.bitmasks(), node_budget)
    return Solution(frozenset(graph.labels[i] for i in picked), "clique")


def chain_supported(r: RelationSet) -> bool:
    return r in (RelationSet(precede=True), RelationSet(nested=True))


def max_pattern_chain(inst: Instance) -> Solution:
    """Longest chain under < or under the nesting order, O(n^2)."""
    r = inst.relations
    if not chain_supported(r):
        raise UnsupportedRelations(
            f"chain method needs exactly {{p}} or {{n}}, got {r}; use clique or brute"
        )
    items = list(inst.two_intervals)
    if r.precede:
        # predecessors start further left
        items.sort(key=lambda d: (d.left.lo, d.label))
        wanted = Kind.PRECEDING
    else:
        # an inner 2-interval spans strictly less than its outer one
        items.sort(key=lambda d: (d.right.hi - d.left.lo, d.label))
        wanted = Kind.NESTED

    def below(a, b) -> bool:
        rel = classify(a, b)
        if rel.kind is not wanted:
            return False
        return (rel.first if wanted is Kind.PRECEDING else rel.inner) == a.label

    length = [1] * len(items)
    prev = [-1] * len(items)
    for j in range(len(items)):
        for i in range(j):
            if length[i] + 1 > length[j] and below(items[i], items[j]):
                length[j] = length[i] + 1
                prev[j] = i
    if not items:
        return Solution(frozenset(), "chain")
    end = max(range(len(items)), key=lambda j: (length[j], -j))
    chain = []
    while end >= 0:
        chain.append(items[end].label)
        end = prev[end]
    return Solution(frozenset(chain), "chain")


def solve(inst: Instance, method: str = "auto", node_budget: int | None = None) -> Solution:
    if method == "auto":
        method = "chain" if chain_supported(inst.relations) else "clique"
    if method == "chain":
        return max_pattern_chain(inst)
    if method == "clique":
        return max_pattern_clique(inst, node_budget)
    if method == "brute":
        return max_pattern_bruteforce(inst)
    raise ValueError(f"unknown method {method!r}")
