"""Pairwise relations between 2-intervals and the comparability graph."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import Instance, RelationSet, TwoInterval, intersects


class Kind(Enum):
    NOT_DISJOINT = "not-disjoint"
    PRECEDING = "preceding"
    NESTED = "nested"
    CROSSING = "crossing"


@dataclass(frozen=True)
class PairRelation:
    """Outcome of :func:`classify`.

    For ``PRECEDING`` and ``CROSSING`` the pair is ``(first, second)`` where
    ``first`` owns the leftmost interval; for ``NESTED`` it is
    ``(inner, outer)``. Both are ``None`` for ``NOT_DISJOINT``.
    """

    kind: Kind
    a: str | None = None
    b: str | None = None

    @property
    def inner(self) -> str | None:
        return self.a if self.kind is Kind.NESTED else None

    @property
    def outer(self) -> str | None:
        return self.b if self.kind is Kind.NESTED else None

    @property
    def first(self) -> str | None:
        return self.a if self.kind in (Kind.PRECEDING, Kind.CROSSING) else None

    @property
    def second(self) -> str | None:
        return self.b if self.kind in (Kind.PRECEDING, Kind.CROSSING) else None


NOT_DISJOINT = PairRelation(Kind.NOT_DISJOINT)


def disjoint(a: TwoInterval, b: TwoInterval) -> bool:
    return not any(intersects(x, y) for x in a.intervals for y in b.intervals)


def classify(a: TwoInterval, b: TwoInterval) -> PairRelation:
    if a.label == b.label:
        raise ValueError(f"cannot classify a 2-interval against itself ({a.label!r})")
    if not disjoint(a, b):
        return NOT_DISJOINT
    # disjoint intervals have distinct lo values, so the sort is strict
    if a.left.lo > b.left.lo:
        a, b = b, a
    owner = sorted(
        [(a.left.lo, 0), (a.right.lo, 0), (b.left.lo, 1), (b.right.lo, 1)]
    )
    pattern = "".join("ab"[o] for _, o in owner)
    if pattern == "aabb":
        return PairRelation(Kind.PRECEDING, a.label, b.label)
    if pattern == "abba":
        return PairRelation(Kind.NESTED, b.label, a.label)
    if pattern == "abab":
        return PairRelation(Kind.CROSSING, a.label, b.label)
    raise AssertionError(f"impossible interleaving {pattern}")


def kind_enabled(kind: Kind, r: RelationSet) -> bool:
    return (
        (kind is Kind.PRECEDING and r.precede)
        or (kind is Kind.NESTED and r.nested)
        or (kind is Kind.CROSSING and r.crossing)
    )


def comparable(a: TwoInterval, b: TwoInterval, r: RelationSet) -> bool:
    return kind_enabled(classify(a, b).kind, r)


@dataclass(frozen=True)
class ComparabilityGraph:
    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.labels)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def bitmasks(self) -> list[int]:
        """Adjacency rows as integer bitsets (bit ``j`` set iff ``i ~ j``)."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for j in nbrs:
                m |= 1 << j
            masks.append(m)
        return masks


def comparability_graph(inst: Instance) -> ComparabilityGraph:
    items = inst.two_intervals
    adj: list[set[int]] = [set() for _ in items]
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if comparable(items[i], items[j], inst.relations):
                adj[i].add(j)
                adj[j].add(i)
    return ComparabilityGraph(tuple(inst.labels), tuple(frozenset(s) for s in adj))
