"""Value types: integer intervals, 2-intervals, relation sets, instances and
vertex-coloured graphs.

Every type validates itself on construction and is immutable afterwards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

log = logging.getLogger(__name__)


class ModelError(ValueError):
    """Raised when a value would violate its invariants."""


@dataclass(frozen=True, order=True)
class Interval:
    """Closed integer interval ``[lo, hi]`` with ``lo < hi``."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise ModelError(f"interval endpoints must be integers: {self.lo!r}, {self.hi!r}")
        if not self.lo < self.hi:
            raise ModelError(f"degenerate interval [{self.lo}, {self.hi}]")

    def shifted(self, offset: int) -> Interval:
        return Interval(self.lo + offset, self.hi + offset)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def intersects(a: Interval, b: Interval) -> bool:
    """True iff the closed intervals share at least one point."""
    return max(a.lo, b.lo) <= min(a.hi, b.hi)


@dataclass(frozen=True)
class TwoInterval:
    left: Interval
    right: Interval
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise ModelError("2-interval label must be a nonempty string")
        if not self.left.hi < self.right.lo:
            raise ModelError(
                f"2-interval {self.label}: {self.left} must lie strictly left of {self.right}"
            )

    @classmethod
    def from_pair(cls, a: Interval, b: Interval, label: str) -> TwoInterval:
        """Build from two disjoint intervals given in either order."""
        if b.lo < a.lo:
            a, b = b, a
        return cls(a, b, label)

    @property
    def intervals(self) -> tuple[Interval, Interval]:
        return (self.left, self.right)

    def translated(self, offset: int) -> TwoInterval:
        return TwoInterval(self.left.shifted(offset), self.right.shifted(offset), self.label)


@dataclass(frozen=True)
class RelationSet:
    """Nonempty subset of {preceding, nested, crossing}."""

    precede: bool = False
    nested: bool = False
    crossing: bool = False

    TOKENS = ("p", "n", "c")

    def __post_init__(self) -> None:
        if not (self.precede or self.nested or self.crossing):
            raise ModelError("relation set must not be empty")

    @classmethod
    def parse(cls, text: str) -> RelationSet:
        """Parse comma-separated tokens from {p, n, c}, e.g. ``"n,c"``."""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        unknown = [t for t in tokens if t not in cls.TOKENS]
        if unknown:
            raise ModelError(f"unknown relation token(s): {', '.join(unknown)}")
        if len(set(tokens)) != len(tokens):
            raise ModelError(f"duplicate relation token in {text!r}")
        return cls(precede="p" in tokens, nested="n" in tokens, crossing="c" in tokens)

    @classmethod
    def all_nonempty(cls) -> list[RelationSet]:
        out = []
        for mask in range(1, 8):
            out.append(cls(bool(mask & 1), bool(mask & 2), bool(mask & 4)))
        return out

    def tokens(self) -> str:
        flags = (self.precede, self.nested, self.crossing)
        return ",".join(t for t, on in zip(self.TOKENS, flags) if on)

    def issubset(self, other: RelationSet) -> bool:
        return (
            (not self.precede or other.precede)
            and (not self.nested or other.nested)
            and (not self.crossing or other.crossing)
        )

    def __str__(self) -> str:
        return "{" + self.tokens() + "}"


@dataclass(frozen=True)
class Instance:
    two_intervals: tuple[TwoInterval, ...]
    relations: RelationSet

    def __post_init__(self) -> None:
        items = tuple(self.two_intervals)
        object.__setattr__(self, "two_intervals", items)
        seen: set[str] = set()
        for d in items:
            if not isinstance(d, TwoInterval):
                raise ModelError(f"not a 2-interval: {d!r}")
            if d.label in seen:
                raise ModelError(f"duplicate label {d.label!r}")
            seen.add(d.label)

    def __len__(self) -> int:
        return len(self.two_intervals)

    @property
    def labels(self) -> list[str]:
        return [d.label for d in self.two_intervals]

    def by_label(self) -> dict[str, TwoInterval]:
        return {d.label: d for d in self.two_intervals}


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColouredGraph:
    """Vertex-coloured simple graph ``(G, c, k)`` with a proper colouring.

    Edges are stored as sorted ``(min_id, max_id)`` pairs. Use
    :meth:`from_edges` to load raw data; it drops monochromatic edges instead
    of rejecting them and remembers how many it dropped.
    """

    k: int
    colour_of: Mapping[int, int]
    edges: frozenset[Edge]
    dropped: tuple[Edge, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise ModelError(f"number of colours must be a positive integer, got {self.k!r}")
        colours = dict(self.colour_of)
        for v, c in colours.items():
            if not isinstance(v, int) or v < 0:
                raise ModelError(f"vertex ids must be nonnegative integers, got {v!r}")
            if not isinstance(c, int) or not 1 <= c <= self.k:
                raise ModelError(f"vertex {v}: colour {c!r} outside 1..{self.k}")
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise ModelError(f"self-loop at vertex {u}")
            for w in (u, v):
                if w not in colours:
                    raise ModelError(f"edge ({u},{v}) uses unknown vertex {w}")
            if colours[u] == colours[v]:
                raise ModelError(f"edge ({u},{v}) joins two vertices of colour {colours[u]}")
            edges.add(_norm_edge(u, v))
        object.__setattr__(self, "colour_of", dict(sorted(colours.items())))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(
        cls, k: int, colour_of: Mapping[int, int], edges: Iterable[tuple[int, int]]
    ) -> ColouredGraph:
        kept, dropped = set(), []
        for u, v in edges:
            e = _norm_edge(u, v)
            if u != v and u in colour_of and v in colour_of and colour_of[u] == colour_of[v]:
                if e not in dropped:
                    dropped.append(e)
                continue
            kept.add(e)
        if dropped:
            log.warning("dropped %d monochromatic edge(s)", len(dropped))
        return cls(k, colour_of, frozenset(kept), tuple(sorted(dropped)))

    @property
    def vertices(self) -> list[int]:
        return list(self.colour_of)

    def colour(self, v: int) -> int:
        return self.colour_of[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def summary(self) -> str:
        return f"k={self.k} |V|={len(self.colour_of)} |E|={len(self.edges)}"


def vertices_of_colour(g: ColouredGraph, c: int) -> list[int]:
    if not 1 <= c <= g.k:
        raise ModelError(f"colour {c} outside 1..{g.k}")
    return [v for v, cv in g.colour_of.items() if cv == c]


def edges_between_colours(g: ColouredGraph, i: int, j: int) -> list[Edge]:
    """Edges joining colours ``i < j``, each oriented colour-``i`` endpoint first."""
    if not 1 <= i < j <= g.k:
        raise ModelError(f"need 1 <= i < j <= {g.k}, got ({i}, {j})")
    out = []
    for u, v in sorted(g.edges):
        cu, cv = g.colour_of[u], g.colour_of[v]
        if (cu, cv) == (i, j):
            out.append((u, v))
        elif (cu, cv) == (j, i):
            out.append((v, u))
    return out
