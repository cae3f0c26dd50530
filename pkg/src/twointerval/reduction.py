"""Multicoloured-clique to 2-interval-pattern reduction.

Gadgets are staircase grids of equal-length intervals. In an *ascending*
grid an interval in row ``r`` meets the intervals of the next column that sit
in rows ``< r``; in a *descending* grid (two columns) an interval of the first
column meets the second-column intervals in rows ``> r``. With row step 2,
column pitch ``S + 1`` and length ``S >= 2 * rows`` these thresholds fall
strictly between consecutive rows, so any set of pairwise disjoint picks
must have non-decreasing rows left to right in an ascending grid and
non-increasing rows in a descending one.

Per colour ``c`` the vertex-selection gadget is ``I1(c)`` (ascending,
``k + 1`` columns) plus ``I2(c)`` (descending). Per colour pair ``i < j``
the edge-selection gadget is ``C1(i,j)`` (ascending, 4 columns) plus
``C2(i,j)`` (descending).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .model import (
    ColouredGraph,
    Instance,
    Interval,
    ModelError,
    RelationSet,
    TwoInterval,
    edges_between_colours,
    vertices_of_colour,
)


class ReductionError(ValueError):
    pass


class Variant(Enum):
    NESTED_CROSSING = "nested-crossing"
    PRECEDE_CROSSING = "precede-crossing"

    @property
    def relations(self) -> RelationSet:
        if self is Variant.NESTED_CROSSING:
            return RelationSet(nested=True, crossing=True)
        return RelationSet(precede=True, crossing=True)


@dataclass(frozen=True)
class LayoutParams:
    S: int
    col_gap: int = 1
    row_step: int = 2

    def __post_init__(self) -> None:
        if self.S < 2 or self.S % 2:
            raise ReductionError(f"interval length S must be even and >= 2, got {self.S}")
        if self.col_gap != 1 or self.row_step != 2:
            raise ReductionError("only col_gap=1 and row_step=2 are supported")

    @classmethod
    def for_rows(cls, max_rows: int) -> LayoutParams:
        return cls(S=2 * max(max_rows, 1))

    @property
    def region_gap(self) -> int:
        return self.S + 1

    @property
    def pitch(self) -> int:
        return self.S + self.col_gap

    def max_rows(self) -> int:
        return self.S // 2


@dataclass(frozen=True)
class Grid:
    """Rows x columns of intervals, addressed 1-based as ``cell(row, col)``."""

    kind: str  # "ascending" | "descending"
    rows: int
    cols: int
    cells: tuple[tuple[Interval, ...], ...]

    def cell(self, row: int, col: int) -> Interval:
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise IndexError(f"cell ({row},{col}) outside {self.rows}x{self.cols} grid")
        return self.cells[row - 1][col - 1]

    def shifted(self, offset: int) -> Grid:
        cells = tuple(tuple(iv.shifted(offset) for iv in row) for row in self.cells)
        return Grid(self.kind, self.rows, self.cols, cells)

    def items(self):
        for r, row in enumerate(self.cells, start=1):
            for c, iv in enumerate(row, start=1):
                yield (r, c), iv


def _check_rows(rows: int, p: LayoutParams) -> None:
    if rows < 0:
        raise ReductionError(f"row count must be >= 0, got {rows}")
    if rows > p.max_rows():
        raise ReductionError(f"S={p.S} too short for {rows} rows (need S >= {2 * rows})")


def ascending_gadget(rows: int, cols: int, p: LayoutParams) -> Grid:
    _check_rows(rows, p)
    if cols < 1:
        raise ReductionError(f"column count must be >= 1, got {cols}")
    cells = tuple(
        tuple(
            Interval((c - 1) * p.pitch + 2 * r, (c - 1) * p.pitch + 2 * r + p.S)
            for c in range(1, cols + 1)
        )
        for r in range(1, rows + 1)
    )
    return Grid("ascending", rows, cols, cells)


def descending_gadget(rows: int, p: LayoutParams) -> Grid:
    _check_rows(rows, p)
    cells = tuple(
        tuple(
            Interval((c - 1) * p.pitch + 2 * (rows - r), (c - 1) * p.pitch + 2 * (rows - r) + p.S)
            for c in (1, 2)
        )
        for r in range(1, rows + 1)
    )
    return Grid("descending", rows, 2, cells)


def gadget_extent(rows: int, cols: int, p: LayoutParams) -> int:
    """Local coordinate width reserved for a gadget (also for empty ones)."""
    return (cols - 1) * p.pitch + 2 * rows + p.S


def expected_size(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise ReductionError(f"k must be a positive integer, got {k!r}")
    return 2 * k + 4 * comb(k, 2)


@dataclass(frozen=True)
class Part:
    """Where one constituent interval of a generated 2-interval lives."""

    gadget: str
    row: int
    col: int


@dataclass(frozen=True)
class Role:
    """Provenance of a generated 2-interval.

    ``kind`` is one of ``vertex``, ``vertex'``, ``edge``, ``edge'``,
    ``directed``. ``ends`` holds the vertex id for vertex roles, the edge
    oriented low colour first for undirected roles, and ``(tail, head)`` for
    directed edges.
    """

    kind: str
    ends: tuple[int, ...]
    parts: tuple[Part, Part]

    @property
    def selection_gadgets(self) -> set[str]:
        return {selection_gadget(p.gadget) for p in self.parts}


def selection_gadget(component: str) -> str:
    """Map a component id (``I1(2)``, ``C2(1,3)``) to its selection gadget
    (``V(2)``, ``E(1,3)``)."""
    head, _, rest = component.partition("(")
    return ("V(" if head in ("I1", "I2") else "E(") + rest


@dataclass(frozen=True)
class ReductionInstance:
    instance: Instance
    k_prime: int
    variant: Variant
    params: LayoutParams
    provenance: dict[str, Role]
    region_spans: tuple[tuple[str, int, int], ...]
    gadgets: dict[str, Grid] = field(repr=False)


def _label(kind: str, ends: tuple[int, ...]) -> str:
    prefix = {"vertex": "v", "vertex'": "v'", "edge": "e", "edge'": "e'", "directed": "d"}[kind]
    return f"{prefix}:" + ",".join(map(str, ends))


def reduce(g: ColouredGraph, variant: Variant) -> ReductionInstance:
    """Build the 2-interval instance whose optimum reaches ``2k + 4 C(k,2)``
    exactly when ``g`` has a multicoloured k-clique."""
    if g.k < 1:
        raise ReductionError("k must be >= 1")
    for u, v in g.edges:
        if g.colour(u) == g.colour(v):
            raise ReductionError(f"improper colouring: edge ({u},{v})")
    variant = Variant(variant)
    k = g.k
    colours = range(1, k + 1)
    pairs = [(i, j) for i in colours for j in colours if i < j]
    vrows = {c: vertices_of_colour(g, c) for c in colours}
    erows = {(i, j): edges_between_colours(g, i, j) for i, j in pairs}
    max_rows = max([len(x) for x in vrows.values()] + [len(x) for x in erows.values()] + [1])
    p = LayoutParams.for_rows(max_rows)

    local: dict[str, Grid] = {}
    for c in colours:
        local[f"I1({c})"] = ascending_gadget(len(vrows[c]), k + 1, p)
        local[f"I2({c})"] = descending_gadget(len(vrows[c]), p)
    for i, j in pairs:
        local[f"C1({i},{j})"] = ascending_gadget(len(erows[i, j]), 4, p)
        local[f"C2({i},{j})"] = descending_gadget(len(erows[i, j]), p)

    c2 = [f"C2({i},{j})" for i, j in pairs]
    c1 = [f"C1({i},{j})" for i, j in pairs]
    i1 = [f"I1({c})" for c in colours]
    i2 = [f"I2({c})" for c in colours]
    if variant is Variant.NESTED_CROSSING:
        sequence = c2 + i1 + c1 + i2
    else:
        sequence = c2 + c1 + i1 + i2

    placed: dict[str, Grid] = {}
    spans = []
    offset = 0
    for name in sequence:
        grid = local[name]
        hi = offset + gadget_extent(grid.rows, grid.cols, p)
        placed[name] = grid.shifted(offset)
        spans.append((name, offset, hi))
        offset = hi + p.region_gap

    two_intervals: list[TwoInterval] = []
    provenance: dict[str, Role] = {}

    def emit(kind: str, ends: tuple[int, ...], a: Part, b: Part) -> None:
        label = _label(kind, ends)
        ia = placed[a.gadget].cell(a.row, a.col)
        ib = placed[b.gadget].cell(b.row, b.col)
        if ib.lo < ia.lo:
            a, b = b, a
            ia, ib = ib, ia
        two_intervals.append(TwoInterval(ia, ib, label))
        provenance[label] = Role(kind, ends, (a, b))

    # column of I1(c) reserved for partner colour d: colours other than c in
    # ascending order occupy columns 2..k
    def partner_col(c: int, d: int) -> int:
        others = [x for x in colours if x != c]
        return 2 + others.index(d)

    for c in colours:
        for row, v in enumerate(vrows[c], start=1):
            emit("vertex", (v,), Part(f"I1({c})", row, 1), Part(f"I2({c})", row, 1))
            emit("vertex'", (v,), Part(f"I1({c})", row, k + 1), Part(f"I2({c})", row, 2))
    vrow = {v: row for c in colours for row, v in enumerate(vrows[c], start=1)}
    for i, j in pairs:
        gid = f"{i},{j}"
        for row, (u, v) in enumerate(erows[i, j], start=1):
            emit("edge", (u, v), Part(f"C2({gid})", row, 1), Part(f"C1({gid})", row, 1))
            emit("edge'", (u, v), Part(f"C2({gid})", row, 2), Part(f"C1({gid})", row, 4))
            emit(
                "directed", (u, v),
                Part(f"C1({gid})", row, 2), Part(f"I1({i})", vrow[u], partner_col(i, j)),
            )
            emit(
                "directed", (v, u),
                Part(f"C1({gid})", row, 3), Part(f"I1({j})", vrow[v], partner_col(j, i)),
            )

    try:
        inst = Instance(tuple(two_intervals), variant.relations)
    except ModelError as exc:  # pragma: no cover - construction bug
        raise ReductionError(str(exc)) from exc
    return ReductionInstance(
        instance=inst,
        k_prime=expected_size(k),
        variant=variant,
        params=p,
        provenance=provenance,
        region_spans=tuple(spans),
        gadgets=placed,
    )


def clique_solution(r: ReductionInstance, clique) -> frozenset[str]:
    """Labels picked for a multicoloured clique: ``I_v``, ``I'_v`` per vertex
    and all four 2-intervals of every clique edge."""
    chosen = set()
    members = sorted(clique)
    for v in members:
        chosen.add(_label("vertex", (v,)))
        chosen.add(_label("vertex'", (v,)))
    roles = r.provenance
    for label, role in roles.items():
        if role.kind in ("edge", "edge'", "directed") and all(x in members for x in role.ends):
            chosen.add(label)
    missing = [x for x in chosen if x not in roles]
    if missing:
        raise ReductionError(f"clique vertices not in instance: {missing}")
    return frozenset(chosen)
