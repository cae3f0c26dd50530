from itertools import combinations

import pytest

from twointerval.model import ColouredGraph, Interval, intersects
from twointerval.reduction import (
    LayoutParams,
    ReductionError,
    Variant,
    ascending_gadget,
    clique_solution,
    descending_gadget,
    expected_size,
    reduce,
)
from twointerval.relations import Kind, classify
from twointerval.solvers import is_feasible
from twointerval.verify import gadget_mismatches, incomparable_disjoint_pairs, random_coloured_graph

S4 = LayoutParams(S=4)


def test_ascending_examples():
    g = ascending_gadget(1, 3, S4)
    assert [g.cell(1, c) for c in (1, 2, 3)] == [Interval(2, 6), Interval(7, 11), Interval(12, 16)]
    g = ascending_gadget(2, 2, S4)
    assert g.cell(2, 1) == Interval(4, 8) and g.cell(1, 2) == Interval(7, 11)
    assert intersects(g.cell(2, 1), g.cell(1, 2))
    assert not intersects(g.cell(1, 1), g.cell(1, 2))
    empty = ascending_gadget(0, 5, S4)
    assert empty.rows == 0 and list(empty.items()) == []


def test_descending_examples():
    g = descending_gadget(2, S4)
    assert g.cell(1, 1) == Interval(2, 6) and g.cell(2, 2) == Interval(5, 9)
    assert intersects(g.cell(1, 1), g.cell(2, 2))
    assert not intersects(g.cell(1, 1), g.cell(1, 2))
    g = descending_gadget(1, S4)
    assert (g.cell(1, 1), g.cell(1, 2)) == (Interval(0, 4), Interval(5, 9))


@pytest.mark.parametrize("rows", range(0, 7))
def test_gadget_patterns(rows):
    p = LayoutParams.for_rows(6)
    for cols in (1, 2, 4, 5):
        assert gadget_mismatches(ascending_gadget(rows, cols, p)) == []
    g = descending_gadget(rows, p)
    assert gadget_mismatches(g) == []
    for r in range(1, rows + 1):
        assert not intersects(g.cell(r, 1), g.cell(r, 2))


def test_gadget_param_errors():
    with pytest.raises(ReductionError):
        LayoutParams(S=3)
    with pytest.raises(ReductionError):
        ascending_gadget(3, 2, S4)  # S=4 fits at most 2 rows
    with pytest.raises(ReductionError):
        ascending_gadget(1, 0, S4)
    with pytest.raises(ReductionError):
        descending_gadget(-1, S4)


def test_expected_size():
    assert [expected_size(k) for k in (1, 2, 3)] == [2, 8, 18]
    with pytest.raises(ReductionError):
        expected_size(0)


@pytest.mark.parametrize("variant", list(Variant))
def test_counts(variant, single_edge, k3):
    r = reduce(single_edge, variant)
    assert len(r.instance) == 8 and r.k_prime == 8
    r = reduce(k3, variant)
    assert len(r.instance) == 18 and r.k_prime == 18
    assert r.instance.relations == variant.relations


def test_empty_colour_class():
    g = ColouredGraph(3, {1: 1, 2: 2}, frozenset({(1, 2)}))
    r = reduce(g, Variant.NESTED_CROSSING)
    assert r.gadgets["I1(3)"].rows == 0 and r.gadgets["I2(3)"].rows == 0
    assert len(r.instance) == 2 * 2 + 4 * 1


def test_labels_and_provenance(k3):
    r = reduce(k3, Variant.NESTED_CROSSING)
    labels = set(r.instance.labels)
    assert {"v:1", "v':1", "e:1,2", "e':1,2", "d:1,2", "d:2,1"} <= labels
    role = r.provenance["d:2,1"]
    assert role.kind == "directed" and role.ends == (2, 1)
    # C1(1,2) column 3 pairs with I1(2) column for colour 1 (= column 2)
    assert {(p.gadget, p.col) for p in role.parts} == {("C1(1,2)", 3), ("I1(2)", 2)}
    role = r.provenance["d:1,3"]
    assert {(p.gadget, p.col) for p in role.parts} == {("C1(1,3)", 2), ("I1(1)", 3)}


@pytest.mark.parametrize("variant", list(Variant))
def test_region_order(variant, k3):
    r = reduce(k3, variant)
    names = [name for name, _, _ in r.region_spans]
    kinds = [n[:2] for n in names]
    if variant is Variant.NESTED_CROSSING:
        assert kinds == ["C2"] * 3 + ["I1"] * 3 + ["C1"] * 3 + ["I2"] * 3
    else:
        assert kinds == ["C2"] * 3 + ["C1"] * 3 + ["I1"] * 3 + ["I2"] * 3
    assert names[:3] == ["C2(1,2)", "C2(1,3)", "C2(2,3)"]
    for (_, lo1, hi1), (_, lo2, hi2) in zip(r.region_spans, r.region_spans[1:]):
        assert lo1 <= hi1 < lo2 <= hi2
    spans = {name: (lo, hi) for name, lo, hi in r.region_spans}
    for name, grid in r.gadgets.items():
        lo, hi = spans[name]
        for _, iv in grid.items():
            assert lo <= iv.lo and iv.hi <= hi


def test_nested_crossing_is_total():
    for seed in range(30):
        g = random_coloured_graph(2 + seed % 3, 7 + seed % 3, 0.6, seed)
        assert incomparable_disjoint_pairs(reduce(g, Variant.NESTED_CROSSING)) == []


def test_precede_crossing_total_for_two_colours():
    for seed in range(20):
        g = random_coloured_graph(2, 4 + seed % 5, 0.6, seed)
        assert incomparable_disjoint_pairs(reduce(g, Variant.PRECEDE_CROSSING)) == []


def test_precede_crossing_nests_directed_edges_for_three_colours(k3):
    # Directed 2-intervals run from the C1 zone to the I1 zone. C1(1,2) is
    # left of C1(1,3) but its column-3 partner sits in I1(2), right of the
    # I1(1) partner of C1(1,3) column 2.
    r = reduce(k3, Variant.PRECEDE_CROSSING)
    bad = incomparable_disjoint_pairs(r)
    assert ("d:2,1", "d:1,3", "nested") in bad
    index = r.instance.by_label()
    rel = classify(index["d:2,1"], index["d:1,3"])
    assert (rel.kind, rel.inner, rel.outer) == (Kind.NESTED, "d:1,3", "d:2,1")


def test_forward_construction_nested_crossing(k3):
    r = reduce(k3, Variant.NESTED_CROSSING)
    sol = clique_solution(r, (1, 2, 3))
    assert len(sol) == r.k_prime
    assert is_feasible(r.instance, sol)


def test_orientation_witnesses(k3):
    r = reduce(k3, Variant.NESTED_CROSSING)
    ix = r.instance.by_label()
    for u, v in [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]:
        rel = classify(ix[f"d:{u},{v}"], ix[f"v:{u}"])
        assert (rel.kind, rel.inner) == (Kind.NESTED, f"d:{u},{v}")
    for a, b in combinations((1, 2, 3), 2):
        assert classify(ix[f"v:{a}"], ix[f"v:{b}"]).kind is Kind.CROSSING

    r = reduce(k3, Variant.PRECEDE_CROSSING)
    ix = r.instance.by_label()
    for e in ("1,2", "1,3", "2,3"):
        for w in (1, 2, 3):
            rel = classify(ix[f"e:{e}"], ix[f"v:{w}"])
            assert (rel.kind, rel.first) == (Kind.PRECEDING, f"e:{e}")
    for u, v in [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]:
        assert classify(ix[f"d:{u},{v}"], ix[f"v:{u}"]).kind is Kind.CROSSING


def test_improper_colouring_rejected():
    class Fake:
        k = 2
        edges = frozenset({(1, 2)})

        def colour(self, v):
            return 1

    with pytest.raises(ReductionError):
        reduce(Fake(), Variant.NESTED_CROSSING)


def test_reduce_deterministic(k3):
    a = reduce(k3, Variant.NESTED_CROSSING)
    b = reduce(k3, Variant.NESTED_CROSSING)
    assert a.instance == b.instance and a.region_spans == b.region_spans
