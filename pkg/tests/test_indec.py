from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltlab import quiver as qv
from tiltlab import rep as rp
from tiltlab.errors import NotARoot, NotRepFinite
from tiltlab.homext import end_dim, hom_dim
from tiltlab.indec import basic, build_table, decompose, positive_roots, positive_roots_scan, realize

from conftest import all_test_quivers

EXAMPLE_Q = qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3)])


def isomorphic_indecomposables(m, n):
    return m.dims == n.dims and hom_dim(m, n) == 1 == hom_dim(n, m)


def test_roots_a4_are_intervals(Q):
    intervals = {tuple(int(i <= v <= j) for v in range(1, 5)) for i in range(1, 5) for j in range(i, 5)}
    assert set(positive_roots(Q)) == intervals and len(intervals) == 10


def test_roots_small():
    assert positive_roots(qv.validate([1], [])) == [(1,)]
    assert positive_roots(qv.validate([], [])) == []
    d4 = next(qv.orientations(qv.DynkinType("D", 4)))
    assert len(positive_roots(d4)) == 12 == len(positive_roots_scan(d4))


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_root_closure_matches_tits_scan(q):
    assert positive_roots(q) == positive_roots_scan(q)


@pytest.mark.parametrize("dt", [qv.DynkinType("D", 5), qv.DynkinType("E", 6)], ids=str)
def test_root_counts_larger(dt):
    q = next(qv.orientations(dt))
    assert len(positive_roots(q)) == dt.num_positive_roots
    assert positive_roots(q) == positive_roots_scan(q, bound=3)


def test_not_rep_finite():
    cyc = qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
    with pytest.raises(NotRepFinite):
        positive_roots(cyc)
    with pytest.raises(NotRepFinite):
        build_table(cyc)


def test_realize_examples(Q):
    assert isomorphic_indecomposables(realize(Q, (0, 0, 1, 1)), rp.interval(Q, 3, 4))
    assert realize(Q, (0, 1, 0, 0)) == rp.simple(Q, 2)
    m = realize(Q, (1, 1, 1, 1))
    assert end_dim(m) == 1 and isomorphic_indecomposables(m, rp.interval(Q, 1, 4))
    with pytest.raises(NotARoot):
        realize(Q, (1, 0, 1, 0))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_type_a_counts_and_intervals(n):
    for q in qv.orientations(qv.DynkinType("A", n)):
        table = build_table(q)
        assert len(table) == n * (n + 1) // 2
        for m in table.reps:
            sup = [v for v, c in zip(q.vertices, m.dims) if c]
            assert isomorphic_indecomposables(m, rp.interval(q, min(sup), max(sup)))


def test_table_labels_example(Q):
    table = build_table(Q)
    assert sorted(table.labels) == ["11", "12", "13", "14", "22", "23", "24", "33", "34", "44"]
    a1 = build_table(qv.validate([1], []))
    assert a1.hom == ((1,),) and a1.ext == ((0,),)


def test_table_a2_ext(A2):
    table = build_table(A2)
    s1, s2 = table.simple_id(1), table.simple_id(2)
    nonzero = [(i, j) for i in range(3) for j in range(3) if table.ext[i][j]]
    assert nonzero == [(s1, s2)]


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_table_invariants(q):
    table = build_table(q)
    assert len(set(table.dims)) == len(table)
    n = len(table)
    for i in range(n):
        assert table.hom[i][i] == 1 and table.ext[i][i] == 0
        for j in range(n):
            if i != j and table.hom[i][j]:
                assert i < j
    assert all(end_dim(m) == 1 for m in table.reps)


def test_e6_table():
    q = next(qv.orientations(qv.DynkinType("E", 6)))
    assert len(build_table(q)) == 36


def test_decompose_restricted_tilting(Q, A3):
    table, sub = build_table(Q), build_table(A3)
    ids = [table.id_by_label(s) for s in ("13", "23", "33", "34")]
    m = rp.restrict(rp.direct_sum([table.reps[i] for i in ids]), 4)
    ms = decompose(m, sub)
    assert sorted(sub.labels[i] for i in ms.elements()) == ["13", "23", "33", "33"]
    assert sorted(sub.labels[i] for i in basic(ms)) == ["13", "23", "33"]
    assert decompose(rp.zero(A3), sub) == Counter()


def test_basic():
    assert basic(Counter({1: 2, 4: 1})) == {1, 4}
    assert basic(Counter()) == frozenset()
    assert basic({3, 5}) == {3, 5}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 9), max_size=5))
def test_decompose_inverts_direct_sum(ids):
    table = build_table(EXAMPLE_Q)
    m = rp.direct_sum([table.reps[i] for i in ids], EXAMPLE_Q)
    assert decompose(m, table) == Counter(ids)


def test_table_json(Q):
    data = build_table(Q).to_dict()
    assert len(data["indecomposables"]) == 10
    assert {"id", "dims", "label"} <= set(data["indecomposables"][0])
