import pytest

from tiltlab import quiver as qv
from tiltlab.errors import BadArrow, CyclicQuiver, NotSourceOrSink, UnknownVertex

from conftest import all_test_quivers


def test_validate_example_quiver(Q):
    assert Q.vertices == (1, 2, 3, 4)
    assert Q.arrows == ((1, 2), (2, 3), (4, 3))
    pos = {v: i for i, v in enumerate(Q.topo_order)}
    assert all(pos[s] < pos[t] for s, t in Q.arrows)


def test_validate_single_vertex():
    q = qv.validate([1], [])
    assert q.n == 1 and q.arrows == ()


def test_validate_errors():
    with pytest.raises(CyclicQuiver):
        qv.validate([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(CyclicQuiver):
        qv.validate([1], [(1, 1)])
    with pytest.raises(BadArrow):
        qv.validate([1, 2], [(1, 3)])
    with pytest.raises(ValueError):
        qv.validate([1, 1], [])


def test_parallel_arrows_allowed_but_not_dynkin():
    q = qv.validate([1, 2], [(1, 2), (1, 2)])
    assert qv.classify(q) is None
    assert not qv.is_rep_finite(q)


def test_sources_sinks(Q, Qp):
    assert qv.sources(Q) == {1, 4} and qv.sinks(Q) == {3}
    a1 = qv.validate([1], [])
    assert qv.sources(a1) == {1} == qv.sinks(a1)
    assert qv.sources(Qp) == {1} and qv.sinks(Qp) == {4}


def test_delete_vertex(Q):
    assert qv.delete_vertex(Q, 4) == qv.linear_a(3)
    assert qv.delete_vertex(qv.validate([1], []), 1).n == 0
    d = qv.delete_vertex(qv.linear_a(4), 2)
    assert d.vertices == (1, 3, 4) and d.arrows == ((3, 4),)
    assert sorted(map(sorted, qv.components(d))) == [[1], [3, 4]]
    with pytest.raises(UnknownVertex):
        qv.delete_vertex(Q, 7)


def test_reflect(Q, Qp):
    assert qv.reflect(Q, 4) == Qp
    assert qv.reflect(qv.reflect(Q, 4), 4) == Q
    with pytest.raises(NotSourceOrSink):
        qv.reflect(qv.linear_a(4), 2)


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_reflection_laws(q):
    for x in sorted(qv.sources(q) | qv.sinks(q)):
        r = qv.reflect(q, x)  # validate() inside rejects cycles
        assert qv.delete_vertex(r, x) == qv.delete_vertex(q, x)
        if x in qv.sources(q) and q.out_arrows(x):
            assert x not in qv.sources(r) and x in qv.sinks(r)
    assert len(q.arrows) == q.n - 1


def test_classify():
    assert qv.classify(qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3)])) == qv.DynkinType("A", 4)
    assert qv.classify(qv.validate([1], [])) == qv.DynkinType("A", 1)
    # underlying 4-cycle (affine A3)
    cyc = qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert qv.classify(cyc) is None
    star = qv.validate([1, 2, 3, 4], [(1, 2), (3, 2), (4, 2)])
    assert qv.classify(star) == qv.DynkinType("D", 4)
    for dt in [qv.DynkinType("D", 5), qv.DynkinType("E", 6), qv.DynkinType("E", 7), qv.DynkinType("E", 8)]:
        assert qv.classify(next(qv.orientations(dt))) == dt
    # affine D4: centre with four arms
    assert qv.classify(qv.validate(range(5), [(0, k) for k in range(1, 5)])) is None
    assert qv.classify(qv.validate([1, 2], [])) is None  # disconnected


def test_dynkin_type_guard():
    with pytest.raises(ValueError):
        qv.DynkinType("D", 3)
    with pytest.raises(ValueError):
        qv.DynkinType("E", 9)


def test_orientation_count():
    assert len(list(qv.orientations(qv.DynkinType("A", 3)))) == 4
    assert len(list(qv.orientations(qv.DynkinType("D", 4)))) == 8


def test_json_roundtrip(Q):
    text = Q.to_json()
    assert text == '{"vertices": [1, 2, 3, 4], "arrows": [[1, 2], [2, 3], [4, 3]]}'
    assert qv.Quiver.from_json(text) == Q
