import itertools

import pytest

from tiltlab import quiver as qv
from tiltlab import rep as rp
from tiltlab.homext import (
    end_dim,
    euler_form,
    ext_dim,
    ext_dim_resolution,
    hom_basis,
    hom_dim,
    projective_resolution,
)
from tiltlab.indec import build_table, positive_roots
from tiltlab.linalg import rank

from conftest import all_test_quivers


def is_morphism(phi, m, n):
    q = m.quiver
    return all(
        n.maps[k] @ phi[s] == phi[t] @ m.maps[k]
        for k, (s, t) in enumerate(q.arrows)
    )


def test_hom_a2_by_hand(A2):
    p1, s2 = rp.interval(A2, 1, 2), rp.interval(A2, 2, 2)
    assert hom_dim(p1, s2) == 0
    assert hom_dim(s2, p1) == 1
    assert hom_dim(rp.zero(A2), p1) == 0


def test_hom_basis_elements_are_morphisms(Q):
    reps = build_table(Q).reps
    for m, n in itertools.product(reps, repeat=2):
        basis = hom_basis(m, n)
        assert len(basis) == hom_dim(m, n)
        assert all(is_morphism(phi, m, n) for phi in basis)


def test_euler_form_examples(A2):
    assert euler_form(A2, (1, 0), (0, 1)) == -1
    assert euler_form(A2, (0, 0), (3, 5)) == 0


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_tits_form_on_roots(q):
    assert all(euler_form(q, d, d) == 1 for d in positive_roots(q))


def test_ext_examples(A2):
    assert ext_dim(rp.simple(A2, 1), rp.simple(A2, 2)) == 1
    assert ext_dim(rp.simple(A2, 2), rp.simple(A2, 1)) == 0
    for y in A2.vertices:
        for m in build_table(A2).reps:
            assert ext_dim(rp.projective(A2, y), m) == 0
            assert ext_dim_resolution(rp.projective(A2, y), m) == 0


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_resolution_is_exact(q):
    for m in build_table(q).reps:
        p1, p0, d, eps = projective_resolution(m)
        assert is_morphism(d, p1, p0) and is_morphism(eps, p0, m)
        for z in q.vertices:
            if m.dim(z) and p1.dim(z):
                assert (eps[z] @ d[z]).is_zero()
            assert rank(eps[z]) == m.dim(z)            # surjective
            assert rank(d[z]) == p1.dim(z)             # injective
            assert p0.dim(z) - p1.dim(z) == m.dim(z)   # exact in the middle


@pytest.mark.parametrize("q", [qv.linear_a(2), qv.validate([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3)])], ids=str)
def test_ext_matches_resolution(q):
    reps = build_table(q).reps
    for m, n in itertools.product(reps, repeat=2):
        e = ext_dim(m, n)
        assert e == ext_dim_resolution(m, n)
        assert hom_dim(m, n) - e == euler_form(q, m.dims, n.dims)


def test_ext_resolution_on_decomposables(Q):
    reps = build_table(Q).reps
    m = rp.direct_sum([reps[0], reps[3], reps[3]])
    n = rp.direct_sum([reps[5], reps[9]])
    assert ext_dim(m, n) == ext_dim_resolution(m, n)


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_simple_at_source_perpendicular(q):
    for x in sorted(qv.sources(q)):
        sx = rp.simple(q, x)
        sub_reps = build_table(qv.delete_vertex(q, x)).reps
        for n in sub_reps:
            jn = rp.extend_source(n, q, x)
            assert hom_dim(sx, jn) == 0
            assert ext_dim(sx, jn) == 0
        for m in build_table(q).reps:
            assert ext_dim(m, sx) == 0  # simple at a source is injective


@pytest.mark.parametrize("q", all_test_quivers(), ids=str)
def test_extension_keeps_ext_vanishing(q):
    for x in sorted(qv.sources(q)):
        sx = rp.simple(q, x)
        sub_reps = build_table(qv.delete_vertex(q, x)).reps
        for n, n2 in itertools.product(sub_reps, repeat=2):
            if ext_dim(n, n2) == 0:
                lhs = rp.direct_sum([sx, rp.extend_source(n, q, x)])
                rhs = rp.direct_sum([sx, rp.extend_source(n2, q, x)])
                assert ext_dim(lhs, rhs) == 0


def test_end_dim_brick(Q):
    assert all(end_dim(m) == 1 for m in build_table(Q).reps)
