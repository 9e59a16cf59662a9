"""Module-level BGP reflection functors and the induced map on tilting modules."""
from __future__ import annotations

from . import quiver as qv
from .errors import ContainsSimpleAtX, HasSimpleSummandAtX, NotSink, NotSource
from .linalg import Matrix, cokernel, kernel_basis, rank
from .rep import Representation

__all__ = ["reflect_source", "reflect_sink", "rho"]


def reflect_source(m: Representation, x) -> Representation:
    """Reflection functor at the source ``x``.

    The new space at ``x`` is the cokernel of ``M(x) -> sum_i M(y_i)``
    (arrows leaving ``x`` in arrow order). Each reversed arrow ``y_i -> x``
    carries the cokernel projection restricted to the ``i``-th summand.
    """
    q = m.quiver
    q.check_vertex(x)
    if x not in qv.sources(q):
        raise NotSource(f"vertex {x} is not a source")
    out = q.out_arrows(x)
    dx = m.dim(x)
    total = sum(m.maps[k].rows for k in out)
    assembled = Matrix.vstack([m.maps[k] for k in out], dx)
    if rank(assembled) != dx:
        raise HasSimpleSummandAtX(f"representation has the simple at {x} as a summand")
    cdim, proj = cokernel(assembled) if total else (0, Matrix.zeros(0, 0))

    q2 = qv.reflect(q, x)
    maps = list(m.maps)
    off = 0
    for k in out:
        width = m.maps[k].rows
        maps[k] = proj.submatrix(range(cdim), range(off, off + width))
        off += width
    dims = tuple(cdim if v == x else d for v, d in zip(q.vertices, m.dims))
    return Representation(q2, dims, tuple(maps))


def reflect_sink(m: Representation, x) -> Representation:
    """Reflection functor at the sink ``x``: kernel of ``sum_l M(y_l) -> M(x)``."""
    q = m.quiver
    q.check_vertex(x)
    if x not in qv.sinks(q):
        raise NotSink(f"vertex {x} is not a sink")
    inc = q.in_arrows(x)
    dx = m.dim(x)
    total = sum(m.maps[k].cols for k in inc)
    assembled = Matrix.hstack([m.maps[k] for k in inc], dx) if dx else Matrix.zeros(0, total)
    if rank(assembled) != dx:
        raise HasSimpleSummandAtX(f"representation has the simple at {x} as a summand")
    basis = kernel_basis(assembled)

    q2 = qv.reflect(q, x)
    maps = list(m.maps)
    off = 0
    for k in inc:
        width = m.maps[k].cols
        maps[k] = basis.submatrix(range(off, off + width), range(basis.cols))
        off += width
    dims = tuple(basis.cols if v == x else d for v, d in zip(q.vertices, m.dims))
    return Representation(q2, dims, tuple(maps))


def rho(t, x, table, table_reflected):
    """Image of a tilting module without the simple at ``x`` under reflection.

    ``t`` is a collection of ids of ``table`` (over a quiver with source
    ``x``); the result is the frozenset of ids in ``table_reflected``.
    """
    sx = table.simple_id(x)
    if sx in t:
        raise ContainsSimpleAtX(f"tilting module contains the simple at {x}")
    return frozenset(table_reflected.identify(reflect_source(table.reps[i], x)) for i in t)
