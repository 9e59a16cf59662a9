"""Quiver representations and the change-of-quiver functors on objects.

Convention: a vector at vertex ``y`` is a column vector, and the matrix
attached to an arrow ``y -> y'`` has shape ``dims[y'] x dims[y]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from . import quiver as qv
from .errors import BadInterval, NotSink, NotSource, NotTypeA, QuiverMismatch, ShapeMismatch
from .linalg import Matrix

__all__ = [
    "Representation",
    "zero",
    "simple",
    "projective",
    "injective",
    "interval",
    "is_type_a_path",
    "direct_sum",
    "restrict",
    "extend_source",
    "extend_sink",
    "paths_from",
    "paths_to",
]


@dataclass(frozen=True)
class Representation:
    quiver: qv.Quiver
    dims: tuple  # aligned with quiver.vertices
    maps: tuple  # aligned with quiver.arrows

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != q.n or any(d < 0 for d in self.dims):
            raise ShapeMismatch(f"bad dimension vector {self.dims}")
        if len(self.maps) != len(q.arrows):
            raise ShapeMismatch("one matrix per arrow required")
        for (s, t), m in zip(q.arrows, self.maps):
            want = (self.dim(t), self.dim(s))
            if m.shape != want:
                raise ShapeMismatch(f"arrow {s}->{t} carries {m.shape}, expected {want}")

    def dim(self, v):
        return self.dims[self.quiver.index(v)]

    @property
    def dim_vector(self):
        return self.dims

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def map(self, arrow_index) -> Matrix:
        return self.maps[arrow_index]

    def to_dict(self):
        return {
            "quiver": self.quiver.to_dict(),
            "dims": {str(v): d for v, d in zip(self.quiver.vertices, self.dims)},
            "maps": [m.to_strings() for m in self.maps],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        q = qv.Quiver.from_dict(data["quiver"])
        dims = tuple(int(data["dims"][str(v)]) for v in q.vertices)
        dmap = dict(zip(q.vertices, dims))
        maps = tuple(
            Matrix.from_strings(rows, dmap[t], dmap[s])
            for (s, t), rows in zip(q.arrows, data["maps"])
        )
        return cls(q, dims, maps)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _build(q, dims: dict, maps=None):
    """Assemble from a ``vertex -> dim`` dict; missing arrow maps are zero."""
    maps = maps or {}
    mats = []
    for k, (s, t) in enumerate(q.arrows):
        mats.append(maps.get(k) or Matrix.zeros(dims[t], dims[s]))
    return Representation(q, tuple(dims[v] for v in q.vertices), tuple(mats))


def zero(q) -> Representation:
    return _build(q, {v: 0 for v in q.vertices})


def simple(q, y) -> Representation:
    q.check_vertex(y)
    return _build(q, {v: int(v == y) for v in q.vertices})


def _paths(q, start, forward):
    """All paths from (or into) ``start`` as tuples of arrow indices.

    Ordered by length, then lexicographically by arrow indices.
    """
    out = [()]
    frontier = [((), start)]
    while frontier:
        nxt = []
        for path, end in frontier:
            arrows = q.out_arrows(end) if forward else q.in_arrows(end)
            for k in arrows:
                far = q.arrows[k][1] if forward else q.arrows[k][0]
                p = path + (k,) if forward else (k,) + path
                nxt.append((p, far))
        nxt.sort()
        out.extend(p for p, _ in nxt)
        frontier = nxt
    return out


def _endpoint(q, start, path, forward):
    if not path:
        return start
    return q.arrows[path[-1]][1] if forward else q.arrows[path[0]][0]


def paths_from(q, y):
    """Dict ``vertex -> list of paths y ~> vertex`` (arrow-index tuples)."""
    res = {v: [] for v in q.vertices}
    for p in _paths(q, y, True):
        res[_endpoint(q, y, p, True)].append(p)
    return res


def paths_to(q, y):
    """Dict ``vertex -> list of paths vertex ~> y``."""
    res = {v: [] for v in q.vertices}
    for p in _paths(q, y, False):
        res[_endpoint(q, y, p, False)].append(p)
    return res


def projective(q, y) -> Representation:
    """Indecomposable projective at ``y`` in its path basis.

    Basis at ``z`` is the paths ``y ~> z``; an arrow acts by appending itself.
    """
    q.check_vertex(y)
    basis = paths_from(q, y)
    dims = {v: len(basis[v]) for v in q.vertices}
    maps = {}
    for k, (s, t) in enumerate(q.arrows):
        pos = {p: i for i, p in enumerate(basis[t])}
        rows = [[0] * dims[s] for _ in range(dims[t])]
        for j, p in enumerate(basis[s]):
            rows[pos[p + (k,)]][j] = 1
        maps[k] = Matrix.from_rows(rows, dims[s]) if dims[t] else Matrix.zeros(0, dims[s])
    return _build(q, dims, maps)


def injective(q, y) -> Representation:
    """Indecomposable injective at ``y``: dual basis of paths ``z ~> y``.

    Along ``a: z -> z'`` the dual of a path starting with ``a`` goes to the
    dual of its tail; every other basis vector is killed.
    """
    q.check_vertex(y)
    basis = paths_to(q, y)
    dims = {v: len(basis[v]) for v in q.vertices}
    maps = {}
    for k, (s, t) in enumerate(q.arrows):
        pos = {p: i for i, p in enumerate(basis[t])}
        rows = [[0] * dims[s] for _ in range(dims[t])]
        for j, p in enumerate(basis[s]):
            if p and p[0] == k:
                rows[pos[p[1:]]][j] = 1
        maps[k] = Matrix.from_rows(rows, dims[s]) if dims[t] else Matrix.zeros(0, dims[s])
    return _build(q, dims, maps)


def is_type_a_path(q) -> bool:
    """True when the vertices are ``1..n`` and the arrows join ``k`` and ``k+1``."""
    n = q.n
    if sorted(q.vertices) != list(range(1, n + 1)) or len(q.arrows) != n - 1:
        return False
    return sorted(tuple(sorted(a)) for a in q.arrows) == [(k, k + 1) for k in range(1, n)]


def interval(q, i, j) -> Representation:
    """Interval module supported on ``i..j`` of a type-A quiver labelled ``1..n``."""
    if not is_type_a_path(q):
        raise NotTypeA("interval modules need a type A quiver labelled 1..n along the path")
    if not (1 <= i <= j <= q.n):
        raise BadInterval(f"no interval [{i}, {j}] in A_{q.n}")
    dims = {v: int(i <= v <= j) for v in q.vertices}
    maps = {k: Matrix.identity(1) for k, (s, t) in enumerate(q.arrows) if dims[s] and dims[t]}
    return _build(q, dims, maps)


def direct_sum(reps, q=None) -> Representation:
    """Block-diagonal direct sum in input order.

    ``q`` is required only for the empty sum.
    """
    reps = list(reps)
    if not reps:
        if q is None:
            raise ValueError("empty direct sum needs an explicit quiver")
        return zero(q)
    q = q or reps[0].quiver
    for r in reps:
        if r.quiver != q:
            raise QuiverMismatch("direct summands live over different quivers")
    dims = tuple(sum(ds) for ds in zip(*(r.dims for r in reps)))
    maps = tuple(Matrix.block_diag([r.maps[k] for r in reps]) for k in range(len(q.arrows)))
    return Representation(q, dims, maps)


def restrict(m: Representation, x) -> Representation:
    """Restriction to the quiver with ``x`` deleted (data copied verbatim)."""
    q = m.quiver
    q.check_vertex(x)
    sub = qv.delete_vertex(q, x)
    dims = tuple(d for v, d in zip(q.vertices, m.dims) if v != x)
    maps = tuple(mat for a, mat in zip(q.arrows, m.maps) if x not in a)
    return Representation(sub, dims, maps)


def _check_base(n: Representation, q, x):
    if n.quiver != qv.delete_vertex(q, x):
        raise QuiverMismatch(f"representation is not over the quiver with {x} deleted")


def _selection(sizes, i, inclusion):
    """Block projection (or inclusion) of summand ``i`` of a direct sum."""
    total = sum(sizes)
    off = sum(sizes[:i])
    rows = [[int(c == off + r) for c in range(total)] for r in range(sizes[i])]
    proj = Matrix.from_rows(rows, total) if sizes[i] else Matrix.zeros(0, total)
    return proj.T if inclusion else proj


def extend_source(n: Representation, q, x) -> Representation:
    """Right adjoint of restriction at the source ``x``.

    The space at ``x`` is the direct sum of the spaces at the targets of the
    arrows leaving ``x`` (in arrow order); each such arrow carries the
    projection onto its summand.
    """
    q.check_vertex(x)
    if x not in qv.sources(q):
        raise NotSource(f"vertex {x} is not a source")
    _check_base(n, q, x)
    out = q.out_arrows(x)
    sizes = [n.dim(q.arrows[k][1]) for k in out]
    return _glue(n, q, x, out, sizes, inclusion=False)


def extend_sink(n: Representation, q, x) -> Representation:
    """Left adjoint of restriction at the sink ``x``: block inclusions."""
    q.check_vertex(x)
    if x not in qv.sinks(q):
        raise NotSink(f"vertex {x} is not a sink")
    _check_base(n, q, x)
    inc = q.in_arrows(x)
    sizes = [n.dim(q.arrows[k][0]) for k in inc]
    return _glue(n, q, x, inc, sizes, inclusion=True)


def _glue(n, q, x, touching, sizes, inclusion):
    sub_maps = iter(n.maps)
    dims = {v: (sum(sizes) if v == x else n.dim(v)) for v in q.vertices}
    maps = {}
    for k, a in enumerate(q.arrows):
        if x in a:
            maps[k] = _selection(sizes, touching.index(k), inclusion)
        else:
            maps[k] = next(sub_maps)
    return _build(q, dims, maps)
