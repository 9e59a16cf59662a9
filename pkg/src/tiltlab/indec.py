"""Indecomposables of representation-finite quivers.

Positive roots come from closing the simple roots under simple reflections.
Each root is realised as an actual representation by walking it down to a
simple root with sink reflections and replaying the walk with
:func:`~tiltlab.bgp.reflect_source`.
"""
from __future__ import annotations

import functools
import heapq
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

from . import quiver as qv
from . import rep as rp
from .bgp import reflect_source
from .errors import (
    DirectednessViolation,
    EngineBug,
    InconsistentDecomposition,
    NotARoot,
    NotRepFinite,
    QuiverMismatch,
    UnknownVertex,
)
from .homext import euler_form, hom_dim
from .linalg import Matrix, solve

__all__ = [
    "IndecTable",
    "positive_roots",
    "positive_roots_scan",
    "simple_reflection",
    "realize",
    "build_table",
    "decompose",
    "basic",
]

REALIZE_STEP_CAP = 10_000


def _require_finite(q):
    if not qv.is_rep_finite(q):
        raise NotRepFinite(f"{q} is not representation-finite (not a union of Dynkin quivers)")


def simple_reflection(q, d, y):
    """s_y(d) for the symmetrised form of the underlying graph."""
    d = dict(zip(q.vertices, d))
    nbrs = sum(d[t] for s, t in q.arrows if s == y) + sum(d[s] for s, t in q.arrows if t == y)
    d[y] = nbrs - d[y]
    return tuple(d[v] for v in q.vertices)


def positive_roots(q) -> list:
    """All positive roots, sorted by (height, vector)."""
    _require_finite(q)
    n = q.n
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simples)
    todo = list(simples)
    while todo:
        d = todo.pop()
        for y in q.vertices:
            e = simple_reflection(q, d, y)
            if all(c >= 0 for c in e) and e not in found:
                found.add(e)
                todo.append(e)
    return sorted(found, key=lambda d: (sum(d), d))


def positive_roots_scan(q, bound=None) -> list:
    """Brute-force oracle: nonnegative vectors with Tits form 1, entries <= bound.

    The default bound 6 exceeds every coefficient of every Dynkin root.
    """
    _require_finite(q)
    bound = 6 if bound is None else bound
    roots = []
    for d in itertools.product(range(bound + 1), repeat=q.n):
        if any(d) and euler_form(q, d, d) == 1:
            roots.append(d)
    return sorted(roots, key=lambda d: (sum(d), d))


def _simple_index(d):
    if sum(d) == 1 and max(d) == 1:
        return d.index(1)
    return None


def realize(q, d):
    """An indecomposable representation of ``q`` with dimension vector ``d``.

    Walks ``d`` down by sink reflections inside the component carrying it:
    at each step the first sink (in vertex order) whose reflection strictly
    lowers the total dimension is used; failing that, the first sink whose
    reflection moves ``d`` at all, and failing that the first sink. The
    simple reached at the end is carried back up by source reflections.
    """
    d = tuple(d)
    if len(d) != q.n or d not in set(positive_roots(q)):
        raise NotARoot(f"{d} is not a positive root of {q}")
    steps = []
    cur_q, cur_d = q, d
    seen = set()
    while _simple_index(cur_d) is None:
        if len(steps) > REALIZE_STEP_CAP or (cur_q, cur_d) in seen:
            raise EngineBug(f"reflection walk for {d} does not terminate")
        seen.add((cur_q, cur_d))
        support = {v for v, c in zip(cur_q.vertices, cur_d) if c}
        comp = next(set(c) for c in qv.components(cur_q) if support & set(c))
        snk = [v for v in cur_q.vertices if v in comp and v in qv.sinks(cur_q)]
        images = {y: simple_reflection(cur_q, cur_d, y) for y in snk}
        pick = next((y for y in snk if sum(images[y]) < sum(cur_d)), None)
        if pick is None:
            pick = next((y for y in snk if images[y] != cur_d), snk[0])
        steps.append(pick)
        cur_d = simple_reflection(cur_q, cur_d, pick)
        cur_q = qv.reflect(cur_q, pick)
        if min(cur_d) < 0:
            raise EngineBug(f"reflection walk for {d} left the positive cone")
    module = rp.simple(cur_q, cur_q.vertices[_simple_index(cur_d)])
    for y in reversed(steps):
        module = reflect_source(module, y)
    if module.quiver != q or module.dims != d:
        raise EngineBug(f"realisation of {d} came back as {module.dims}")
    return module


def _label(q, d):
    if rp.is_type_a_path(q) and q.n <= 9:
        support = [v for v, c in zip(q.vertices, d) if c]
        if all(c in (0, 1) for c in d) and support == list(range(min(support), max(support) + 1)):
            return f"{min(support)}{max(support)}"
    return "(" + ",".join(str(c) for c in d) + ")"


@dataclass(frozen=True, eq=False)
class IndecTable:
    """Indecomposables of a representation-finite quiver.

    Entries are ordered so that a nonzero Hom from entry ``i`` to a
    different entry ``j`` forces ``i < j``. ``hom[i][j]`` and ``ext[i][j]``
    hold dim Hom(M_i, M_j) and dim Ext^1(M_i, M_j).
    """

    quiver: qv.Quiver
    dims: tuple
    reps: tuple
    hom: tuple
    ext: tuple
    labels: tuple
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index.update({d: i for i, d in enumerate(self.dims)})

    def __len__(self):
        return len(self.dims)

    def index_of(self, d):
        try:
            return self._index[tuple(d)]
        except KeyError:
            raise KeyError(f"no indecomposable with dimension vector {tuple(d)}") from None

    def identify(self, m):
        """Id of the table entry matching an indecomposable representation."""
        if m.quiver != self.quiver:
            raise QuiverMismatch("representation is not over the table's quiver")
        return self.index_of(m.dims)

    def simple_id(self, x):
        if x not in self.quiver.vertices:
            raise UnknownVertex(f"vertex {x!r} not in quiver")
        return self.index_of(tuple(int(v == x) for v in self.quiver.vertices))

    def id_by_label(self, label):
        return self.labels.index(label)

    def names(self, ids):
        return sorted(self.labels[i] for i in ids)

    def to_dict(self):
        return {
            "quiver": self.quiver.to_dict(),
            "indecomposables": [
                {"id": i, "dims": list(d), "label": lab}
                for i, (d, lab) in enumerate(zip(self.dims, self.labels))
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


@functools.lru_cache(maxsize=256)
def build_table(q) -> IndecTable:
    _require_finite(q)
    roots = positive_roots(q)
    reps = [realize(q, d) for d in roots]
    n = len(roots)
    hom = [[hom_dim(reps[i], reps[j]) for j in range(n)] for i in range(n)]

    # topological order on the Hom-existence digraph, ties by dimension vector
    indeg = [sum(1 for i in range(n) if i != j and hom[i][j]) for j in range(n)]
    heap = [(roots[j], j) for j in range(n) if indeg[j] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in range(n):
            if j != i and hom[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, (roots[j], j))
    if len(order) != n:
        raise DirectednessViolation("Hom-existence relation between indecomposables has a cycle")

    dims = tuple(roots[i] for i in order)
    reps = tuple(reps[i] for i in order)
    hom = tuple(tuple(hom[i][j] for j in order) for i in order)
    ext = []
    for a in range(n):
        row = []
        for b in range(n):
            e = hom[a][b] - euler_form(q, dims[a], dims[b])
            if e < 0:
                raise EngineBug(f"negative Ext between {dims[a]} and {dims[b]}")
            row.append(e)
        ext.append(tuple(row))
    for i in range(n):
        if hom[i][i] != 1 or ext[i][i] != 0:
            raise EngineBug(f"indecomposable {dims[i]} is not a rigid brick")
    labels = tuple(_label(q, d) for d in dims)
    return IndecTable(q, dims, reps, hom, tuple(ext), labels)


def decompose(m, table: IndecTable) -> Counter:
    """Krull-Schmidt multiplicities of ``m`` by Hom counting.

    Solves sum_i a_i hom[j][i] = dim Hom(M_j, m); the matrix is unitriangular
    in the table order.
    """
    if m.quiver != table.quiver:
        raise QuiverMismatch("representation is not over the table's quiver")
    n = len(table)
    if m.is_zero():
        return Counter()
    lhs = Matrix.from_rows([[table.hom[j][i] for i in range(n)] for j in range(n)], n)
    rhs = [hom_dim(table.reps[j], m) for j in range(n)]
    sol = solve(lhs, rhs)
    if sol is None or any(a < 0 or a.denominator != 1 for a in sol):
        raise InconsistentDecomposition(f"no nonnegative integer decomposition: {sol}")
    mult = Counter({i: int(a) for i, a in enumerate(sol) if a})
    total = [sum(mult[i] * table.dims[i][v] for i in mult) for v in range(table.quiver.n)]
    if tuple(total) != m.dims:
        raise InconsistentDecomposition(f"summands add up to {total}, module has {m.dims}")
    return mult


def basic(ms) -> frozenset:
    """Drop repeated summands of a multiset of ids."""
    return frozenset(ms)
