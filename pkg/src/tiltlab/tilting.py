"""Basic tilting modules, their poset, and the restriction/extension maps.

A tilting module is stored as a frozenset of ids into an
:class:`~tiltlab.indec.IndecTable`.
"""
from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass

from . import poset as ps
from . import quiver as qv
from . import rep as rp
from .errors import NotSink, NotSource, QuiverMismatch, TableMismatch
from .indec import IndecTable, basic, build_table, decompose

__all__ = [
    "TiltingPoset",
    "is_tilting",
    "enumerate_tilting",
    "enumerate_tilting_bruteforce",
    "canonical_key",
    "leq",
    "build_poset",
    "tilting_poset",
    "with_summand",
    "pi_source",
    "iota_source",
    "pi_sink",
    "iota_sink",
    "module_of",
]


def is_tilting(ids, table: IndecTable) -> bool:
    ids = set(ids)
    if len(ids) != table.quiver.n:
        return False
    return all(table.ext[i][j] == 0 for i in ids for j in ids)


def canonical_key(t, table):
    return sorted(table.dims[i] for i in t)


def enumerate_tilting(table: IndecTable) -> list:
    """All basic tilting modules, by clique search in the Ext-compatibility graph.

    For a hereditary algebra, n pairwise Ext-orthogonal rigid indecomposables
    (n = number of vertices) already form a tilting module.
    """
    n = table.quiver.n
    m = len(table)
    compat = [
        {j for j in range(m) if j != i and table.ext[i][j] == 0 and table.ext[j][i] == 0}
        for i in range(m)
    ]
    found = []

    def grow(chosen, allowed, start):
        if len(chosen) == n:
            found.append(frozenset(chosen))
            return
        for i in range(start, m):
            if i in allowed and len(chosen) + (m - i) >= n:
                chosen.append(i)
                grow(chosen, allowed & compat[i], i + 1)
                chosen.pop()

    grow([], set(range(m)), 0)
    found.sort(key=lambda t: canonical_key(t, table))
    return found


def enumerate_tilting_bruteforce(table: IndecTable) -> list:
    """Reference enumeration over all n-element subsets."""
    found = [
        frozenset(c)
        for c in itertools.combinations(range(len(table)), table.quiver.n)
        if is_tilting(c, table)
    ]
    found.sort(key=lambda t: canonical_key(t, table))
    return found


def leq(t, t2, table: IndecTable) -> bool:
    """T <= T' iff Ext^1(T, T') = 0."""
    if any(i >= len(table) for i in itertools.chain(t, t2)):
        raise TableMismatch("ids do not belong to this table")
    return all(table.ext[i][j] == 0 for i in t for j in t2)


@dataclass(frozen=True, eq=False)
class TiltingPoset:
    table: IndecTable
    elements: tuple
    poset: ps.Poset

    @property
    def leq(self):
        return self.poset.leq

    @property
    def hasse(self):
        return ps.hasse(self.poset)

    def __len__(self):
        return len(self.elements)

    def index(self, t):
        return self.elements.index(frozenset(t))

    def label(self, i):
        return ",".join(self.table.names(self.elements[i]))

    def labels(self):
        return [self.label(i) for i in range(len(self))]

    def find(self, label):
        """Index of the element written as comma-joined indecomposable labels."""
        ids = frozenset(self.table.id_by_label(s) for s in label.split(","))
        return self.index(ids)

    def to_dot(self, bold=(), name="tilting"):
        return ps.to_dot(self.poset, self.labels(), bold, name)

    def to_dict(self):
        return {
            "quiver": self.table.quiver.to_dict(),
            "elements": [self.table.names(t) for t in self.elements],
            "leq": [[int(x) for x in row] for row in self.leq],
            "hasse": [list(e) for e in self.hasse],
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def build_poset(table: IndecTable) -> TiltingPoset:
    elements = tuple(enumerate_tilting(table))
    order = tuple(tuple(leq(a, b, table) for b in elements) for a in elements)
    return TiltingPoset(table, elements, ps.Poset(order))


@functools.lru_cache(maxsize=256)
def tilting_poset(q) -> TiltingPoset:
    """Tilting poset of a representation-finite quiver (cached)."""
    return build_poset(build_table(q))


def with_summand(tp: TiltingPoset, s) -> list:
    return [i for i, t in enumerate(tp.elements) if s in t]


def module_of(t, table: IndecTable):
    return rp.direct_sum([table.reps[i] for i in sorted(t)], table.quiver)


def _check_sub(table, sub_table, x):
    if sub_table.quiver != qv.delete_vertex(table.quiver, x):
        raise QuiverMismatch(f"second table is not over the quiver with {x} deleted")


def _pi(t, x, table, sub_table):
    _check_sub(table, sub_table, x)
    return basic(decompose(rp.restrict(module_of(t, table), x), sub_table))


def pi_source(t, x, table: IndecTable, sub_table: IndecTable) -> frozenset:
    """basic(restriction of T), for ``x`` a source."""
    if x not in qv.sources(table.quiver):
        raise NotSource(f"vertex {x} is not a source")
    return _pi(t, x, table, sub_table)


def pi_sink(t, x, table: IndecTable, sub_table: IndecTable) -> frozenset:
    if x not in qv.sinks(table.quiver):
        raise NotSink(f"vertex {x} is not a sink")
    return _pi(t, x, table, sub_table)


def iota_source(t, x, sub_table: IndecTable, table: IndecTable) -> frozenset:
    """S_x plus the right adjoint extension of every summand of ``t``."""
    _check_sub(table, sub_table, x)
    q = table.quiver
    ext = (rp.extend_source(sub_table.reps[i], q, x) for i in t)
    return frozenset(table.identify(m) for m in ext) | {table.simple_id(x)}


def iota_sink(t, x, sub_table: IndecTable, table: IndecTable) -> frozenset:
    """S'_x plus the left adjoint extension of every summand of ``t``."""
    _check_sub(table, sub_table, x)
    q = table.quiver
    ext = (rp.extend_sink(sub_table.reps[i], q, x) for i in t)
    return frozenset(table.identify(m) for m in ext) | {table.simple_id(x)}
