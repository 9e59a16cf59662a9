"""Finite acyclic quivers, BGP reflection of arrows and Dynkin classification."""
from __future__ import annotations

import heapq
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

from .errors import BadArrow, CyclicQuiver, NotSourceOrSink, UnknownVertex

__all__ = [
    "Quiver",
    "DynkinType",
    "validate",
    "sources",
    "sinks",
    "delete_vertex",
    "reflect",
    "classify",
    "components",
    "is_rep_finite",
    "dynkin_edges",
    "orientations",
    "linear_a",
]


@dataclass(frozen=True)
class Quiver:
    """An acyclic quiver.

    ``vertices`` keeps the input order and ``arrows`` is a tuple of
    ``(source, target)`` pairs; arrow positions are significant, since block
    layouts of the extension functors follow them. Build instances through
    :func:`validate`.
    """

    vertices: tuple
    arrows: tuple
    topo_order: tuple = field(compare=False, repr=False, default=())

    @property
    def n(self):
        return len(self.vertices)

    def index(self, v):
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(f"vertex {v!r} not in quiver") from None

    def check_vertex(self, v):
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v!r} not in quiver")

    def out_arrows(self, v):
        """Indices of arrows starting at ``v``, in arrow order."""
        return [k for k, (s, _) in enumerate(self.arrows) if s == v]

    def in_arrows(self, v):
        return [k for k, (_, t) in enumerate(self.arrows) if t == v]

    def to_dict(self):
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        return validate(data["vertices"], [tuple(a) for a in data["arrows"]])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __str__(self):
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"no Dynkin diagram {self.family}_{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self):
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "D":
            return n * (n - 1)
        return {6: 36, 7: 63, 8: 120}[n]


def validate(vertices, arrows) -> Quiver:
    """Check raw vertex/arrow data and return a :class:`Quiver`.

    Raises :class:`BadArrow` for an undeclared endpoint and
    :class:`CyclicQuiver` when there is an oriented cycle (including loops).
    """
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"duplicate vertex ids in {list(vertices)}")
    vset = set(vertices)
    arrows = tuple((s, t) for s, t in arrows)
    for s, t in arrows:
        if s not in vset or t not in vset:
            raise BadArrow(f"arrow {s}->{t} has an undeclared endpoint")

    # Kahn with a heap over vertex positions so the order is deterministic.
    pos = {v: k for k, v in enumerate(vertices)}
    indeg = Counter(t for _, t in arrows)
    succ = {v: [] for v in vertices}
    for s, t in arrows:
        succ[s].append(t)
    heap = [pos[v] for v in vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = vertices[heapq.heappop(heap)]
        order.append(v)
        for t in succ[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, pos[t])
    if len(order) != len(vertices):
        raise CyclicQuiver("quiver has an oriented cycle")
    return Quiver(vertices, arrows, tuple(order))


def sources(q: Quiver) -> set:
    targets = {t for _, t in q.arrows}
    return {v for v in q.vertices if v not in targets}


def sinks(q: Quiver) -> set:
    starts = {s for s, _ in q.arrows}
    return {v for v in q.vertices if v not in starts}


def delete_vertex(q: Quiver, x) -> Quiver:
    q.check_vertex(x)
    return validate(
        [v for v in q.vertices if v != x],
        [a for a in q.arrows if x not in a],
    )


def reflect(q: Quiver, x) -> Quiver:
    """Reverse every arrow incident to the source or sink ``x``.

    Arrow positions are kept, so arrow ``k`` of the result is arrow ``k`` of
    ``q`` turned around when it touches ``x``.
    """
    q.check_vertex(x)
    if x not in sources(q) and x not in sinks(q):
        raise NotSourceOrSink(f"vertex {x} is neither a source nor a sink")
    arrows = [(t, s) if x in (s, t) else (s, t) for s, t in q.arrows]
    return validate(q.vertices, arrows)


def components(q: Quiver) -> list:
    """Connected components of the underlying graph, as vertex lists."""
    adj = {v: set() for v in q.vertices}
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = set()
    comps = []
    for v in q.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp, key=q.vertices.index))
    return comps


def classify(q: Quiver):
    """Return the ADE type of a connected, simply laced quiver, else ``None``."""
    n = q.n
    if n == 0 or len(components(q)) != 1:
        return None
    edges = [frozenset(a) for a in q.arrows]
    if len(set(edges)) != len(edges) or len(edges) != n - 1:
        return None  # parallel arrows or a cycle in the underlying graph
    if n == 1:
        return DynkinType("A", 1)
    adj = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        adj[s].append(t)
        adj[t].append(s)
    branch = [v for v in q.vertices if len(adj[v]) >= 3]
    if not branch:
        return DynkinType("A", n)
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        return None
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return DynkinType("E", n)
    return None


def is_rep_finite(q: Quiver) -> bool:
    """True when every connected component is a Dynkin quiver.

    The empty quiver counts as representation-finite.
    """
    for comp in components(q):
        sub = validate(comp, [a for a in q.arrows if a[0] in comp])
        if classify(sub) is None:
            return False
    return True


def dynkin_edges(dt: DynkinType) -> list:
    """Edge list of the standard diagram on vertices ``1..rank``.

    D_n hangs vertex n off n-2; E_n hangs vertex n off vertex 3 of the
    path 1..n-1.
    """
    n = dt.rank
    if dt.family == "A":
        return [(k, k + 1) for k in range(1, n)]
    if dt.family == "D":
        return [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    return [(k, k + 1) for k in range(1, n - 1)] + [(3, n)]


def orientations(dt: DynkinType):
    """Yield every orientation of the diagram, in a fixed order."""
    edges = dynkin_edges(dt)
    verts = list(range(1, dt.rank + 1))
    for flips in itertools.product((False, True), repeat=len(edges)):
        arrows = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flips)]
        yield validate(verts, arrows)


def linear_a(n: int) -> Quiver:
    """The linearly oriented quiver 1 -> 2 -> ... -> n."""
    return validate(range(1, n + 1), [(k, k + 1) for k in range(1, n)])
