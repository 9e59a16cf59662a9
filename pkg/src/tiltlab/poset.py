"""Finite posets as dense boolean matrices, flip-flops and isomorphism search."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAPartialOrder, NotMonotone

__all__ = [
    "Poset",
    "MonotoneMap",
    "check_monotone",
    "flip_flop_plus",
    "flip_flop_minus",
    "is_order_isomorphism",
    "is_isomorphic",
    "is_up_closed",
    "is_down_closed",
    "hasse",
    "transitive_closure",
    "to_dot",
]


def _axiom_failure(leq):
    n = len(leq)
    for i in range(n):
        if not leq[i][i]:
            return f"not reflexive at {i}"
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                return f"not antisymmetric at ({i}, {j})"
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        return f"not transitive at ({i}, {j}, {k})"
    return None


@dataclass(frozen=True)
class Poset:
    """``leq[i][j]`` is true iff element ``i`` is below element ``j``."""

    leq: tuple

    def __post_init__(self):
        object.__setattr__(self, "leq", tuple(tuple(bool(x) for x in row) for row in self.leq))
        if any(len(row) != len(self.leq) for row in self.leq):
            raise ValueError("order matrix must be square")
        problem = _axiom_failure(self.leq)
        if problem:
            raise NotAPartialOrder(problem)

    @property
    def size(self):
        return len(self.leq)

    def __len__(self):
        return len(self.leq)

    def lt(self, i, j):
        return i != j and self.leq[i][j]

    def induced(self, subset):
        """Subposet on ``subset`` (an index sequence, order kept)."""
        subset = list(subset)
        return Poset(tuple(tuple(self.leq[a][b] for b in subset) for a in subset))

    def minima(self):
        return [i for i in range(self.size) if not any(self.lt(j, i) for j in range(self.size))]

    def maxima(self):
        return [i for i in range(self.size) if not any(self.lt(i, j) for j in range(self.size))]

    @classmethod
    def chain(cls, n):
        return cls(tuple(tuple(i <= j for j in range(n)) for i in range(n)))

    @classmethod
    def antichain(cls, n):
        return cls(tuple(tuple(i == j for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class MonotoneMap:
    domain: Poset
    codomain: Poset
    mapping: tuple

    def __call__(self, i):
        return self.mapping[i]


def check_monotone(domain: Poset, codomain: Poset, mapping) -> MonotoneMap:
    mapping = tuple(mapping)
    if len(mapping) != domain.size:
        raise ValueError("map must assign an image to every element of the domain")
    if any(not 0 <= m < codomain.size for m in mapping):
        raise ValueError("map leaves the codomain")
    for a in range(domain.size):
        for b in range(domain.size):
            if domain.leq[a][b] and not codomain.leq[mapping[a]][mapping[b]]:
                raise NotMonotone(f"{a} <= {b} but f({a}) !<= f({b})", witness=(a, b))
    return MonotoneMap(domain, codomain, mapping)


def flip_flop_plus(f: MonotoneMap) -> Poset:
    """Glue X below Y: ``x <= y`` iff ``f(x) <= y``.

    Elements ``0..|X|-1`` are X, the rest are Y.
    """
    return _glue(f, plus=True)


def flip_flop_minus(f: MonotoneMap) -> Poset:
    """Glue Y below X: ``y <= x`` iff ``y <= f(x)``."""
    return _glue(f, plus=False)


def _glue(f, plus):
    X, Y = f.domain, f.codomain
    nx, ny = X.size, Y.size
    n = nx + ny
    leq = [[False] * n for _ in range(n)]
    for a in range(nx):
        for b in range(nx):
            leq[a][b] = X.leq[a][b]
    for a in range(ny):
        for b in range(ny):
            leq[nx + a][nx + b] = Y.leq[a][b]
    for x in range(nx):
        for y in range(ny):
            if plus:
                leq[x][nx + y] = Y.leq[f(x)][y]
            else:
                leq[nx + y][x] = Y.leq[y][f(x)]
    return Poset(tuple(map(tuple, leq)))


def is_order_isomorphism(p: Poset, p2: Poset, mapping) -> bool:
    """True iff ``mapping`` is a bijection with ``a <= b <=> m(a) <= m(b)``."""
    mapping = list(mapping)
    if p.size != p2.size or sorted(mapping) != list(range(p2.size)):
        return False
    return all(
        p.leq[a][b] == p2.leq[mapping[a]][mapping[b]]
        for a in range(p.size)
        for b in range(p.size)
    )


def _signature(p: Poset):
    n = p.size
    covers = hasse(p)
    up_deg = [0] * n
    down_deg = [0] * n
    for a, b in covers:
        up_deg[a] += 1
        down_deg[b] += 1
    height = [0] * n
    # longest chain below each element; indices sorted by down-set size are
    # a linear extension
    by_down = sorted(range(n), key=lambda i: sum(p.leq[j][i] for j in range(n)))
    for i in by_down:
        height[i] = max((height[j] + 1 for j in range(n) if p.lt(j, i)), default=0)
    return [
        (sum(p.leq[j][i] for j in range(n)), sum(p.leq[i][j] for j in range(n)),
         down_deg[i], up_deg[i], height[i])
        for i in range(n)
    ]


def is_isomorphic(p: Poset, p2: Poset):
    """Exact order-isomorphism search.

    Returns a witness list ``m`` (``m[i]`` is the image of ``i``) or ``None``.
    Candidates are pruned by down/up-set sizes, Hasse degrees and height.
    """
    if p.size != p2.size:
        return None
    sig, sig2 = _signature(p), _signature(p2)
    if sorted(sig) != sorted(sig2):
        return None
    n = p.size
    # most constrained (rarest signature) first
    counts = {}
    for s in sig:
        counts[s] = counts.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (counts[sig[i]], sig[i], i))
    cand = {i: [j for j in range(n) if sig2[j] == sig[i]] for i in range(n)}
    image = [None] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        a = order[k]
        for b in cand[a]:
            if used[b]:
                continue
            ok = True
            for c in order[:k]:
                ic = image[c]
                if p.leq[a][c] != p2.leq[b][ic] or p.leq[c][a] != p2.leq[ic][b]:
                    ok = False
                    break
            if ok:
                image[a] = b
                used[b] = True
                if extend(k + 1):
                    return True
                used[b] = False
                image[a] = None
        return False

    if not extend(0):
        return None
    if not (is_order_isomorphism(p, p2, image) and is_order_isomorphism(p2, p, _inverse(image))):
        raise NotAPartialOrder("isomorphism witness failed re-verification")
    return image


def _inverse(m):
    inv = [0] * len(m)
    for a, b in enumerate(m):
        inv[b] = a
    return inv


def is_up_closed(p: Poset, subset) -> bool:
    s = set(subset)
    return all(b in s for a in s for b in range(p.size) if p.leq[a][b])


def is_down_closed(p: Poset, subset) -> bool:
    s = set(subset)
    return all(b in s for a in s for b in range(p.size) if p.leq[b][a])


def hasse(p: Poset) -> list:
    """Covering pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
    n = p.size
    out = []
    for a in range(n):
        for b in range(n):
            if p.lt(a, b) and not any(p.lt(a, c) and p.lt(c, b) for c in range(n)):
                out.append((a, b))
    return out


def transitive_closure(n, edges) -> Poset:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in edges:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return Poset(tuple(map(tuple, leq)))


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Poset, labels=None, bold=(), name="poset") -> str:
    """Graphviz source of the Hasse diagram, edges from smaller to larger."""
    labels = labels or [str(i) for i in range(p.size)]
    bold = set(bold)
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    for i, lab in enumerate(labels):
        attrs = f"label={_quote(lab)}"
        if i in bold:
            attrs += ', fontname="Helvetica-Bold", style=bold'
        lines.append(f"  n{i} [{attrs}];")
    for a, b in hasse(p):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
