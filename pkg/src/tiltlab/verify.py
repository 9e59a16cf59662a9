"""Flip-flop verification for a quiver and a source, and sweeps over orientations."""
from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import poset as ps
from . import quiver as qv
from .bgp import rho
from .errors import GuardExceeded, NotMonotone, NotRepFinite, NotSource
from .indec import build_table
from .tilting import iota_sink, iota_source, pi_sink, pi_source, tilting_poset, with_summand

__all__ = ["FlipFlopReport", "verify_flipflop", "sweep", "sweep_instances", "DEFAULT_GUARD", "worker_count"]

log = logging.getLogger(__name__)

DEFAULT_GUARD = {"A": 5, "D": 4, "E": 0}
CHECK_NAMES = ("ffsource", "ffsink", "rho_iso", "iota_iso", "commute", "theorem")


@dataclass
class FlipFlopReport:
    quiver: dict
    reflected: dict
    source: object
    sizes: dict
    checks: dict
    witnesses: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(self.checks.get(k, False) for k in CHECK_NAMES)

    def to_dict(self):
        return asdict(self)


def _order_iso_failures(p, p2, mapping, labels, labels2):
    """Pairs on which ``mapping`` fails to reflect or preserve the order."""
    bad = []
    for a in range(p.size):
        for b in range(p.size):
            if p.leq[a][b] != p2.leq[mapping[a]][mapping[b]]:
                bad.append([labels[a], labels[b]])
    return bad


def verify_flipflop(q: qv.Quiver, x, check_isomorphism=True) -> FlipFlopReport:
    """Run the whole chain of checks for the reflection of ``q`` at the source ``x``.

    Checks, in report order: ``ffsource`` (T_Q is the plus-gluing of X and Y
    along f = iota o pi), ``ffsink`` (T_Q' is the minus-gluing along
    f' = iota' o pi'), ``rho_iso``, ``iota_iso``, ``commute``
    (pi = pi' o rho on X) and ``theorem`` (T_Q and T_Q' are the plus- and
    minus-gluings of the same X, Y, f).
    """
    started = time.perf_counter()
    q.check_vertex(x)
    if x not in qv.sources(q):
        raise NotSource(f"vertex {x} is not a source")
    if not qv.is_rep_finite(q):
        raise NotRepFinite(f"{q} is not representation-finite")
    qr = qv.reflect(q, x)
    sub = qv.delete_vertex(q, x)
    assert sub == qv.delete_vertex(qr, x)

    tab, tab_r, tab_s = build_table(q), build_table(qr), build_table(sub)
    tp, tp_r, tp_s = tilting_poset(q), tilting_poset(qr), tilting_poset(sub)
    lab, lab_r, lab_s = tp.labels(), tp_r.labels(), tp_s.labels()
    sx, sx_r = tab.simple_id(x), tab_r.simple_id(x)

    Y = with_summand(tp, sx)
    X = [i for i in range(len(tp)) if i not in set(Y)]
    Yr = with_summand(tp_r, sx_r)
    Xr = [i for i in range(len(tp_r)) if i not in set(Yr)]

    checks, witnesses, bad = {}, {}, {}

    # restriction and extension maps on elements
    pi = {i: tp_s.index(pi_source(tp.elements[i], x, tab, tab_s)) for i in range(len(tp))}
    pi_r = {i: tp_s.index(pi_sink(tp_r.elements[i], x, tab_r, tab_s)) for i in range(len(tp_r))}
    iota = [tp.index(iota_source(t, x, tab_s, tab)) for t in tp_s.elements]
    iota_r = [tp_r.index(iota_sink(t, x, tab_s, tab_r)) for t in tp_s.elements]

    # 4. iota, iota' are isomorphisms onto Y, Y'
    ok = True
    for name, img, target, big, big_lab in (
        ("iota", iota, Y, tp, lab),
        ("iota_sink", iota_r, Yr, tp_r, lab_r),
    ):
        witnesses[name] = {lab_s[i]: big_lab[j] for i, j in enumerate(img)}
        if sorted(img) != sorted(target):
            ok = False
            bad[name] = {"image": sorted(big_lab[j] for j in img), "target": sorted(big_lab[j] for j in target)}
            continue
        pos = [target.index(j) for j in img]
        ysub = big.poset.induced(target)
        if not ps.is_order_isomorphism(tp_s.poset, ysub, pos):
            ok = False
            bad[name] = _order_iso_failures(tp_s.poset, ysub, pos, lab_s, [big_lab[j] for j in target])
    checks["iota_iso"] = ok
    iota_inv = {j: i for i, j in enumerate(iota)}

    def gluing_map(Xs, Ys, pi_map, iota_map):
        """f = iota o pi as a map from X-positions to Y-positions."""
        return [Ys.index(iota_map[pi_map[i]]) if iota_map[pi_map[i]] in Ys else None for i in Xs]

    # 1. T_Q = (X u Y, <=_+^f)
    px, py = tp.poset.induced(X), tp.poset.induced(Y)
    fvals = gluing_map(X, Y, pi, iota)
    witnesses["f"] = {lab[i]: lab[Y[v]] if v is not None else None for i, v in zip(X, fvals)}
    f = None
    if None not in fvals:
        try:
            f = ps.check_monotone(px, py, fvals)
        except NotMonotone as exc:
            bad["f"] = [lab[X[k]] for k in exc.witness]
    if f is not None:
        natural = X + Y
        glued = ps.flip_flop_plus(f)
        checks["ffsource"] = ps.is_order_isomorphism(glued, tp.poset, natural)
        if not checks["ffsource"]:
            bad["ffsource"] = _order_iso_failures(glued, tp.poset, natural, [lab[i] for i in natural], lab)
    else:
        checks["ffsource"] = False

    # 2. T_Q' = (X' u Y', <=_-^f')
    pxr, pyr = tp_r.poset.induced(Xr), tp_r.poset.induced(Yr)
    fvals_r = gluing_map(Xr, Yr, pi_r, iota_r)
    witnesses["f_sink"] = {lab_r[i]: lab_r[Yr[v]] if v is not None else None for i, v in zip(Xr, fvals_r)}
    f_r = None
    if None not in fvals_r:
        try:
            f_r = ps.check_monotone(pxr, pyr, fvals_r)
        except NotMonotone as exc:
            bad["f_sink"] = [lab_r[Xr[k]] for k in exc.witness]
    if f_r is not None:
        natural_r = Xr + Yr
        glued_r = ps.flip_flop_minus(f_r)
        checks["ffsink"] = ps.is_order_isomorphism(glued_r, tp_r.poset, natural_r)
        if not checks["ffsink"]:
            bad["ffsink"] = _order_iso_failures(glued_r, tp_r.poset, natural_r, [lab_r[i] for i in natural_r], lab_r)
    else:
        checks["ffsink"] = False

    # 3. rho: X -> X' is an order isomorphism
    rho_img = [tp_r.index(rho(tp.elements[i], x, tab, tab_r)) for i in X]
    witnesses["rho"] = {lab[i]: lab_r[j] for i, j in zip(X, rho_img)}
    checks["rho_iso"] = sorted(rho_img) == sorted(Xr)
    if checks["rho_iso"]:
        rpos = [Xr.index(j) for j in rho_img]
        checks["rho_iso"] = ps.is_order_isomorphism(px, pxr, rpos)
        if not checks["rho_iso"]:
            bad["rho"] = _order_iso_failures(px, pxr, rpos, [lab[i] for i in X], [lab_r[j] for j in Xr])
    else:
        bad["rho"] = {"image": sorted(lab_r[j] for j in rho_img), "target": sorted(lab_r[j] for j in Xr)}

    # 5. pi = pi' o rho on X
    mismatch = [lab[i] for i, j in zip(X, rho_img) if pi[i] != pi_r[j]]
    checks["commute"] = not mismatch
    if mismatch:
        bad["commute"] = mismatch

    # 6. T_Q' is the minus-gluing of the same (X, Y, f): X via rho, Y via iota' o iota^-1
    theorem = checks["ffsource"] and f is not None
    if theorem:
        transport = rho_img + [iota_r[iota_inv[j]] for j in Y]
        theorem = sorted(transport) == list(range(len(tp_r))) and ps.is_order_isomorphism(
            ps.flip_flop_minus(f), tp_r.poset, transport
        )
        witnesses["transport"] = {lab[i]: lab_r[j] for i, j in zip(X + Y, transport)}
    checks["theorem"] = bool(theorem)

    if check_isomorphism:
        iso = ps.is_isomorphic(tp.poset, tp_r.poset)
        witnesses["posets_isomorphic"] = iso is not None
        witnesses["poset_isomorphism"] = None if iso is None else {lab[i]: lab_r[j] for i, j in enumerate(iso)}

    sizes = {
        "T_Q": len(tp),
        "T_Q_reflected": len(tp_r),
        "T_Q_x": len(Y),
        "T_Q_reflected_x": len(Yr),
        "T_Q_minus_x": len(tp_s),
    }
    report = FlipFlopReport(
        quiver=q.to_dict(),
        reflected=qr.to_dict(),
        source=x,
        sizes=sizes,
        checks={k: bool(checks[k]) for k in CHECK_NAMES},
        witnesses=witnesses,
        counterexamples=bad,
        seconds=round(time.perf_counter() - started, 4),
    )
    if not report.passed:
        log.warning("flip-flop verification failed for %s at %s: %s", q, x, bad)
    return report


def sweep_instances(dt: qv.DynkinType, guard=None):
    """Every (orientation, source) pair of the diagram, after the rank guard."""
    guard = {**DEFAULT_GUARD, **(guard or {})}
    if dt.rank > guard.get(dt.family, 0):
        raise GuardExceeded(f"{dt} exceeds the sweep guard ({dt.family} rank <= {guard.get(dt.family, 0)})")
    return [(q, x) for q in qv.orientations(dt) for x in q.vertices if x in qv.sources(q)]


def worker_count():
    """Worker cap from ``TILTLAB_THREADS``; 0 means run in-process."""
    raw = os.environ.get("TILTLAB_THREADS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    return max(0, int(raw))


def _run(args):
    q, x, check_iso = args
    return verify_flipflop(q, x, check_isomorphism=check_iso)


def sweep(dt: qv.DynkinType, guard=None, check_isomorphism=False, workers=None):
    """One report per (orientation, source) pair, in orientation order."""
    jobs = [(q, x, check_isomorphism) for q, x in sweep_instances(dt, guard)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_run, jobs))
