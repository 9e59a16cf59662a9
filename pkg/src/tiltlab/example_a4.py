"""Replay of the A4 worked example against the bundled fixture data.

The fixtures under ``tiltlab/data`` record the drawn Hasse diagrams of the
two tilting posets, the value of the restriction map at vertex 4 on every
drawn node, and the reflection correspondence on indecomposables.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from . import quiver as qv
from . import rep as rp
from .bgp import reflect_source
from .errors import HasSimpleSummandAtX
from .indec import build_table
from .tilting import pi_sink, pi_source, tilting_poset, with_summand

FIXTURE_FILES = ("a4_hasse.json", "a4_restriction.json", "a4_reflection.json")


def load_fixtures(directory=None) -> dict:
    out = {}
    for name in FIXTURE_FILES:
        if directory is None:
            text = resources.files("tiltlab").joinpath("data", name).read_text()
        else:
            text = Path(directory, name).read_text()
        out[name.removesuffix(".json").removeprefix("a4_")] = json.loads(text)
    return out


def _set_diff(what, expected, computed):
    lines = []
    for item in sorted(expected - computed, key=str):
        lines.append(f"{what}: - {item}  (fixture only)")
    for item in sorted(computed - expected, key=str):
        lines.append(f"{what}: + {item}  (computed only)")
    return lines


def _compare_diagram(name, fix, x):
    """Nodes, bold nodes, undirected Hasse edges, and min/max of one diagram."""
    q = qv.Quiver.from_dict(fix["quiver"])
    tp = tilting_poset(q)
    table = tp.table
    labels = tp.labels()
    diff = []
    diff += _set_diff(f"{name} nodes", {n["label"] for n in fix["nodes"]}, set(labels))
    bold = with_summand(tp, table.simple_id(x))
    diff += _set_diff(f"{name} bold", {n["label"] for n in fix["nodes"] if n["bold"]},
                      {labels[i] for i in bold})
    diff += _set_diff(
        f"{name} hasse edges",
        {" -- ".join(sorted((e["from"], e["to"]))) for e in fix["edges"]},
        {" -- ".join(sorted((labels[a], labels[b]))) for a, b in tp.hasse},
    )
    proj = ",".join(table.names({table.identify(rp.projective(q, y)) for y in q.vertices}))
    inj = ",".join(table.names({table.identify(rp.injective(q, y)) for y in q.vertices}))
    lo = [labels[i] for i in tp.poset.minima()]
    hi = [labels[i] for i in tp.poset.maxima()]
    if lo != [proj]:
        diff.append(f"{name} minimum: expected the projective module {proj}, computed {lo}")
    if hi != [inj]:
        diff.append(f"{name} maximum: expected the injective module {inj}, computed {hi}")
    return diff


def _compare_restriction(name, fix, sub_table, x, sink):
    q = qv.Quiver.from_dict(fix["quiver"])
    tp = tilting_poset(q)
    restrict_map = pi_sink if sink else pi_source
    diff = []
    for entry in fix["values"]:
        try:
            t = tp.elements[tp.find(entry["node"])]
        except ValueError:
            diff.append(f"{name} at {entry['position']}: node {entry['node']} is not a computed tilting module")
            continue
        got = ",".join(sub_table.names(restrict_map(t, x, tp.table, sub_table)))
        if got != entry["value"]:
            diff.append(f"{name} at {entry['node']} ({entry['position']}): - {entry['value']} + {got}")
    return diff


def _compare_reflection(fix):
    q = qv.Quiver.from_dict(fix["quiver"])
    qr = qv.Quiver.from_dict(fix["reflected"])
    x = fix["source"]
    table, table_r = build_table(q), build_table(qr)
    diff = []
    expected = dict(fix["pairs"])
    computed = {}
    for i, lab in enumerate(table.labels):
        try:
            image = reflect_source(table.reps[i], x)
        except HasSimpleSummandAtX:
            continue
        computed[lab] = table_r.labels[table_r.identify(image)]
    # the listed pairs are symmetric: a <-> b covers a |-> b and b |-> a
    def pairs(mapping):
        return {" <-> ".join(sorted((a, b))) for a, b in mapping.items()}

    diff += _set_diff("reflection", pairs(expected), pairs(computed))
    if len(set(computed.values())) != len(computed):
        diff.append("reflection: not injective on indecomposables")
    excluded = fix["excluded"]
    if excluded in computed:
        diff.append(f"reflection: {excluded} should be rejected, got {computed[excluded]}")
    return diff


def replay(fixtures=None) -> list:
    """Every mismatch between the engine and the fixtures; empty means exact agreement."""
    fixtures = fixtures or load_fixtures()
    hasse, restriction, reflection = fixtures["hasse"], fixtures["restriction"], fixtures["reflection"]
    x = reflection["source"]
    sub_table = build_table(qv.Quiver.from_dict(restriction["sub_quiver"]))
    diff = []
    diff += _compare_diagram("T_Q", hasse["top"], x)
    diff += _compare_diagram("T_Q'", hasse["bottom"], x)
    diff += _compare_restriction("pi_4", restriction["top"], sub_table, x, sink=False)
    diff += _compare_restriction("pi'_4", restriction["bottom"], sub_table, x, sink=True)
    diff += _compare_reflection(reflection)
    return diff
