"""Exact tilting-module combinatorics for Dynkin quivers.

Enumerates indecomposables and basic tilting modules of representation-finite
quivers over the rationals, builds the tilting poset, and checks that the
posets of two quivers related by a BGP reflection at a source are related by
a flip-flop.
"""
from .errors import EngineBug, TiltlabError
from .quiver import DynkinType, Quiver, classify, delete_vertex, reflect, sinks, sources, validate
from .indec import IndecTable, build_table
from .tilting import TiltingPoset, build_poset, tilting_poset
from .verify import FlipFlopReport, sweep, verify_flipflop

__version__ = "0.1.0"

__all__ = [
    "EngineBug",
    "TiltlabError",
    "DynkinType",
    "Quiver",
    "classify",
    "delete_vertex",
    "reflect",
    "sinks",
    "sources",
    "validate",
    "IndecTable",
    "build_table",
    "TiltingPoset",
    "build_poset",
    "tilting_poset",
    "FlipFlopReport",
    "sweep",
    "verify_flipflop",
]
