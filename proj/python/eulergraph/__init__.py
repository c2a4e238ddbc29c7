"""Euler class pipelines for taut ideal triangulations.

Thin wrapper over the native core: every operation takes triangulation text
(or branched-complex JSON) and returns the same report dictionaries the CLI
emits, minus the command envelope.
"""

import json as _json

from ._eulergraph import DomainError, InputError
from ._eulergraph import (
    branched_roundtrip as _branched_roundtrip,
    enumerate_orientations as _enumerate_orientations,
    euler_dunfield as _euler_dunfield,
    homology as _homology,
    maw_graph as _maw_graph,
    swap as _swap,
    taut_euler as _taut_euler,
    taut_find as _taut_find,
    validate as _validate,
)

__all__ = [
    "DomainError",
    "InputError",
    "validate",
    "homology",
    "enumerate_orientations",
    "euler_dunfield",
    "taut_find",
    "taut_euler",
    "maw_graph",
    "swap",
    "branched_roundtrip",
]


def validate(text):
    """Class counts, link types, and validity flags for triangulation text."""
    return _json.loads(_validate(text))


def homology(text, k=None):
    """Homology of the dual complex; one degree if ``k`` is given, else all."""
    return _json.loads(_homology(text, k))


def enumerate_orientations(text, limit=0, count_only=False):
    """Acyclic edge-class orientations; ``limit=0`` means unlimited."""
    return _json.loads(_enumerate_orientations(text, limit, count_only))


def euler_dunfield(text, orient):
    """Euler cochain and class of an acyclic orientation on a closed triangulation."""
    return _json.loads(_euler_dunfield(text, orient))


def taut_find(text):
    """All taut structures of an ideal triangulation, as literals."""
    return _json.loads(_taut_find(text))


def taut_euler(text, taut):
    """Lackenby chains, classes, and checks for one taut structure."""
    return _json.loads(_taut_euler(text, taut))


def maw_graph(branched):
    """Maw dual graph and cycle law report for a branched complex.

    Accepts the branched complex as a JSON string or a dict.
    """
    if not isinstance(branched, str):
        branched = _json.dumps(branched)
    return _json.loads(_maw_graph(branched))


def swap(k, delta):
    """Difference class ``(2 - k) * delta`` for a swap along a disk.

    ``delta`` may be a homology-class dict, a bare list of free coordinates,
    or the JSON text of either.
    """
    if not isinstance(delta, str):
        delta = _json.dumps(delta)
    return _json.loads(_swap(k, delta))


def branched_roundtrip(branched):
    """Parse and re-serialize a branched complex to the stable key order."""
    if not isinstance(branched, str):
        branched = _json.dumps(branched)
    return _branched_roundtrip(branched)
