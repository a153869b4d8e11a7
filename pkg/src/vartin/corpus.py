"""Bundled Coxeter graphs used by the self test and the test suite."""

from __future__ import annotations

from .coxeter import CoxeterGraph, graph_from_dict

GRAPHS = {
    "a1": {"vertices": ["s"], "edges": []},
    "a2": {"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 3}]},
    "b2": {"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 4}]},
    "i2_5": {"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 5}]},
    "i2_6": {"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 6}]},
    "a1xa1": {"vertices": ["s", "t"], "edges": []},
    "a3": {"vertices": ["s", "t", "u"],
           "edges": [{"u": "s", "v": "t", "m": 3}, {"u": "t", "v": "u", "m": 3}]},
    # Affine triangle: infinite W, infinite root system.
    "affine_a2": {"vertices": ["s", "t", "u"],
                  "edges": [{"u": "s", "v": "t", "m": 3},
                            {"u": "t", "v": "u", "m": 3},
                            {"u": "s", "v": "u", "m": 3}]},
}

SPHERICAL = ("a1", "a2", "b2", "i2_5", "i2_6", "a1xa1", "a3")


def names() -> list[str]:
    return list(GRAPHS)


def graph(name: str) -> CoxeterGraph:
    return graph_from_dict(GRAPHS[name])
