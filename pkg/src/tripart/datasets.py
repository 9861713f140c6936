"""Bundled example complexes."""

from __future__ import annotations

from importlib import resources

from .complexes import OrderedComplex, from_boundary_format, from_simplicial_format

__all__ = ["names", "load", "read_text"]

_FILES = {
    "point": "point.smp",
    "triangle_graph": "triangle_graph.smp",
    "tetrahedron_boundary": "tetrahedron_boundary.smp",
    "two_component_graph": "two_component_graph.smp",
    "annulus": "annulus.bnd",
    "annulus_coarse": "annulus_coarse.bnd",
    "wheel": "wheel.bnd",
}


def names() -> list[str]:
    return sorted(_FILES)


def read_text(name: str) -> str:
    return (resources.files("tripart") / "data" / _FILES[name]).read_text()


def load(name: str) -> OrderedComplex:
    text = read_text(name)
    if _FILES[name].endswith(".bnd"):
        return from_boundary_format(text)
    return from_simplicial_format(text)
