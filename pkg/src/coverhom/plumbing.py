"""Plumbing graphs and their intersection lattices.

A vertex is a disk bundle over a surface (euler number, genus); an edge is
a plumbing between two distinct vertices. The second homology of the
plumbed 4-manifold carries the graph's intersection matrix: euler numbers
on the diagonal, edge multiplicities off it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, DomainError
from .intlinalg import IntMatrix

__all__ = [
    "PlumbingVertex",
    "PlumbingGraph",
    "linear_chain",
    "milnor_fiber_2_2_d",
    "intersection_matrix",
    "disjoint_union",
]


@dataclass(frozen=True)
class PlumbingVertex:
    euler_number: int
    genus: int
    label: str = ""

    def __post_init__(self):
        if self.genus < 0:
            raise DomainError("vertex genus must be nonnegative")


@dataclass(frozen=True)
class PlumbingGraph:
    """Vertices with an unordered edge list; parallel edges allowed, loops not."""

    vertices: tuple[PlumbingVertex, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.vertices)
        normalized = []
        for e in self.edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionError(f"edge {e} refers outside {n} vertices")
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            normalized.append((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(normalized))

    def __len__(self) -> int:
        return len(self.vertices)


def linear_chain(n: int, euler_number: int, labels: Sequence[str] | None = None) -> PlumbingGraph:
    """Path of n genus-0 vertices, all with the given euler number."""
    if n < 0:
        raise DomainError("chain length must be nonnegative")
    if labels is None:
        labels = tuple(f"sphere {i + 1}" for i in range(n))
    elif len(labels) != n:
        raise DimensionError(f"{len(labels)} labels for a chain of {n} vertices")
    verts = tuple(PlumbingVertex(euler_number, 0, lab) for lab in labels)
    edges = tuple((i, i + 1) for i in range(n - 1))
    return PlumbingGraph(verts, edges)


def milnor_fiber_2_2_d(d: int, labels: Sequence[str] | None = None) -> PlumbingGraph:
    """Sphere chain of the d-fold cover of the ball branched over {z1*z2 = eps}.

    A chain of d - 1 spheres of square -2; d = 1 gives the empty graph
    (a multiplicity-1 sheet contributes no spheres).
    """
    if d < 1:
        raise DomainError(f"cover multiplicity must be at least 1, got {d}")
    return linear_chain(d - 1, -2, labels=labels)


def intersection_matrix(g: PlumbingGraph) -> IntMatrix:
    """Symmetric pairing matrix: euler numbers on the diagonal, edge counts off it."""
    n = len(g)
    grid = [[0] * n for _ in range(n)]
    for i, vert in enumerate(g.vertices):
        grid[i][i] = vert.euler_number
    for i, j in g.edges:
        grid[i][j] += 1
        grid[j][i] += 1
    return IntMatrix(n, n, tuple(e for row in grid for e in row))


def disjoint_union(graphs: Sequence[PlumbingGraph]) -> PlumbingGraph:
    """Concatenate graphs, shifting edge indices past earlier vertex blocks."""
    verts: list[PlumbingVertex] = []
    edges: list[tuple[int, int]] = []
    for g in graphs:
        off = len(verts)
        verts.extend(g.vertices)
        edges.extend((i + off, j + off) for i, j in g.edges)
    return PlumbingGraph(tuple(verts), tuple(edges))
