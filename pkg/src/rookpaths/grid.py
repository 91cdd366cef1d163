"""Cartesian products of complete graphs, viewed as toroidal grids.

The graph K_n [box] K_m has vertex set Z_n x Z_m, and two vertices are
adjacent exactly when they agree in one coordinate.  Each row induces a
copy of K_m (its edges are "horizontal"), each column a copy of K_n
("vertical"), so the edge count is n*C(m,2) + m*C(n,2).

Graphs are kept implicit: the two dimensions determine everything, and
vertices and edges are enumerated on demand.  All values here are
immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator

__all__ = [
    "DimensionError",
    "EdgeKind",
    "GridEdge",
    "GridGraph",
    "GridVertex",
    "Step",
    "classify_edge",
    "edge_difference",
    "make_grid",
]


class DimensionError(ValueError):
    """A grid dimension outside the supported range."""


@dataclass(frozen=True, order=True, slots=True)
class GridVertex:
    """A point of Z_n x Z_m; ordering is lexicographic by (row, col)."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True, slots=True)
class Step:
    """Difference between consecutive walk vertices.

    A step moves along a single grid line, so exactly one component may
    be nonzero once reduced modulo the grid dimensions.  Reduction needs
    the dimensions and therefore happens where they are known (see
    walk_from_array); only the always-degenerate (0, 0) is rejected here.
    """

    drow: int
    dcol: int

    def __post_init__(self) -> None:
        if self.drow == 0 and self.dcol == 0:
            raise ValueError("degenerate step (0,0)")

    def __str__(self) -> str:
        return f"({self.drow},{self.dcol})"


class EdgeKind(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True, order=True, slots=True)
class GridEdge:
    """Unordered pair of grid vertices that agree in exactly one coordinate.

    Endpoints are stored in lexicographic order, so equal edges compare
    and hash equal and collections of edges behave as sets of unordered
    pairs.  Pairs that differ in both coordinates (or none) are rejected.
    """

    u: GridVertex
    v: GridVertex

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"degenerate edge at {self.u}")
        if self.u.row != self.v.row and self.u.col != self.v.col:
            raise ValueError(f"{self.u}-{self.v} is not a grid edge")
        if self.v < self.u:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True, slots=True)
class GridGraph:
    """K_n [box] K_m.  Holds only the dimensions."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise DimensionError(f"grid needs n, m >= 2, got {self.n} x {self.m}")

    @property
    def vertex_count(self) -> int:
        return self.n * self.m

    @property
    def edge_count(self) -> int:
        return self.n * comb(self.m, 2) + self.m * comb(self.n, 2)

    def vertex(self, row: int, col: int) -> GridVertex:
        return GridVertex(row % self.n, col % self.m)

    def contains(self, v: GridVertex) -> bool:
        return 0 <= v.row < self.n and 0 <= v.col < self.m

    def vertices(self) -> Iterator[GridVertex]:
        for a in range(self.n):
            for b in range(self.m):
                yield GridVertex(a, b)

    def edges(self) -> Iterator[GridEdge]:
        """Every edge once: horizontal by (row, col, col'), then vertical by (col, row, row')."""
        for a in range(self.n):
            for b1 in range(self.m):
                for b2 in range(b1 + 1, self.m):
                    yield GridEdge(GridVertex(a, b1), GridVertex(a, b2))
        for b in range(self.m):
            for a1 in range(self.n):
                for a2 in range(a1 + 1, self.n):
                    yield GridEdge(GridVertex(a1, b), GridVertex(a2, b))

    def edge(self, u: GridVertex, v: GridVertex) -> GridEdge:
        """Canonical edge on two vertices of this graph."""
        if not (self.contains(u) and self.contains(v)):
            raise ValueError(f"{u}-{v} is not inside the {self.n} x {self.m} grid")
        return GridEdge(u, v)

    def degree(self, v: GridVertex) -> int:
        return (self.n - 1) + (self.m - 1)

    def shift(self, v: GridVertex, s: Step) -> GridVertex:
        return GridVertex((v.row + s.drow) % self.n, (v.col + s.dcol) % self.m)

    def vertex_label(self, v: GridVertex) -> str:
        return f"{v.row},{v.col}"

    def __str__(self) -> str:
        return f"K_{self.n} box K_{self.m}"


def make_grid(n: int, m: int) -> GridGraph:
    """The graph K_n [box] K_m for n, m >= 2."""
    return GridGraph(n, m)


def classify_edge(g: GridGraph, e: GridEdge) -> EdgeKind:
    """HORIZONTAL when the rows agree, VERTICAL when the columns agree."""
    if not (g.contains(e.u) and g.contains(e.v)):
        raise ValueError(f"{e} is not an edge of {g}")
    return EdgeKind.HORIZONTAL if e.u.row == e.v.row else EdgeKind.VERTICAL


def edge_difference(g: GridGraph, e: GridEdge, base: GridVertex) -> Step:
    """Displacement from ``base`` to the other endpoint of ``e``, reduced mod (n, m).

    Exactly one component of the result is nonzero.  Reading the same
    edge from each endpoint gives steps that are negatives of each other
    modulo the grid dimensions.
    """
    if base == e.u:
        other = e.v
    elif base == e.v:
        other = e.u
    else:
        raise ValueError(f"{base} is not an endpoint of {e}")
    return Step((other.row - base.row) % g.n, (other.col - base.col) % g.m)
