"""Staircase step arrays and the walks they trace on square grids.

A walk in K_n [box] K_m is determined by a start vertex and an array of
steps, each moving along a single row or column.  The staircase array
for odd n concatenates (n-1)/2 "stretches"; stretch k has 2n entries
alternating (0, 2k-1) and (2k-1, 0) and ends with (2k, 0), so it sums
to (1, 0).  For n an odd prime the resulting walk from (0, 0) is a path
that meets every orbit of the cyclic row-shift group exactly once,
which is what makes the construction useful downstream.

Two checks are exposed as step-array criteria rather than vertex
scans: a walk is a path iff no contiguous run of steps sums to (0, 0),
and it repeats a row-shift orbit iff some pair of steps violates the
column-sum conditions implemented in one_edge_per_orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .grid import DimensionError, GridEdge, GridVertex, Step

__all__ = [
    "ConstructionInvalid",
    "Walk",
    "build_staircase_path",
    "first_orbit_conflict",
    "first_repeated_vertex",
    "is_path",
    "one_edge_per_orbit",
    "partial_stretch_sum",
    "staircase_array",
    "stretch",
    "walk_from_array",
]


class ConstructionInvalid(RuntimeError):
    """A constructed walk failed one of its certification checks."""

    def __init__(self, check: str, message: str, witness=None):
        super().__init__(message)
        self.check = check
        self.witness = witness


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"staircase arrays need odd n >= 3, got {n}")


def stretch(n: int, k: int) -> tuple[Step, ...]:
    """Stretch k for width n: 2n steps alternating (0, 2k-1), (2k-1, 0), ending (2k, 0)."""
    _require_odd(n)
    if not 1 <= k <= (n - 1) // 2:
        raise ValueError(f"stretch index must satisfy 1 <= k <= {(n - 1) // 2}, got {k}")
    c = 2 * k - 1
    steps = []
    for g in range(1, 2 * n + 1):
        if g == 2 * n:
            steps.append(Step(2 * k, 0))
        elif g % 2:
            steps.append(Step(0, c))
        else:
            steps.append(Step(c, 0))
    return tuple(steps)


def staircase_array(n: int) -> tuple[Step, ...]:
    """Concatenation of stretches 1 .. (n-1)/2; n(n-1) steps in total."""
    _require_odd(n)
    steps: list[Step] = []
    for k in range(1, (n - 1) // 2 + 1):
        steps.extend(stretch(n, k))
    return tuple(steps)


def partial_stretch_sum(n: int, k: int, p: int, q: int) -> tuple[int, int]:
    """Sum of entries p..q (1-based, inclusive) of stretch k, componentwise mod n.

    Closed form: entries at even positions contribute to the row
    coordinate and odd positions to the column coordinate, 2k-1 each,
    except that the final entry 2n contributes 2k to the row.  For n an
    odd prime the result is never (0, 0).
    """
    _require_odd(n)
    if not 1 <= k <= (n - 1) // 2:
        raise ValueError(f"stretch index must satisfy 1 <= k <= {(n - 1) // 2}, got {k}")
    if not 1 <= p <= q <= 2 * n:
        raise ValueError(f"need 1 <= p <= q <= {2 * n}, got p={p}, q={q}")
    c = 2 * k - 1
    if q != 2 * n:
        row = (q // 2 - (p - 1) // 2) * c % n
        col = ((q + 1) // 2 - p // 2) * c % n
    else:
        row = (1 - ((p - 1) // 2) * c) % n
        col = (-(p // 2) * c) % n
    return (row, col)


@dataclass(frozen=True, slots=True)
class Walk:
    """A walk on K_n [box] K_m: start, steps, and the derived vertex list."""

    n: int
    m: int
    start: GridVertex
    steps: tuple[Step, ...]
    vertices: tuple[GridVertex, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> GridVertex:
        return self.vertices[-1]

    def edges(self) -> list[GridEdge]:
        return [GridEdge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def segment(self, i: int, j: int) -> "Walk":
        """Sub-walk from vertex i to vertex j (0-based, inclusive endpoints)."""
        if not 0 <= i <= j <= self.length:
            raise ValueError(f"segment [{i}, {j}] out of range for length {self.length}")
        return Walk(self.n, self.m, self.vertices[i], self.steps[i:j], self.vertices[i : j + 1])

    def transform(self, f: Callable[[GridVertex], GridVertex]) -> "Walk":
        """Image walk under a vertex map; steps are recomputed from the images."""
        verts = tuple(f(v) for v in self.vertices)
        steps = tuple(
            Step((b.row - a.row) % self.n, (b.col - a.col) % self.m)
            for a, b in zip(verts, verts[1:])
        )
        return Walk(self.n, self.m, verts[0], steps, verts)

    def reverse(self) -> "Walk":
        verts = tuple(reversed(self.vertices))
        steps = tuple(
            Step((-s.drow) % self.n, (-s.dcol) % self.m) for s in reversed(self.steps)
        )
        return Walk(self.n, self.m, verts[0], steps, verts)

    def canonical(self) -> "Walk":
        """A walk and its reversal are the same object; start at the smaller endpoint."""
        return self if self.start <= self.end else self.reverse()


def _normalize_steps(arr: Iterable, n: int, m: int) -> tuple[Step, ...]:
    steps = []
    for i, s in enumerate(arr):
        raw = (s.drow, s.dcol) if isinstance(s, Step) else tuple(s)
        dr, dc = raw[0] % n, raw[1] % m
        if (dr == 0) == (dc == 0):
            raise ValueError(
                f"step {i + 1} = {raw} does not move along one grid line mod ({n},{m})"
            )
        steps.append(Step(dr, dc))
    return tuple(steps)


def walk_from_array(v0, arr: Sequence[Step], n: int, m: int) -> Walk:
    """The walk starting at v0 whose i-th vertex is v0 plus the first i steps.

    Steps are reduced mod (n, m) and must each move along exactly one
    grid line after reduction; v0 may be a GridVertex or an (a, b) pair.
    """
    if n < 2 or m < 2:
        raise DimensionError(f"walks need n, m >= 2, got {n} x {m}")
    if not isinstance(v0, GridVertex):
        v0 = GridVertex(*v0)
    start = GridVertex(v0.row % n, v0.col % m)
    steps = _normalize_steps(arr, n, m)
    vertices = [start]
    cur = start
    for s in steps:
        cur = GridVertex((cur.row + s.drow) % n, (cur.col + s.dcol) % m)
        vertices.append(cur)
    return Walk(n, m, start, steps, tuple(vertices))


def _prefix_sums(steps: Sequence[Step], n: int, m: int) -> list[tuple[int, int]]:
    sums = [(0, 0)]
    r = c = 0
    for s in steps:
        r = (r + s.drow) % n
        c = (c + s.dcol) % m
        sums.append((r, c))
    return sums


def first_repeated_vertex(walk: Walk):
    """Earliest coincidence (i, j, vertex) with vertex_i == vertex_j, or None.

    Computed from the step array: positions i < j coincide exactly when
    the steps strictly between them sum to (0, 0) mod (n, m).
    """
    seen: dict[tuple[int, int], int] = {}
    for j, p in enumerate(_prefix_sums(walk.steps, walk.n, walk.m)):
        if p in seen:
            i = seen[p]
            return i, j, walk.vertices[i]
        seen[p] = j
    return None


def is_path(walk: Walk) -> bool:
    """True iff no contiguous run of steps sums to (0, 0), i.e. no vertex repeats."""
    return first_repeated_vertex(walk) is None


def first_orbit_conflict(arr: Sequence[Step], n: int, m: int | None = None):
    """First pair of step indices (0-based) whose edges share a row-shift orbit, or None.

    For the walk edges e_i = {v_{i-1}, v_i}, edges i+1 and j+1 lie in one
    orbit of the cyclic row-shift group exactly when either
      (a) the column components of steps i+1 .. j sum to 0 and
          a_{i+1} == a_{j+1}, or
      (b) the column components of steps i+1 .. j+1 sum to 0 and
          a_{i+1} == -a_{j+1},
    all arithmetic mod (n, m).  This is a pure step-array criterion; no
    orbit is ever enumerated.
    """
    if m is None:
        m = n
    steps = _normalize_steps(arr, n, m)
    neg = [Step((-s.drow) % n, (-s.dcol) % m) for s in steps]
    cols = [0]
    c = 0
    for s in steps:
        c = (c + s.dcol) % m
        cols.append(c)
    ell = len(steps)
    for i in range(ell):
        si = steps[i]
        ci = cols[i]
        for j in range(i + 1, ell):
            if cols[j] == ci and si == steps[j]:
                return i, j
            if cols[j + 1] == ci and si == neg[j]:
                return i, j
    return None


def one_edge_per_orbit(arr: Sequence[Step], n: int, m: int | None = None) -> bool:
    """True iff the walk of ``arr`` uses at most one edge from each row-shift orbit."""
    return first_orbit_conflict(arr, n, m) is None


def build_staircase_path(n: int) -> Walk:
    """The certified staircase walk from (0, 0) on K_n [box] K_n.

    The walk is checked, not trusted: it must be a path and it must use
    at most one edge per row-shift orbit.  Both hold whenever n is an
    odd prime; for odd composite n the path check fails and the walk is
    rejected with a ConstructionInvalid naming the repeated vertex.
    """
    arr = staircase_array(n)
    walk = walk_from_array((0, 0), arr, n, n)
    rep = first_repeated_vertex(walk)
    if rep is not None:
        i, j, v = rep
        raise ConstructionInvalid(
            "path", f"staircase walk revisits {v} at positions {i} and {j}", witness=rep
        )
    conflict = first_orbit_conflict(arr, n)
    if conflict is not None:
        i, j = conflict
        raise ConstructionInvalid(
            "orbit_transversal",
            f"staircase edges {i + 1} and {j + 1} share a row-shift orbit",
            witness=conflict,
        )
    return walk
