"""Orbit-transversal decompositions and their exhaustive verification.

The construction implemented here: if a group G of automorphisms acts
semiregularly on the edges of a graph (no non-identity element fixes an
edge, even setwise) and a subgraph H contains exactly one edge from
each orbit, then the images of H under G are pairwise edge-disjoint and
partition the edge set.  The resulting decomposition is G-invariant,
G-transitive, and the stabilizer of each block is trivial, so there are
exactly |G| blocks.

Nothing downstream trusts that argument: verify_decomposition rechecks
every one of those properties on the finished object by direct
enumeration and reports a concrete witness for anything that fails.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from math import comb, gcd, isqrt
from typing import Iterable, Iterator, NamedTuple

from .grid import GridGraph, GridVertex, Step, make_grid
from .groups import (
    EdgeOrbit,
    FiniteGroup,
    Permutation,
    diagonal_shift,
    edge_image,
    edge_orbits,
    fixed_edge_witness,
    generate_group,
    permutation_from_cycles,
    row_shift,
)
from .staircase import Walk, build_staircase_path, walk_from_array

__all__ = [
    "CompleteGraph",
    "Decomposition",
    "Fixture",
    "LabelEdge",
    "NecessaryConditions",
    "NotOddPrime",
    "PreconditionFailed",
    "Subgraph",
    "TransversalCheck",
    "VerificationReport",
    "build_orbit_decomposition",
    "diagonal_fixture_n4",
    "gallai_check",
    "haggkvist_split",
    "is_odd_prime",
    "is_path_subgraph",
    "k9_fixture",
    "necessary_conditions",
    "orbit_transversal_check",
    "partition_witnesses",
    "PartitionCheck",
    "staircase_decomposition",
    "subgraphs_isomorphic",
    "verify_decomposition",
]

ISO_VERTEX_CAP = 16


class PreconditionFailed(RuntimeError):
    """A hypothesis of the orbit-transversal construction does not hold."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class NotOddPrime(ValueError):
    """The staircase construction was asked for an unsupported width."""

    def __init__(self, n: int, message: str):
        super().__init__(message)
        self.n = n


@dataclass(frozen=True, order=True, slots=True)
class LabelEdge:
    """Unordered pair of integer-labelled vertices, stored with u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"degenerate edge at {self.u}")
        if self.v < self.u:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


@dataclass(frozen=True, slots=True)
class CompleteGraph:
    """The complete graph on labels 1 .. n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"complete graph needs n >= 1, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return comb(self.n, 2)

    def vertices(self) -> Iterator[int]:
        return iter(range(1, self.n + 1))

    def contains(self, v) -> bool:
        return isinstance(v, int) and 1 <= v <= self.n

    def edges(self) -> Iterator[LabelEdge]:
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                yield LabelEdge(i, j)

    def edge(self, u: int, v: int) -> LabelEdge:
        if not (self.contains(u) and self.contains(v)):
            raise ValueError(f"{u}-{v} is not inside K_{self.n}")
        return LabelEdge(u, v)

    def degree(self, v: int) -> int:
        return self.n - 1

    def vertex_label(self, v: int) -> str:
        return str(v)

    def __str__(self) -> str:
        return f"K_{self.n}"


@dataclass(frozen=True, slots=True)
class Subgraph:
    """An edge-induced subgraph: a sorted, duplicate-free tuple of edges.

    ``walk`` optionally records how the edge set was traced; blocks that
    arise as images of a walk keep the transported walk so they can be
    split back into sub-paths later.
    """

    edges: tuple
    walk: Walk | None = None

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.edges))
        if not ordered:
            raise ValueError("a subgraph needs at least one edge")
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", ordered)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> set:
        out = set()
        for e in self.edges:
            out.add(e.u)
            out.add(e.v)
        return out

    def degrees(self) -> dict:
        deg: dict = defaultdict(int)
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return dict(deg)

    def adjacency(self) -> dict:
        adj: dict = defaultdict(set)
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        return dict(adj)


@dataclass(frozen=True, slots=True)
class Decomposition:
    """A candidate decomposition: blocks, the acting group, and the base block."""

    blocks: tuple[Subgraph, ...]
    group: FiniteGroup
    base: Subgraph


@dataclass(frozen=True, eq=False, slots=True)
class VerificationReport:
    """Outcome of the six structural checks, with witnesses for failures.

    ``witnesses`` maps a failed flag name to a concrete counterexample:
    the duplicated or missing edges, the offending block index, the
    fixing element and fixed edge, and so on.  A flag that is True never
    has a witness.
    """

    is_partition: bool
    blocks_isomorphic_to_base: bool
    group_invariant: bool
    group_transitive: bool
    stabilizer_trivial: bool
    semiregular: bool
    witnesses: dict = field(default_factory=dict)

    FLAGS = (
        "is_partition",
        "blocks_isomorphic_to_base",
        "group_invariant",
        "group_transitive",
        "stabilizer_trivial",
        "semiregular",
    )

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.FLAGS}

    @property
    def all_ok(self) -> bool:
        return all(self.flags().values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.flags().items() if not ok]


class NecessaryConditions(NamedTuple):
    """Counting conditions any H-decomposition of a graph must satisfy."""

    subgraph_fits: bool
    edge_count_divides: bool
    degrees_divide: bool

    @property
    def all_ok(self) -> bool:
        return self.subgraph_fits and self.edge_count_divides and self.degrees_divide


def necessary_conditions(graph, sub: Subgraph) -> NecessaryConditions:
    """Vertex fit, edge-count divisibility, and degree divisibility.

    The degree condition: every graph degree must be divisible by the
    gcd of the subgraph's degrees, since the blocks covering a vertex
    partition the edges at that vertex.
    """
    fits = len(sub.vertex_set()) <= graph.vertex_count or graph.edge_count == 0
    divides = graph.edge_count % sub.edge_count == 0
    d = 0
    for value in sub.degrees().values():
        d = gcd(d, value)
    degrees_ok = all(graph.degree(v) % d == 0 for v in graph.vertices())
    return NecessaryConditions(fits, divides, degrees_ok)


class TransversalCheck(NamedTuple):
    """Result of counting a subgraph's edges against each orbit."""

    ok: bool
    counts: tuple[int, ...]


def orbit_transversal_check(sub: Subgraph, orbits: list[EdgeOrbit]) -> TransversalCheck:
    """Exactly-one-edge-per-orbit test; counts are aligned with ``orbits``.

    Edges of the subgraph that lie in no orbit at all make the check
    fail regardless of the counts.
    """
    index: dict = {}
    for pos, orbit in enumerate(orbits):
        for e in orbit.edges:
            index[e] = pos
    counts = [0] * len(orbits)
    stray = False
    for e in sub.edges:
        pos = index.get(e)
        if pos is None:
            stray = True
            continue
        counts[pos] += 1
    ok = not stray and all(c == 1 for c in counts)
    return TransversalCheck(ok, tuple(counts))


def build_orbit_decomposition(graph, group: FiniteGroup, base: Subgraph) -> Decomposition:
    """Images of ``base`` under every group element, after checking the hypotheses.

    Raises PreconditionFailed when the action is not semiregular on
    edges or when ``base`` is not an exact orbit transversal.  Blocks
    are deduplicated by edge set, so the block count equals the group
    order exactly when the base has trivial stabilizer; the verifier
    checks that rather than assuming it.
    """
    fixed = fixed_edge_witness(graph, group)
    if fixed is not None:
        g, e = fixed
        raise PreconditionFailed(
            f"group is not semiregular on edges: an element fixes {e}", witness=fixed
        )
    orbits = edge_orbits(graph, group)
    check = orbit_transversal_check(base, orbits)
    if not check.ok:
        bad = [orbits[i].id for i, c in enumerate(check.counts) if c != 1]
        raise PreconditionFailed(
            f"base subgraph is not an orbit transversal: counts off in {len(bad)} orbits",
            witness=(bad, check.counts),
        )
    blocks: list[Subgraph] = []
    seen: set = set()
    for g in group.elements:
        edges = tuple(sorted(edge_image(g, graph, e) for e in base.edges))
        key = frozenset(edges)
        if key in seen:
            continue
        seen.add(key)
        walk = base.walk.transform(g) if base.walk is not None else None
        blocks.append(Subgraph(edges, walk=walk))
    return Decomposition(tuple(blocks), group, base)


def is_path_subgraph(sub: Subgraph) -> bool:
    """Connected, max degree 2, exactly two degree-1 vertices, |V| = |E| + 1."""
    deg = sub.degrees()
    if len(deg) != sub.edge_count + 1:
        return False
    if any(d > 2 for d in deg.values()):
        return False
    if sum(1 for d in deg.values() if d == 1) != 2:
        return False
    adj = sub.adjacency()
    start = next(iter(deg))
    seen = {start}
    queue = deque([start])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(deg)


def subgraphs_isomorphic(a: Subgraph, b: Subgraph) -> bool:
    """Graph isomorphism of two edge-induced subgraphs.

    Paths are recognized by their degree signature; anything else goes
    through backtracking search, capped at ISO_VERTEX_CAP vertices.
    """
    if a.edge_count != b.edge_count:
        return False
    deg_a, deg_b = a.degrees(), b.degrees()
    if len(deg_a) != len(deg_b):
        return False
    if sorted(deg_a.values()) != sorted(deg_b.values()):
        return False
    if is_path_subgraph(a) and is_path_subgraph(b):
        return True
    if len(deg_a) > ISO_VERTEX_CAP:
        raise ValueError(f"isomorphism search capped at {ISO_VERTEX_CAP} vertices")
    adj_a, adj_b = a.adjacency(), b.adjacency()
    edge_set_b = {frozenset((e.u, e.v)) for e in b.edges}
    verts_b = sorted(deg_b)

    # visit a's vertices so each one touches an already-placed vertex when possible
    order: list = []
    placed: set = set()
    remaining = set(deg_a)
    while remaining:
        frontier = [v for v in remaining if any(w in placed for w in adj_a[v])]
        pool = frontier or list(remaining)
        nxt = max(pool, key=lambda v: (deg_a[v], str(v)))
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)

    assign: dict = {}
    used: set = set()

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        anchors = [w for w in adj_a[v] if w in assign]
        for x in verts_b:
            if x in used or deg_b[x] != deg_a[v]:
                continue
            if any(frozenset((assign[w], x)) not in edge_set_b for w in anchors):
                continue
            assign[v] = x
            used.add(x)
            if extend(idx + 1):
                return True
            del assign[v]
            used.discard(x)
        return False

    return extend(0)


class PartitionCheck(NamedTuple):
    """Multiset comparison of block edges against the graph's edge set."""

    ok: bool
    duplicated: tuple
    missing: tuple
    foreign: tuple


def partition_witnesses(graph, blocks: Iterable[Subgraph]) -> PartitionCheck:
    """Do the blocks cover every edge exactly once?  Witnesses either way."""
    counts: Counter = Counter()
    for b in blocks:
        counts.update(b.edges)
    graph_edges = set(graph.edges())
    duplicated = tuple(sorted(e for e, c in counts.items() if c > 1))
    missing = tuple(sorted(e for e in graph_edges if e not in counts))
    foreign = tuple(sorted(e for e in counts if e not in graph_edges))
    ok = not duplicated and not missing and not foreign
    return PartitionCheck(ok, duplicated, missing, foreign)


def verify_decomposition(graph, group: FiniteGroup, dec: Decomposition) -> VerificationReport:
    """Recheck every structural claim of a decomposition by enumeration.

    Nothing about ``dec`` is trusted: the edge partition, the block
    shapes, invariance and transitivity under the group, the base
    stabilizer, and semiregularity of the action are each recomputed
    from scratch.  Every failed flag carries a concrete witness.
    """
    witnesses: dict = {}

    partition = partition_witnesses(graph, dec.blocks)
    ok_partition = partition.ok
    if not ok_partition:
        witnesses["is_partition"] = {
            "duplicated": list(partition.duplicated),
            "missing": list(partition.missing),
            "foreign": list(partition.foreign),
        }

    ok_iso = True
    for idx, block in enumerate(dec.blocks):
        if not subgraphs_isomorphic(block, dec.base):
            ok_iso = False
            witnesses["blocks_isomorphic_to_base"] = {"block_index": idx}
            break

    block_keys = [frozenset(b.edges) for b in dec.blocks]
    block_set = set(block_keys)

    def image_key(sub_edges, g: Permutation) -> frozenset:
        return frozenset(edge_image(g, graph, e) for e in sub_edges)

    ok_invariant = True
    for idx, block in enumerate(dec.blocks):
        for gdx, gen in enumerate(group.generators):
            if image_key(block.edges, gen) not in block_set:
                ok_invariant = False
                witnesses["group_invariant"] = {"block_index": idx, "generator_index": gdx}
                break
        if not ok_invariant:
            break

    ok_transitive = True
    if dec.blocks:
        reached = {image_key(dec.blocks[0].edges, g) for g in group.elements}
        if reached != block_set:
            ok_transitive = False
            unreached = sorted(i for i, key in enumerate(block_keys) if key not in reached)
            witnesses["group_transitive"] = {"unreached_blocks": unreached}

    base_key = frozenset(dec.base.edges)
    stabilizer = sum(1 for g in group.elements if image_key(dec.base.edges, g) == base_key)
    ok_stabilizer = stabilizer == 1
    if not ok_stabilizer:
        witnesses["stabilizer_trivial"] = {"stabilizer_order": stabilizer}

    fixed = fixed_edge_witness(graph, group)
    ok_semiregular = fixed is None
    if not ok_semiregular:
        witnesses["semiregular"] = {"element": fixed[0], "edge": fixed[1]}

    return VerificationReport(
        is_partition=ok_partition,
        blocks_isomorphic_to_base=ok_iso,
        group_invariant=ok_invariant,
        group_transitive=ok_transitive,
        stabilizer_trivial=ok_stabilizer,
        semiregular=ok_semiregular,
        witnesses=witnesses,
    )


def is_odd_prime(n: int) -> bool:
    """Trial division; 2 is excluded by the oddness requirement."""
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d <= isqrt(n):
        if n % d == 0:
            return False
        d += 2
    return True


def staircase_decomposition(n: int, force: bool = False):
    """End-to-end staircase pipeline for K_n [box] K_n under the row shift.

    Builds the certified staircase path, the cyclic group, and the
    orbit decomposition, then verifies the whole object.  Returns the
    pair (Decomposition, VerificationReport).

    Odd primes are the supported widths.  ``force`` lifts the primality
    gate (never the oddness gate) so that odd composites can be fed
    through the same pipeline; those fail inside build_staircase_path
    with a ConstructionInvalid naming the repeated vertex.
    """
    if not is_odd_prime(n):
        if n < 3 or n % 2 == 0:
            raise NotOddPrime(n, f"staircase decomposition needs odd n >= 3, got {n}")
        if not force:
            raise NotOddPrime(n, f"{n} is not prime; pass force=True to run the checks anyway")
    walk = build_staircase_path(n)
    graph = make_grid(n, n)
    group = generate_group([row_shift(n, n)])
    base = Subgraph(tuple(sorted(walk.edges())), walk=walk)
    dec = build_orbit_decomposition(graph, group, base)
    report = verify_decomposition(graph, group, dec)
    return dec, report


def gallai_check(graph, dec: Decomposition) -> bool:
    """Path-count bound for path decompositions of connected graphs.

    A connected graph on N vertices should decompose into at most
    (N + 1) / 2 paths; callers are expected to have verified that the
    blocks really are paths.
    """
    return 2 * len(dec.blocks) <= graph.vertex_count + 1


def haggkvist_split(path: Walk, b: int) -> list[Subgraph]:
    """Cut a path walk into consecutive segments of b edges each.

    Splitting every block of a 2b-regular graph's path decomposition
    this way refines it into a decomposition by b-edge paths.  ``b``
    must divide the walk length.
    """
    if b < 1:
        raise ValueError(f"segment size must be positive, got {b}")
    if path.length % b != 0:
        raise ValueError(f"segment size {b} does not divide path length {path.length}")
    segments = [path.segment(i, i + b) for i in range(0, path.length, b)]
    return [Subgraph(tuple(sorted(seg.edges())), walk=seg) for seg in segments]


class Fixture(NamedTuple):
    """A worked example: graph, acting group, and base subgraph."""

    graph: object
    group: FiniteGroup
    base: Subgraph


K9_TRIANGLES = ((1, 4, 5), (2, 6, 8), (3, 7, 9), (5, 6, 7))
K9_GENERATOR_CYCLES = ((1, 4, 7), (2, 5, 8), (3, 6, 9))


def k9_fixture() -> Fixture:
    """K_9 under a fixed-point-free order-3 rotation, base = four disjoint triangles.

    The twelve triangle edges hit the twelve edge orbits once each, so
    the three images of the base partition the 36 edges; each block
    splits into four triangles, giving a triangle decomposition of K_9.
    The orbits are always recomputed from the group, never hard-coded.
    """
    graph = CompleteGraph(9)
    gen = permutation_from_cycles(graph, K9_GENERATOR_CYCLES)
    group = generate_group([gen])
    edges = []
    for tri in K9_TRIANGLES:
        a, b, c = tri
        edges.extend([LabelEdge(a, b), LabelEdge(b, c), LabelEdge(a, c)])
    base = Subgraph(tuple(sorted(edges)))
    return Fixture(graph, group, base)


DIAG4_STEPS = (
    (0, 1), (0, 1), (0, 1),
    (1, 0), (1, 0), (1, 0),
    (0, 2), (2, 0), (0, 3), (2, 0), (0, 2), (3, 0),
)


def diagonal_fixture_n4() -> Fixture:
    """K_4 [box] K_4 under the diagonal shift, base = a hand-picked 12-edge path.

    Even width rules out the row shift (it fixes edges setwise), but the
    diagonal shift acts semiregularly here and this particular step
    array traces an orbit transversal, so the four images partition the
    48 edges.
    """
    graph = make_grid(4, 4)
    group = generate_group([diagonal_shift(4)])
    walk = walk_from_array((0, 0), [Step(a, b) for a, b in DIAG4_STEPS], 4, 4)
    base = Subgraph(tuple(sorted(walk.edges())), walk=walk)
    return Fixture(graph, group, base)
