"""k-uniform hypergraph model: validation, text I/O, generators and metric structure.

Vertices are 1-based everywhere in the public interface (files, witnesses,
reports); numpy index arrays handed to the numeric kernels are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, inf

import numpy as np


class ParseError(ValueError):
    """Malformed hypergraph text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedError(ValueError):
    """Raised where a finite answer requires a connected hypergraph."""


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-uniform hypergraph on vertices {1, ..., n}.

    Edges are stored canonically: each edge sorted ascending, the edge list
    sorted lexicographically.  Two edges may not be equal as sets.  Isolated
    vertices (contained in no edge) are permitted.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"uniformity must be an integer >= 2, got {self.k!r}")
        canon = []
        for e in self.edges:
            e = tuple(sorted(e))
            if len(e) != self.k:
                raise ValueError(f"edge {e} has {len(e)} vertices, expected {self.k}")
            if len(set(e)) != self.k:
                raise ValueError(f"edge {e} repeats a vertex")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"edge {e} has a vertex outside 1..{self.n}")
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as a 0-based (m, k) int64 array for the kernels."""
        if not self.edges:
            return np.empty((0, self.k), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64) - 1

    @cached_property
    def degrees(self) -> np.ndarray:
        """Per-vertex edge counts, index 0 holding vertex 1."""
        return np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)

    @cached_property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @cached_property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Co-occurrence adjacency: u ~ v iff some edge contains both."""
        sets: list[set[int]] = [set() for _ in range(self.n + 1)]
        for e in self.edges:
            for u in e:
                sets[u].update(e)
        for u in range(1, self.n + 1):
            sets[u].discard(u)
        return tuple(tuple(sorted(s)) for s in sets)


@dataclass(frozen=True)
class ComponentLabeling:
    """Partition of the vertex set into connected components.

    Two vertices share a label iff an alternating vertex/edge path joins
    them; components are numbered 0.. in order of their smallest vertex.
    """

    labels: dict[int, int] = field(hash=False)
    count: int = 0


def parse(text: str | bytes) -> Hypergraph:
    """Parse the canonical text format: header "n k", one edge per line.

    Lines starting with "#" and blank lines are skipped.  Every format
    violation is reported with its 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"expected header 'n k', got {line!r}", lineno)
            try:
                n, k = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"non-integer header field in {line!r}", lineno) from None
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            if k < 2:
                raise ParseError(f"uniformity must be >= 2, got {k}", lineno)
            header = (n, k)
            continue
        n, k = header
        try:
            verts = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(verts) != k:
            raise ParseError(f"edge has {len(verts)} vertices, expected {k}", lineno)
        if len(set(verts)) != len(verts):
            raise ParseError(f"duplicate vertex inside edge {line!r}", lineno)
        bad = [v for v in verts if v < 1 or v > n]
        if bad:
            raise ParseError(f"vertex id {bad[0]} outside 1..{n}", lineno)
        key = tuple(sorted(verts))
        if key in seen:
            raise ParseError(f"duplicate edge {line!r} (first seen on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise ParseError("empty input: missing 'n k' header")
    return Hypergraph(header[0], header[1], tuple(edges))


def render(h: Hypergraph) -> str:
    """Emit the canonical text format (inverse of parse)."""
    lines = [f"{h.n} {h.k}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def degree(h: Hypergraph, i: int) -> int:
    """Number of edges containing vertex i."""
    _check_vertex(h, i)
    return int(h.degrees[i - 1])


def components(h: Hypergraph) -> ComponentLabeling:
    """Label connected components; isolated vertices are singletons."""
    labels: dict[int, int] = {}
    count = 0
    for start in range(1, h.n + 1):
        if start in labels:
            continue
        labels[start] = count
        stack = [start]
        while stack:
            u = stack.pop()
            for v in h.neighbors[u]:
                if v not in labels:
                    labels[v] = count
                    stack.append(v)
        count += 1
    return ComponentLabeling(labels=labels, count=count)


def is_connected(h: Hypergraph) -> bool:
    return components(h).count == 1


def _bfs_distances(h: Hypergraph, source: int) -> list[float]:
    dist: list[float] = [inf] * (h.n + 1)
    dist[source] = 0
    queue = [source]
    while queue:
        nxt = []
        for u in queue:
            for v in h.neighbors[u]:
                if dist[v] == inf:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        queue = nxt
    return dist


def distance(h: Hypergraph, u: int, v: int) -> int | float:
    """Shortest-path distance on the co-occurrence relation; inf across components."""
    _check_vertex(h, u)
    _check_vertex(h, v)
    d = _bfs_distances(h, u)[v]
    return int(d) if d != inf else inf


def eccentricity(h: Hypergraph, v: int) -> int:
    """max_u d(u, v); raises DisconnectedError instead of returning infinity."""
    _check_vertex(h, v)
    d = _bfs_distances(h, v)[1:]
    worst = max(d)
    if worst == inf:
        raise DisconnectedError(f"vertex {v} has infinite eccentricity (hypergraph is disconnected)")
    return int(worst)


def diameter(h: Hypergraph) -> int:
    return max(eccentricity(h, v) for v in range(1, h.n + 1))


def radius(h: Hypergraph) -> int:
    return min(eccentricity(h, v) for v in range(1, h.n + 1))


def _check_vertex(h: Hypergraph, i) -> None:
    if not isinstance(i, (int, np.integer)) or i < 1 or i > h.n:
        raise ValueError(f"vertex {i!r} outside 1..{h.n}")


# ---------------------------------------------------------------------------
# generators

def complete_graph(n: int) -> Hypergraph:
    return complete_kuniform(n, 2)


def complete_kuniform(n: int, k: int) -> Hypergraph:
    if k > n:
        raise ValueError(f"complete {k}-uniform hypergraph needs n >= k, got n={n}")
    return Hypergraph(n, k, tuple(itertools.combinations(range(1, n + 1), k)))


def path_graph(n: int) -> Hypergraph:
    if n < 2:
        raise ValueError("path graph needs n >= 2")
    return Hypergraph(n, 2, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Hypergraph(n, 2, tuple(edges))


def loose_path(k: int, length: int) -> Hypergraph:
    """length edges of size k, consecutive edges sharing exactly one vertex."""
    if length < 1:
        raise ValueError("loose path needs at least one edge")
    if k < 2:
        raise ValueError("uniformity must be >= 2")
    edges = []
    for i in range(length):
        base = i * (k - 1)
        edges.append(tuple(range(base + 1, base + k + 1)))
    return Hypergraph(length * (k - 1) + 1, k, tuple(edges))


def fano_plane() -> Hypergraph:
    """The symmetric 2-(7,7,3,3,1) design, blocks from the difference set {0,1,3} mod 7."""
    blocks = tuple(
        tuple(sorted(((i % 7) + 1, ((i + 1) % 7) + 1, ((i + 3) % 7) + 1)))
        for i in range(7)
    )
    return Hypergraph(7, 3, blocks)


def random_uniform(n: int, k: int, m: int, seed: int = 0) -> Hypergraph:
    """m distinct k-edges drawn uniformly without replacement; deterministic per seed."""
    if k > n:
        raise ValueError(f"no {k}-edges exist on {n} vertices")
    total = comb(n, k)
    if m > total:
        raise ValueError(f"requested {m} edges but only {total} distinct {k}-subsets exist")
    rng = np.random.default_rng(seed)
    picks = sorted(rng.choice(total, size=m, replace=False).tolist())
    pool = itertools.combinations(range(1, n + 1), k)
    edges = []
    want = iter(picks)
    target = next(want, None)
    for idx, e in enumerate(pool):
        if target is None:
            break
        if idx == target:
            edges.append(e)
            target = next(want, None)
    return Hypergraph(n, k, tuple(edges))


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    """Place b's vertices after a's; requires equal uniformity."""
    if a.k != b.k:
        raise ValueError(f"cannot union {a.k}-uniform with {b.k}-uniform")
    shifted = tuple(tuple(v + a.n for v in e) for e in b.edges)
    return Hypergraph(a.n + b.n, a.k, a.edges + shifted)


def with_isolated_vertices(h: Hypergraph, extra: int) -> Hypergraph:
    if extra < 0:
        raise ValueError("extra vertex count must be nonnegative")
    return Hypergraph(h.n + extra, h.k, h.edges)


GENERATORS = {
    "complete_graph": complete_graph,
    "complete_kuniform": complete_kuniform,
    "path_graph": path_graph,
    "cycle_graph": cycle_graph,
    "loose_path": loose_path,
    "fano_plane": fano_plane,
    "random_uniform": random_uniform,
}


def generate(family: str, **params) -> Hypergraph:
    """Build a named instance; deterministic for fixed params and seed."""
    try:
        fn = GENERATORS[family]
    except KeyError:
        known = ", ".join(sorted(GENERATORS))
        raise ValueError(f"unknown family {family!r}; known families: {known}") from None
    return fn(**params)
