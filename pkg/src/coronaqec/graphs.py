"""
Simple undirected graphs, the generator catalog, the corona product and
distance matrices.

Matrices are dense 2d numpy float arrays. Distance matrices are integer
valued, so equality between the two distance builders is checked exactly.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DisconnectedGraphError, ParameterError, PreconditionError

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_bipartite",
    "star",
    "petersen",
    "random_regular",
)

# dense-matrix feasibility cap on the size of each copy of H
MAX_COPY_SIZE = 64

RANDOM_REGULAR_RETRIES = 10_000


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Edges are stored as a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    ``labels`` optionally names each vertex; corona products use labels of
    the form ``(x, o)`` for the copy of G and ``(x, i)`` for copies of H.
    """

    vertex_count: int
    edges: tuple = ()
    labels: Optional[tuple] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ParameterError(f"vertex_count must be a positive integer, got {n!r}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ParameterError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None:
            if len(self.labels) != n:
                raise ParameterError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors()]

    def regular_degree(self) -> Optional[int]:
        """Return the common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.vertex_count, self.vertex_count))
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1.0
        return A

    def is_connected(self) -> bool:
        return len(_bfs_levels(self.neighbors(), 0)) == self.vertex_count

    def __str__(self):
        return self.name or f"Graph(n={self.vertex_count}, m={self.edge_count})"


def _bfs_levels(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _require(cond, msg):
    if not cond:
        raise ParameterError(msg)


def path_graph(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), name=f"C{n}")


def complete_graph(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)), name=f"K{n}")


def empty_graph(n: int) -> Graph:
    _require(n >= 1, "empty graph needs n >= 1")
    return Graph(n, (), name=f"Kbar{n}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, "complete_bipartite needs both parts >= 1")
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges, name=f"K{a},{b}")


def star_graph(k: int) -> Graph:
    """K_{1,k}: centre 0 joined to k leaves."""
    _require(k >= 1, "star needs k >= 1 leaves")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)), name=f"K1,{k}")


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner), name="Petersen")


def random_regular_graph(n: int, k: int, seed: Optional[int] = None) -> Graph:
    """Uniform-ish k-regular simple graph by the pairing model with rejection.

    Deterministic for a given seed.
    """
    _require(n >= 1 and k >= 0, "random_regular needs n >= 1, k >= 0")
    _require(k < n, "random_regular needs k < n")
    _require((n * k) % 2 == 0, "random_regular needs n*k even")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(k)]
    for _ in range(RANDOM_REGULAR_RETRIES):
        rng.shuffle(points)
        edges = set()
        for u, v in zip(points[::2], points[1::2]):
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                break
            edges.add(e)
        else:
            return Graph(n, tuple(edges), name=f"RR{n},{k}(seed={seed})")
    raise ParameterError(f"pairing model failed after {RANDOM_REGULAR_RETRIES} tries")


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "complete_bipartite": 2,
    "star": 1,
    "petersen": 0,
    "random_regular": 2,
}


def generate(family: str, *params: int, seed: Optional[int] = None) -> Graph:
    """Build a named graph, e.g. ``generate("cycle", 6)``.

    ``random_regular`` takes ``(n, k)`` and uses ``seed``; a third integer
    parameter is accepted as the seed as well.
    """
    if family not in _ARITY:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    params = tuple(params)
    if family == "random_regular" and len(params) == 3:
        params, seed = params[:2], params[2]
    if len(params) != _ARITY[family]:
        raise ParameterError(f"{family} takes {_ARITY[family]} integer parameter(s), got {len(params)}")
    try:
        params = tuple(int(p) for p in params)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"non-integer parameter in {params!r}") from exc
    if family == "path":
        return path_graph(*params)
    if family == "cycle":
        return cycle_graph(*params)
    if family == "complete":
        return complete_graph(*params)
    if family == "empty":
        return empty_graph(*params)
    if family == "complete_bipartite":
        return complete_bipartite_graph(*params)
    if family == "star":
        return star_graph(*params)
    if family == "petersen":
        return petersen_graph()
    return random_regular_graph(*params, seed=0 if seed is None else seed)


# ---------------------------------------------------------------------------
# corona product
# ---------------------------------------------------------------------------

def _check_corona_inputs(G: Graph, H: Graph, max_copy_size: int):
    if G.vertex_count < 2:
        raise PreconditionError("corona needs G with at least 2 vertices")
    if not G.is_connected():
        raise PreconditionError("corona needs a connected G")
    if H.vertex_count > max_copy_size:
        raise ParameterError(f"H has {H.vertex_count} vertices, cap is {max_copy_size}")


def corona_index(x: int, i: Optional[int], h_order: int) -> int:
    """Position of vertex (x, i) in the corona; ``i=None`` denotes the root o."""
    return x * (h_order + 1) + (0 if i is None else i + 1)


def corona(G: Graph, H: Graph, max_copy_size: int = MAX_COPY_SIZE) -> Graph:
    """G ⊙ H with block vertex order (x, o), (x, 0), ..., (x, n-1) per x in G."""
    _check_corona_inputs(G, H, max_copy_size)
    n = H.vertex_count
    edges = []
    labels = []
    for x, y in G.edges:
        edges.append((corona_index(x, None, n), corona_index(y, None, n)))
    for x in range(G.vertex_count):
        root = corona_index(x, None, n)
        labels.append(f"({x}, o)")
        for i in range(n):
            labels.append(f"({x}, {i})")
            edges.append((root, corona_index(x, i, n)))
        for i, j in H.edges:
            edges.append((corona_index(x, i, n), corona_index(x, j, n)))
    name = f"{G}⊙{H}" if G.name and H.name else ""
    return Graph(G.vertex_count * (n + 1), tuple(edges), tuple(labels), name=name)


# ---------------------------------------------------------------------------
# distance matrices
# ---------------------------------------------------------------------------

def distance_matrix(G: Graph) -> np.ndarray:
    """All-pairs shortest-path distances by BFS from every vertex."""
    adj = G.neighbors()
    n = G.vertex_count
    D = np.zeros((n, n))
    for s in range(n):
        dist = _bfs_levels(adj, s)
        if len(dist) != n:
            missing = min(set(range(n)) - dist.keys())
            raise DisconnectedGraphError(s, missing)
        for t, d in dist.items():
            D[s, t] = d
    return D


def corona_distance_kronecker(G: Graph, H: Graph, max_copy_size: int = MAX_COPY_SIZE) -> np.ndarray:
    """Distance matrix of G ⊙ H assembled from three Kronecker terms.

    D_G ⊗ [[J, J], [J, J]] + I ⊗ [[0, 0], [0, -2I - A_H]] + J_G ⊗ [[0, J], [J, 2J]],
    computed in integers and returned as floats.
    """
    _check_corona_inputs(G, H, max_copy_size)
    m, n = G.vertex_count, H.vertex_count
    D_G = distance_matrix(G).astype(np.int64)
    A_H = H.adjacency().astype(np.int64)

    ones_block = np.ones((n + 1, n + 1), dtype=np.int64)
    local = np.zeros((n + 1, n + 1), dtype=np.int64)
    local[1:, 1:] = -2 * np.eye(n, dtype=np.int64) - A_H
    cross = np.ones((n + 1, n + 1), dtype=np.int64)
    cross[0, 0] = 0
    cross[1:, 1:] = 2

    D = (
        np.kron(D_G, ones_block)
        + np.kron(np.eye(m, dtype=np.int64), local)
        + np.kron(np.ones((m, m), dtype=np.int64), cross)
    )
    return D.astype(float)


def is_metric(D: np.ndarray) -> bool:
    """Symmetry, zero diagonal, positivity off the diagonal, triangle inequality."""
    n = len(D)
    if not np.array_equal(D, D.T) or np.any(np.diag(D) != 0):
        return False
    if np.any(D[~np.eye(n, dtype=bool)] <= 0):
        return False
    for k in range(n):
        if np.any(D > D[:, k, None] + D[None, k, :]):
            return False
    return True


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

def format_edge_list(G: Graph) -> str:
    lines = [f"{G.vertex_count} {G.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``n m`` followed by ``m`` lines of 0-based ``u v`` pairs.

    Blank lines and ``#`` comments are ignored. Loops and duplicate edges
    are rejected.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParameterError("empty edge list")
    try:
        header = [int(t) for t in rows[0]]
        pairs = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParameterError(f"non-integer token in edge list: {exc}") from exc
    if len(header) != 2:
        raise ParameterError("header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise ParameterError(f"header declares {m} edges, found {len(pairs)}")
    for p in pairs:
        if len(p) != 2:
            raise ParameterError(f"edge line must have two integers, got {p}")
    seen = set()
    for u, v in pairs:
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParameterError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(pairs), name=name)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read(), name=str(path))


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(G))


def from_edges(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    return Graph(n, tuple(edges), name=name)
