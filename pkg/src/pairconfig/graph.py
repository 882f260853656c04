"""Graph representation, structural predicates and generators.

Vertices are dense integer ids ``0..n-1``.  Graphs are immutable once built;
operations that drop or renumber vertices return an explicit id table so that
labelings can be lifted back to the original graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric or out-of-range edge {v}-{u}")

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    def to_dict(self) -> dict[int, set[int]]:
        """Mutable adjacency copy keyed by vertex id."""
        return {v: set(a) for v, a in enumerate(self.adj)}


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def from_adjacency(adj: dict[int, set[int]]) -> tuple[Graph, list[int]]:
    """Relabel a dict-of-sets adjacency to a dense :class:`Graph`.

    Returns the graph and ``old_ids`` where ``old_ids[new] == old``.
    """
    old_ids = sorted(adj)
    index = {v: i for i, v in enumerate(old_ids)}
    edges = [(index[u], index[w]) for u in old_ids for w in adj[u] if u < w]
    return build_graph(len(old_ids), edges), old_ids


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("empty graph has no minimum degree")
    return min(len(a) for a in g.adj)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("empty graph has no maximum degree")
    return max(len(a) for a in g.adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest id."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``.

    Returns ``(sub, old_ids)`` where vertex ``i`` of ``sub`` is ``old_ids[i]``
    in ``g``; ids keep their relative order.
    """
    old_ids = sorted(set(vertices))
    for v in old_ids:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(old_ids)}
    edges = [(index[u], index[w]) for u in old_ids for w in g.adj[u] if w in index and u < w]
    return build_graph(len(old_ids), edges), old_ids


# ---------------------------------------------------------------------------
# Induced stars


def independent_subset(g: Graph, candidates: Sequence[int], size: int) -> list[int] | None:
    """Find ``size`` pairwise non-adjacent vertices among ``candidates``."""
    cands = sorted(candidates)
    if size <= 0:
        return []
    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == size:
            return True
        # not enough candidates left to reach the target
        if len(cands) - start < size - len(chosen):
            return False
        for i in range(start, len(cands)):
            c = cands[i]
            if any(c in g.adj[x] for x in chosen):
                continue
            chosen.append(c)
            if extend(i + 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if extend(0) else None


def induced_star(g: Graph, leaves: int) -> list[int] | None:
    """Return ``[center, leaf, ...]`` of an induced ``K_{1,leaves}``, or None."""
    for v in range(g.n):
        if len(g.adj[v]) < leaves:
            continue
        found = independent_subset(g, list(g.adj[v]), leaves)
        if found is not None:
            return [v, *found]
    return None


def is_k1s_free(g: Graph, leaves: int) -> bool:
    return induced_star(g, leaves) is None


def is_k16_free(g: Graph) -> bool:
    """True iff no vertex has six pairwise non-adjacent neighbors."""
    return induced_star(g, 6) is None


# ---------------------------------------------------------------------------
# Small-graph isomorphism


def invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant used to bucket candidate graphs."""
    sig = sorted(
        (len(g.adj[v]), tuple(sorted(len(g.adj[u]) for u in g.adj[v]))) for v in range(g.n)
    )
    triangles = sum(
        1 for u in range(g.n) for v in g.adj[u] if u < v for w in g.adj[u] & g.adj[v] if v < w
    )
    return (g.n, g.m, triangles, tuple(sig))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``phi`` with ``phi[v]`` the image in ``h`` of vertex ``v`` of ``g``.

    Degree-filtered backtracking; intended for graphs with a dozen vertices or so.
    """
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    if n == 0:
        return []
    key_g = [(len(g.adj[v]), tuple(sorted(len(g.adj[u]) for u in g.adj[v]))) for v in range(n)]
    key_h = [(len(h.adj[v]), tuple(sorted(len(h.adj[u]) for u in h.adj[v]))) for v in range(n)]
    if sorted(key_g) != sorted(key_h):
        return None

    order = _bfs_order(g)
    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mapped_nbrs = [phi[u] for u in g.adj[v] if phi[u] >= 0]
        if mapped_nbrs:
            pool = h.adj[mapped_nbrs[0]]
        else:
            pool = range(n)
        for w in pool:
            if used[w] or key_h[w] != key_g[v]:
                continue
            ok = True
            for u in g.adj[v]:
                if phi[u] >= 0 and phi[u] not in h.adj[w]:
                    ok = False
                    break
            if ok:
                mapped_count = sum(1 for u in g.adj[v] if phi[u] >= 0)
                if sum(1 for x in h.adj[w] if used[x]) != mapped_count:
                    ok = False
            if not ok:
                continue
            phi[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            phi[v] = -1
            used[w] = False
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * g.n
    for s in sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(g.adj[v]):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


# ---------------------------------------------------------------------------
# Named graphs


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with the ``a`` side on ids ``0..a-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def subdivide(g: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` interior vertices."""
    edges = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u, *range(nxt, nxt + times), v]
        nxt += times
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


def c4_dot_c4() -> Graph:
    """Two 4-cycles sharing vertex 0: ``0-1-2-3-0`` and ``0-4-5-6-0``."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


# Figure-1 graphs: outer cycle t-l3-l2-l1-r1-r2-r3-t on ids 0..6.
_T, _L3, _L2, _L1, _R1, _R2, _R3 = range(7)
_OUTER7 = [(_T, _L3), (_L3, _L2), (_L2, _L1), (_L1, _R1), (_R1, _R2), (_R2, _R3), (_R3, _T)]
_G_CHORDS = {
    1: [(_L2, _R2)],
    2: [(_L3, _R2), (_L2, _R3)],
    3: [(_T, _L1), (_T, _R1)],
    4: [(_L3, _R2), (_L2, _R3), (_L2, _R2)],
}


def figure_graph(i: int) -> Graph:
    """One of the four 7-vertex exceptional graphs ``G_1..G_4``."""
    return build_graph(7, _OUTER7 + _G_CHORDS[i])


class ExceptionalKind(str, Enum):
    C4 = "C4"
    C7 = "C7"
    C4dotC4 = "C4dotC4"
    K23 = "K23"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"

    def reference(self) -> Graph:
        return _REFERENCES[self]


_REFERENCES: dict[ExceptionalKind, Graph] = {
    ExceptionalKind.C4: cycle(4),
    ExceptionalKind.C7: cycle(7),
    ExceptionalKind.C4dotC4: c4_dot_c4(),
    ExceptionalKind.K23: complete_bipartite(2, 3),
    ExceptionalKind.G1: figure_graph(1),
    ExceptionalKind.G2: figure_graph(2),
    ExceptionalKind.G3: figure_graph(3),
    ExceptionalKind.G4: figure_graph(4),
}


def detect_exceptional(g: Graph) -> ExceptionalKind | None:
    """Identify ``g`` as one of the eight exceptional graphs, if it is one."""
    if not is_connected(g):
        raise GraphError("detect_exceptional expects a connected graph")
    if g.n > 7:
        return None
    for kind, ref in _REFERENCES.items():
        if find_isomorphism(g, ref) is not None:
            return kind
    return None


def exceptional_kind_of(adj: dict[int, set[int]]) -> ExceptionalKind | None:
    """Exceptional check on a connected dict-of-sets adjacency."""
    if len(adj) > 7 or len(adj) < 4:
        return None
    g, _ = from_adjacency(adj)
    return detect_exceptional(g)


# ---------------------------------------------------------------------------
# R-disk graphs


@dataclass(frozen=True)
class PointSet:
    points: tuple[tuple[float, float], ...]
    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise GraphError("radius must be positive")


def generate_rdisk(ps: PointSet) -> Graph:
    """Edge ``ij`` whenever the Euclidean distance is at most the radius."""
    pts = ps.points
    r2 = ps.radius * ps.radius
    # bucket points into a grid of radius-sized cells to avoid the quadratic scan
    cell = ps.radius
    grid: dict[tuple[int, int], list[int]] = {}
    for i, (x, y) in enumerate(pts):
        grid.setdefault((math.floor(x / cell), math.floor(y / cell)), []).append(i)
    edges = []
    for (cx, cy), members in grid.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                others = grid.get((cx + dx, cy + dy))
                if not others:
                    continue
                for i in members:
                    xi, yi = pts[i]
                    for j in others:
                        if j <= i:
                            continue
                        xj, yj = pts[j]
                        if (xi - xj) ** 2 + (yi - yj) ** 2 <= r2:
                            edges.append((i, j))
    return build_graph(len(pts), edges)


# ---------------------------------------------------------------------------
# Text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, parts) for no, parts in lines if parts]
    if not lines:
        raise GraphError("line 1: missing header 'n m'")
    no, head = lines[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphError(f"line {no}: header must be two integers 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for no, parts in body:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphError(f"line {no}: expected two integer vertex ids") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {no}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"line {no}: self-loop {u} {v}")
        edges.append((u, v))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"


def parse_point_set(text: str) -> PointSet:
    """Parse ``k R`` followed by ``k`` lines ``x y``."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, parts) for no, parts in lines if parts]
    if not lines:
        raise GraphError("line 1: missing header 'k R'")
    no, head = lines[0]
    try:
        k = int(head[0])
        radius = float(head[1])
        if len(head) != 2:
            raise ValueError
    except (ValueError, IndexError):
        raise GraphError(f"line {no}: header must be 'k R'") from None
    if len(lines) - 1 != k:
        raise GraphError(f"header declares {k} points but {len(lines) - 1} point lines follow")
    pts = []
    for no, parts in lines[1:]:
        try:
            x, y = (float(t) for t in parts)
        except ValueError:
            raise GraphError(f"line {no}: expected two real coordinates") from None
        pts.append((x, y))
    return PointSet(tuple(pts), radius)


def format_point_set(ps: PointSet) -> str:
    rows = [f"{len(ps.points)} {ps.radius!r}"]
    rows.extend(f"{x!r} {y!r}" for x, y in ps.points)
    return "\n".join(rows) + "\n"

