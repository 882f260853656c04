"""Orientations with in-degree at least half the degree at every vertex."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class Orientation:
    """``arcs[i] = (tail, head)`` orients the ``i``-th input edge."""

    arcs: tuple[tuple[int, int], ...]

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)

    def in_degrees(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for _, h in self.arcs:
            out[h] += 1
        return dict(out)

    def __len__(self) -> int:
        return len(self.arcs)


def orient_min_indegree(g: Graph | Sequence[tuple[int, int]]) -> Orientation:
    """Orient every edge so each vertex ``v`` gets in-degree ``>= deg(v) // 2``.

    Accepts a :class:`Graph` or an edge list, which may contain parallel
    edges.  Pendant edges point into the non-leaf end; once no pendant edges
    remain, a closed walk is traced, its cycle is oriented head to tail and its
    edges are removed.  Every edge is touched a constant number of times.
    """
    edges: list[tuple[int, int]] = list(g.edges() if isinstance(g, Graph) else g)
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
    inc: dict[int, set[int]] = defaultdict(set)
    for i, (u, v) in enumerate(edges):
        inc[u].add(i)
        inc[v].add(i)
    arcs: list[tuple[int, int] | None] = [None] * len(edges)

    def other(i: int, v: int) -> int:
        a, b = edges[i]
        return b if a == v else a

    def drop(i: int) -> None:
        a, b = edges[i]
        inc[a].discard(i)
        inc[b].discard(i)

    # first in, first out: original leaves go before vertices that become leaves
    leaves = deque(v for v in sorted(inc) if len(inc[v]) == 1)

    def strip_leaves() -> None:
        while leaves:
            v = leaves.popleft()
            if len(inc[v]) != 1:
                continue
            (i,) = inc[v]
            u = other(i, v)
            arcs[i] = (v, u)
            drop(i)
            if len(inc[u]) == 1:
                leaves.append(u)

    strip_leaves()
    for start in sorted(inc):
        while inc[start]:
            # every remaining vertex has degree >= 2, so the walk never stalls
            walk = [start]
            used: list[int] = []
            pos = {start: 0}
            v, came = start, -1
            while True:
                i = min(e for e in inc[v] if e != came)
                u = other(i, v)
                used.append(i)
                if u in pos:
                    cyc_start = pos[u]
                    break
                pos[u] = len(walk)
                walk.append(u)
                v, came = u, i
            for j in range(cyc_start, len(used)):
                i = used[j]
                tail = walk[j]
                arcs[i] = (tail, other(i, tail))
                drop(i)
            for w in walk:
                if len(inc[w]) == 1:
                    leaves.append(w)
            strip_leaves()
    return Orientation(tuple(a for a in arcs if a is not None))


def check_orientation(edges: Iterable[tuple[int, int]], orient: Orientation) -> list[int]:
    """Vertices whose in-degree falls below half their degree."""
    deg: dict[int, int] = defaultdict(int)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    ind = orient.in_degrees()
    return sorted(v for v, d in deg.items() if ind.get(v, 0) < d // 2)
