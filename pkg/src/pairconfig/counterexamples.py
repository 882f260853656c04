"""Two families of non-configurable graphs just outside the solver's hypotheses.

``k19``: copies of a gadget built on five branch vertices, chained into a
ring.  Every pair of branch vertices is joined by a path through one new
vertex and by a path through two, except that the two-vertex path between
the chosen pair ``a, b`` is left out.  Maximum degree 8, no induced
``K_{1,9}``, not configurable.

``pigeonhole``: the incidence graph between a base set of ``10k - 9``
elements and all of its ``k``-subsets.  Minimum degree ``k`` for ``k >= 2``,
not configurable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .graph import Graph, build_graph, is_k1s_free, max_degree
from .labeling import ALL_PAIRS, FULL, LabelPair, is_satisfied
from .oracle import Outcome, constrained_solve, exact_solve


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class K19FamilyParams:
    k: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise FamilyError("k must be at least 1")


@dataclass(frozen=True)
class PigeonholeParams:
    k: int = 1
    max_vertices: int = 50_000

    def __post_init__(self) -> None:
        if self.k < 1:
            raise FamilyError("k must be at least 1")

    @property
    def base_size(self) -> int:
        return 10 * self.k - 9

    @property
    def order(self) -> int:
        return self.base_size + math.comb(self.base_size, self.k)


@dataclass
class FamilyGraph:
    """A family member with the vertex roles its checker relies on."""

    family: str
    k: int
    graph: Graph
    roles: dict[int, str]
    branches: list[tuple[int, ...]] = field(default_factory=list)
    subsets: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def annotation(self) -> str:
        return "".join(f"{v} {r}\n" for v, r in sorted(self.roles.items()))


# ---------------------------------------------------------------------------
# K_{1,9}-free family

GADGET_ORDER = 33
BRANCH = 5


def _gadget(offset: int) -> tuple[list[tuple[int, int]], dict[int, str], tuple[int, ...]]:
    branch = tuple(range(offset, offset + BRANCH))
    roles = {v: "branch" for v in branch}
    edges: list[tuple[int, int]] = []
    nxt = offset + BRANCH
    for i, j in itertools.combinations(range(BRANCH), 2):
        x, y = branch[i], branch[j]
        u = nxt
        nxt += 1
        roles[u] = "u-subdivision"
        edges += [(x, u), (u, y)]
        if (i, j) == (0, 1):
            continue
        vx, vy = nxt, nxt + 1
        nxt += 2
        roles[vx] = roles[vy] = "v-subdivision"
        edges += [(x, vx), (vx, vy), (vy, y)]
    assert nxt - offset == GADGET_ORDER
    return edges, roles, branch


def build_k19_family(p: K19FamilyParams | int) -> FamilyGraph:
    """``k`` gadgets with ``b_i a_{i+1}`` and ``b_k a_1`` added (none for ``k = 1``)."""
    p = p if isinstance(p, K19FamilyParams) else K19FamilyParams(p)
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    branches = []
    for i in range(p.k):
        e, r, b = _gadget(i * GADGET_ORDER)
        edges += e
        roles.update(r)
        branches.append(b)
    if p.k >= 2:
        for i in range(p.k):
            a_next = branches[(i + 1) % p.k][0]
            edges.append((branches[i][1], a_next))
    g = build_graph(p.k * GADGET_ORDER, edges)
    assert max_degree(g) == 8
    if p.k == 1:
        assert sum(1 for v in range(g.n) if g.degree(v) == 7) == 2
    return FamilyGraph("k19", p.k, g, roles, branches)


def gadget_implications() -> bool:
    """Oracle spot checks of the two forcing gadgets.

    ``x - u - y`` cannot satisfy ``u`` when ``f(x) = f(y)``; ``x - v1 - v2 - y``
    cannot satisfy both ``v1, v2`` when ``f(x)`` and ``f(y)`` are disjoint.
    """
    one = build_graph(3, [(0, 1), (1, 2)])
    for p in ALL_PAIRS:
        res = constrained_solve(one, need={0: 0, 2: 0}, fixed={0: p, 2: p})
        if res.outcome is not Outcome.NOT_CONFIGURABLE:
            return False
    two = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    for p, q in itertools.product(ALL_PAIRS, repeat=2):
        if set(p) & set(q):
            continue
        res = constrained_solve(two, need={0: 0, 3: 0}, fixed={0: p, 3: q})
        if res.outcome is not Outcome.NOT_CONFIGURABLE:
            return False
    return True


def surviving_branch_assignments() -> list[tuple[LabelPair, ...]]:
    """Branch labelings compatible with every gadget; ``a, b`` are positions 0, 1."""
    out = []
    masks = [p.mask for p in ALL_PAIRS]
    for combo in itertools.product(range(len(masks)), repeat=BRANCH):
        ok = True
        for i, j in itertools.combinations(range(BRANCH), 2):
            mi, mj = masks[combo[i]], masks[combo[j]]
            if mi == mj or ((i, j) != (0, 1) and not mi & mj):
                ok = False
                break
        if ok:
            out.append(tuple(ALL_PAIRS[c] for c in combo))
    return out


def max_intersecting_family() -> int:
    """Largest pairwise-intersecting set of pairs, by brute force over all 2^10 subsets."""
    best = 0
    for bits in range(1 << len(ALL_PAIRS)):
        chosen = [ALL_PAIRS[i] for i in range(len(ALL_PAIRS)) if bits >> i & 1]
        if len(chosen) > best and all(set(p) & set(q) for p, q in itertools.combinations(chosen, 2)):
            best = len(chosen)
    return best


def check_k19_nonconfigurable(fg: FamilyGraph) -> bool:
    """True when no labeling of one gadget's branch vertices meets the gadget constraints."""
    if not isinstance(fg, FamilyGraph) or fg.family != "k19":
        raise FamilyError("expected a k19 family graph")
    return gadget_implications() and not surviving_branch_assignments()


# ---------------------------------------------------------------------------
# Pigeonhole family


def build_pigeonhole_family(p: PigeonholeParams | int) -> FamilyGraph:
    p = p if isinstance(p, PigeonholeParams) else PigeonholeParams(p)
    if p.order > p.max_vertices:
        raise FamilyError(f"k={p.k} needs {p.order} vertices, above the cap of {p.max_vertices}")
    n = p.base_size
    roles = {b: "element" for b in range(n)}
    subsets: dict[int, tuple[int, ...]] = {}
    edges = []
    for idx, s in enumerate(itertools.combinations(range(n), p.k)):
        v = n + idx
        roles[v] = "set"
        subsets[v] = s
        edges += [(v, b) for b in s]
    g = build_graph(n + len(subsets), edges)
    if p.k >= 2:
        assert min(g.degree(v) for v in range(g.n)) >= p.k
    return FamilyGraph("pigeonhole", p.k, g, roles, subsets=subsets)


def pigeonhole_witness(fg: FamilyGraph, labels: dict[int, LabelPair]) -> int | None:
    """A set vertex whose elements all carry one pair under ``labels``, if any."""
    by_pair: dict[LabelPair, list[int]] = {}
    for b in range(fg.graph.n):
        if fg.roles[b] == "element":
            by_pair.setdefault(labels[b], []).append(b)
    for members in by_pair.values():
        if len(members) >= fg.k:
            target = tuple(sorted(members[: fg.k]))
            for v, s in fg.subsets.items():
                if s == target:
                    return v
    return None


def check_pigeonhole(fg: FamilyGraph) -> bool:
    """Counting argument plus a verifier check on a spread-out labeling."""
    if not isinstance(fg, FamilyGraph) or fg.family != "pigeonhole":
        raise FamilyError("expected a pigeonhole family graph")
    n = sum(1 for r in fg.roles.values() if r == "element")
    if n <= len(ALL_PAIRS) * (fg.k - 1):
        return False
    # round-robin spreads elements over the pairs as evenly as possible
    labels = {b: ALL_PAIRS[b % len(ALL_PAIRS)] for b in range(n)}
    s = pigeonhole_witness(fg, labels)
    if s is None:
        return False
    for p in ALL_PAIRS:
        if is_satisfied(fg.graph, {**labels, s: p}, s):
            return False
        if len(set(p) | set(labels[fg.subsets[s][0]])) == len(FULL):
            return False
    if fg.k == 1:
        return exact_solve(fg.graph).outcome is Outcome.NOT_CONFIGURABLE
    return True


def is_k19_free(g: Graph) -> bool:
    return is_k1s_free(g, 9)


__all__ = [
    "FamilyError",
    "FamilyGraph",
    "K19FamilyParams",
    "PigeonholeParams",
    "build_k19_family",
    "build_pigeonhole_family",
    "check_k19_nonconfigurable",
    "check_pigeonhole",
    "gadget_implications",
    "is_k19_free",
    "max_intersecting_family",
    "pigeonhole_witness",
    "surviving_branch_assignments",
]
