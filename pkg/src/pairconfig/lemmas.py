"""Local extension and reduction rules for configurations.

Each function takes a host labeling and grows it over a small attached
structure (a path, a star, a cycle hanging off a tail, ...).  Table-driven
rules normalize the anchor labels with the lexicographically least label
permutation, read the table and map the result back.

Path sizes are always vertex counts: ``k`` is the number of new path vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Mapping, Sequence

from .graph import (
    ExceptionalKind,
    Graph,
    build_graph,
    complete_bipartite,
    cycle,
    detect_exceptional,
    find_isomorphism,
    from_adjacency,
    induced,
    is_connected,
)
from .labeling import (
    ALL_PAIRS,
    FULL,
    Configuration,
    LabelPair,
    all_permutations,
    missing_colors,
    permutation_mapping,
    seen_labels,
    verify,
)
from .oracle import OracleBudget, constrained_solve


class LemmaError(ValueError):
    """A rule was applied outside its preconditions."""


P = LabelPair

# ---------------------------------------------------------------------------
# Label helpers


def least_pair(required: set[int] | frozenset[int] = frozenset(), within: set[int] | frozenset[int] = FULL) -> LabelPair:
    """Least pair ``p`` (lexicographic) with ``required <= p <= within``."""
    for p in ALL_PAIRS:
        if required <= set(p) <= within:
            return p
    raise LemmaError(f"no pair contains {sorted(required)} inside {sorted(within)}")


def _img(sigma: Mapping[int, int], p: LabelPair) -> LabelPair:
    return LabelPair(sigma[p[0]], sigma[p[1]])


def _inverse(sigma: Mapping[int, int]) -> dict[int, int]:
    return {b: a for a, b in sigma.items()}


def _fit(constraints: Sequence[tuple[set[int] | frozenset[int], set[int] | frozenset[int]]]) -> dict[int, int]:
    sigma = permutation_mapping(constraints)
    if sigma is None:
        raise LemmaError("anchor labels admit no normalizing permutation")
    return sigma


# ---------------------------------------------------------------------------
# Paths


def path3_labels(f1: LabelPair, f4: LabelPair, a: int, b: int) -> tuple[LabelPair, LabelPair]:
    """Labels for ``v2, v3`` on a path ``v1 v2 v3 v4`` with ``f(v2) = {a, b}``."""
    if not set(f1) & set(f4):
        raise LemmaError(f"end labels {f1} and {f4} are disjoint")
    if a == b or {a, b} & set(f1):
        raise LemmaError(f"{{{a},{b}}} must be a pair avoiding {f1}")
    i = min(set(f1) & set(f4))
    j = f1[0] if f1[1] == i else f1[1]
    (r,) = FULL - set(f1) - {a, b}
    return LabelPair(a, b), LabelPair(j, r)


def extend_path3(f: Mapping[int, LabelPair], path: Sequence[int], a: int, b: int) -> Configuration:
    """Assign the two middle vertices of ``path = (v1, v2, v3, v4)``."""
    if len(path) != 4:
        raise LemmaError("extend_path3 needs a path on four vertices")
    v1, v2, v3, v4 = path
    p2, p3 = path3_labels(f[v1], f[v4], a, b)
    return {v2: p2, v3: p3}


# (k mod 3, shape of f(y)) -> (repeated block, tail labels) with f(x) = {1,2};
# f(y) is {1,2}, {1,3} or {3,4} for shapes 0, 1, 2.
ATTACHED_PATH_TABLE: dict[tuple[int, int], tuple[tuple[LabelPair, ...], tuple[LabelPair, ...]]] = {
    (0, 0): ((P(1, 3), P(4, 5), P(2, 3)), ()),
    (0, 1): ((P(3, 4), P(1, 5), P(2, 4)), ()),
    (0, 2): ((P(3, 4), P(1, 5), P(1, 2)), ()),
    (1, 0): ((P(3, 4), P(1, 5), P(2, 5)), (P(3, 4),)),
    (1, 1): ((P(3, 4), P(1, 5), P(2, 5)), (P(3, 4),)),
    (1, 2): ((P(3, 5), P(1, 4), P(1, 2)), (P(3, 5),)),
    (2, 0): ((P(3, 4), P(1, 5), P(1, 2)), (P(3, 4), P(1, 5))),
    (2, 1): ((P(3, 4), P(2, 5), P(1, 2)), (P(3, 4), P(2, 5))),
    (2, 2): ((P(3, 4), P(1, 5), P(2, 4)), (P(1, 3), P(2, 5))),
}
_Y_SHAPES = (P(1, 2), P(1, 3), P(3, 4))


def attached_path_labels(fx: LabelPair, fy: LabelPair, k: int) -> list[LabelPair]:
    """Labels of ``v1..vk`` for a path attached to ``x`` (at ``v1``) and ``y``."""
    if k < 3:
        raise LemmaError(f"attached paths need at least 3 vertices, got {k}")
    shape = 2 - len(set(fx) & set(fy))
    sigma = _fit([(set(fx), {1, 2}), (set(fy), set(_Y_SHAPES[shape]))])
    block, tail = ATTACHED_PATH_TABLE[(k % 3, shape)]
    rows = list(block) * (k // 3) + list(tail)
    back = _inverse(sigma)
    return [_img(back, p) for p in rows]


def extend_attached_path(f: Mapping[int, LabelPair], path: Sequence[int], x: int, y: int) -> Configuration:
    """Extend ``f`` over ``path`` whose first vertex touches ``x`` and last touches ``y``."""
    out = dict(f)
    out.update(zip(path, attached_path_labels(f[x], f[y], len(path))))
    return out


def contracted_path_labels(fx: LabelPair, fy: LabelPair) -> tuple[LabelPair, LabelPair, LabelPair]:
    """Labels restoring three degree-2 vertices between ``x`` and ``y``."""
    if fx == fy:
        a, b, c = attached_path_labels(fx, fy, 3)
        return a, b, c
    return fy, least_pair(set(FULL - set(fx) - set(fy))), fx


# ---------------------------------------------------------------------------
# Reductions


@dataclass
class Reduction:
    """One rewrite step; ``extend`` lifts a labeling of ``graph`` back."""

    rule: str
    graph: Graph
    old_ids: list[int]
    removed: tuple[int, ...]
    anchors: tuple[int, ...]
    extend: Callable[[Configuration], Configuration] = field(repr=False)

    def lift(self, f_reduced: Mapping[int, LabelPair]) -> Configuration:
        """Map a labeling of the reduced graph to original ids and extend it."""
        base = {self.old_ids[v]: p for v, p in f_reduced.items()}
        return self.extend(base)

    def record(self) -> dict:
        return {"rule": self.rule, "removed": list(self.removed), "anchors": list(self.anchors)}


@dataclass
class ReductionTrace:
    """Applied reductions in order; extensions replay in reverse."""

    records: list[dict] = field(default_factory=list)

    def add(self, rule: str, removed: Sequence[int] = (), anchors: Sequence[int] = (), depth: int = 0) -> None:
        self.records.append({"rule": rule, "removed": list(removed), "anchors": list(anchors), "depth": depth})

    def lines(self) -> list[str]:
        out = []
        for r in self.records:
            pad = "  " * r.get("depth", 0)
            out.append(f"{pad}{r['rule']} removed={r['removed']} anchors={r['anchors']}")
        return out

    def __len__(self) -> int:
        return len(self.records)


def rebuild(g: Graph, drop: Sequence[int] = (), add: Sequence[tuple[int, int]] = ()) -> tuple[Graph, list[int]]:
    """Delete vertices and add edges; returns the graph and its ``old_ids``."""
    gone = set(drop)
    adj = {v: set(g.adj[v]) - gone for v in g.vertices() if v not in gone}
    for u, v in add:
        adj[u].add(v)
        adj[v].add(u)
    return from_adjacency(adj)


def contract_degree2_path(g: Graph, path: Sequence[int]) -> Reduction:
    """Replace ``x v1 v2 v3 y`` (inner vertices of degree 2) by the edge ``xy``."""
    if len(path) != 5:
        raise LemmaError("contraction needs a path x v1 v2 v3 y")
    x, v1, v2, v3, y = path
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise LemmaError(f"{a}-{b} is not an edge")
    for v in (v1, v2, v3):
        if g.degree(v) != 2:
            raise LemmaError(f"vertex {v} must have degree 2")
    if x == y:
        raise LemmaError("path ends must differ")
    add = [] if g.has_edge(x, y) else [(x, y)]
    reduced, old_ids = rebuild(g, (v1, v2, v3), add)

    def extend(f: Configuration) -> Configuration:
        out = dict(f)
        out[v1], out[v2], out[v3] = contracted_path_labels(f[x], f[y])
        return out

    return Reduction("contract-path", reduced, old_ids, (v1, v2, v3), (x, y), extend)


# ---------------------------------------------------------------------------
# Stars


@dataclass(frozen=True)
class StarSpec:
    """An (alpha, beta)-star hung on host anchors.

    ``rays1`` holds ``(x_i, u_i)`` and ``rays2`` holds ``(y_j, z_j, v_j)``:
    ``w x_i``, ``w y_j``, ``y_j z_j`` are star edges and ``x_i u_i``,
    ``z_j v_j`` attach the star to the host.
    """

    center: int
    rays1: tuple[tuple[int, int], ...] = ()
    rays2: tuple[tuple[int, int, int], ...] = ()

    @property
    def alpha(self) -> int:
        return len(self.rays1)

    @property
    def beta(self) -> int:
        return len(self.rays2)

    def admissible(self) -> bool:
        return self.alpha + 3 * self.beta <= 9 or (self.alpha, self.beta) == (1, 3)

    def vertices(self) -> list[int]:
        out = [self.center]
        out += [x for x, _ in self.rays1]
        for y, z, _ in self.rays2:
            out += [y, z]
        return out

    def edges(self) -> list[tuple[int, int]]:
        """Star edges plus attachment edges."""
        w = self.center
        out = []
        for x, u in self.rays1:
            out += [(w, x), (x, u)]
        for y, z, v in self.rays2:
            out += [(w, y), (y, z), (z, v)]
        return out


def forbidden_pairs(f: Mapping[int, LabelPair], spec: StarSpec) -> set[LabelPair]:
    out = {f[u] for _, u in spec.rays1}
    for _, _, v in spec.rays2:
        rest = sorted(FULL - set(f[v]))
        out.update(LabelPair(a, b) for a, b in combinations(rest, 2))
    return out


def extend_star(f: Mapping[int, LabelPair], spec: StarSpec) -> Configuration:
    """Extend ``f`` over an admissible star whose anchors are labeled."""
    if not spec.admissible():
        raise LemmaError(f"({spec.alpha},{spec.beta})-star is not admissible")
    a, b = spec.alpha, spec.beta
    if a + b < 2:
        raise LemmaError("a star needs at least two rays")
    if a + b == 2:
        # a two-ray star is a path between its two anchors
        w = spec.center
        if b == 0:
            (x1, u1), (x2, u2) = spec.rays1
            return extend_attached_path(f, [x1, w, x2], u1, u2)
        if a == 1:
            (x1, u1), (y1, z1, v1) = spec.rays1[0], spec.rays2[0]
            return extend_attached_path(f, [x1, w, y1, z1], u1, v1)
        (y1, z1, v1), (y2, z2, v2) = spec.rays2
        return extend_attached_path(f, [z1, y1, w, y2, z2], v1, v2)

    out = dict(f)
    w = spec.center
    anchors_union = set().union(*(set(f[u]) for _, u in spec.rays1)) if a else set()
    if b == 0 and len(anchors_union) <= 3:
        fw = least_pair(within=FULL - anchors_union)
    else:
        banned = forbidden_pairs(f, spec)
        free = [p for p in ALL_PAIRS if p not in banned]
        if not free:
            raise LemmaError("every pair is forbidden by the anchors")
        fw = free[0]
    out[w] = fw

    if b == 0:
        options = []
        for x, u in spec.rays1:
            need = FULL - set(fw) - set(f[u])
            opts = [p for p in ALL_PAIRS if need <= set(p) and not set(p) & set(fw)]
            if not opts:
                raise LemmaError(f"ray vertex {x} cannot be satisfied")
            options.append(opts)
        picks = [opts[0] for opts in options]
        if len(set(picks)) == 1:
            for i, opts in enumerate(options):
                if len(opts) > 1:
                    picks[i] = opts[1]
                    break
        for (x, _), p in zip(spec.rays1, picks):
            out[x] = p
        return out

    for x, u in spec.rays1:
        out[x] = least_pair(set(FULL - set(fw) - set(f[u])))
    for y, z, v in spec.rays2[:-1]:
        a1, b1 = least_pair(within=FULL - set(fw))
        out.update(extend_path3(out, [w, y, z, v], a1, b1))
    y, z, v = spec.rays2[-1]
    seen = set(fw)
    for x, _ in spec.rays1:
        seen |= set(out[x])
    for yy, _, _ in spec.rays2[:-1]:
        seen |= set(out[yy])
    a1, b1 = least_pair(set(FULL - seen), FULL - set(fw))
    out.update(extend_path3(out, [w, y, z, v], a1, b1))
    return out


# ---------------------------------------------------------------------------
# Small extensions


@dataclass(frozen=True)
class OneVertex:
    v: int
    x: int
    y: int


@dataclass(frozen=True)
class TwoVertex:
    u: int
    v: int
    x: int
    y: int


def small_extend(f: Mapping[int, LabelPair], mode: OneVertex | TwoVertex) -> Configuration:
    """Add one vertex adjacent to ``x, y`` or a two-vertex path ``x u v y``."""
    out = dict(f)
    fx, fy = f[mode.x], f[mode.y]
    if isinstance(mode, OneVertex):
        if fx == fy:
            raise LemmaError("one-vertex extension needs f(x) != f(y)")
        out[mode.v] = least_pair(set(FULL - set(fx) - set(fy)))
        return out
    if not set(fx) & set(fy):
        raise LemmaError("two-vertex extension needs f(x) and f(y) to meet")
    a, b = least_pair(within=FULL - set(fx))
    out.update(extend_path3(out, [mode.x, mode.u, mode.v, mode.y], a, b))
    return out


def pair_map(pairs: Sequence[tuple[int, int]]) -> list[LabelPair]:
    return [LabelPair(a, b) for a, b in pairs]


C5_PATTERN = [LabelPair(i, (i + 2) % 5 + 1) for i in range(1, 6)]
C6_PATTERN = pair_map([(1, 3), (2, 4), (1, 5), (2, 3), (1, 4), (2, 5)])


def cycle_config(n: int) -> list[LabelPair]:
    """Configuration of ``C_n`` along the cycle order; ``C_4, C_7`` have none."""
    if n < 3:
        raise LemmaError("cycles have at least three vertices")
    if n in (4, 7):
        raise LemmaError(f"C_{n} is not configurable")
    if n % 3 == 0:
        return [P(1, 2), P(3, 4), P(1, 5)] * (n // 3)
    if n == 5:
        return list(C5_PATTERN)
    if n == 10:
        return list(C5_PATTERN) * 2
    # drop three consecutive vertices, solve the shorter cycle, restore them
    short = cycle_config(n - 3)
    x, y = short[-1], short[0]
    return short + list(contracted_path_labels(x, y))


@dataclass
class Construction:
    """A built graph with its configuration and named vertex groups."""

    graph: Graph
    config: Configuration
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def check(self) -> "Construction":
        bad = verify(self.graph, self.config)
        if bad:
            raise LemmaError(f"construction leaves vertices {bad} unsatisfied")
        return self


def cycle_with_added_path(c_len: int, path_len: int, i: int, j: int) -> Construction:
    """Cycle ``C_5``/``C_6`` plus a path with ``path_len`` edges between ``i`` and ``j``."""
    if c_len not in (5, 6):
        raise LemmaError("cycle length must be 5 or 6")
    if path_len not in (2, 3):
        raise LemmaError("path length must be 2 or 3 edges")
    if not (0 <= i < c_len and 0 <= j < c_len) or i == j or (i - j) % c_len in (1, c_len - 1):
        raise LemmaError("path ends must be distinct nonadjacent cycle vertices")
    labels = C5_PATTERN if c_len == 5 else C6_PATTERN
    f = dict(enumerate(labels))
    edges = [(t, (t + 1) % c_len) for t in range(c_len)]
    if path_len == 2:
        v = c_len
        edges += [(i, v), (v, j)]
        f = small_extend(f, OneVertex(v, i, j))
        new = (v,)
    else:
        u, v = c_len, c_len + 1
        edges += [(i, u), (u, v), (v, j)]
        f = small_extend(f, TwoVertex(u, v, i, j))
        new = (u, v)
    g = build_graph(c_len + path_len - 1, edges)
    return Construction(g, f, {"cycle": tuple(range(c_len)), "path": new}).check()


def add_c5_two_tails(
    f: Mapping[int, LabelPair],
    x: int,
    y: int,
    tail_p: Sequence[int],
    tail_q: Sequence[int],
    c5: Sequence[int],
) -> Configuration:
    """Extend over a 5-cycle joined to ``x`` and ``y`` through short tails.

    ``tail_p`` runs from the neighbor of ``x`` to the neighbor of ``c5[0]``;
    ``tail_q`` from the neighbor of ``y`` to the neighbor of ``c5[2]``.
    """
    if len(tail_p) not in (1, 2) or len(tail_q) not in (1, 2) or len(c5) != 5:
        raise LemmaError("tails need one or two vertices and the cycle five")
    fx, fy = set(f[x]), set(f[y])
    common = fx & fy
    if common:
        i = min(common)
        a, b = sorted(FULL - fx - fy)[:2]
    else:
        i = min(fx)
        a, b = sorted(fy)
    # normal form: f(v1) = {1,3}, f(v3) = {1,4}
    sigma = _fit([({i}, {1}), ({a}, {3}), ({b}, {4})])
    back = _inverse(sigma)
    v1, v2, v3, v4, v5 = c5
    out = dict(f)
    for v, p in zip((v1, v2, v3, v4, v5), pair_map([(1, 3), (2, 5), (1, 4), (3, 5), (2, 4)])):
        out[v] = _img(back, p)
    for anchor, tail, end in ((x, tail_p, v1), (y, tail_q, v3)):
        if len(tail) == 1:
            out = small_extend(out, OneVertex(tail[0], anchor, end))
        else:
            out = small_extend(out, TwoVertex(tail[0], tail[1], anchor, end))
    return out


# ---------------------------------------------------------------------------
# Almost-satisfying labelings of exceptional graphs

_ALMOST_TOLERANCE = {
    ExceptionalKind.C4: 2,
    ExceptionalKind.C7: 1,
    ExceptionalKind.C4dotC4: 1,
    ExceptionalKind.K23: 1,
}


def almost_satisfy(g: Graph, v: int, tolerance: int, budget: OracleBudget | None = None) -> Configuration | None:
    """Labeling satisfying every vertex but ``v``, which may miss ``tolerance`` labels."""
    res = constrained_solve(g, need={v: 5 - tolerance}, budget=budget)
    return res.configuration if res.configurable else None


@lru_cache(maxsize=None)
def _almost_cached(kind: ExceptionalKind, v: int) -> tuple[tuple[int, LabelPair], ...]:
    f = almost_satisfy(kind.reference(), v, _ALMOST_TOLERANCE[kind])
    if f is None:
        raise LemmaError(f"no almost-satisfying labeling of {kind.value} at {v}")
    return tuple(sorted(f.items()))


def almost_satisfy_exceptional(kind: ExceptionalKind, v: int) -> Configuration:
    """Labeling of the reference graph of ``kind`` satisfying all but ``v``.

    ``v`` misses at most two labels on ``C4`` and at most one on the others.
    """
    kind = ExceptionalKind(kind)
    if kind not in _ALMOST_TOLERANCE:
        raise LemmaError(f"{kind.value} has no almost-satisfying labeling rule")
    if not 0 <= v < kind.reference().n:
        raise LemmaError(f"vertex {v} not in {kind.value}")
    return dict(_almost_cached(kind, v))


def almost_tolerance(kind: ExceptionalKind) -> int:
    return _ALMOST_TOLERANCE.get(ExceptionalKind(kind), 1)


# ---------------------------------------------------------------------------
# Tailed cycles


def _cycle_at(m: int, tolerance_ok: bool = True) -> tuple[list[LabelPair], int]:
    """Cycle labeling (cycle order, index 0 = attachment) and its allowed miss."""
    if m in (4, 7):
        kind = ExceptionalKind.C4 if m == 4 else ExceptionalKind.C7
        f = almost_satisfy_exceptional(kind, 0)
        return [f[i] for i in range(m)], _ALMOST_TOLERANCE[kind]
    return cycle_config(m), 0


# hand-offs for tails of length 0, 1, 2: (f(w1), w1 may miss, tail labels)
TAILED_CYCLE_HANDOFF = {
    0: (P(3, 4), {1, 2}, ()),
    1: (P(2, 5), {3, 4}, (P(3, 4),)),
    2: (P(2, 3), {1, 5}, (P(3, 4), P(1, 5))),
}


def extend_tailed_cycle(
    h: Graph | ExceptionalKind,
    u0: int,
    k: int,
    m: int,
    f_h: Mapping[int, LabelPair] | None = None,
) -> Construction:
    """Hang a cycle ``w_1..w_m`` off ``u0`` through a tail of ``k`` vertices.

    ``h`` is a configurable graph (with configuration ``f_h``, or one is
    searched for), or ``C4``/``C7`` given as a kind.  New ids: tail
    ``n..n+k-1``, cycle ``n+k..n+k+m-1`` with ``w_1`` first.
    """
    if m < 3:
        raise LemmaError("the cycle needs at least three vertices")
    if k < 0:
        raise LemmaError("tail length must be non-negative")
    if isinstance(h, (ExceptionalKind, str)):
        kind = ExceptionalKind(h)
        if kind not in (ExceptionalKind.C4, ExceptionalKind.C7):
            raise LemmaError("exceptional hosts must be C4 or C7")
        host = kind.reference()
        f0 = almost_satisfy_exceptional(kind, u0)
    else:
        host = h
        if f_h is None:
            res = constrained_solve(host)
            if not res.configurable:
                raise LemmaError("host graph is not configurable")
            f0 = res.configuration
        else:
            f0 = dict(f_h)
    n = host.n
    tail = list(range(n, n + k))
    ring = list(range(n + k, n + k + m))
    edges = list(host.edges())
    chain = [u0, *tail, ring[0]]
    edges += list(zip(chain, chain[1:]))
    edges += [(ring[i], ring[(i + 1) % m]) for i in range(m)]
    g = build_graph(n + k + m, edges)

    # host: f(u0) = {1,2}, u0 missing at most {3,4}
    miss0 = missing_colors(host, f0, u0)
    sigma = _fit([(set(f0[u0]), {1, 2}), (miss0, {3, 4})])
    f = {v: _img(sigma, p) for v, p in f0.items()}

    short = k % 3
    handoff_w1, allowed, tail_labels = TAILED_CYCLE_HANDOFF[short]
    ring_labels, _ = _cycle_at(m)
    ring_f = dict(zip(range(m), ring_labels))
    ring_graph = cycle(m)
    miss_w = missing_colors(ring_graph, ring_f, 0)
    tau = _fit([(set(ring_labels[0]), set(handoff_w1)), (miss_w, allowed)])
    for i, w in enumerate(ring):
        f[w] = _img(tau, ring_labels[i])

    # the first k - short tail vertices come back through contractions; each
    # restored block sits right after u0 in the graph it is restored into
    f.update(zip(tail[k - short:], tail_labels))
    for start in range(k - short - 3, -1, -3):
        right = tail[start + 3] if start + 3 < k else ring[0]
        f.update(zip(tail[start:start + 3], contracted_path_labels(f[u0], f[right])))
    return Construction(g, f, {"host": tuple(range(n)), "tail": tuple(tail), "cycle": tuple(ring)}).check()


# ---------------------------------------------------------------------------
# Joining two almost-satisfied pieces


def _sees(labels: Sequence[LabelPair]) -> set[int]:
    out: set[int] = set()
    for p in labels:
        out |= set(p)
    return out


def join_configs(
    g: Graph,
    f1: Mapping[int, LabelPair],
    v1: int,
    f2: Mapping[int, LabelPair],
    v2: int,
    inner: Sequence[int],
    strict: bool = True,
) -> Configuration:
    """Combine labelings of two sides joined by a path.

    ``f1``/``f2`` label the two sides of ``g`` and satisfy every side vertex
    except possibly ``v1``/``v2``; one of those may miss one label, the other
    two.  ``inner`` lists the path vertices strictly between ``v1`` and ``v2``
    (``v1 == v2`` with empty ``inner`` glues the sides at one vertex).  Labels
    of ``f2`` get permuted.  With ``strict=False`` the miss bounds are not
    checked up front and only the exhaustive search decides.
    """
    m1 = missing_colors(g, f1, v1)
    m2 = missing_colors(g, f2, v2)
    if strict and sorted((len(m1), len(m2))) not in ([0, 0], [0, 1], [0, 2], [1, 1], [1, 2]):
        raise LemmaError(f"join needs the ends to miss at most 1 and 2 labels, got {len(m1)} and {len(m2)}")
    s1 = seen_labels(g, f1, v1)
    s2 = seen_labels(g, f2, v2)
    a1 = f1[v1]

    if len(inner) >= 3:
        # drop three inner vertices, join the shorter path, restore them
        x = v1
        y = inner[3] if len(inner) > 3 else v2
        drop = inner[:3]
        sub, old = rebuild(g, drop, [] if g.has_edge(x, y) else [(x, y)])
        idx = {o: i for i, o in enumerate(old)}
        h = join_configs(
            sub,
            {idx[v]: p for v, p in f1.items()},
            idx[v1],
            {idx[v]: p for v, p in f2.items()},
            idx[v2],
            [idx[v] for v in inner[3:]],
            strict,
        )
        out = {old[v]: p for v, p in h.items()}
        out.update(zip(drop, contracted_path_labels(out[x], out[y])))
        return out

    def done(sigma: Mapping[int, int], extra: Mapping[int, LabelPair]) -> Configuration:
        out = dict(f1)
        out.update({v: _img(sigma, p) for v, p in f2.items() if not (v == v1 == v2)})
        out.update(extra)
        return out

    for sigma in all_permutations():
        b2 = _img(sigma, f2[v2])
        t2 = {sigma[c] for c in s2}
        if not inner:
            if v1 == v2:
                if b2 == a1 and s1 | t2 == FULL:
                    return done(sigma, {})
            elif s1 | set(b2) == FULL and t2 | set(a1) == FULL:
                return done(sigma, {})
        elif len(inner) == 1:
            for p in ALL_PAIRS:
                if s1 | set(p) == FULL and t2 | set(p) == FULL and set(a1) | set(p) | set(b2) == FULL:
                    return done(sigma, {inner[0]: p})
        else:
            p1v, p2v = inner
            for ends in ((a1, b2, False), (b2, a1, True)):
                near, far, flipped = ends
                if not set(near) & set(far):
                    continue
                for a, b in combinations(sorted(FULL - set(near)), 2):
                    q1, q2 = path3_labels(near, far, a, b)
                    first, second = (q2, q1) if flipped else (q1, q2)
                    if s1 | set(first) == FULL and t2 | set(second) == FULL:
                        return done(sigma, {p1v: first, p2v: second})
    raise LemmaError("no label permutation joins the two sides")


def join_via_path(
    h1: Graph,
    f1: Mapping[int, LabelPair],
    v1: int,
    h2: Graph,
    f2: Mapping[int, LabelPair],
    v2: int,
    path_vertices: int,
) -> Construction:
    """Join ``h1`` and ``h2`` by a path on ``path_vertices`` vertices from ``v1`` to ``v2``.

    With one path vertex ``v1`` and ``v2`` are identified.  Ids of ``h1`` are
    kept; ``h2`` and the path interior follow.
    """
    if path_vertices < 1:
        raise LemmaError("the path needs at least one vertex")
    n1 = h1.n
    if path_vertices == 1:
        remap = {}
        nxt = n1
        for v in range(h2.n):
            if v == v2:
                remap[v] = v1
            else:
                remap[v] = nxt
                nxt += 1
        inner: list[int] = []
    else:
        remap = {v: n1 + v for v in range(h2.n)}
        nxt = n1 + h2.n
        inner = list(range(nxt, nxt + path_vertices - 2))
        nxt += len(inner)
    edges = list(h1.edges()) + [(remap[a], remap[b]) for a, b in h2.edges()]
    chain = [v1, *inner, remap[v2]]
    if path_vertices > 1:
        edges += list(zip(chain, chain[1:]))
    g = build_graph(nxt, edges)
    g1 = {v: p for v, p in f1.items()}
    g2 = {remap[v]: p for v, p in f2.items()}
    f = join_configs(g, g1, v1, g2, remap[v2], inner)
    side2 = tuple(sorted(set(remap.values())))
    return Construction(g, f, {"h1": tuple(range(n1)), "h2": side2, "path": tuple(inner)}).check()


# ---------------------------------------------------------------------------
# Explicit small configurations

K24_LABELS = pair_map([(1, 2), (3, 4), (3, 5), (4, 5), (1, 5), (2, 5)])


def k24_config() -> Construction:
    """``K_{2,4}`` with ``x1, x2`` on ids 0, 1 and ``y1..y4`` on 2..5."""
    g = complete_bipartite(2, 4)
    return Construction(g, dict(enumerate(K24_LABELS)), {"x": (0, 1), "y": (2, 3, 4, 5)}).check()


def _cycle_path_graph(m: int, k: int, x: int, y: int) -> Graph:
    edges = [(i, (i + 1) % m) for i in range(m)]
    chain = [x, *range(m, m + k), y]
    edges += list(zip(chain, chain[1:]))
    return build_graph(m + k, edges)


# (cycle length, path length, x index, y index) -> labels of u_1..u_m then v_1..v_k
ATTACH_CYCLE_TABLES: dict[tuple[int, int, int, int], list[LabelPair]] = {
    # C4, opposite anchors, four path vertices
    (4, 4, 0, 2): pair_map([(1, 2), (3, 5), (3, 4), (2, 5), (1, 4), (3, 5), (2, 5), (1, 4)]),
    # C7, both ends on one vertex, three path vertices
    (7, 3, 0, 0): pair_map(
        [(1, 2), (3, 4), (1, 5), (2, 3), (1, 4), (2, 5), (3, 4), (1, 5), (3, 4), (2, 5)]
    ),
    # C7, anchors u1 and u6, four path vertices
    (7, 4, 0, 5): pair_map(
        [(1, 2), (3, 4), (3, 5), (1, 2), (4, 5), (3, 4), (3, 5), (1, 5), (3, 4), (2, 5), (1, 2)]
    ),
    # C7, anchors u1 and u5, three path vertices
    (7, 3, 0, 4): pair_map(
        [(1, 2), (1, 3), (4, 5), (2, 3), (1, 2), (4, 5), (3, 4), (1, 5), (3, 4), (2, 5)]
    ),
}


def _cycle_symmetries(m: int) -> list[list[int]]:
    """Vertex maps of the rotations and reflections of ``C_m``."""
    out = []
    for r in range(m):
        out.append([(i + r) % m for i in range(m)])
        out.append([(r - i) % m for i in range(m)])
    return out


def _theta_routes(m: int, x: int, y: int, k: int) -> list[list[int]]:
    """The three internally disjoint x-y routes (inner vertices only)."""
    fwd = [(x + i) % m for i in range(1, (y - x) % m)]
    bwd = [(x - i) % m for i in range(1, (x - y) % m)]
    return [fwd, bwd, list(range(m, m + k))]


def _from_cycle_and_route(g: Graph, x: int, y: int, ring: list[int], route: list[int]) -> Configuration | None:
    """Label cycle ``ring`` directly, then the x-y ``route`` by the matching lemma."""
    if len(ring) in (4, 7):
        return None
    f = dict(zip(ring, cycle_config(len(ring))))
    r = len(route)
    try:
        if r >= 3:
            return extend_attached_path(f, route, x, y)
        if r == 1:
            return small_extend(f, OneVertex(route[0], x, y))
        if r == 2:
            return small_extend(f, TwoVertex(route[0], route[1], x, y))
    except LemmaError:
        return None
    return None


def _oracle_config(g: Graph) -> Configuration | None:
    if g.n > 18:
        return None
    res = constrained_solve(g)
    return res.configuration if res.configurable else None


def attach_path_to_cycle(m: int, k: int, x: int, y: int) -> Construction | ExceptionalKind:
    """Cycle ``u_1..u_m`` (ids ``0..m-1``) with a ``k``-vertex path from ``x`` to ``y``.

    Returns the refused kind when the result is ``C4·C4`` or ``G1``.
    """
    if k < 3:
        raise LemmaError("the attached path needs at least three vertices")
    if m < 3 or not (0 <= x < m and 0 <= y < m):
        raise LemmaError("anchors must lie on a cycle of length >= 3")
    g = _cycle_path_graph(m, k, x, y)
    roles = {"cycle": tuple(range(m)), "path": tuple(range(m, m + k))}
    kind = detect_exceptional(g) if g.n <= 7 else None
    if kind is not None:
        return kind

    for (tm, tk, tx, ty), labels in ATTACH_CYCLE_TABLES.items():
        if (tm, tk) != (m, k):
            continue
        for perm in _cycle_symmetries(m):
            if {perm[tx], perm[ty]} == {x, y}:
                if perm[tx] == x:
                    path_ids = list(range(m, m + k))
                else:
                    path_ids = list(range(m + k - 1, m - 1, -1))
                f = {perm[i]: labels[i] for i in range(m)}
                f.update(zip(path_ids, labels[m:]))
                return Construction(g, f, roles).check()

    path_ids = list(range(m, m + k))
    if m in (4, 7) and k > 5:
        sub = attach_path_to_cycle(m, k - 3, x, y)
        if isinstance(sub, Construction):
            # sub's path ids m..m+k-4 are this path's first k-3 vertices
            f = dict(sub.config)
            f.update(zip(path_ids[: k - 3], [sub.config[v] for v in range(m, m + k - 3)]))
            right = y
            left = path_ids[k - 4]
            f.update(zip(path_ids[k - 3:], contracted_path_labels(f[left], f[right])))
            return Construction(g, f, roles).check()

    if x == y:
        ring_b = [x, *path_ids]
        ring_a = list(range(m))
        la, ta = _cycle_at(m)
        lb, tb = _cycle_at(k + 1)
        sa = {ring_a[i]: la[(i - x) % m] for i in range(m)}
        sb = {ring_b[i]: lb[i] for i in range(k + 1)}
        try:
            f = join_configs(g, sa, x, sb, x, [])
            return Construction(g, f, roles).check()
        except LemmaError:
            pass
    elif (x - y) % m in (1, m - 1):
        # the path and the cycle form one long cycle with xy as a chord
        order = list(range(m, m + k))
        start = y
        step = 1 if (x - y) % m == 1 else -1
        arc = [(start - step * i) % m for i in range(m)]
        big = arc + order if arc[-1] == x else None
        if big is None:
            arc = [(start + step * i) % m for i in range(m)]
            big = arc + order
        if len(big) not in (4, 7):
            f = dict(zip(big, cycle_config(len(big))))
            return Construction(g, f, roles).check()
    else:
        routes = _theta_routes(m, x, y, k)
        for i, j, t in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            ring = [x, *routes[i], y, *reversed(routes[j])]
            f = _from_cycle_and_route(g, x, y, ring, routes[t])
            if f is not None and not verify(g, f):
                return Construction(g, f, roles)
            if len(routes[t]) in (len(routes[i]), len(routes[j])):
                twin = routes[i] if len(routes[i]) == len(routes[t]) else routes[j]
                rest = [v for v in range(g.n) if v not in routes[t]]
                sub, old = induced(g, rest)
                if len(rest) not in (4, 7) or detect_exceptional(sub) is None:
                    fs = _oracle_config(sub) if len(rest) <= 18 else None
                    if fs is not None:
                        f = {old[v]: p for v, p in fs.items()}
                        f.update({a: f[b] for a, b in zip(routes[t], twin)})
                        if not verify(g, f):
                            return Construction(g, f, roles)

    f = _oracle_config(g)
    if f is None:
        raise LemmaError(f"no configuration found for C{m} with a {k}-vertex path at {x},{y}")
    return Construction(g, f, roles).check()


# C4·C4 ids: v = 0, u1..u3 = 1..3, w1..w3 = 4..6.  K23 ids: u1, u2 = 0, 1; w1..w3 = 2..4.
_C4C4 = {"v": 0, "u1": 1, "u2": 2, "u3": 3, "w1": 4, "w2": 5, "w3": 6}
_K23 = {"u1": 0, "u2": 1, "w1": 2, "w2": 3, "w3": 4}

# (base, x, y, k) -> labels keyed by role name, path vertices as "p1".."pk"
ATTACH_SMALL_TABLES: dict[tuple[str, str, str, int], dict[str, tuple[int, int]]] = {
    ("C4dotC4", "u2", "u2", 3): {
        "v": (3, 4), "w1": (1, 3), "w2": (2, 5), "w3": (1, 4), "u1": (4, 5), "u2": (1, 2),
        "u3": (2, 5), "p1": (1, 3), "p2": (4, 5), "p3": (2, 3),
    },
    ("C4dotC4", "v", "v", 3): {
        "v": (1, 2), "u1": (1, 3), "u2": (4, 5), "u3": (2, 3), "p1": (1, 4), "p2": (3, 5),
        "p3": (2, 4), "w1": (1, 5), "w2": (3, 4), "w3": (2, 5),
    },
    ("C4dotC4", "v", "u2", 1): {
        "v": (1, 2), "u1": (4, 5), "u2": (3, 4), "u3": (1, 5), "p1": (2, 5), "w1": (1, 3),
        "w2": (4, 5), "w3": (2, 3),
    },
    ("K23", "u1", "u2", 0): {"u1": (1, 2), "u2": (3, 4), "w1": (1, 5), "w2": (1, 5), "w3": (1, 5)},
}


def _small_base(base: str | ExceptionalKind) -> tuple[ExceptionalKind, dict[str, int]]:
    kind = ExceptionalKind(base)
    if kind is ExceptionalKind.C4dotC4:
        return kind, _C4C4
    if kind is ExceptionalKind.K23:
        return kind, _K23
    raise LemmaError("base must be C4dotC4 or K23")


def attach_path_to_small(base: str | ExceptionalKind, k: int, x: int, y: int) -> Construction | ExceptionalKind:
    """``C4·C4`` or ``K_{2,3}`` (reference ids) with a ``k``-vertex path from ``x`` to ``y``.

    ``k = 0`` adds the edge ``xy``.  Returns the kind when the result is
    itself exceptional (``G3`` from an edge in ``C4·C4``, ``G2`` from a
    two-vertex path between degree-2 vertices of ``K_{2,3}``).
    """
    kind, names = _small_base(base)
    host = kind.reference()
    n = host.n
    if k < 0 or not (0 <= x < n and 0 <= y < n):
        raise LemmaError("bad path attachment")
    if x == y and k < 2:
        raise LemmaError("a path back to the same vertex needs at least two vertices")
    if k == 0 and host.has_edge(x, y):
        raise LemmaError("edge already present")
    path_ids = list(range(n, n + k))
    chain = [x, *path_ids, y]
    g = build_graph(n + k, list(host.edges()) + list(zip(chain, chain[1:])))
    roles = {"base": tuple(range(n)), "path": tuple(path_ids)}
    rev = {i: s for s, i in names.items()}

    for (tb, tx, ty, tk), table in ATTACH_SMALL_TABLES.items():
        if tb != kind.value or tk != k:
            continue
        for a, b, flip in ((x, y, False), (y, x, True)):
            if rev.get(a) == tx and rev.get(b) == ty:
                f = {names[s]: LabelPair(*p) for s, p in table.items() if s in names}
                ids = path_ids[::-1] if flip else path_ids
                f.update({ids[i]: LabelPair(*table[f"p{i + 1}"]) for i in range(k)})
                return Construction(g, f, roles).check()

    if x == y:
        fa = almost_satisfy_exceptional(kind, x)
        lb, _ = _cycle_at(k + 1)
        fb = dict(zip([x, *path_ids], lb))
        try:
            return Construction(g, join_configs(g, fa, x, fb, x, []), roles).check()
        except LemmaError:
            pass
    if g.n <= 7:
        hit = detect_exceptional(g)
        if hit is not None:
            return hit
    if k >= 3 and (k > 3 or not host.has_edge(x, y)):
        sub = attach_path_to_small(kind, k - 3, x, y)
        if isinstance(sub, Construction):
            f = dict(sub.config)
            f.update(zip(path_ids[3:], [sub.config[v] for v in range(n, n + k - 3)]))
            right = path_ids[3] if k > 3 else y
            f.update(zip(path_ids[:3], contracted_path_labels(f[x], f[right])))
            return Construction(g, f, roles).check()
    f = _oracle_config(g)
    if f is None:
        raise LemmaError("no configuration found for the attached small graph")
    return Construction(g, f, roles).check()


__all__ = [
    "ATTACHED_PATH_TABLE",
    "ATTACH_CYCLE_TABLES",
    "ATTACH_SMALL_TABLES",
    "C5_PATTERN",
    "C6_PATTERN",
    "Construction",
    "K24_LABELS",
    "LemmaError",
    "OneVertex",
    "Reduction",
    "ReductionTrace",
    "StarSpec",
    "TAILED_CYCLE_HANDOFF",
    "TwoVertex",
    "add_c5_two_tails",
    "almost_satisfy",
    "almost_satisfy_exceptional",
    "attach_path_to_cycle",
    "attach_path_to_small",
    "attached_path_labels",
    "contract_degree2_path",
    "contracted_path_labels",
    "cycle_config",
    "cycle_with_added_path",
    "extend_attached_path",
    "extend_path3",
    "extend_star",
    "extend_tailed_cycle",
    "find_isomorphism",
    "is_connected",
    "join_configs",
    "join_via_path",
    "k24_config",
    "least_pair",
    "path3_labels",
    "small_extend",
]
