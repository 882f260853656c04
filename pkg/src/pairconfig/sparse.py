"""Constructive configurations for sparse instances.

A sparse instance is connected, has minimum degree at least 2, maximum degree
at most 5, and no two adjacent vertices of degree 3 or more.  Every vertex of
degree 2 then lies on a *chain*: a path whose ends have degree >= 3 and whose
inner vertices have degree 2.

The solver rewrites the instance until no rule applies, then builds a
configuration directly.  Rules, in priority order:

1. split along a bridge chain or a cut vertex and join the two sides;
2. drop one of two parallel one-vertex chains (the pair forms a 4-cycle);
3. contract a chain with four or more inner vertices, or strip one with three;
4. excise the full star around a vertex when the rest keeps minimum degree 2;
5. drop one of two parallel two-vertex chains.

Each rule only ever shrinks the instance, so the recursion terminates.
Tiny instances go to the exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import (
    ExceptionalKind,
    Graph,
    build_graph,
    components,
    detect_exceptional,
    find_isomorphism,
    induced,
    is_connected,
    max_degree,
    min_degree,
)
from .labeling import FULL, Configuration, LabelPair, missing_colors, verify
from .lemmas import (
    Construction,
    LemmaError,
    ReductionTrace,
    StarSpec,
    almost_satisfy,
    almost_satisfy_exceptional,
    attach_path_to_cycle,
    attach_path_to_small,
    contract_degree2_path,
    cycle_config,
    extend_attached_path,
    extend_star,
    join_configs,
    k24_config,
    pair_map,
    path3_labels,
)
from .oracle import OracleBudget, Outcome, constrained_solve
from .orientation import orient_min_indegree
from .results import ComponentResult, SolveResult, SolverError, Status

SMALL_ORDER = 8
ORACLE_FALLBACK_ORDER = 18
_FALLBACK_BUDGET = OracleBudget(node_limit=5 * 10**7, time_limit=120.0)


class SparseError(ValueError):
    """The graph is not a sparse instance."""


def sparse_violations(g: Graph) -> list[str]:
    out = []
    if g.n == 0 or not is_connected(g):
        out.append("graph is not connected")
    if g.n and min_degree(g) < 2:
        out.append("minimum degree below 2")
    if g.n and max_degree(g) > 5:
        out.append("maximum degree above 5")
    for u, v in g.edges():
        if g.degree(u) >= 3 and g.degree(v) >= 3:
            out.append(f"adjacent vertices {u} and {v} both have degree >= 3")
            break
    return out


@dataclass(frozen=True)
class SparseInstance:
    graph: Graph

    def __post_init__(self) -> None:
        problems = sparse_violations(self.graph)
        if problems:
            raise SparseError("; ".join(problems))


# ---------------------------------------------------------------------------
# Structure helpers


@dataclass(frozen=True)
class Chain:
    """Path ``x, inner..., y`` with degree-2 inner vertices; ``inner[0] ~ x``."""

    x: int
    inner: tuple[int, ...]
    y: int

    def vertices(self) -> list[int]:
        return [self.x, *self.inner, self.y]

    def from_end(self, end: int) -> tuple[int, ...]:
        return self.inner if end == self.x else self.inner[::-1]


def _walk(g: Graph, start: int, first: int) -> tuple[list[int], int]:
    inner = []
    prev, cur = start, first
    while g.degree(cur) == 2:
        inner.append(cur)
        (nxt,) = g.adj[cur] - {prev}
        prev, cur = cur, nxt
        if cur == start and g.degree(cur) == 2:
            break
    return inner, cur


def chains(g: Graph) -> list[Chain]:
    """All chains, each once, ordered by their ends and first inner vertex."""
    out: dict[tuple[int, ...], Chain] = {}
    for x in range(g.n):
        if g.degree(x) < 3:
            continue
        for nb in sorted(g.adj[x]):
            if g.degree(nb) != 2:
                continue
            inner, y = _walk(g, x, nb)
            c = Chain(x, tuple(inner), y)
            if (y, inner[-1]) < (x, inner[0]):
                c = Chain(y, tuple(inner[::-1]), x)
            out.setdefault((c.x, *c.inner, c.y), c)
    return sorted(out.values(), key=lambda c: (c.x, c.y, c.inner))


def articulation(g: Graph) -> tuple[list[int], set[tuple[int, int]]]:
    """Cut vertices and bridges (as sorted pairs), iterative DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    bridges: set[tuple[int, int]] = set()
    t = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = t
        t += 1
        children = 0
        stack = [(s, iter(sorted(g.adj[s])))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    disc[u] = low[u] = t
                    t += 1
                    if v == s:
                        children += 1
                    stack.append((u, iter(sorted(g.adj[u]))))
                    advanced = True
                    break
                if u != parent[v]:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    bridges.add((min(p, v), max(p, v)))
                if p != s and low[v] >= disc[p]:
                    cuts.add(p)
        if children > 1:
            cuts.add(s)
    return sorted(cuts), bridges


def _is_cycle(g: Graph) -> bool:
    return is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def _cycle_order(g: Graph) -> list[int]:
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = min(u for u in g.adj[cur] if u != prev)
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _exceptional(g: Graph) -> ExceptionalKind | None:
    if g.n > 7 or not is_connected(g):
        return None
    return detect_exceptional(g)


# ---------------------------------------------------------------------------
# Explicit configurations


def c7_star_graph() -> Graph:
    """A 7-cycle ``v1..v7`` (ids 0..6) plus a (2,1)-star ``a; b, c; d1 d2`` (ids 7..11).

    ``b ~ v1``, ``c ~ v5`` and ``d2 ~ v3``.
    """
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(7, 8), (7, 9), (7, 10), (10, 11), (8, 0), (9, 4), (11, 2)]
    return build_graph(12, edges)


C7_STAR_LABELS = pair_map(
    [(1, 2), (4, 5), (1, 3), (4, 5), (1, 2), (3, 4), (3, 5), (1, 3), (4, 5), (4, 5), (2, 5), (2, 4)]
)


def c7_star_config() -> Construction:
    g = c7_star_graph()
    roles = {"cycle": tuple(range(7)), "a": (7,), "b": (8,), "c": (9,), "d": (10, 11)}
    return Construction(g, dict(enumerate(C7_STAR_LABELS)), roles).check()


def _golden(g: Graph) -> Configuration | None:
    for build in (k24_config, c7_star_config):
        ref = build()
        if ref.graph.n != g.n:
            continue
        phi = find_isomorphism(g, ref.graph)
        if phi is not None:
            return {v: ref.config[phi[v]] for v in range(g.n)}
    return None


# ---------------------------------------------------------------------------
# Recursion context


@dataclass
class _Ctx:
    trace: ReductionTrace = field(default_factory=ReductionTrace)
    depth: int = 0

    def deeper(self) -> "_Ctx":
        return _Ctx(self.trace, self.depth + 1)

    def log(self, rule: str, names: Sequence[int], removed: Sequence[int] = (), anchors: Sequence[int] = ()) -> None:
        self.trace.add(rule, [names[v] for v in removed], [names[v] for v in anchors], self.depth)


def _sub(g: Graph, keep: Sequence[int], names: Sequence[int]) -> tuple[Graph, list[int], list[int]]:
    sub, old = induced(g, keep)
    return sub, old, [names[v] for v in old]


def _lift(f: Mapping[int, LabelPair], old: Sequence[int]) -> Configuration:
    return {old[v]: p for v, p in f.items()}


def oracle_config(g: Graph, budget: OracleBudget | None = None) -> Configuration:
    res = constrained_solve(g, budget=budget)
    if res.outcome is Outcome.CONFIGURABLE:
        return dict(res.configuration)
    if res.outcome is Outcome.BUDGET_EXCEEDED:
        raise SolverError(f"oracle budget exceeded on a {g.n}-vertex instance")
    raise SolverError(f"oracle found no configuration of a {g.n}-vertex instance")


def almost_config(g: Graph, v: int, kind: ExceptionalKind) -> Configuration:
    """Labeling of exceptional ``g`` satisfying every vertex but ``v``, which misses few labels."""
    ref = kind.reference()
    phi = find_isomorphism(g, ref)
    if phi is None:
        raise SolverError(f"graph is not {kind.value}")
    try:
        w = almost_satisfy_exceptional(kind, phi[v])
        return {u: w[phi[u]] for u in range(g.n)}
    except LemmaError:
        pass
    for tol in (1, 2):
        f = almost_satisfy(g, v, tol)
        if f is not None:
            return f
    raise SolverError(f"no almost-satisfying labeling of {kind.value} at {v}")


def side_config(g: Graph, v: int, names: Sequence[int], ctx: _Ctx, solver) -> Configuration:
    """Full configuration of ``g`` or, if ``g`` is exceptional, one missing labels only at ``v``."""
    kind = _exceptional(g)
    if kind is not None:
        ctx.log(f"almost-{kind.value}", names, anchors=(v,))
        return almost_config(g, v, kind)
    return solver(g, names, ctx)


# ---------------------------------------------------------------------------
# Rules


def _rule_split(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration | None:
    cuts, bridges = articulation(g)
    if bridges:
        for ch in chains(g):
            verts = ch.vertices()
            if not any((min(a, b), max(a, b)) in bridges for a, b in zip(verts, verts[1:])):
                continue
            rest = [v for v in range(g.n) if v not in set(ch.inner)]
            sub_all, old_all = induced(g, rest)
            parts = [[old_all[i] for i in comp] for comp in components(sub_all)]
            side_x = next(p for p in parts if ch.x in p)
            side_y = next(p for p in parts if ch.y in p)
            ctx.log("bridge-join", names, ch.inner, (ch.x, ch.y))
            f1 = _side(g, side_x, ch.x, names, ctx)
            f2 = _side(g, side_y, ch.y, names, ctx)
            return join_configs(g, f1, ch.x, f2, ch.y, list(ch.inner), strict=False)
    if cuts:
        v = cuts[0]
        rest = [u for u in range(g.n) if u != v]
        sub_all, old_all = induced(g, rest)
        parts = [[old_all[i] for i in comp] for comp in components(sub_all)]
        side_a = parts[0] + [v]
        side_b = [u for p in parts[1:] for u in p] + [v]
        ctx.log("cut-vertex-join", names, (), (v,))
        f1 = _side(g, side_a, v, names, ctx)
        f2 = _side(g, side_b, v, names, ctx)
        return join_configs(g, f1, v, f2, v, [], strict=False)
    return None


def _side(g: Graph, keep: Sequence[int], anchor: int, names: Sequence[int], ctx: _Ctx) -> Configuration:
    sub, old, sub_names = _sub(g, keep, names)
    f = side_config(sub, old.index(anchor), sub_names, ctx.deeper(), _configure)
    return _lift(f, old)


def _rule_twins(g: Graph, names: Sequence[int], ctx: _Ctx, length: int) -> Configuration | None:
    groups: dict[tuple[int, int], list[Chain]] = {}
    for ch in chains(g):
        if len(ch.inner) == length and ch.x != ch.y:
            groups.setdefault((ch.x, ch.y), []).append(ch)
    for (x, _), group in sorted(groups.items()):
        if len(group) < 2:
            continue
        keep, drop = group[0], group[1]
        rest = [v for v in range(g.n) if v not in set(drop.inner)]
        sub, old, sub_names = _sub(g, rest, names)
        if _exceptional(sub) is not None:
            continue
        ctx.log(f"twin-chain-{length}", names, drop.inner, (keep.x, keep.y))
        f = _lift(_configure(sub, sub_names, ctx.deeper()), old)
        for a, b in zip(drop.from_end(x), keep.from_end(x)):
            f[a] = f[b]
        return f
    return None


def _attach_onto_exceptional(g: Graph, ch: Chain, kind: ExceptionalKind, old: list[int], sub: Graph) -> Configuration | None:
    """Configure ``g`` = exceptional ``sub`` plus the chain ``ch`` via the attachment lemmas."""
    k = len(ch.inner)
    ix, iy = old.index(ch.x), old.index(ch.y)
    if kind in (ExceptionalKind.C4, ExceptionalKind.C7):
        m = sub.n
        order = _cycle_order(sub)
        pos = {v: i for i, v in enumerate(order)}
        res = attach_path_to_cycle(m, k, pos[ix], pos[iy])
        if not isinstance(res, Construction):
            return None
        f = {old[order[i]]: res.config[i] for i in range(m)}
    elif kind in (ExceptionalKind.C4dotC4, ExceptionalKind.K23):
        phi = find_isomorphism(sub, kind.reference())
        res = attach_path_to_small(kind, k, phi[ix], phi[iy])
        if not isinstance(res, Construction):
            return None
        inv = {phi[v]: v for v in range(sub.n)}
        m = sub.n
        f = {old[inv[i]]: res.config[i] for i in range(m)}
    else:
        return None
    f.update({v: res.config[m + i] for i, v in enumerate(ch.inner)})
    return f


def _rule_long_chain(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration | None:
    for ch in chains(g):
        if len(ch.inner) < 3 or ch.x == ch.y:
            continue
        rest = [v for v in range(g.n) if v not in set(ch.inner)]
        sub, old, sub_names = _sub(g, rest, names)
        kind = _exceptional(sub) if min_degree(sub) >= 2 else None
        if kind is not None:
            f = _attach_onto_exceptional(g, ch, kind, old, sub)
            if f is not None:
                ctx.log(f"attach-path-{kind.value}", names, ch.inner, (ch.x, ch.y))
                return f
            continue
        if len(ch.inner) >= 4:
            red = contract_degree2_path(g, [ch.x, *ch.inner[:4]])
            if _exceptional(red.graph) is not None:
                continue
            ctx.log("contract-path", names, ch.inner[:3], (ch.x, ch.inner[3]))
            fr = _configure(red.graph, [names[v] for v in red.old_ids], ctx.deeper())
            return red.lift(fr)
        ctx.log("strip-path", names, ch.inner, (ch.x, ch.y))
        f = _lift(_configure(sub, sub_names, ctx.deeper()), old)
        return extend_attached_path(f, list(ch.inner), ch.x, ch.y)
    return None


def star_at(g: Graph, w: int) -> StarSpec | None:
    """The full star around ``w`` (all chains at ``w`` have 1 or 2 inner vertices)."""
    rays1, rays2 = [], []
    for nb in sorted(g.adj[w]):
        if g.degree(nb) != 2:
            return None
        inner, end = _walk(g, w, nb)
        if end == w or len(inner) > 2:
            return None
        if len(inner) == 1:
            rays1.append((inner[0], end))
        else:
            rays2.append((inner[0], inner[1], end))
    return StarSpec(w, tuple(rays1), tuple(rays2))


def _rule_star(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration | None:
    for w in range(g.n):
        if g.degree(w) < 3:
            continue
        spec = star_at(g, w)
        if spec is None or not spec.admissible():
            continue
        removed = set(spec.vertices())
        rest = [v for v in range(g.n) if v not in removed]
        if not rest:
            continue
        sub, old, sub_names = _sub(g, rest, names)
        if min_degree(sub) < 2:
            continue
        parts = components(sub)
        pieces = [induced(sub, p) for p in parts]
        if any(_exceptional(piece) is not None for piece, _ in pieces):
            continue
        ctx.log(f"star-{spec.alpha}-{spec.beta}", names, sorted(removed), (w,))
        f: Configuration = {}
        for piece, local in pieces:
            piece_names = [sub_names[i] for i in local]
            fp = _configure(piece, piece_names, ctx.deeper())
            f.update({old[local[v]]: p for v, p in fp.items()})
        try:
            out = extend_star(f, spec)
        except LemmaError:
            continue
        if not verify(g, out):
            return out
    return None


# ---------------------------------------------------------------------------
# Base construction


@dataclass
class AuxiliaryGraphs:
    """Graphs and vertex sets of the direct construction.

    ``H`` joins two high-degree vertices with a common neighbor, ``H2`` is its
    square, ``Hprime`` drops one non-``H`` edge from each ``K5`` of ``H2``.
    ``L`` lists the two-inner-vertex chains ``(x, p1, p2, y)``.
    """

    H: dict[int, frozenset[int]]
    H2: dict[int, frozenset[int]]
    Hprime: dict[int, frozenset[int]]
    L: list[tuple[int, int, int, int]]
    U: dict[int, tuple[int, int]]
    coloring: dict[int, int]
    partial: Configuration
    W: frozenset[int]
    X: frozenset[int]
    Y: frozenset[int]


class BaseConstructionError(SolverError):
    pass


def _cycle_colors(m: int) -> list[int]:
    if m == 3:
        return [1, 2, 3]
    if m == 4:
        return [1, 2, 3, 4]
    if m == 5:
        return [1, 2, 1, 3, 4]
    b = 0
    while (m - 3 * b) % 4:
        b += 1
    return [1, 2, 3, 4] * ((m - 3 * b) // 4) + [1, 2, 3] * b


def _h_components(H: Mapping[int, frozenset[int]]) -> list[tuple[str, list[int]]]:
    """Components of a max-degree-2 graph as ``("path"|"cycle", order)``."""
    seen: set[int] = set()
    out = []
    for s in sorted(H):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in H[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        ends = sorted(v for v in comp if len(H[v]) < 2)
        start = ends[0] if ends else min(comp)
        order = [start]
        placed = {start}
        while len(order) < len(comp):
            nxt = min(u for u in H[order[-1]] if u not in placed)
            placed.add(nxt)
            order.append(nxt)
        out.append(("path" if ends else "cycle", order))
    return out


def build_auxiliary(g: Graph) -> AuxiliaryGraphs:
    """Build ``H``, its square, the coloring, ``U``, ``W``, ``X``, ``Y`` and ``L``."""
    high = [v for v in range(g.n) if g.degree(v) >= 3]
    H: dict[int, set[int]] = {v: set() for v in high}
    U: dict[int, tuple[int, int]] = {}
    L: list[tuple[int, int, int, int]] = []
    for ch in chains(g):
        if len(ch.inner) == 1:
            U[ch.inner[0]] = (ch.x, ch.y)
            H[ch.x].add(ch.y)
            H[ch.y].add(ch.x)
        elif len(ch.inner) == 2:
            L.append((ch.x, ch.inner[0], ch.inner[1], ch.y))
        else:
            raise BaseConstructionError(f"chain {ch} has {len(ch.inner)} inner vertices")
    if any(len(nb) > 2 for nb in H.values()):
        raise BaseConstructionError("H has a vertex of degree above 2")
    if any(x == y for x, y in U.values()):
        raise BaseConstructionError("one-vertex chain closes on a single vertex")

    coloring: dict[int, int] = {}
    H2 = {v: set(H[v]) for v in H}
    Hprime: dict[int, set[int]] = {}
    dropped: set[frozenset[int]] = set()
    for shape, order in _h_components({v: frozenset(s) for v, s in H.items()}):
        colors = _cycle_colors(len(order)) if shape == "cycle" else [i % 3 + 1 for i in range(len(order))]
        coloring.update(zip(order, colors))
        if shape == "cycle" and len(order) == 5:
            dropped.add(frozenset((order[0], order[2])))
    for v in H:
        for u in H[v]:
            H2[v] |= H[u] - {v}
    for v in H:
        Hprime[v] = {u for u in H2[v] if frozenset((u, v)) not in dropped}
        for u in Hprime[v]:
            if coloring[u] == coloring[v]:
                raise BaseConstructionError(f"coloring clash on {u}-{v}")

    f: Configuration = {v: LabelPair(coloring[v], 5) for v in high}
    for u, (x, y) in U.items():
        rest = FULL - set(f[x]) - set(f[y])
        if len(rest) != 2:
            raise BaseConstructionError(f"neighbors of {u} share a color")
        f[u] = LabelPair(*sorted(rest))
    W = frozenset(v for v in high if missing_colors(g, f, v))
    X = frozenset(v for v in W if not H[v])
    return AuxiliaryGraphs(
        H={v: frozenset(s) for v, s in H.items()},
        H2={v: frozenset(s) for v, s in H2.items()},
        Hprime={v: frozenset(s) for v, s in Hprime.items()},
        L=L,
        U=U,
        coloring=coloring,
        partial=f,
        W=W,
        X=X,
        Y=W - X,
    )


def base_construction(g: Graph) -> Configuration:
    """Direct configuration once no reduction applies."""
    aux = build_auxiliary(g)
    f = dict(aux.partial)
    orient = orient_min_indegree([(x, y) for x, _, _, y in aux.L])
    for (x, p1, p2, y), (tail, head) in zip(aux.L, orient.arcs):
        q1, q2 = (p1, p2) if head == x else (p2, p1)
        miss = sorted(missing_colors(g, f, head))
        spare = [c for c in range(1, 6) if c not in f[head] and c not in miss]
        a, b = (miss + spare)[:2]
        f[q1], f[q2] = path3_labels(f[head], f[tail], a, b)
    missing = [v for v in range(g.n) if v not in f]
    if missing:
        raise BaseConstructionError(f"vertices {missing} left unassigned")
    bad = verify(g, f)
    if bad:
        raise BaseConstructionError(f"vertices {bad} unsatisfied after the direct construction")
    return f


# ---------------------------------------------------------------------------
# Driver


def _configure(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration:
    kind = _exceptional(g)
    if kind is not None:
        raise SolverError(f"instance is exceptional ({kind.value})")
    f = _golden(g)
    if f is not None:
        ctx.log("explicit", names)
        return f
    if _is_cycle(g):
        order = _cycle_order(g)
        ctx.log(f"cycle-{g.n}", names)
        return dict(zip(order, cycle_config(g.n)))
    if g.n <= SMALL_ORDER:
        ctx.log("oracle", names)
        return oracle_config(g)
    for rule in (
        _rule_split,
        lambda *a: _rule_twins(*a, length=1),
        _rule_long_chain,
        _rule_star,
        lambda *a: _rule_twins(*a, length=2),
    ):
        f = rule(g, names, ctx)
        if f is not None:
            return f
    try:
        f = base_construction(g)
        ctx.log("direct", names)
        return f
    except BaseConstructionError:
        if g.n > ORACLE_FALLBACK_ORDER:
            raise
    ctx.log("oracle-fallback", names)
    return oracle_config(g, _FALLBACK_BUDGET)


def configure_sparse(g: Graph, trace: ReductionTrace | None = None, names: Sequence[int] | None = None) -> Configuration:
    """Configuration of a non-exceptional sparse instance; ``names`` label trace entries."""
    ctx = _Ctx(trace if trace is not None else ReductionTrace())
    f = _configure(g, list(names) if names is not None else list(range(g.n)), ctx)
    bad = verify(g, f)
    if bad:
        raise SolverError(f"construction left vertices {bad} unsatisfied")
    return f


def solve_sparse_special(inst: SparseInstance | Graph, trace: ReductionTrace | None = None) -> SolveResult:
    """Configure a sparse instance, or report it as one of the four exceptions."""
    g = inst.graph if isinstance(inst, SparseInstance) else SparseInstance(inst).graph
    trace = trace if trace is not None else ReductionTrace()
    verts = tuple(range(g.n))
    kind = _exceptional(g)
    if kind is not None:
        return SolveResult([ComponentResult(verts, Status.EXCEPTIONAL, kind=kind)], {}, trace)
    f = configure_sparse(g, trace)
    return SolveResult([ComponentResult(verts, Status.CONFIGURED)], f, trace)


__all__ = [
    "AuxiliaryGraphs",
    "BaseConstructionError",
    "C7_STAR_LABELS",
    "Chain",
    "SparseError",
    "SparseInstance",
    "almost_config",
    "articulation",
    "base_construction",
    "build_auxiliary",
    "c7_star_config",
    "c7_star_graph",
    "chains",
    "configure_sparse",
    "oracle_config",
    "side_config",
    "solve_sparse_special",
    "sparse_violations",
    "star_at",
]
