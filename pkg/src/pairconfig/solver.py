"""End-to-end configurations for graphs of minimum degree 2 without induced K_{1,6}.

Per connected component:

* check the hypotheses and the exceptional list;
* small components (at most 7 vertices) go to the exact oracle;
* two opening reductions: a degree-2 vertex opposite another degree-2 vertex
  on a 4-cycle is dropped and copies its twin's label; a triangle with two
  degree-2 vertices is dropped (or split off along its bridge chain);
* otherwise take a sparse spanning subgraph, configure its components with
  the sparse pipeline, and glue the exceptional ones in one at a time through
  edges of the original graph.

Every configuration returned is checked by ``verify`` first.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .graph import (
    ExceptionalKind,
    Graph,
    build_graph,
    components,
    detect_exceptional,
    induced,
    induced_star,
    min_degree,
)
from .labeling import FULL, Configuration, LabelPair, LabelingError, RConfiguration, verify
from .lemmas import ReductionTrace, cycle_config, join_configs
from .results import ComponentResult, SolveResult, SolverError, Status
from .sparse import _Ctx, _lift, _sub, almost_config, configure_sparse, oracle_config, sparse_violations

SMALL_COMPONENT = 7


# ---------------------------------------------------------------------------
# Sparse spanning subgraph


def _triangles(adj: dict[int, set[int]]) -> int:
    return sum(len(adj[u] & adj[v]) for u in adj for v in adj[u] if u < v) // 3


def minimize_spanning_subgraph(g: Graph) -> Graph:
    """Spanning subgraph with minimum degree 2, no adjacent high-degree pair and max degree <= 5.

    Edges whose ends both have degree >= 3 are deleted to a fixpoint.  Two
    exchanges then run until nothing changes: if ``x`` and ``y`` are degree-2
    neighbors of ``v`` (degree >= 4) and ``xy`` is an unused edge, replace
    ``xv, yv`` by ``xy``; if ``v x y`` is a triangle at a vertex of degree >= 3
    and ``x`` has an unused edge ``xu``, replace ``xv`` by ``xu`` when that
    lowers the triangle count.  ``(edges, triangles)`` drops at every step.
    """
    if g.n and min_degree(g) < 2:
        raise SolverError("minimum degree below 2")
    adj = {v: set(g.adj[v]) for v in range(g.n)}

    def delete_pass() -> bool:
        changed = False
        for u in range(g.n):
            for v in sorted(adj[u]):
                if u < v and len(adj[u]) >= 3 and len(adj[v]) >= 3:
                    adj[u].discard(v)
                    adj[v].discard(u)
                    changed = True
        return changed

    def shortcut() -> bool:
        for v in range(g.n):
            if len(adj[v]) < 4:
                continue
            low = sorted(u for u in adj[v] if len(adj[u]) == 2)
            for x, y in itertools.combinations(low, 2):
                if g.has_edge(x, y) and y not in adj[x]:
                    adj[v] -= {x, y}
                    adj[x].discard(v)
                    adj[y].discard(v)
                    adj[x].add(y)
                    adj[y].add(x)
                    return True
        return False

    def untriangle() -> bool:
        for v in range(g.n):
            if len(adj[v]) < 3:
                continue
            for x in sorted(adj[v]):
                if len(adj[x]) != 2:
                    continue
                (y,) = adj[x] - {v}
                if y not in adj[v]:
                    continue
                for u in sorted(g.adj[x] - adj[x] - {v}):
                    before = _triangles(adj)
                    adj[x].discard(v)
                    adj[v].discard(x)
                    adj[x].add(u)
                    adj[u].add(x)
                    if _triangles(adj) < before:
                        return True
                    adj[x].discard(u)
                    adj[u].discard(x)
                    adj[x].add(v)
                    adj[v].add(x)
        return False

    while True:
        delete_pass()
        if shortcut() or untriangle():
            continue
        if not delete_pass():
            break
    out = build_graph(g.n, [(u, v) for u in adj for v in adj[u] if u < v])
    for u, v in out.edges():
        if out.degree(u) >= 3 and out.degree(v) >= 3:
            raise SolverError(f"adjacent high-degree vertices {u}, {v} survived")
    if out.n and min_degree(out) < 2:
        raise SolverError("spanning subgraph lost minimum degree 2")
    if any(out.degree(v) > 5 for v in range(out.n)):
        raise SolverError("spanning subgraph has a vertex of degree above 5; is the input K_{1,6}-free?")
    return out


# ---------------------------------------------------------------------------
# Connected driver


def _exceptional(g: Graph) -> ExceptionalKind | None:
    return detect_exceptional(g) if g.n <= 7 else None


def _side_any(g: Graph, v: int, names: Sequence[int], ctx: _Ctx) -> Configuration:
    kind = _exceptional(g)
    if kind is not None:
        ctx.log(f"almost-{kind.value}", names, anchors=(v,))
        return almost_config(g, v, kind)
    return _solve_connected(g, names, ctx)


def _rule_c4_twin(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration | None:
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        a, c = sorted(g.adj[v])
        if g.degree(a) < 3 or g.degree(c) < 3:
            continue
        twins = sorted(b for b in g.adj[a] & g.adj[c] if b != v and g.degree(b) == 2)
        if not twins:
            continue
        b = twins[0]
        sub, old, sub_names = _sub(g, [u for u in range(g.n) if u != v], names)
        ctx.log("c4-twin", names, (v,), (a, c))
        if _exceptional(sub) is not None:
            return oracle_config(g)
        f = _lift(_solve_connected(sub, sub_names, ctx.deeper()), old)
        f[v] = f[b]
        return f
    return None


def _rule_triangle(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration | None:
    for y in range(g.n):
        if g.degree(y) != 2:
            continue
        for z in sorted(g.adj[y]):
            if z < y or g.degree(z) != 2:
                continue
            (x,) = g.adj[y] - {z}
            if x not in g.adj[z]:
                continue
            if g.degree(x) >= 4:
                sub, old, sub_names = _sub(g, [u for u in range(g.n) if u not in (y, z)], names)
                ctx.log("pendant-triangle", names, (y, z), (x,))
                if _exceptional(sub) is not None:
                    return oracle_config(g)
                f = _lift(_solve_connected(sub, sub_names, ctx.deeper()), old)
                rest = sorted(FULL - set(f[x]))
                f[y] = LabelPair(rest[0], rest[1])
                f[z] = LabelPair(rest[2], rest[0])
                return f
            if g.degree(x) == 3:
                (w,) = g.adj[x] - {y, z}
                inner, prev = [], x
                while g.degree(w) == 2:
                    inner.append(w)
                    (nxt,) = g.adj[w] - {prev}
                    prev, w = w, nxt
                q = w
                side = [u for u in range(g.n) if u not in {x, y, z, *inner}]
                ctx.log("triangle-chain-join", names, (x, y, z, *inner), (x, q))
                sub, old, sub_names = _sub(g, side, names)
                f2 = _lift(_side_any(sub, old.index(q), sub_names, ctx.deeper()), old)
                f1 = dict(zip((x, y, z), cycle_config(3)))
                return join_configs(g, f1, x, f2, q, inner, strict=False)
    return None


def _glue(g: Graph, gp: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration:
    f: Configuration = {}
    pending: list[tuple[list[int], ExceptionalKind]] = []
    for comp in components(gp):
        sub, old, sub_names = _sub(gp, comp, names)
        kind = _exceptional(sub)
        if kind is not None:
            pending.append((comp, kind))
            continue
        f.update(_lift(configure_sparse(sub, ctx.trace, sub_names), old))

    def almost(comp: list[int], kind: ExceptionalKind, v: int) -> Configuration:
        sub, old = induced(gp, comp)
        ctx.log(f"absorb-{kind.value}", names, anchors=(v,))
        return _lift(almost_config(sub, old.index(v), kind), old)

    if not f:
        # seed with two exceptional components joined by an edge of g
        done = False
        for (c1, k1), (c2, k2) in itertools.combinations(pending, 2):
            s2 = set(c2)
            for v1 in c1:
                hits = sorted(g.adj[v1] & s2)
                if hits:
                    v2 = hits[0]
                    f = join_configs(g, almost(c1, k1, v1), v1, almost(c2, k2, v2), v2, [], strict=False)
                    pending.remove((c1, k1))
                    pending.remove((c2, k2))
                    done = True
                    break
            if done:
                break
        if not done:
            raise SolverError("no two exceptional components are adjacent")
    while pending:
        for item in pending:
            comp, kind = item
            link = next(((h, c) for c in comp for h in sorted(g.adj[c]) if h in f), None)
            if link is None:
                continue
            h, c = link
            f = join_configs(g, f, h, almost(comp, kind, c), c, [], strict=False)
            pending.remove(item)
            break
        else:
            raise SolverError("an exceptional component has no edge to the configured part")
    return f


def _solve_connected(g: Graph, names: Sequence[int], ctx: _Ctx) -> Configuration:
    kind = _exceptional(g)
    if kind is not None:
        raise SolverError(f"instance is exceptional ({kind.value})")
    if g.n <= SMALL_COMPONENT:
        ctx.log("oracle", names)
        return oracle_config(g)
    for rule in (_rule_c4_twin, _rule_triangle):
        f = rule(g, names, ctx)
        if f is not None:
            return f
    gp = minimize_spanning_subgraph(g)
    if not sparse_violations(gp) and gp.m == g.m:
        return configure_sparse(gp, ctx.trace, names)
    ctx.log("spanning-subgraph", names, (), ())
    return _glue(g, gp, names, ctx)


# ---------------------------------------------------------------------------
# Public entry points


def check_hypotheses(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """``(reason, witness)`` if the connected graph ``g`` violates the hypotheses."""
    for v in range(g.n):
        if g.degree(v) < 2:
            return f"vertex has degree {g.degree(v)} < 2", (v,)
    claw = induced_star(g, 6)
    if claw is not None:
        return "induced K_{1,6}", tuple(claw)
    return None


def solve(g: Graph, trace: ReductionTrace | None = None) -> SolveResult:
    """Configure every component, or report why a component cannot be."""
    trace = trace if trace is not None else ReductionTrace()
    results: list[ComponentResult] = []
    config: Configuration = {}
    for comp in components(g):
        sub, old = induced(g, comp)
        verts = tuple(old)
        bad = check_hypotheses(sub)
        if bad is not None:
            reason, witness = bad
            results.append(
                ComponentResult(verts, Status.PRECONDITION_FAILED, reason=reason, witness=tuple(old[v] for v in witness))
            )
            continue
        kind = _exceptional(sub)
        if kind is not None:
            results.append(ComponentResult(verts, Status.EXCEPTIONAL, kind=kind))
            continue
        f = _solve_connected(sub, old, _Ctx(trace))
        unsatisfied = verify(sub, f)
        if unsatisfied:
            raise SolverError(f"internal error: vertices {[old[v] for v in unsatisfied]} unsatisfied")
        config.update(_lift(f, old))
        results.append(ComponentResult(verts, Status.CONFIGURED))
    return SolveResult(results, config, trace)


def _maximal_independent_set(g: Graph) -> set[int]:
    chosen: set[int] = set()
    for v in range(g.n):
        if not g.adj[v] & chosen:
            chosen.add(v)
    return chosen


def make_r_configuration(g: Graph, f: Configuration, r: int) -> RConfiguration:
    """An ``r``-configuration using ``floor(5r/2)`` labels built from configuration ``f``.

    Labels are pairs ``(i, j)`` with ``i`` a label of ``f(v)`` and
    ``1 <= j <= r // 2``; odd ``r`` adds one of two extra labels per vertex,
    split by a maximal independent set, which is dominating.
    """
    if r < 1:
        raise LabelingError("r must be positive")
    if any(v not in f for v in range(g.n)) or verify(g, f):
        raise LabelingError("f is not a configuration of g")
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise LabelingError("graph has an isolated vertex")
    half = r // 2
    universe: set = {(i, j) for i in range(1, 6) for j in range(1, half + 1)}
    assignment = {v: {(i, j) for i in f[v] for j in range(1, half + 1)} for v in range(g.n)}
    if r % 2:
        indep = _maximal_independent_set(g)
        universe |= {"h1", "h2"}
        for v in range(g.n):
            assignment[v].add("h1" if v in indep else "h2")
    return RConfiguration(r, {v: frozenset(s) for v, s in assignment.items()}, frozenset(universe))


__all__ = [
    "check_hypotheses",
    "make_r_configuration",
    "minimize_spanning_subgraph",
    "solve",
]
