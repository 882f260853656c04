"""Exact backtracking oracle for configurability.

The search assigns one of the ten label pairs to each vertex in breadth-first
order from a maximum-degree vertex.  A branch is cut when a vertex whose
closed neighborhood is fully assigned is unsatisfied, or when the unassigned
slots of a closed neighborhood cannot cover what it still misses (each slot
adds at most two labels).

The inner loop lives in a compiled extension when available and in an
equivalent pure-Python module otherwise; ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Mapping

from .graph import Graph, _bfs_order, build_graph, invariant, is_isomorphic
from .labeling import ALL_PAIRS, Configuration, LabelPair

try:  # pragma: no cover - exercised implicitly
    if os.environ.get("PAIRCONFIG_PURE_PYTHON"):
        raise ImportError
    from ._csearch import search as _kernel

    BACKEND = "cython"
except ImportError:  # pragma: no cover
    from ._search import search as _kernel

    BACKEND = "python"

from . import _search

KERNELS: dict[str, Callable] = {"python": _search.search}
try:  # pragma: no cover
    from ._csearch import search as _compiled

    KERNELS["cython"] = _compiled
except ImportError:  # pragma: no cover
    pass

FOUND, EXHAUSTED, BUDGET = _search.FOUND, _search.EXHAUSTED, _search.BUDGET

_MASK_TO_PAIR = {p.mask: p for p in ALL_PAIRS}


class OracleError(ValueError):
    pass


class Outcome(str, Enum):
    CONFIGURABLE = "configurable"
    NOT_CONFIGURABLE = "not_configurable"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleBudget:
    node_limit: int = 10**8
    time_limit: float = 60.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise OracleError("budget limits must be positive")


@dataclass
class OracleResult:
    outcome: Outcome
    configuration: Configuration | None = None
    nodes: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def configurable(self) -> bool:
        return self.outcome is Outcome.CONFIGURABLE


def _pairs_within(universe: int) -> list[LabelPair]:
    return [p for p in ALL_PAIRS if p[1] <= universe]


def _run(
    g: Graph,
    need: list[int],
    cands: list[list[LabelPair]],
    budget: OracleBudget,
    prune: int,
    symmetric: bool,
    kernel: Callable | None = None,
) -> OracleResult:
    start = time.monotonic()
    n = g.n
    order = _bfs_order(g)
    cn = [sorted(g.closed_neighborhood(v)) for v in range(n)]
    masks = [[p.mask for p in cs] for cs in cands]
    if symmetric and n:
        masks[order[0]] = masks[order[0]][:1]
    status, assign, nodes = (kernel or _kernel)(
        n, cn, order, need, masks, prune, budget.node_limit, start + budget.time_limit
    )
    elapsed = time.monotonic() - start
    if status == FOUND:
        conf = {v: _MASK_TO_PAIR[assign[v]] for v in range(n)}
        return OracleResult(Outcome.CONFIGURABLE, conf, nodes, elapsed)
    if status == EXHAUSTED:
        return OracleResult(Outcome.NOT_CONFIGURABLE, None, nodes, elapsed)
    return OracleResult(Outcome.BUDGET_EXCEEDED, None, nodes, elapsed)


def exact_solve(
    g: Graph, budget: OracleBudget | None = None, prune: int = 2, backend: str | None = None
) -> OracleResult:
    """Decide configurability of ``g`` exactly (or run out of budget).

    ``backend`` picks a search kernel from ``KERNELS``; the default is ``BACKEND``.
    """
    if prune not in (0, 1, 2):
        raise OracleError("prune level must be 0, 1 or 2")
    if backend is not None and backend not in KERNELS:
        raise OracleError(f"unknown backend {backend!r}; available: {sorted(KERNELS)}")
    budget = budget or OracleBudget()
    kernel = KERNELS[backend] if backend else None
    return _run(g, [5] * g.n, [list(ALL_PAIRS)] * g.n, budget, prune, symmetric=True, kernel=kernel)


def constrained_solve(
    g: Graph,
    need: Mapping[int, int] | None = None,
    fixed: Mapping[int, LabelPair] | None = None,
    budget: OracleBudget | None = None,
) -> OracleResult:
    """Search with per-vertex label demands and pinned labels.

    ``need[v]`` (default 5) is how many labels ``N[v]`` must show; ``fixed``
    pins vertices to a single pair.
    """
    budget = budget or OracleBudget()
    need = need or {}
    fixed = fixed or {}
    demand = [need.get(v, 5) for v in range(g.n)]
    cands = [[fixed[v]] if v in fixed else list(ALL_PAIRS) for v in range(g.n)]
    symmetric = not fixed
    return _run(g, demand, cands, budget, 2, symmetric)


def d2_max(g: Graph, budget: OracleBudget | None = None) -> int:
    """Largest ``t`` such that some 2-configuration of ``g`` uses ``t`` labels."""
    budget = budget or OracleBudget()
    if g.n == 0:
        return 0
    for t in range(5, 1, -1):
        res = _run(g, [t] * g.n, [_pairs_within(t)] * g.n, budget, 2, symmetric=True)
        if res.outcome is Outcome.BUDGET_EXCEEDED:
            raise OracleError(f"budget exceeded while testing {t} labels")
        if res.configurable:
            return t
    return 2


# ---------------------------------------------------------------------------
# Small connected graphs up to isomorphism

MAX_ENUMERATION_ORDER = 8


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    out: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    new = n - 1
    # every connected graph has a vertex whose removal keeps it connected
    for base in _connected_graphs(n - 1):
        edges = base.edges()
        for subset in range(1, 1 << new):
            cand = build_graph(n, edges + [(new, u) for u in range(new) if subset >> u & 1])
            key = invariant(cand)
            bucket = buckets.setdefault(key, [])
            if any(is_isomorphic(cand, other) for other in bucket):
                continue
            bucket.append(cand)
            out.append(cand)
    return tuple(out)


def enumerate_small_graphs(n: int, predicate: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Yield every connected graph on ``n`` vertices once up to isomorphism."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise OracleError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}")
    for g in _connected_graphs(n):
        if predicate is None or predicate(g):
            yield g


__all__ = [
    "BACKEND",
    "KERNELS",
    "OracleBudget",
    "OracleError",
    "OracleResult",
    "Outcome",
    "constrained_solve",
    "d2_max",
    "enumerate_small_graphs",
    "exact_solve",
]
