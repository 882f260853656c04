"""Pure-Python backtracking kernel for the exact oracle.

Mirrors ``_csearch.pyx`` step for step (same branching order, same node
accounting) so either backend can be selected without changing results.

Labels are 5-bit masks.  ``need[v]`` is the number of distinct labels the
closed neighborhood of ``v`` must show.  Prune levels: 0 checks only complete
assignments, 1 rejects a vertex once its closed neighborhood is fully assigned,
2 additionally requires ``seen + 2 * unassigned >= need``.
"""

from __future__ import annotations

import time

FOUND, EXHAUSTED, BUDGET = 1, 0, -1

_POPCOUNT = [bin(i).count("1") for i in range(32)]


def search(
    n: int,
    cn: list[list[int]],
    order: list[int],
    need: list[int],
    cands: list[list[int]],
    prune: int,
    node_limit: int,
    deadline: float,
) -> tuple[int, list[int], int]:
    """Depth-first search over ``order``; returns ``(status, masks, nodes)``."""
    pc = _POPCOUNT
    cov = [0] * n
    un = [len(cn[v]) for v in range(n)]
    assign = [0] * n
    saved: list[list[int]] = [[0] * len(cn[v]) for v in range(n)]
    idx = [0] * (n + 1)
    nodes = 0
    level = 0
    if n == 0:
        return FOUND, [], 0

    while True:
        if level == n:
            if prune == 0:
                if all(pc[cov[w]] >= need[w] for w in range(n)):
                    return FOUND, assign[:], nodes
                level -= 1
            else:
                return FOUND, assign[:], nodes
        v = order[level]
        nbrs = cn[v]
        sv = saved[v]
        if assign[v]:
            for k, w in enumerate(nbrs):
                cov[w] = sv[k]
                un[w] += 1
            assign[v] = 0
        choices = cands[v]
        i = idx[level]
        advanced = False
        while i < len(choices):
            c = choices[i]
            i += 1
            nodes += 1
            if nodes >= node_limit:
                return BUDGET, [], nodes
            if deadline and (nodes & 0xFFFF) == 0 and time.monotonic() > deadline:
                return BUDGET, [], nodes
            ok = True
            for k, w in enumerate(nbrs):
                sv[k] = cov[w]
                cov[w] |= c
                un[w] -= 1
            if prune:
                for w in nbrs:
                    u = un[w]
                    s = pc[cov[w]]
                    if u == 0:
                        if s < need[w]:
                            ok = False
                            break
                    elif prune == 2 and s + 2 * u < need[w]:
                        ok = False
                        break
            if ok:
                assign[v] = c
                idx[level] = i
                level += 1
                idx[level] = 0
                advanced = True
                break
            for k, w in enumerate(nbrs):
                cov[w] = sv[k]
                un[w] += 1
        if not advanced:
            idx[level] = 0
            level -= 1
            if level < 0:
                return EXHAUSTED, [], nodes
