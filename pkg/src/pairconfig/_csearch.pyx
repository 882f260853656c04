# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for the exact oracle.

Same contract and node accounting as ``_search.search``.
"""

from libc.stdlib cimport malloc, free
import time


cdef int _pc(int x) nogil:
    cdef int c = 0
    while x:
        c += x & 1
        x >>= 1
    return c


def search(int n, list cn, list order, list need, list cands, int prune,
           long long node_limit, double deadline):
    cdef int total_cn = 0, total_c = 0
    cdef int v, w, k, i, c, level, s, u, lo, hi
    cdef long long nodes = 0
    cdef bint ok, advanced

    if n == 0:
        return 1, [], 0

    for v in range(n):
        total_cn += len(cn[v])
        total_c += len(cands[v])

    cdef int *cn_off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cn_flat = <int *> malloc(total_cn * sizeof(int))
    cdef int *saved = <int *> malloc(total_cn * sizeof(int))
    cdef int *c_off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *c_flat = <int *> malloc(total_c * sizeof(int))
    cdef int *cov = <int *> malloc(n * sizeof(int))
    cdef int *un = <int *> malloc(n * sizeof(int))
    cdef int *assign = <int *> malloc(n * sizeof(int))
    cdef int *nd = <int *> malloc(n * sizeof(int))
    cdef int *ordr = <int *> malloc(n * sizeof(int))
    cdef int *idx = <int *> malloc((n + 1) * sizeof(int))
    cdef int pc[32]

    try:
        for i in range(32):
            pc[i] = _pc(i)
        k = 0
        for v in range(n):
            cn_off[v] = k
            for w in cn[v]:
                cn_flat[k] = w
                k += 1
        cn_off[n] = k
        k = 0
        for v in range(n):
            c_off[v] = k
            for c in cands[v]:
                c_flat[k] = c
                k += 1
        c_off[n] = k
        for v in range(n):
            cov[v] = 0
            un[v] = cn_off[v + 1] - cn_off[v]
            assign[v] = 0
            nd[v] = need[v]
            ordr[v] = order[v]
        for i in range(n + 1):
            idx[i] = 0

        level = 0
        while True:
            if level == n:
                if prune == 0:
                    ok = True
                    for w in range(n):
                        if pc[cov[w]] < nd[w]:
                            ok = False
                            break
                    if ok:
                        return 1, [assign[i] for i in range(n)], nodes
                    level -= 1
                else:
                    return 1, [assign[i] for i in range(n)], nodes
            v = ordr[level]
            lo = cn_off[v]
            hi = cn_off[v + 1]
            if assign[v]:
                for k in range(lo, hi):
                    w = cn_flat[k]
                    cov[w] = saved[k]
                    un[w] += 1
                assign[v] = 0
            i = idx[level]
            advanced = False
            while i < c_off[v + 1] - c_off[v]:
                c = c_flat[c_off[v] + i]
                i += 1
                nodes += 1
                if nodes >= node_limit:
                    return -1, [], nodes
                if deadline and (nodes & 0xFFFF) == 0 and time.monotonic() > deadline:
                    return -1, [], nodes
                ok = True
                for k in range(lo, hi):
                    w = cn_flat[k]
                    saved[k] = cov[w]
                    cov[w] |= c
                    un[w] -= 1
                if prune:
                    for k in range(lo, hi):
                        w = cn_flat[k]
                        u = un[w]
                        s = pc[cov[w]]
                        if u == 0:
                            if s < nd[w]:
                                ok = False
                                break
                        elif prune == 2 and s + 2 * u < nd[w]:
                            ok = False
                            break
                if ok:
                    assign[v] = c
                    idx[level] = i
                    level += 1
                    idx[level] = 0
                    advanced = True
                    break
                for k in range(lo, hi):
                    w = cn_flat[k]
                    cov[w] = saved[k]
                    un[w] += 1
            if not advanced:
                idx[level] = 0
                level -= 1
                if level < 0:
                    return 0, [], nodes
    finally:
        free(cn_off); free(cn_flat); free(saved); free(c_off); free(c_flat)
        free(cov); free(un); free(assign); free(nd); free(ordr); free(idx)
