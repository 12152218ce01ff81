# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled search kernels; mirror of ``_pykernels`` on int64 state arrays."""

import numpy as np
cimport numpy as cnp
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair

ctypedef long long i64
ctypedef pair[i64, i64] entry

cnp.import_array()

cdef i64 UNSEEN = 0x7FFFFFFFFFFFFFFF


def residual_search(i64 n, ptr, to, w, eid, i64 s, i64 t, i64 W):
    cdef i64[::1] cptr = np.ascontiguousarray(ptr, dtype=np.int64)
    cdef i64[::1] cto = np.ascontiguousarray(to, dtype=np.int64)
    cdef i64[::1] cw = np.ascontiguousarray(w, dtype=np.int64)
    cdef i64[::1] ceid = np.ascontiguousarray(eid, dtype=np.int64)
    cdef i64 width = W + 1
    cdef i64 nstates = n * width
    cdef i64[::1] dist = np.full(nstates, UNSEEN, dtype=np.int64)
    cdef i64[::1] pstate = np.full(nstates, -1, dtype=np.int64)
    cdef i64[::1] pedge = np.full(nstates, -1, dtype=np.int64)
    cdef priority_queue[entry] heap
    cdef i64 c, st, v, r, j, ww, nr, nst, nc
    cdef entry top
    cdef i64 start = s * width
    dist[start] = 0
    heap.push(entry(0, -start))
    while not heap.empty():
        top = heap.top()
        heap.pop()
        c = -top.first
        st = -top.second
        if c > dist[st]:
            continue
        v = st // width
        r = st - v * width
        if v == t:
            return _walk(c, st, pstate, pedge, width)
        for j in range(cptr[v], cptr[v + 1]):
            ww = cw[j]
            nr = ww - r if ww > r else 0
            nst = cto[j] * width + nr
            nc = c + nr
            if nc < dist[nst]:
                dist[nst] = nc
                pstate[nst] = st
                pedge[nst] = ceid[j]
                heap.push(entry(-nc, -nst))
    return None


def domain_search(i64 n, ptr, to, eid, row, levels, kmin, i64 s, i64 t):
    cdef i64[::1] cptr = np.ascontiguousarray(ptr, dtype=np.int64)
    cdef i64[::1] cto = np.ascontiguousarray(to, dtype=np.int64)
    cdef i64[::1] ceid = np.ascontiguousarray(eid, dtype=np.int64)
    cdef i64[::1] crow = np.ascontiguousarray(row, dtype=np.int64)
    cdef i64[::1] lev = np.ascontiguousarray(levels, dtype=np.int64)
    cdef i64[:, ::1] table = np.ascontiguousarray(kmin, dtype=np.int64)
    cdef i64 K = lev.shape[0]
    cdef i64 nstates = n * K
    cdef i64[::1] dist = np.full(nstates, UNSEEN, dtype=np.int64)
    cdef i64[::1] pstate = np.full(nstates, -1, dtype=np.int64)
    cdef i64[::1] pedge = np.full(nstates, -1, dtype=np.int64)
    cdef priority_queue[entry] heap
    cdef i64 c, st, v, k, j, km, nst, nc
    cdef entry top
    cdef i64 start = s * K
    dist[start] = 0
    heap.push(entry(0, -start))
    while not heap.empty():
        top = heap.top()
        heap.pop()
        c = -top.first
        st = -top.second
        if c > dist[st]:
            continue
        v = st // K
        k = st - v * K
        if v == t:
            return _walk(c, st, pstate, pedge, K)
        if k + 1 < K:
            nst = st + 1
            nc = c + lev[k + 1] - lev[k]
            if nc < dist[nst]:
                dist[nst] = nc
                pstate[nst] = st
                pedge[nst] = -1
                heap.push(entry(-nc, -nst))
        for j in range(cptr[v], cptr[v + 1]):
            km = table[crow[j], k]
            if km < 0:
                continue
            nst = cto[j] * K + km
            nc = c + lev[km]
            if nc < dist[nst]:
                dist[nst] = nc
                pstate[nst] = st
                pedge[nst] = ceid[j]
                heap.push(entry(-nc, -nst))
    return None


cdef _walk(i64 cost, i64 st, i64[::1] pstate, i64[::1] pedge, i64 width):
    states = [st]
    edges = []
    while pstate[st] >= 0:
        edges.append(pedge[st])
        st = pstate[st]
        states.append(st)
    states.reverse()
    edges.reverse()
    return cost, [divmod(x, width) for x in states], edges
