"""Pure-Python search kernels.

Same signatures, pop order and tie-breaking as the compiled ``_ckernels``
module, so both backends return identical witnesses.  Costs are Python ints,
so there is no overflow limit here.
"""
from heapq import heappop, heappush


def residual_search(n, ptr, to, w, eid, s, t, W):
    """Cheapest walk over states (vertex, residual) from (s, 0) to any (t, .).

    Stepping along an edge of weight ``w`` from residual ``r`` lands in
    residual ``max(0, w - r)`` and costs that much.  Returns
    ``(cost, vertices, edges)`` or ``None`` when t is unreachable.
    """
    ptr = list(ptr)
    to = list(to)
    w = list(w)
    eid = list(eid)
    width = W + 1
    start = s * width
    dist = {start: 0}
    pred = {}
    heap = [(0, start)]
    while heap:
        c, st = heappop(heap)
        if c > dist[st]:
            continue
        v, r = divmod(st, width)
        if v == t:
            return _walk(c, st, pred, width)
        for j in range(ptr[v], ptr[v + 1]):
            ww = w[j]
            nr = ww - r if ww > r else 0
            nst = to[j] * width + nr
            nc = c + nr
            old = dist.get(nst)
            if old is None or nc < old:
                dist[nst] = nc
                pred[nst] = (st, eid[j])
                heappush(heap, (nc, nst))
    return None


def domain_search(n, ptr, to, eid, row, levels, kmin, s, t):
    """Cheapest walk over states (vertex, level) with level powers from ``levels``.

    Entering (v, k) costs ``levels[k]``; (v, k) -> (v, k+1) costs the level
    difference; a directed edge j leaves (v, k) for (to[j], kmin[row[j]][k])
    when that entry is not -1.  ``levels[0]`` must be 0.
    """
    ptr = list(ptr)
    to = list(to)
    eid = list(eid)
    row = list(row)
    levels = [int(x) for x in levels]
    table = kmin.tolist() if hasattr(kmin, "tolist") else [list(r) for r in kmin]
    K = len(levels)
    start = s * K
    dist = {start: 0}
    pred = {}
    heap = [(0, start)]
    while heap:
        c, st = heappop(heap)
        if c > dist[st]:
            continue
        v, k = divmod(st, K)
        if v == t:
            return _walk(c, st, pred, K)
        if k + 1 < K:
            nst = st + 1
            nc = c + levels[k + 1] - levels[k]
            old = dist.get(nst)
            if old is None or nc < old:
                dist[nst] = nc
                pred[nst] = (st, -1)
                heappush(heap, (nc, nst))
        for j in range(ptr[v], ptr[v + 1]):
            km = table[row[j]][k]
            if km < 0:
                continue
            nst = to[j] * K + km
            nc = c + levels[km]
            old = dist.get(nst)
            if old is None or nc < old:
                dist[nst] = nc
                pred[nst] = (st, eid[j])
                heappush(heap, (nc, nst))
    return None


def _walk(cost, st, pred, width):
    states = [st]
    edges = []
    while st in pred:
        st, e = pred[st]
        states.append(st)
        edges.append(e)
    states.reverse()
    edges.reverse()
    return cost, [divmod(x, width) for x in states], edges
