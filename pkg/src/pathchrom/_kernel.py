"""Compiled layer sweep for the prefix DP (numba).

Mirrors ``dp._Search.run`` for the two step rules the package needs: plain
(``chi(bag) <= k``) and special (``chi(bag) <= k - 1``, or ``chi(bag) <= k`` when
the new vertex has no neighbor in the prefix).  Masks are int64, so graphs are
limited to 62 vertices here; the DP guard is far below that anyway.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict

ONE = np.int64(1)


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _bipartite(adj, mask):
    remaining = mask
    while remaining:
        cur = remaining & -remaining
        side0 = cur
        side1 = np.int64(0)
        seen = cur
        p = 0
        while cur:
            nxt = np.int64(0)
            c = cur
            while c:
                low = c & -c
                v = _popcount(low - 1)
                nxt |= adj[v]
                c ^= low
            nxt &= mask
            if p == 0:
                if nxt & side0:
                    return False
            else:
                if nxt & side1:
                    return False
            nxt &= ~seen
            p ^= 1
            if p == 0:
                side0 |= nxt
            else:
                side1 |= nxt
            seen |= nxt
            cur = nxt
        remaining &= ~seen
    return True


@njit(cache=True)
def colorable(adj, mask, k):
    if mask == 0:
        return True
    if k <= 0:
        return False
    n = adj.shape[0]
    size = _popcount(mask)
    if size <= k:
        return True
    if k == 1:
        for v in range(n):
            if (mask >> v) & 1 and adj[v] & mask:
                return False
        return True
    if k == 2:
        return _bipartite(adj, mask)
    core = mask
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (core >> v) & 1 and _popcount(adj[v] & core) < k:
                core &= ~(ONE << v)
                changed = True
    if core == 0:
        return True
    # static order: each next vertex has the most neighbours among those already placed
    cnt = _popcount(core)
    order = np.empty(cnt, np.int64)
    placed = np.int64(0)
    for i in range(cnt):
        best = -1
        bkey = -1
        for v in range(n):
            if (core >> v) & 1 and not (placed >> v) & 1:
                key = _popcount(adj[v] & placed) * 64 + _popcount(adj[v] & core)
                if key > bkey:
                    bkey = key
                    best = v
        order[i] = best
        placed |= ONE << best
    classes = np.zeros(k, np.int64)
    col = np.full(cnt, -1, np.int64)
    used = np.zeros(cnt + 1, np.int64)  # used[i]: colors in use by order[:i]
    i = 0
    while i >= 0:
        if i == cnt:
            return True
        v = order[i]
        a = adj[v]
        start = col[i] + 1
        if col[i] >= 0:
            classes[col[i]] &= ~(ONE << v)
        limit = min(used[i] + 1, k)
        chosen = -1
        for c in range(start, limit):
            if not (a & classes[c]):
                chosen = c
                break
        if chosen < 0:
            col[i] = -1
            i -= 1
            continue
        col[i] = chosen
        classes[chosen] |= ONE << v
        used[i + 1] = max(used[i], chosen + 1)
        i += 1
        if i < cnt:
            col[i] = -1
    return False


@njit(cache=True)
def _check(cache, adj, bag, k, hits):
    r = cache.get(bag, np.int8(-1))
    if r >= 0:
        hits[0] += 1
        return r == 1
    ok = colorable(adj, bag, k)
    cache[bag] = np.int8(1 if ok else 0)
    return ok


@njit(cache=True)
def _binom(n, r):
    out = 1
    for i in range(r):
        out = out * (n - i) // (i + 1)
    return out


@njit(cache=True)
def sweep(adj, k, special, feasible):
    """Fill ``feasible`` (uint8, length 2**n) and return (states, cache_hits)."""
    n = adj.shape[0]
    closed = np.empty(n, np.int64)
    for v in range(n):
        closed[v] = adj[v] | (ONE << v)
    within = Dict.empty(key_type=types.int64, value_type=types.int8)
    below = Dict.empty(key_type=types.int64, value_type=types.int8)
    hits = np.zeros(1, np.int64)
    feasible[0] = 1
    states = 1
    cur_s = np.zeros(1, np.int64)
    cur_n = np.zeros(1, np.int64)
    cur_len = 1
    for layer in range(n):
        cap = _binom(n, layer + 1)
        nxt_s = np.empty(cap, np.int64)
        nxt_n = np.empty(cap, np.int64)
        nxt_len = 0
        for idx in range(cur_len):
            S = cur_s[idx]
            NS = cur_n[idx]
            for v in range(n):
                b = ONE << v
                if S & b:
                    continue
                T = S | b
                if feasible[T]:
                    continue
                NT = NS | closed[v]
                bag = NT & ~S
                if special:
                    ok = _check(below, adj, bag, k - 1, hits)
                    if not ok and not (adj[v] & S):
                        ok = _check(within, adj, bag, k, hits)
                else:
                    ok = _check(within, adj, bag, k, hits)
                if ok:
                    feasible[T] = 1
                    nxt_s[nxt_len] = T
                    nxt_n[nxt_len] = NT
                    nxt_len += 1
        states += nxt_len
        cur_s = nxt_s
        cur_n = nxt_n
        cur_len = nxt_len
        if cur_len == 0:
            break
    return states, hits[0]
