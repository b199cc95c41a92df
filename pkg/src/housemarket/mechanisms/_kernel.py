"""Compiled Crawler screening loop for large normalized instances.

Same procedure as the pure-Python crawler, but over flat arrays. It keeps
pass/designate counts instead of event objects. Preferences come in one of
two encodings:

* ``RANK``: ``rank[a, r]`` is agent a's rank of resource r (0 = best).
* ``FLANK``: an implicit flank order with ``peak[a]`` and ``right_first[a]``.
"""

import numpy as np
from numba import njit

RANK = 0
FLANK = 1


@njit(cache=True, inline="always")
def _prefers(a, x, y, mode, peak, rank, right_first):
    if mode == RANK:
        return rank[a, x] < rank[a, y]
    p = peak[a]
    if x >= p and y >= p:
        return x < y
    if x <= p and y <= p:
        return x > y
    # opposite flanks
    return (x > y) == right_first[a]


@njit(cache=True)
def crawl(n, mode, peak, rank, right_first):
    """Return (assignment, pick_agent, pick_resource, n_passes); pick k is round k."""
    agents = np.arange(n)
    res = np.arange(n)
    assignment = np.empty(n, np.int64)
    pick_agent = np.empty(n, np.int64)
    pick_res = np.empty(n, np.int64)
    n_passes = 0
    m = n
    for rnd in range(n):
        t = m - 1
        for s in range(m - 1):
            if _prefers(agents[s], res[s], res[s + 1], mode, peak, rank, right_first):
                t = s
                break
        n_passes += t
        a = agents[t]
        p = peak[a]
        k = np.searchsorted(res[:m], p)
        if k < m and res[k] == p:
            pass
        elif k == m:
            k = m - 1
        elif k > 0 and _prefers(a, res[k - 1], res[k], mode, peak, rank, right_first):
            k = k - 1
        r = res[k]
        assignment[a] = r
        pick_agent[rnd] = a
        pick_res[rnd] = r
        for s in range(t, m - 1):
            agents[s] = agents[s + 1]
        for s in range(k, m - 1):
            res[s] = res[s + 1]
        m -= 1
    return assignment, pick_agent, pick_res, n_passes
