"""Compiled inner loops over CSR incidence arrays.

``offsets[v]:offsets[v + 1]`` indexes the incidence of ``v`` in ``inc_edge``
(edge ids, ascending) and ``inc_other`` (opposite endpoints). Masks are
uint8 arrays indexed by edge id.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def bfs_forest(n, offsets, inc_edge, inc_other, skip_mask):
    """BFS forest avoiding edges with ``skip_mask[e] != 0``; roots in ascending id."""
    labels = np.full(n, -1, np.int64)
    parent_edge = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    tail = 0
    comp = 0
    for root in range(n):
        if labels[root] != -1:
            continue
        labels[root] = comp
        head = tail
        order[tail] = root
        tail += 1
        while head < tail:
            u = order[head]
            head += 1
            for i in range(offsets[u], offsets[u + 1]):
                w = inc_other[i]
                if labels[w] == -1:
                    e = inc_edge[i]
                    if skip_mask[e] == 0:
                        labels[w] = comp
                        parent_edge[w] = e
                        order[tail] = w
                        tail += 1
        comp += 1
    return labels, order, parent_edge


@numba.njit(cache=True)
def reach_count(n, offsets, inc_edge, inc_other, keep_mask, start):
    """Number of vertices reachable from ``start`` over edges with ``keep_mask[e] != 0``."""
    seen = np.zeros(n, np.uint8)
    stack = np.empty(n, np.int64)
    seen[start] = 1
    stack[0] = start
    top = 1
    count = 1
    while top:
        top -= 1
        u = stack[top]
        for i in range(offsets[u], offsets[u + 1]):
            w = inc_other[i]
            if seen[w] == 0 and keep_mask[inc_edge[i]]:
                seen[w] = 1
                stack[top] = w
                top += 1
                count += 1
    return count


@numba.njit(cache=True)
def tree_join(order, parent_edge, eu, ev, parity):
    """Tree edges whose subtree holds an odd number of terminals.

    ``parity`` (modified in place) flags the terminals. Returns the chosen
    edge ids, or ``-1 - v`` if root ``v`` is left with odd parity.
    """
    chosen = np.empty(order.shape[0], np.int64)
    k = 0
    for j in range(order.shape[0] - 1, -1, -1):
        v = order[j]
        if parity[v]:
            e = parent_edge[v]
            if e < 0:
                out = np.empty(1, np.int64)
                out[0] = -1 - v
                return out
            chosen[k] = e
            k += 1
            p = eu[e] if ev[e] == v else ev[e]
            parity[p] ^= 1
    return np.sort(chosen[:k])


@numba.njit(cache=True)
def hierholzer(n, offsets, inc_edge, inc_other, mask, start, size):
    """Euler trail over the ``size`` edges flagged in ``mask``, from ``start``.

    Returns edge ids in walk order; fewer than ``size`` means the flagged
    edges are not all reachable from ``start``.
    """
    ptr = offsets[:-1].copy()
    used = np.zeros(mask.shape[0], np.uint8)
    vstack = np.empty(size + 1, np.int64)
    estack = np.empty(size + 1, np.int64)
    out = np.empty(size, np.int64)
    k = 0
    top = 1
    vstack[0] = start
    estack[0] = -1
    while top:
        v = vstack[top - 1]
        i = ptr[v]
        end = offsets[v + 1]
        while i < end:
            e = inc_edge[i]
            if mask[e] and used[e] == 0:
                break
            i += 1
        if i == end:
            ptr[v] = i
            top -= 1
            if top:
                out[k] = estack[top]
                k += 1
            continue
        ptr[v] = i + 1
        used[e] = 1
        vstack[top] = inc_other[i]
        estack[top] = e
        top += 1
    return out[:k][::-1].copy()
