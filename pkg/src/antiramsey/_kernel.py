"""Compiled branch-and-bound core for the color-partition search.

One function, one job: depth-first over restricted-growth strings with the
rainbow prune and the incumbent bound prune.  The caller owns the copy
tables (CSR over edge ids), the shared incumbent cell, and the stop cell;
several threads may run this kernel at once on disjoint prefixes.  Workers
only ever raise the incumbent, and every value they write is the class
count of a reached leaf, so a lost update can only lower the prune
threshold, never break correctness.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def run_partition_search(
    n_edges,
    cop_ptr,
    cop_edges,
    by_last_ptr,
    by_last_idx,
    prefix,
    inc_cell,
    stop_cell,
    find_target,
    budget,
    out_witness,
):
    """Explore the subtree under `prefix` and report the best leaf.

    Returns (best, found, hit_target, nodes, prunes_rainbow, prunes_bound,
    exhausted).  `best` is the largest class count among reached leaves
    (-1 if none); the corresponding assignment is left in out_witness when
    found is True.  With find_target > 0 the search stops at the first leaf
    reaching that many classes and raises the stop cell.
    """
    e_total = n_edges
    a = np.full(e_total, -1, np.int64)
    pmax = np.full(e_total + 1, -1, np.int64)
    nxt = np.full(e_total + 1, -1, np.int64)
    depth0 = prefix.shape[0]
    for i in range(depth0):
        a[i] = prefix[i]
        if prefix[i] > pmax[i]:
            pmax[i + 1] = prefix[i]
        else:
            pmax[i + 1] = pmax[i]
    best = np.int64(-1)
    found = False
    hit_target = False
    nodes = np.int64(0)
    pr_rainbow = np.int64(0)
    pr_bound = np.int64(0)
    exhausted = True
    d = depth0
    nxt[d] = pmax[d] + 1
    while d >= depth0:
        if stop_cell[0] != 0:
            exhausted = False
            break
        c = nxt[d]
        if c < 0:
            d -= 1
            continue
        inc = inc_cell[0]
        top = pmax[d]
        if c > top:
            top = c
        # Optimistic bound: classes after taking c, plus one fresh class per
        # remaining edge.  Candidates run in descending order, so when the
        # bound fails here it fails for every remaining candidate too.
        if top + 1 + (e_total - d - 1) <= inc:
            pr_bound += 1
            nxt[d] = -1
            continue
        if budget >= 0 and nodes >= budget:
            exhausted = False
            break
        nxt[d] = c - 1
        nodes += 1
        a[d] = c
        # Copies whose largest edge is d just became fully assigned; a
        # rainbow one kills the branch for good (colors only accumulate).
        dead = False
        for k in range(by_last_ptr[d], by_last_ptr[d + 1]):
            ci = by_last_idx[k]
            mask = np.int64(0)
            rainbow = True
            for j in range(cop_ptr[ci], cop_ptr[ci + 1]):
                bit = np.int64(1) << a[cop_edges[j]]
                if mask & bit:
                    rainbow = False
                    break
                mask |= bit
            if rainbow:
                dead = True
                break
        if dead:
            pr_rainbow += 1
            continue
        if d + 1 == e_total:
            classes = top + 1
            if classes > inc_cell[0]:
                inc_cell[0] = classes
            if classes > best:
                best = classes
                for i in range(e_total):
                    out_witness[i] = a[i]
                found = True
            if find_target > 0 and classes >= find_target:
                hit_target = True
                stop_cell[0] = 1
                exhausted = False
                break
            continue
        pmax[d + 1] = top
        d += 1
        nxt[d] = pmax[d] + 1
    return best, found, hit_target, nodes, pr_rainbow, pr_bound, exhausted
