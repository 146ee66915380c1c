"""Compiled inner loops for the co-bipartite solver.

All arrays use 1-based A/B positions with index 0 unused. Neighbour lists are
in CSR form: the sorted entries of list ``v`` are ``idx[ptr[v]:ptr[v + 1]]``.
``adj[i, j]`` is the cross adjacency matrix; ``grid[i, j]`` holds a per
non-edge value and is 0 on edges.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def greedy_color_fast(n1, n2, na_ptr, na_idx, nha_ptr, nha_idx, nb_ptr, nb_idx, nhb_ptr, nhb_idx):
    color = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    in_p = np.zeros(n1 + 1, dtype=np.bool_)
    ptr1 = np.zeros(n2 + 1, dtype=np.int64)
    ptr2 = np.zeros(n2 + 1, dtype=np.int64)
    Q = np.empty(n2 + 1, dtype=np.int64)
    R = np.empty(n2 + 1, dtype=np.int64)
    for x in range(1, n1 + 1):
        r_lo = nhb_ptr[x]
        r_hi = nhb_ptr[x + 1]
        if r_lo == r_hi:
            continue
        # type 0: R = non-neighbours of x, P = A-neighbours of R below x, Q
        nr = 0
        for k in range(r_lo, r_hi):
            r = nhb_idx[k]
            R[nr] = r
            nr += 1
            ptr2[r] = na_ptr[r]
            color[x, r] = 1
            for kk in range(na_ptr[r], na_ptr[r + 1]):
                a = na_idx[kk]
                if a >= x:
                    break
                in_p[a] = True
        first_r = nhb_idx[r_lo]
        nq = 0
        for k in range(nb_ptr[x], nb_ptr[x + 1]):
            b = nb_idx[k]
            if b >= first_r:
                break
            Q[nq] = b
            nq += 1
            ptr1[b] = nha_ptr[b]

        for cur in range(1, x):
            if not in_p[cur]:
                continue
            in_p[cur] = False
            # type 1: best = 1 + max colour on non-edges between cur and Q
            best = 0
            w = 0
            for k in range(nq):
                q = Q[k]
                pt = ptr1[q]
                end = nha_ptr[q + 1]
                while pt < end and nha_idx[pt] < cur:
                    pt += 1
                ptr1[q] = pt
                if pt < end:
                    if nha_idx[pt] == cur and color[cur, q] + 1 > best:
                        best = color[cur, q] + 1
                    Q[w] = q
                    w += 1
            nq = w
            # type 2: push best onto the non-edges x r' with cur adjacent to r'
            w = 0
            for k in range(nr):
                r = R[k]
                pt = ptr2[r]
                end = na_ptr[r + 1]
                while pt < end and na_idx[pt] < cur:
                    pt += 1
                ptr2[r] = pt
                if pt < end:
                    if na_idx[pt] == cur and color[x, r] < best:
                        color[x, r] = best
                    R[w] = r
                    w += 1
            nr = w
    return color


@njit(cache=True)
def compute_next_fast(n1, n2, k, color, na_ptr, na_idx, nha_ptr, nha_idx, nb_ptr, nb_idx, nhb_ptr, nhb_idx):
    nxt = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    for i in range(1, n1 + 1):
        for kk in range(nhb_ptr[i], nhb_ptr[i + 1]):
            nxt[i, nhb_idx[kk]] = k + 1
    in_p = np.zeros(n1 + 1, dtype=np.bool_)
    ptr1 = np.zeros(n2 + 1, dtype=np.int64)
    ptr2 = np.zeros(n2 + 1, dtype=np.int64)
    Q = np.empty(n2 + 1, dtype=np.int64)
    R = np.empty(n2 + 1, dtype=np.int64)
    for x in range(1, n1 + 1):
        r_lo = nhb_ptr[x]
        r_hi = nhb_ptr[x + 1]
        if r_lo == r_hi:
            continue
        nr = 0
        for kk in range(r_lo, r_hi):
            r = nhb_idx[kk]
            R[nr] = r
            nr += 1
            ptr1[r] = na_ptr[r]
            for j in range(na_ptr[r], na_ptr[r + 1]):
                a = na_idx[j]
                if a >= x:
                    break
                in_p[a] = True
        first_r = nhb_idx[r_lo]
        nq = 0
        for kk in range(nb_ptr[x], nb_ptr[x + 1]):
            b = nb_idx[kk]
            if b >= first_r:
                break
            Q[nq] = b
            nq += 1
            ptr2[b] = nha_ptr[b]

        for cur in range(1, x):
            if not in_p[cur]:
                continue
            in_p[cur] = False
            # type 1: smallest colour on non-edges x r' with cur adjacent to r'
            min_color = k + 1
            w = 0
            for j in range(nr):
                r = R[j]
                pt = ptr1[r]
                end = na_ptr[r + 1]
                while pt < end and na_idx[pt] < cur:
                    pt += 1
                ptr1[r] = pt
                if pt < end:
                    if na_idx[pt] == cur and color[x, r] < min_color:
                        min_color = color[x, r]
                    R[w] = r
                    w += 1
            nr = w
            # type 2: lower Next on the non-edges between cur and Q
            w = 0
            for j in range(nq):
                q = Q[j]
                pt = ptr2[q]
                end = nha_ptr[q + 1]
                while pt < end and nha_idx[pt] < cur:
                    pt += 1
                ptr2[q] = pt
                if pt < end:
                    if nha_idx[pt] == cur and min_color < nxt[cur, q]:
                        nxt[cur, q] = min_color
                    Q[w] = q
                    w += 1
            nq = w
    return nxt


@njit(cache=True)
def greedy_color_naive(adj, xs, ys):
    """Greedy colours by scanning every earlier non-edge for a predecessor."""
    t = xs.shape[0]
    col = np.zeros(t, dtype=np.int32)
    for e in range(t):
        c = xs[e]
        d = ys[e]
        best = 0
        for f in range(e):
            a = xs[f]
            b = ys[f]
            if a < c and b < d and adj[a, d] and adj[c, b] and col[f] > best:
                best = col[f]
        col[e] = best + 1
    return col


@njit(cache=True)
def compute_next_naive(adj, xs, ys, col, k):
    t = xs.shape[0]
    nxt = np.full(t, k + 1, dtype=np.int32)
    for e in range(t):
        a = xs[e]
        b = ys[e]
        for f in range(e + 1, t):
            c = xs[f]
            d = ys[f]
            if a < c and b < d and adj[a, d] and adj[c, b] and col[f] < nxt[e]:
                nxt[e] = col[f]
    return nxt


@njit(cache=True)
def longest_chain(adj, xs, ys):
    """Length of the longest chain, grown backwards from the maximal elements."""
    t = xs.shape[0]
    up = np.ones(t, dtype=np.int32)
    best = 0
    for e in range(t - 1, -1, -1):
        a = xs[e]
        b = ys[e]
        for f in range(e + 1, t):
            c = xs[f]
            d = ys[f]
            if a < c and b < d and adj[a, d] and adj[c, b] and up[f] + 1 > up[e]:
                up[e] = up[f] + 1
        if up[e] > best:
            best = up[e]
    return best
