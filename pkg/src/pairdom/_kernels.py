"""Hot numeric kernels with a numba fast path and a pure-Python fallback.

Every kernel below is written as a plain function operating on numpy
arrays.  When numba is importable and ``PAIRDOM_DISABLE_NUMBA`` is unset,
the loop-carried kernels are compiled with ``@njit(cache=True)``; otherwise
the interpreted originals are used.  ``USING_NUMBA`` reports which path is
active, and the uncompiled versions stay reachable under their ``py_``
names so tests and benchmarks can compare both paths.

Conventions shared by all kernels:

* vertices are ranked 1..n; slot 0 is a dummy with ``parent[0] = 0``,
* ``parent`` has length n+1,
* children are stored CSR-style: the children of ``v`` are
  ``child_list[child_start[v]:child_start[v + 1]]``, sorted ascending.
"""

import math
import os

import numpy as np

_DISABLED = os.environ.get("PAIRDOM_DISABLE_NUMBA", "").strip().lower() in (
    "1", "true", "yes", "on",
)

USING_NUMBA = False
if not _DISABLED:
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass

if not USING_NUMBA:
    def njit(*args, **kwargs):  # noqa: D103 - fallback decorator, does nothing
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


# Label codes shared with the Python layer.
LABEL_B = 0
LABEL_F = 1
LABEL_R = 2
LABEL_P = 3


def py_depths(parent):
    """Depth of every vertex, walking parent chains with memoization.

    Returns ``(depth, bad)`` where ``bad`` is -1 on success or the rank of a
    vertex lying on a cycle.  Works for arbitrary (non-canonical) rank
    orders; only requires ``parent[i] in [1, n]`` for i >= 2.
    """
    n = parent.shape[0] - 1
    depth = np.full(n + 1, -1, np.int64)
    depth[0] = -1
    depth[1] = 0
    stack = np.empty(n, np.int64)
    for v in range(2, n + 1):
        if depth[v] != -1:
            continue
        u = v
        top = 0
        while depth[u] == -1:
            depth[u] = -2  # on the current walk
            stack[top] = u
            top += 1
            u = parent[u]
        if depth[u] == -2:
            return depth, u
        d = depth[u]
        while top > 0:
            top -= 1
            d += 1
            depth[stack[top]] = d
    return depth, np.int64(-1)


def py_bfs_order(child_start, child_list, n):
    """Old ranks in BFS visit order (root first, children in rank order)."""
    order = np.empty(n, np.int64)
    order[0] = 1
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for idx in range(child_start[v], child_start[v + 1]):
            order[tail] = child_list[idx]
            tail += 1
    return order


def py_pd_algorithm(parent, child_start, child_list):
    """Bottom-up minimum paired domination on a BFS-monotone rooted tree.

    Processes ranks n..2.  A vertex still undominated when considered
    forces its parent into the solution; the parent is paired with the
    grandparent when possible, otherwise with its own largest-ranked child
    not yet selected.  A final fix-up covers the root.  Each vertex is also
    tagged B/F/R/P from its state at the moment it is considered:

    * B - not selected, not dominated by a child,
    * F - not selected, dominated by a child,
    * R - selected, no child tagged R,
    * P - selected, some child tagged R.

    Returns ``(in_pd, dom_by_child, partner, labels)``; ``partner[v]`` is 0
    for unselected vertices.  Runs in O(n).
    """
    n = parent.shape[0] - 1
    in_pd = np.zeros(n + 1, np.bool_)
    dom = np.zeros(n + 1, np.bool_)
    partner = np.zeros(n + 1, np.int64)
    labels = np.full(n + 1, -1, np.int8)
    has_r_child = np.zeros(n + 1, np.bool_)

    for i in range(n, 1, -1):
        if not in_pd[i]:
            labels[i] = LABEL_F if dom[i] else LABEL_B
        elif has_r_child[i]:
            labels[i] = LABEL_P
        else:
            labels[i] = LABEL_R
            has_r_child[parent[i]] = True

        if dom[i]:
            continue
        p = parent[i]
        if in_pd[p]:
            continue
        g = parent[p]
        if p != 1 and not in_pd[g]:
            # pair parent with grandparent
            in_pd[p] = True
            in_pd[g] = True
            partner[p] = g
            partner[g] = p
            dom[g] = True
            dom[parent[g]] = True  # slot 0 when g is the root; discarded
        else:
            # pair parent with its largest-ranked unselected child
            in_pd[p] = True
            i1 = np.int64(0)
            for idx in range(child_start[p + 1] - 1, child_start[p] - 1, -1):
                c = child_list[idx]
                if not in_pd[c]:
                    i1 = c
                    break
            if i1 != 0:
                in_pd[i1] = True
                partner[p] = i1
                partner[i1] = p
                dom[p] = True

    # the root is "considered" here, before the fix-up: the fix-up fires
    # exactly when the root is tagged B, which keeps gamma = 2*phi + 2*[B]
    if not in_pd[1]:
        labels[1] = LABEL_F if dom[1] else LABEL_B
    elif has_r_child[1]:
        labels[1] = LABEL_P
    else:
        labels[1] = LABEL_R

    if not dom[1]:
        in_pd[1] = True
        in_pd[2] = True
        partner[1] = 2
        partner[2] = 1
        dom[1] = True
    return in_pd, dom, partner, labels


def py_recursive_labels(parent, order):
    """B/F/R/P labels computed bottom-up from children's labels only.

    ``order`` must list every rank with children after parents reversed,
    i.e. each vertex appears after all of its children (any depth-descending
    order works).  Rules, applied in priority order:

    * some child R            -> P
    * else some child B       -> R
    * else some child P       -> F
    * else (leaf / all F)     -> B
    """
    n = parent.shape[0] - 1
    labels = np.full(n + 1, -1, np.int8)
    has_r = np.zeros(n + 1, np.bool_)
    has_b = np.zeros(n + 1, np.bool_)
    has_p = np.zeros(n + 1, np.bool_)
    for k in range(order.shape[0]):
        v = order[k]
        if has_r[v]:
            lab = LABEL_P
        elif has_b[v]:
            lab = LABEL_R
        elif has_p[v]:
            lab = LABEL_F
        else:
            lab = LABEL_B
        labels[v] = lab
        p = parent[v]
        if lab == LABEL_R:
            has_r[p] = True
        elif lab == LABEL_B:
            has_b[p] = True
        elif lab == LABEL_P:
            has_p[p] = True
    return labels


def py_lukasiewicz_parent(degs):
    """Parent array (preorder ranks) of the tree with DFS outdegrees ``degs``.

    Assumes the sequence is valid (sum n-1, prefixes never close early).
    """
    n = degs.shape[0]
    parent = np.zeros(n + 1, np.int64)
    stack = np.empty(n + 1, np.int64)
    remaining = np.empty(n + 1, np.int64)
    top = 0
    for v in range(1, n + 1):
        if top > 0:
            parent[v] = stack[top - 1]
            remaining[top - 1] -= 1
            if remaining[top - 1] == 0:
                top -= 1
        d = degs[v - 1]
        if d > 0:
            stack[top] = v
            remaining[top] = d
            top += 1
    return parent


def py_pruefer_edges(seq, n):
    """Decode a Pruefer sequence over [1, n] into its n-1 tree edges.

    Linear pointer variant: repeatedly attach the smallest current leaf to
    the next sequence entry; the final edge joins the remaining leaf to n.
    """
    deg = np.ones(n + 1, np.int64)
    m = seq.shape[0]
    for k in range(m):
        deg[seq[k]] += 1
    eu = np.empty(n - 1, np.int64)
    ev = np.empty(n - 1, np.int64)
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for k in range(m):
        v = seq[k]
        eu[k] = leaf
        ev[k] = v
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    eu[m] = leaf
    ev[m] = n
    return eu, ev


def py_bfs_from_adjacency(adj_start, adj_list, root, n):
    """Root an undirected tree and assign canonical BFS ranks in one pass.

    Adjacency lists must be sorted ascending so children are visited in
    original-label order.  Returns ``(parent, orig)`` where both are indexed
    by the new rank and ``orig[r]`` is the original label of rank ``r``.
    """
    parent = np.zeros(n + 1, np.int64)
    orig = np.zeros(n + 1, np.int64)
    newrank = np.zeros(n + 1, np.int64)
    orig[1] = root
    newrank[root] = 1
    head = 0
    tail = 1
    while head < tail:
        head += 1
        v = orig[head]
        rv = newrank[v]
        for idx in range(adj_start[v], adj_start[v + 1]):
            w = adj_list[idx]
            if newrank[w] == 0:
                tail += 1
                newrank[w] = tail
                orig[tail] = w
                parent[tail] = rv
    return parent, orig


def py_bruteforce_gamma(parent, child_start, child_list):
    """Exact minimum paired dominating set size by subset enumeration.

    Scans vertex subsets of cardinality 2, 4, ... (Gosper's hack inside a
    fixed cardinality); a subset qualifies when it dominates the tree and
    its induced forest admits a perfect matching, decided by greedy leaf
    elimination (unique when it exists on forests).  Requires 2 <= n <= 62
    in principle, practical for n <= 18.
    """
    n = parent.shape[0] - 1
    full = (np.int64(1) << n) - 1
    cover = np.zeros(n + 1, np.int64)  # closed neighborhood bitmask, bit v-1
    for v in range(1, n + 1):
        m = np.int64(1) << (v - 1)
        p = parent[v]
        if p != 0:
            m |= np.int64(1) << (p - 1)
        for idx in range(child_start[v], child_start[v + 1]):
            m |= np.int64(1) << (child_list[idx] - 1)
        cover[v] = m

    deg = np.zeros(n + 1, np.int64)
    alive = np.zeros(n + 1, np.bool_)
    queue = np.empty(3 * (n + 1), np.int64)  # vertices may be re-pushed as degrees drop

    for k in range(2, n + 1, 2):
        mask = (np.int64(1) << k) - 1
        while mask <= full:
            cov = np.int64(0)
            mm = mask
            while mm != 0:
                lsb = mm & (-mm)
                v = int(math.log2(float(lsb))) + 1  # exact for powers of two
                cov |= cover[v]
                mm ^= lsb
            if cov == full:
                # greedy leaf elimination on the induced forest
                for v in range(1, n + 1):
                    alive[v] = (mask >> (v - 1)) & 1 != 0
                    deg[v] = 0
                ok = True
                for v in range(2, n + 1):
                    if alive[v] and alive[parent[v]]:
                        deg[v] += 1
                        deg[parent[v]] += 1
                qh = 0
                qt = 0
                for v in range(1, n + 1):
                    if alive[v]:
                        if deg[v] == 0:
                            ok = False
                            break
                        if deg[v] == 1:
                            queue[qt] = v
                            qt += 1
                removed = 0
                while ok and qh < qt:
                    u = queue[qh]
                    qh += 1
                    if not alive[u]:
                        continue
                    if deg[u] == 0:
                        ok = False
                        break
                    w = np.int64(0)
                    p = parent[u]
                    if p != 0 and alive[p]:
                        w = p
                    else:
                        for idx in range(child_start[u], child_start[u + 1]):
                            c = child_list[idx]
                            if alive[c]:
                                w = c
                                break
                    alive[u] = False
                    alive[w] = False
                    removed += 2
                    p = parent[w]
                    if p != 0 and alive[p]:
                        deg[p] -= 1
                        if deg[p] <= 1:
                            queue[qt] = p
                            qt += 1
                    for idx in range(child_start[w], child_start[w + 1]):
                        c = child_list[idx]
                        if alive[c]:
                            deg[c] -= 1
                            if deg[c] <= 1:
                                queue[qt] = c
                                qt += 1
                if ok and removed == k:
                    return np.int64(k)
            # Gosper's hack: next mask with k bits set
            c = mask & (-mask)
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r
    return np.int64(-1)


if USING_NUMBA:
    depths = njit(cache=True)(py_depths)
    bfs_order = njit(cache=True)(py_bfs_order)
    pd_algorithm = njit(cache=True)(py_pd_algorithm)
    recursive_labels = njit(cache=True)(py_recursive_labels)
    lukasiewicz_parent = njit(cache=True)(py_lukasiewicz_parent)
    pruefer_edges = njit(cache=True)(py_pruefer_edges)
    bfs_from_adjacency = njit(cache=True)(py_bfs_from_adjacency)
    bruteforce_gamma = njit(cache=True)(py_bruteforce_gamma)
else:
    depths = py_depths
    bfs_order = py_bfs_order
    pd_algorithm = py_pd_algorithm
    recursive_labels = py_recursive_labels
    lukasiewicz_parent = py_lukasiewicz_parent
    pruefer_edges = py_pruefer_edges
    bfs_from_adjacency = py_bfs_from_adjacency
    bruteforce_gamma = py_bruteforce_gamma
