"""Hot numeric kernels.

Every kernel exists twice: a loop version compiled with numba and a
vectorised numpy version.  The public names at the bottom of the module are
bound to one of them according to :mod:`mdgirth._accel`.  Both versions must
return identical results; ``tests/test_kernels.py`` checks that.

Conventions shared by all kernels:

* adjacency matrices are ``uint8`` ``(n, n)`` arrays, symmetric, zero diagonal;
* distance matrices are ``int32`` with ``-1`` for unreachable pairs (the
  public :class:`~mdgirth.graph.DistanceMatrix` wraps this in a proper
  sentinel).
"""

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from ._accel import USE_NUMBA, maybe_njit

UNREACHABLE = -1


# ---------------------------------------------------------------------------
# all-pairs shortest paths (unweighted)
# ---------------------------------------------------------------------------

@maybe_njit
def apsp_loops(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for v in range(n):
                if adj[u, v] and dist[s, v] < 0:
                    dist[s, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


def apsp_numpy(adj):
    n = adj.shape[0]
    a = adj.astype(bool)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    dist = np.where(reached, 0, UNREACHABLE).astype(np.int32)
    step = 0
    while frontier.any():
        step += 1
        # row s of the product marks vertices adjacent to the BFS frontier of s
        nxt = (frontier.astype(np.uint8) @ a.astype(np.uint8)).astype(bool) & ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# canonical form: minimum upper-triangle key over all relabelings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def permutation_table(n):
    """All ``n!`` permutations of ``range(n)`` as an ``(n!, n)`` int array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def pair_order(n):
    """Upper-triangle pairs in graph6 order (0,1),(0,2),(1,2),(0,3),..."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if not pairs:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    first, second = zip(*pairs)
    return np.array(first, dtype=np.int64), np.array(second, dtype=np.int64)


@maybe_njit
def canonical_scan_loops(adj, perms, pi, pj):
    # key bit order: first pair is the most significant bit
    n_perm = perms.shape[0]
    n_pairs = pi.shape[0]
    best = np.int64(-1)
    best_idx = 0
    count = 0
    for p in range(n_perm):
        key = np.int64(0)
        for q in range(n_pairs):
            key = (key << 1) | np.int64(adj[perms[p, pi[q]], perms[p, pj[q]]])
        if best < 0 or key < best:
            best = key
            best_idx = p
            count = 1
        elif key == best:
            count += 1
    return best, count, best_idx


def canonical_scan_numpy(adj, perms, pi, pj):
    n_pairs = pi.shape[0]
    if n_pairs == 0:
        return np.int64(0), perms.shape[0], 0
    bits = adj[perms[:, pi], perms[:, pj]].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(n_pairs - 1, -1, -1, dtype=np.int64))
    keys = bits @ weights
    best_idx = int(np.argmin(keys))
    best = keys[best_idx]
    return best, int(np.count_nonzero(keys == best)), best_idx


# ---------------------------------------------------------------------------
# metric dimension: first resolving k-subset in lexicographic order
# ---------------------------------------------------------------------------

@maybe_njit
def _separates_all(dist, members, in_w):
    n = dist.shape[0]
    k = members.shape[0]
    for a in range(n):
        if in_w[a]:
            continue
        for b in range(a + 1, n):
            if in_w[b]:
                continue
            same = True
            for i in range(k):
                if dist[a, members[i]] != dist[b, members[i]]:
                    same = False
                    break
            if same:
                return False
    return True


@maybe_njit
def first_resolving_loops(dist, k, labels, class_sizes, prune):
    n = dist.shape[0]
    out = np.full(k, -1, dtype=np.int64)
    if k > n or k == 0:
        return out
    idx = np.arange(k).astype(np.int64)
    in_w = np.zeros(n, dtype=np.bool_)
    hits = np.zeros(class_sizes.shape[0], dtype=np.int64)
    while True:
        ok = True
        if prune:
            hits[:] = 0
            for i in range(k):
                hits[labels[idx[i]]] += 1
            for c in range(class_sizes.shape[0]):
                if class_sizes[c] - hits[c] > 1:
                    ok = False
                    break
        if ok:
            in_w[:] = False
            for i in range(k):
                in_w[idx[i]] = True
            if _separates_all(dist, idx, in_w):
                out[:] = idx
                return out
        # advance to the next combination in lexicographic order
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return out
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def first_resolving_numpy(dist, k, labels, class_sizes, prune):
    n = dist.shape[0]
    out = np.full(k, -1, dtype=np.int64)
    if k > n or k == 0:
        return out
    n_classes = class_sizes.shape[0]
    for subset in combinations(range(n), k):
        members = np.array(subset, dtype=np.int64)
        if prune:
            hits = np.bincount(labels[members], minlength=n_classes)
            if np.any(class_sizes - hits > 1):
                continue
        outside = np.setdiff1d(np.arange(n), members)
        reps = dist[np.ix_(outside, members)]
        if np.unique(reps, axis=0).shape[0] == outside.shape[0]:
            out[:] = members
            return out
    return out


if USE_NUMBA:
    all_pairs_bfs = apsp_loops
    canonical_scan = canonical_scan_loops
    first_resolving = first_resolving_loops
else:
    all_pairs_bfs = apsp_numpy
    canonical_scan = canonical_scan_numpy
    first_resolving = first_resolving_numpy
