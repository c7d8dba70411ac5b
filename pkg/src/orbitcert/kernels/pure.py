"""Pure-Python kernels.

Reference implementations of the hot inner loops.  The compiled extension in
``_core.pyx`` mirrors these bit for bit; the dispatcher in ``__init__``
selects whichever is available.  Keep the two in lockstep — the parity tests
compare them on shared inputs.
"""

from __future__ import annotations

import itertools


def hamming_count(p, q) -> int:
    """Number of points where two equal-length sequences disagree."""
    if len(p) != len(q):
        raise ValueError("length mismatch")
    return sum(1 for a, b in zip(p, q) if a != b)


def compose(p, q) -> tuple:
    """(p∘q)(i) = p[q[i]]: apply q first, then p."""
    if len(p) != len(q):
        raise ValueError("length mismatch")
    return tuple(p[j] for j in q)


def invert(p) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def automorphisms(n: int, adj: bytes) -> list[tuple[int, ...]]:
    """All adjacency-preserving permutations of [0..n), sorted.

    Backtracking over images; candidates are restricted to vertices of equal
    degree and checked against all previously assigned vertices.
    """
    if n == 0:
        return [()]
    deg = [sum(adj[i * n + j] for j in range(n)) for i in range(n)]
    out: list[tuple[int, ...]] = []
    perm = [-1] * n
    used = [False] * n

    def rec(i: int):
        if i == n:
            out.append(tuple(perm))
            return
        for c in range(n):
            if used[c] or deg[c] != deg[i]:
                continue
            ok = True
            for j in range(i):
                if adj[i * n + j] != adj[perm[j] * n + c]:
                    ok = False
                    break
            if ok:
                perm[i] = c
                used[c] = True
                rec(i + 1)
                used[c] = False
        perm[i] = -1

    rec(0)
    return sorted(out)


def embedding_ok(row, wadj: bytes, nw: int, bedges: frozenset) -> bool:
    """row[i] = image index of window vertex i; bedges = {(i, j) | i < j}."""
    if len(set(row)) != nw:
        return False
    for i in range(nw):
        for j in range(i + 1, nw):
            a, b = row[i], row[j]
            if a > b:
                a, b = b, a
            if ((a, b) in bedges) != bool(wadj[i * nw + j]):
                return False
    return True


def _perm_tuples(partial_dom, partial_img, m):
    """All permutations of [0..m) extending dom->img, in lexicographic order
    of the assignment of free sources (ascending) to free targets."""
    dom_set = set(partial_dom)
    img_set = set(partial_img)
    free_src = [v for v in range(m) if v not in dom_set]
    free_tgt = [v for v in range(m) if v not in img_set]
    base = [-1] * m
    for d, i in zip(partial_dom, partial_img):
        base[d] = i
    for assignment in itertools.permutations(free_tgt):
        perm = list(base)
        for s, t in zip(free_src, assignment):
            perm[s] = t
        yield tuple(perm)


def eppa_search_size(n0: int, adj0: bytes, doms, imgs, m: int):
    """Smallest-(edge set, automorphism tuple) extension at carrier size m.

    Searches all tuples of permutations of [0..m) extending the partial maps.
    For each tuple, pairs of vertices fall into orbits under the generated
    group; orbits meeting an edge of the base graph are forced in, orbits
    meeting a non-edge are forced out, conflicts prune the tuple.  Free orbits
    stay out, which is what makes the edge set minimal.

    Returns (edges, autos) or None.  Equivalent to enumerating candidate edge
    sets in canonical order and keeping the first that admits automorphism
    extensions of every partial map.
    """
    npairs = m * (m - 1) // 2

    def pair_id(i, j):
        if i > j:
            i, j = j, i
        return i * m + j

    pair_list = [(i, j) for i in range(m) for j in range(i + 1, m)]
    best = None
    for tup in itertools.product(*[_perm_tuples(d, i, m) for d, i in zip(doms, imgs)]):
        parent: dict[int, int] = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != x:
                parent[x], x = root, parent[x]
            return root

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for perm in tup:
            for i, j in pair_list:
                union(pair_id(i, j), pair_id(perm[i], perm[j]))
        required: dict[int, bool] = {}
        ok = True
        for i in range(n0):
            for j in range(i + 1, n0):
                root = find(pair_id(i, j))
                want = bool(adj0[i * n0 + j])
                if required.setdefault(root, want) != want:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        edges = tuple(
            (i, j) for i, j in pair_list if required.get(find(pair_id(i, j)), False)
        )
        key = (edges, tup)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return list(best[0]), [tuple(p) for p in best[1]]
