"""Pure-Python hot kernels; the fallback for ``_ckernels``.

Every function here has a twin of the same name and signature in
``_ckernels.pyx`` and must return identical results.

Tuples are tuples of element ids.  A braid letter is a signed int: ``+i`` is
the move ``s_i`` (1-based), ``-i`` its inverse.
"""

from collections import deque

NAME = "python"


class Tables:
    __slots__ = ("mul", "inv", "order")

    def __init__(self, mul, inv):
        self.mul = [list(map(int, row)) for row in mul]
        self.inv = [int(v) for v in inv]
        self.order = len(self.inv)


def prepare_maps(maps):
    """Convert an ``(k, |G|)`` array of id maps; ``None`` means no canonicalization."""
    if maps is None:
        return None
    return [list(map(int, row)) for row in maps]


def apply_letters(tab, tup, letters):
    t = list(tup)
    mul = tab.mul
    inv = tab.inv
    for s in letters:
        if s > 0:
            i = s - 1
            a = t[i]
            t[i] = mul[mul[a][t[i + 1]]][inv[a]]
            t[i + 1] = a
        else:
            i = -s - 1
            a = t[i]
            b = t[i + 1]
            t[i] = b
            t[i + 1] = mul[mul[inv[b]][a]][b]
    return tuple(t)


def canonical(tup, maps):
    if maps is None:
        return tuple(tup)
    best = None
    for m in maps:
        c = tuple([m[x] for x in tup])
        if best is None or c < best:
            best = c
    return best


def orbit_bfs(tab, start, movers, maps, cap):
    """Breadth-first closure of ``start`` under ``movers``.

    Returns ``(keys, targets, parent, via)`` where ``keys[0]`` is the key of
    ``start``, ``targets[p][m]`` is the index reached from point ``p`` by mover
    ``m`` and ``parent[p], via[p]`` record the discovering edge (``-1`` at the
    root).  Returns ``None`` if more than ``cap`` keys are found.
    """
    root = canonical(start, maps)
    index = {root: 0}
    keys = [root]
    targets = []
    parent = [-1]
    via = [-1]
    p = 0
    while p < len(keys):
        key = keys[p]
        row = []
        for m, letters in enumerate(movers):
            nk = canonical(apply_letters(tab, key, letters), maps)
            q = index.get(nk)
            if q is None:
                q = len(keys)
                if q >= cap:
                    return None
                index[nk] = q
                keys.append(nk)
                parent.append(p)
                via.append(m)
            row.append(q)
        targets.append(row)
        p += 1
    return keys, targets, parent, via


def generates(tab, ids):
    gens = sorted(set(ids))
    mul = tab.mul
    seen = [False] * tab.order
    seen[0] = True
    count = 1
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = mul[x]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == tab.order


def enumerate_data(tab, n):
    """All n-tuples of non-identity ids with product 0 that generate the group."""
    N = tab.order
    mul = tab.mul
    inv = tab.inv
    out = []
    cache = {}
    m = n - 1
    idx = [1] * m
    if N == 1:
        return out
    # prefix[k] = product of the first k entries
    prefix = [0] * (m + 1)
    for k in range(m):
        prefix[k + 1] = mul[prefix[k]][idx[k]]
    while True:
        last = inv[prefix[m]]
        if last != 0:
            tup = tuple(idx) + (last,)
            support = frozenset(tup)
            ok = cache.get(support)
            if ok is None:
                ok = cache[support] = generates(tab, support)
            if ok:
                out.append(tup)
        k = m - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < N:
                break
            idx[k] = 1
            k -= 1
        if k < 0:
            return out
        for j in range(k, m):
            prefix[j + 1] = mul[prefix[j]][idx[j]]
