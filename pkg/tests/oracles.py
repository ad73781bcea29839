"""Brute-force reference implementations for the test suite.

Nothing here imports the library's kernels, id tables or BFS; permutations
are plain tuples of images and every computation is exhaustive.
"""

from itertools import permutations, product


def mul(p, q):
    # apply q first, then p
    return tuple(p[j] for j in q)


def inv(p):
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return tuple(out)


def ident(d):
    return tuple(range(d))


def closure(gens, d):
    elems = {ident(d)}
    frontier = [ident(d)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def order(p):
    k, q = 1, p
    while q != ident(len(p)):
        q = mul(p, q)
        k += 1
    return k


def brute_center(elems):
    return {z for z in elems if all(mul(z, g) == mul(g, z) for g in elems)}


def brute_automorphisms(elems):
    """All bijections fixing the identity that respect multiplication."""
    elems = sorted(elems)
    e = ident(len(elems[0]))
    rest = [x for x in elems if x != e]
    out = []
    for img in permutations(rest):
        f = dict(zip(rest, img))
        f[e] = e
        if all(f[mul(x, y)] == mul(f[x], f[y]) for x in elems for y in elems):
            out.append(f)
    return out


def valid_data(elems, n):
    """Exhaustive list of n-data: every n-tuple, filtered by the three conditions."""
    d = len(next(iter(elems)))
    e = ident(d)
    out = []
    for tup in product(sorted(elems), repeat=n):
        if any(t == e for t in tup):
            continue
        prod = e
        for t in tup:
            prod = mul(prod, t)
        if prod != e:
            continue
        if len(closure(set(tup), d)) != len(elems):
            continue
        out.append(tup)
    return out


def sigma(tup, i, sign):
    """Hurwitz move on 0-based position i."""
    t = list(tup)
    a, b = t[i], t[i + 1]
    if sign > 0:
        t[i], t[i + 1] = mul(mul(a, b), inv(a)), a
    else:
        t[i], t[i + 1] = b, mul(mul(inv(b), a), b)
    return tuple(t)


def word(tup, letters):
    for s in letters:
        tup = sigma(tup, abs(s) - 1, 1 if s > 0 else -1)
    return tup


def pure_word(i, j):
    pre = list(range(j - 1, i, -1))
    return pre + [i, i] + [-s for s in reversed(pre)]


def hyperelliptic_genus(n):
    return (n - 2) // 2


def naive_partition(data, move_words, equiv):
    """Partition ``data`` into classes of the equivalence generated by the
    moves and by ``equiv(x) -> iterable of equivalent tuples``.

    Repeated full passes of label propagation until nothing changes.
    """
    label = {x: k for k, x in enumerate(data)}

    def inverse_word(w):
        return [-s for s in reversed(w)]

    words = list(move_words) + [inverse_word(w) for w in move_words]
    changed = True
    while changed:
        changed = False
        for x in data:
            nbrs = [word(x, w) for w in words] + list(equiv(x))
            for y in nbrs:
                lo = min(label[x], label[y])
                if label[x] != lo or label[y] != lo:
                    label[x] = label[y] = lo
                    changed = True
    classes = {}
    for x in data:
        classes.setdefault(label[x], set()).add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)
