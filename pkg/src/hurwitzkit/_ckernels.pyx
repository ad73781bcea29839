# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

NAME = "cython"


cdef class Tables:
    cdef public object mul_arr, inv_arr
    cdef int[:, ::1] mul
    cdef int[::1] inv
    cdef public int order

    def __init__(self, mul, inv):
        self.mul_arr = np.ascontiguousarray(mul, dtype=np.int32)
        self.inv_arr = np.ascontiguousarray(inv, dtype=np.int32)
        self.mul = self.mul_arr
        self.inv = self.inv_arr
        self.order = self.inv_arr.shape[0]


def prepare_maps(maps):
    if maps is None:
        return None
    return np.ascontiguousarray(maps, dtype=np.int32)


cdef inline void _apply(Tables tab, int* t, const long* letters, Py_ssize_t nl) noexcept nogil:
    cdef Py_ssize_t k
    cdef long s
    cdef int i, a, b
    for k in range(nl):
        s = letters[k]
        if s > 0:
            i = <int>(s - 1)
            a = t[i]
            t[i] = tab.mul[tab.mul[a, t[i + 1]], tab.inv[a]]
            t[i + 1] = a
        else:
            i = <int>(-s - 1)
            a = t[i]
            b = t[i + 1]
            t[i] = b
            t[i + 1] = tab.mul[tab.mul[tab.inv[b], a], b]


cdef inline void _canon(int* t, int* out, int n, const int[:, ::1] maps) noexcept nogil:
    # lexicographically least image of t under the rows of maps
    cdef Py_ssize_t r, j
    cdef int v, state
    for j in range(n):
        out[j] = maps[0, t[j]]
    for r in range(1, maps.shape[0]):
        state = 0
        for j in range(n):
            v = maps[r, t[j]]
            if state == 0:
                if v > out[j]:
                    break
                if v < out[j]:
                    state = 1
                    out[j] = v
            else:
                out[j] = v


cdef tuple _to_tuple(int* t, int n):
    return tuple([t[j] for j in range(n)])


def apply_letters(Tables tab, tup, letters):
    cdef int n = len(tup)
    cdef int* t = <int*>malloc(n * sizeof(int))
    cdef long[::1] lv = np.asarray(letters, dtype=np.int_).reshape(-1)
    cdef Py_ssize_t j
    try:
        for j in range(n):
            t[j] = tup[j]
        if lv.shape[0]:
            _apply(tab, t, &lv[0], lv.shape[0])
        return _to_tuple(t, n)
    finally:
        free(t)


def canonical(tup, maps):
    if maps is None:
        return tuple(tup)
    cdef int[:, ::1] mv = maps
    cdef int n = len(tup)
    cdef int* t = <int*>malloc(2 * n * sizeof(int))
    cdef Py_ssize_t j
    try:
        for j in range(n):
            t[j] = tup[j]
        _canon(t, t + n, n, mv)
        return _to_tuple(t + n, n)
    finally:
        free(t)


def orbit_bfs(Tables tab, start, movers, maps, long cap):
    cdef int n = len(start)
    cdef Py_ssize_t nm = len(movers)
    cdef bint use_maps = maps is not None
    cdef int[:, ::1] mv
    if use_maps:
        mv = maps
    # flatten mover letters
    lens = [len(mw) for mw in movers]
    cdef long[::1] flat = np.asarray([s for mw in movers for s in mw] or [0], dtype=np.int_)
    cdef long[::1] offs = np.asarray(np.concatenate([[0], np.cumsum(lens)]), dtype=np.int_)
    cdef int* buf = <int*>malloc(2 * n * sizeof(int))
    cdef Py_ssize_t p, m, j, q
    cdef tuple key, nk
    cdef dict index = {}
    cdef list keys = []
    cdef list targets = []
    cdef list parent = [-1]
    cdef list via = [-1]
    cdef list row
    try:
        for j in range(n):
            buf[j] = start[j]
        if use_maps:
            _canon(buf, buf + n, n, mv)
            key = _to_tuple(buf + n, n)
        else:
            key = _to_tuple(buf, n)
        index[key] = 0
        keys.append(key)
        p = 0
        while p < len(keys):
            key = <tuple>keys[p]
            row = []
            for m in range(nm):
                for j in range(n):
                    buf[j] = key[j]
                if offs[m + 1] > offs[m]:
                    _apply(tab, buf, &flat[offs[m]], offs[m + 1] - offs[m])
                if use_maps:
                    _canon(buf, buf + n, n, mv)
                    nk = _to_tuple(buf + n, n)
                else:
                    nk = _to_tuple(buf, n)
                qo = index.get(nk)
                if qo is None:
                    q = len(keys)
                    if q >= cap:
                        return None
                    index[nk] = q
                    keys.append(nk)
                    parent.append(p)
                    via.append(m)
                else:
                    q = qo
                row.append(q)
            targets.append(row)
            p += 1
        return keys, targets, parent, via
    finally:
        free(buf)


cdef bint _generates(Tables tab, int* gens, int ng, char* seen, int* queue) noexcept nogil:
    cdef int N = tab.order
    cdef int head = 0, tail = 1, count = 1, x, y, k
    for k in range(N):
        seen[k] = 0
    seen[0] = 1
    queue[0] = 0
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(ng):
            y = tab.mul[x, gens[k]]
            if not seen[y]:
                seen[y] = 1
                count += 1
                queue[tail] = y
                tail += 1
    return count == N


def generates(Tables tab, ids):
    gens = sorted(set(ids))
    cdef int ng = len(gens)
    cdef int N = tab.order
    cdef int* g = <int*>malloc((ng + N) * sizeof(int))
    cdef char* seen = <char*>malloc(N)
    cdef Py_ssize_t k
    try:
        for k in range(ng):
            g[k] = gens[k]
        return _generates(tab, g, ng, seen, g + ng)
    finally:
        free(g)
        free(seen)


def enumerate_data(Tables tab, int n):
    cdef int N = tab.order
    cdef int m = n - 1
    cdef list out = []
    if N == 1:
        return out
    cdef dict cache = {}
    cdef int* idx = <int*>malloc(m * sizeof(int))
    cdef int* prefix = <int*>malloc((m + 1) * sizeof(int))
    cdef int* gbuf = <int*>malloc((n + N) * sizeof(int))
    cdef char* seen = <char*>malloc(N)
    cdef int k, j, last, ng
    cdef tuple tup
    try:
        for k in range(m):
            idx[k] = 1
        prefix[0] = 0
        for k in range(m):
            prefix[k + 1] = tab.mul[prefix[k], idx[k]]
        while True:
            last = tab.inv[prefix[m]]
            if last != 0:
                tup = tuple([idx[j] for j in range(m)] + [last])
                support = frozenset(tup)
                ok = cache.get(support)
                if ok is None:
                    ng = 0
                    for v in support:
                        gbuf[ng] = v
                        ng += 1
                    ok = _generates(tab, gbuf, ng, seen, gbuf + n)
                    cache[support] = ok
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
                prefix[j + 1] = tab.mul[prefix[j], idx[j]]
    finally:
        free(idx)
        free(prefix)
        free(gbuf)
        free(seen)
