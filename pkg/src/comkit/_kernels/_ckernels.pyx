# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled covector-axiom kernels.

Semantics match ``_pykernels`` exactly; rows are packed into base-3 int64
keys and membership is a binary search over the sorted key array.
"""

import numpy as np


ctypedef signed char s8
ctypedef long long i64


cdef inline i64 _row_key(const s8* row, Py_ssize_t n) noexcept nogil:
    cdef i64 k = 0
    cdef Py_ssize_t i
    for i in range(n):
        k = k * 3 + (row[i] + 1)
    return k


cdef inline bint _has_key(const i64* keys, Py_ssize_t nkeys, i64 k) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = nkeys, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if keys[mid] < k:
            lo = mid + 1
        else:
            hi = mid
    return lo < nkeys and keys[lo] == k


def _prep(rows):
    arr = np.array(rows, dtype=np.int8).reshape(len(rows), -1)
    n = arr.shape[1]
    weights = (3 ** np.arange(n - 1, -1, -1)).astype(np.int64)
    keys = np.sort((arr.astype(np.int64) + 1) @ weights)
    return np.ascontiguousarray(arr), np.ascontiguousarray(keys)


def compose_closed(rows) -> bool:
    if len(rows) == 0 or len(rows[0]) == 0:
        return True
    arr_np, keys_np = _prep(rows)
    cdef const s8[:, ::1] arr = arr_np
    cdef const i64[::1] keys = keys_np
    cdef Py_ssize_t m = arr.shape[0], n = arr.shape[1]
    buf_np = np.empty(n, dtype=np.int8)
    cdef s8[::1] buf = buf_np
    cdef Py_ssize_t i, j, f
    cdef bint ok = True
    with nogil:
        for i in range(m):
            for j in range(m):
                for f in range(n):
                    buf[f] = arr[i, f] if arr[i, f] != 0 else arr[j, f]
                if not _has_key(&keys[0], m, _row_key(&buf[0], n)):
                    ok = False
                    break
            if not ok:
                break
    return bool(ok)


def face_symmetry_closed(rows) -> bool:
    if len(rows) == 0 or len(rows[0]) == 0:
        return True
    arr_np, keys_np = _prep(rows)
    cdef const s8[:, ::1] arr = arr_np
    cdef const i64[::1] keys = keys_np
    cdef Py_ssize_t m = arr.shape[0], n = arr.shape[1]
    buf_np = np.empty(n, dtype=np.int8)
    cdef s8[::1] buf = buf_np
    cdef Py_ssize_t i, j, f
    cdef bint ok = True
    with nogil:
        for i in range(m):
            for j in range(m):
                for f in range(n):
                    buf[f] = arr[i, f] if arr[i, f] != 0 else <s8>(-arr[j, f])
                if not _has_key(&keys[0], m, _row_key(&buf[0], n)):
                    ok = False
                    break
            if not ok:
                break
    return bool(ok)


def strong_elimination_holds(rows) -> bool:
    if len(rows) == 0 or len(rows[0]) == 0:
        return True
    arr_np, keys_np = _prep(rows)
    cdef const s8[:, ::1] arr = arr_np
    cdef const i64[::1] keys = keys_np
    cdef Py_ssize_t m = arr.shape[0], n = arr.shape[1]

    # CSR index of the rows vanishing at each element
    zmask = (arr_np == 0)
    zoff_np = np.zeros(n + 1, dtype=np.int64)
    zoff_np[1:] = np.cumsum(zmask.sum(axis=0))
    zidx_np = np.concatenate(
        [np.nonzero(zmask[:, e])[0] for e in range(n)]
    ).astype(np.int64) if zmask.any() else np.zeros(0, dtype=np.int64)
    cdef const i64[::1] zoff = zoff_np
    cdef const i64[::1] zidx = np.ascontiguousarray(zidx_np)

    comp_np = np.empty(n, dtype=np.int8)
    cand_np = np.empty(n, dtype=np.int8)
    insep_np = np.zeros(n, dtype=np.int8)
    sep_np = np.empty(n, dtype=np.int64)
    oth_np = np.empty(n, dtype=np.int64)
    dig_np = np.empty(n, dtype=np.int64)
    cdef s8[::1] comp = comp_np
    cdef s8[::1] cand = cand_np
    cdef s8[::1] insep = insep_np
    cdef i64[::1] sep = sep_np
    cdef i64[::1] oth = oth_np
    cdef i64[::1] dig = dig_np

    cdef Py_ssize_t i, j, f, si, oi, nsep, noth, e, r, zlo, zhi, zi
    cdef i64 ncand, t
    cdef bint ok = True, found, match
    with nogil:
        for i in range(m):
            if not ok:
                break
            for j in range(i, m):
                nsep = 0
                for f in range(n):
                    if arr[i, f] != 0:
                        comp[f] = arr[i, f]
                    else:
                        comp[f] = arr[j, f]
                    if arr[i, f] != 0 and arr[i, f] == -arr[j, f]:
                        sep[nsep] = f
                        nsep += 1
                        insep[f] = 1
                    else:
                        insep[f] = 0
                if nsep == 0:
                    continue
                for si in range(nsep):
                    e = sep[si]
                    zlo = zoff[e]
                    zhi = zoff[e + 1]
                    # candidate count 3**(nsep-1) vs scanning the zero rows
                    ncand = 1
                    for oi in range(nsep - 1):
                        ncand = ncand * 3
                        if ncand > m:
                            break
                    found = False
                    if ncand <= zhi - zlo:
                        noth = 0
                        for oi in range(nsep):
                            if sep[oi] != e:
                                oth[noth] = sep[oi]
                                noth += 1
                        for f in range(n):
                            cand[f] = comp[f]
                        cand[e] = 0
                        for oi in range(noth):
                            dig[oi] = 0
                            cand[oth[oi]] = -1
                        while True:
                            if _has_key(&keys[0], m, _row_key(&cand[0], n)):
                                found = True
                                break
                            oi = 0
                            while oi < noth and dig[oi] == 2:
                                dig[oi] = 0
                                cand[oth[oi]] = -1
                                oi += 1
                            if oi == noth:
                                break
                            dig[oi] += 1
                            cand[oth[oi]] = <s8>(dig[oi] - 1)
                    else:
                        for zi in range(zlo, zhi):
                            r = zidx[zi]
                            match = True
                            for f in range(n):
                                if not insep[f] and arr[r, f] != comp[f]:
                                    match = False
                                    break
                            if match:
                                found = True
                                break
                    if not found:
                        ok = False
                        break
                if not ok:
                    break
    return bool(ok)
