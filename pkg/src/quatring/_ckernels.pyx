# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``.

Coefficients stay Python objects so results are exact at any size;
convolve takes a machine-integer path when the operands are small ints.
"""

from libc.stdlib cimport malloc, free

# |coeff| < 2**24 and at most 4096 terms keep every accumulator below 2**60
cdef long long SMALL = 1 << 24


def convolve(p, q, table, zero=0):
    cdef Py_ssize_t size = len(p)
    cdef Py_ssize_t a, b, k, nq
    cdef long long *acc
    cdef long long *qi
    cdef long long *qc
    cdef long long ca_c
    cdef bint small = zero == 0 and type(zero) is int
    if small:
        for v in p:
            if type(v) is not int or not (-SMALL < v < SMALL):
                small = False
                break
    if small:
        for v in q:
            if type(v) is not int or not (-SMALL < v < SMALL):
                small = False
                break
    qidx = [b for b in range(size) if q[b]]
    nq = len(qidx)
    if small and size <= 4096:
        acc = <long long *> malloc(size * sizeof(long long))
        qi = <long long *> malloc((nq + 1) * sizeof(long long))
        qc = <long long *> malloc((nq + 1) * sizeof(long long))
        try:
            for k in range(size):
                acc[k] = 0
            for k in range(nq):
                qi[k] = qidx[k]
                qc[k] = q[qidx[k]]
            for a in range(size):
                ca_c = p[a]
                if ca_c == 0:
                    continue
                row = table[a]
                for k in range(nq):
                    acc[<Py_ssize_t> row[qi[k]]] += ca_c * qc[k]
            return [acc[k] for k in range(size)]
        finally:
            free(acc)
            free(qi)
            free(qc)
    out = [zero] * size
    qnz = [(b, q[b]) for b in qidx]
    for a in range(size):
        ca = p[a]
        if not ca:
            continue
        row = table[a]
        for b, cb in qnz:
            k = row[b]
            out[k] = out[k] + ca * cb
    return out


def hnf_rows(rows, Py_ssize_t ncols):
    cdef Py_ssize_t m, r, c, i, piv
    cdef bint clean
    rows = [list(x) for x in rows if any(x)]
    m = len(rows)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = -1
        while True:
            piv = -1
            best = 0
            for i in range(r, m):
                v = (<list> rows[i])[c]
                if v:
                    av = v if v > 0 else -v
                    if piv < 0 or av < best:
                        piv = i
                        best = av
                        if av == 1:
                            break
            if piv < 0:
                break
            rows[r], rows[piv] = rows[piv], rows[r]
            prow = <list> rows[r]
            p = prow[c]
            clean = True
            for i in range(r + 1, m):
                row = <list> rows[i]
                v = row[c]
                if v:
                    qt = v // p
                    row = [x - qt * y for x, y in zip(row, prow)]
                    rows[i] = row
                    if row[c]:
                        clean = False
            if clean:
                break
        if piv < 0:
            continue
        prow = <list> rows[r]
        p = prow[c]
        if p < 0:
            prow = [-x for x in prow]
            rows[r] = prow
            p = -p
        for i in range(r):
            row = <list> rows[i]
            qt = row[c] // p
            if qt:
                rows[i] = [x - qt * y for x, y in zip(row, prow)]
        r += 1
    return rows[:r]
