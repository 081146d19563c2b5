"""Pure-Python versions of the hot kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
line for line and must produce identical output.
"""


def convolve(p, q, table, zero=0):
    """Group-ring product of coefficient sequences ``p`` and ``q``.

    ``table[a][b]`` is the index of the product of basis elements a and b.
    """
    out = [zero] * len(p)
    qnz = [(b, cb) for b, cb in enumerate(q) if cb]
    for a, ca in enumerate(p):
        if not ca:
            continue
        row = table[a]
        for b, cb in qnz:
            out[row[b]] += ca * cb
    return out


def hnf_rows(rows, ncols):
    """Row-style Hermite normal form of a list of integer rows.

    Returns a new list of rows: pivots positive, entries above each pivot
    reduced into ``[0, pivot)``, zero rows dropped.
    """
    rows = [list(r) for r in rows if any(r)]
    m = len(rows)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            piv = -1
            best = 0
            for i in range(r, m):
                v = rows[i][c]
                if v:
                    av = v if v > 0 else -v
                    if piv < 0 or av < best:
                        piv, best = i, av
                        if av == 1:
                            break
            if piv < 0:
                break
            rows[r], rows[piv] = rows[piv], rows[r]
            prow = rows[r]
            p = prow[c]
            clean = True
            for i in range(r + 1, m):
                row = rows[i]
                v = row[c]
                if v:
                    qt = v // p
                    rows[i] = row = [a - qt * b for a, b in zip(row, prow)]
                    if row[c]:
                        clean = False
            if clean:
                break
        if piv < 0:
            continue
        prow = rows[r]
        p = prow[c]
        if p < 0:
            prow = rows[r] = [-a for a in prow]
            p = -p
        for i in range(r):
            row = rows[i]
            qt = row[c] // p
            if qt:
                rows[i] = [a - qt * b for a, b in zip(row, prow)]
        r += 1
    return rows[:r]
