"""Pure-Python Smith normal form kernel over arbitrary-precision integers.

The reduction is fully deterministic: the pivot is always the smallest
nonzero absolute value in the working submatrix, with ties broken in
row-major order.  The compiled kernel in ``_snf_cy`` implements the exact
same elimination sequence over int64 and defers to this module whenever an
intermediate value would overflow, so both backends produce bit-identical
transforms.
"""

from __future__ import annotations


def snf_triple(entries, m, n):
    """Diagonalize an m x n integer matrix.

    Args:
        entries: row-major nested lists of Python ints (not mutated).
        m: row count.
        n: column count.

    Returns:
        (U, D, V) as nested lists with U @ entries @ V == D, U and V
        unimodular, D diagonal with a nonnegative divisibility chain.
    """
    a = [list(row) for row in entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    t = 0
    while t < m and t < n:
        # Pivot: smallest nonzero |entry| in the submatrix, row-major ties.
        pi = pj = -1
        best = 0
        for i in range(t, m):
            ai = a[i]
            for j in range(t, n):
                x = ai[j]
                if x:
                    if x < 0:
                        x = -x
                    if pi < 0 or x < best:
                        best = x
                        pi, pj = i, j
        if pi < 0:
            break

        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]

        p = a[t][t]

        # Clear column t.
        dirty = False
        for i in range(t + 1, m):
            x = a[i][t]
            if x:
                q = x // p
                if q:
                    ai, at = a[i], a[t]
                    for j in range(t, n):
                        ai[j] -= q * at[j]
                    ui, ut = u[i], u[t]
                    for j in range(m):
                        ui[j] -= q * ut[j]
                if a[i][t]:
                    dirty = True
        if dirty:
            continue

        # Clear row t.
        at = a[t]
        for j in range(t + 1, n):
            x = at[j]
            if x:
                q = x // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if at[j]:
                    dirty = True
        if dirty:
            continue

        # Enforce divisibility: fold the first offending row into row t.
        folded = False
        for i in range(t + 1, m):
            ai = a[i]
            for j in range(t + 1, n):
                if ai[j] % p:
                    att = a[t]
                    for k in range(t, n):
                        att[k] += ai[k]
                    ut, ui = u[t], u[i]
                    for k in range(m):
                        ut[k] += ui[k]
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue

        if p < 0:
            for k in range(t, n):
                a[t][k] = -a[t][k]
            for k in range(m):
                u[t][k] = -u[t][k]
        t += 1

    return u, a, v
