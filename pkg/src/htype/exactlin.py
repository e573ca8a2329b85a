"""Exact integer matrix helpers.

Matrices are plain lists of lists of Python ints, indexed [row][col].
Everything stays in integer arithmetic; the column reduction uses
fraction-free elimination with a gcd cleanup, so no floats ever appear.
"""

import math


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n, m=None):
    if m is None:
        m = n
    return [[0] * m for _ in range(n)]


def diagonal(entries):
    n = len(entries)
    out = zeros(n)
    for i, e in enumerate(entries):
        out[i][i] = e
    return out


def mat_mul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            f = ai[t]
            if f:
                bt = b[t]
                for j in range(m):
                    oi[j] += f * bt[j]
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return a == b


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_apply(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def metric_adjoint(m, form):
    """Adjoint of m with respect to the diagonal form diag(form).

    For a diagonal form f with entries +-1 the adjoint is f^-1 m^T f,
    entrywise result[i][j] = form[i] * m[j][i] * form[j].
    """
    n = len(m)
    return [[form[i] * m[j][i] * form[j] for j in range(n)] for i in range(n)]


def dot_form(x, y, form):
    return sum(a * f * b for a, f, b in zip(x, form, y))


def gram(vectors, form):
    return [[dot_form(x, y, form) for y in vectors] for x in vectors]


def is_signed_permutation(m):
    """True when every row and column has exactly one entry, equal to +-1."""
    n = len(m)
    seen_rows = [0] * n
    for j in range(n):
        hits = 0
        for i in range(n):
            x = m[i][j]
            if x == 0:
                continue
            if x not in (1, -1):
                return False
            hits += 1
            seen_rows[i] += 1
        if hits != 1:
            return False
    return all(c == 1 for c in seen_rows)


def signed_perm_parts(m):
    """Split a signed permutation matrix into (perm, signs).

    perm[j] = i and signs[j] = s mean column j carries s at row i,
    i.e. m maps basis vector j to s times basis vector i.
    """
    n = len(m)
    perm = [-1] * n
    signs = [0] * n
    for j in range(n):
        for i in range(n):
            x = m[i][j]
            if x:
                if perm[j] != -1 or x not in (1, -1):
                    raise ValueError("not a signed permutation matrix")
                perm[j] = i
                signs[j] = x
        if perm[j] == -1:
            raise ValueError("not a signed permutation matrix")
    if sorted(perm) != list(range(n)):
        raise ValueError("not a signed permutation matrix")
    return perm, signs


def column_space_basis(mat):
    """Primitive integer vectors spanning the column space of mat.

    Columns are processed left to right with fraction-free elimination,
    so the result is deterministic: each basis vector is divided by the
    gcd of its entries and normalised to a positive leading entry.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    basis = []
    for j in range(cols):
        vec = [mat[i][j] for i in range(rows)]
        for p, b in basis:
            f = vec[p]
            if f:
                vec = [x * b[p] - f * y for x, y in zip(vec, b)]
        if not any(vec):
            continue
        g = 0
        for x in vec:
            g = math.gcd(g, x)
        vec = [x // g for x in vec]
        p = next(i for i, x in enumerate(vec) if x)
        if vec[p] < 0:
            vec = [-x for x in vec]
        basis.append((p, vec))
    return [b for _, b in basis]
