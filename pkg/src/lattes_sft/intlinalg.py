"""Exact linear algebra over the integers.

Matrices are tuples of row tuples.  Everything here is pure and exact:
products, characteristic polynomials, Smith normal form with unimodular
transforms, and bounded enumeration of the integer solution lattice of a
Sylvester constraint A X = X B.
"""

from __future__ import annotations

from fractions import Fraction

Rows = tuple[tuple[int, ...], ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for b > 0."""
    return -((-a) // b)


def identity(n: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(A, B) -> Rows:
    p = len(B[0])
    m = len(B)
    return tuple(
        tuple(sum(row[k] * B[k][j] for k in range(m)) for j in range(p))
        for row in A
    )


def mat_pow(A, e: int) -> Rows:
    out = identity(len(A))
    base = tuple(tuple(r) for r in A)
    while e:
        if e & 1:
            out = mat_mul(out, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return out


def mat_sub(A, B) -> Rows:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def transpose(A) -> Rows:
    return tuple(zip(*A))


def trace(A) -> int:
    return sum(A[i][i] for i in range(len(A)))


def scalar_matrix(n: int, c: int) -> Rows:
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def det(A) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def charpoly(A) -> tuple[int, ...]:
    """Coefficients of det(t*I - A), lowest degree first (monic)."""
    # Faddeev-LeVerrier recursion; the rational intermediate values are
    # guaranteed to land on integers.
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Af = tuple(tuple(Fraction(x) for x in row) for row in A)
    M = Af
    c = -sum(M[i][i] for i in range(n))
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        shifted = tuple(
            tuple(M[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)
        )
        M = mat_mul(Af, shifted)
        c = -sum(M[i][i] for i in range(n)) / k
        coeffs[n - k] = c
    out = []
    for v in coeffs:
        if v.denominator != 1:
            raise ArithmeticError("characteristic polynomial must be integral")
        out.append(int(v))
    return tuple(out)


def smith_normal_form(M) -> tuple[Rows, Rows, Rows]:
    """Return (D, U, V) with D = U*M*V diagonal, U and V unimodular.

    Diagonal entries are non-negative and satisfy d1 | d2 | ... .
    """
    m, n = len(M), len(M[0])
    A = [list(r) for r in M]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def row_op(i, j, a, b, c, d):
        # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j), ad-bc = +-1
        for X in (A, U):
            ri, rj = X[i], X[j]
            for col in range(len(ri)):
                x, y = ri[col], rj[col]
                ri[col] = a * x + b * y
                rj[col] = c * x + d * y

    def col_op(i, j, a, b, c, d):
        for X in (A, V):
            for row in X:
                x, y = row[i], row[j]
                row[i] = a * x + b * y
                row[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            row_op(t, i0, 0, 1, 1, 0)
        if j0 != t:
            col_op(t, j0, 0, 1, 1, 0)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    a, b = A[t][t], A[i][t]
                    if b % a == 0:
                        row_op(t, i, 1, 0, -(b // a), 1)
                    else:
                        # Bezout rotation; strictly shrinks |pivot|
                        g, x, y = xgcd(a, b)
                        row_op(t, i, x, y, -(b // g), a // g)
                    dirty = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    a, b = A[t][t], A[t][j]
                    if b % a == 0:
                        col_op(t, j, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = xgcd(a, b)
                        col_op(t, j, x, y, -(b // g), a // g)
                    dirty = True
            if not dirty:
                break
        # pivot must divide every remaining entry before moving on
        d = A[t][t]
        redo = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % d != 0:
                    row_op(t, i, 1, 1, 0, 1)
                    redo = True
                    break
            if redo:
                break
        if redo:
            continue
        t += 1
    for i in range(min(m, n)):
        if A[i][i] < 0:
            for col in range(n):
                A[i][col] = -A[i][col]
            for col in range(m):
                U[i][col] = -U[i][col]
    return (
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in V),
    )


def smith_diagonal(M) -> tuple[int, ...]:
    D, _, _ = smith_normal_form(M)
    return tuple(D[i][i] for i in range(min(len(M), len(M[0]))))


def kernel_basis(M) -> list[tuple[int, ...]]:
    """Basis of the saturated integer kernel lattice {x : M x = 0}."""
    m, n = len(M), len(M[0])
    D, _, V = smith_normal_form(M)
    cols = []
    for i in range(n):
        if i >= m or D[i][i] == 0:
            cols.append(tuple(V[r][i] for r in range(n)))
    return cols


def column_echelon(cols: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Hermite-style column echelon form of an integer column span.

    Pivot rows strictly increase, pivots are positive, and entries of earlier
    columns at a pivot row are reduced modulo the pivot.
    """
    if not cols:
        return []
    N = len(cols[0])
    work = [list(c) for c in cols]
    out: list[list[int]] = []
    for row in range(N):
        while True:
            idxs = [k for k, c in enumerate(work) if c[row] != 0]
            if len(idxs) <= 1:
                break
            c1, c2 = work[idxs[0]], work[idxs[1]]
            a, b = c1[row], c2[row]
            g, x, y = xgcd(a, b)
            u, v = -(b // g), a // g
            for r in range(N):
                s, t = c1[r], c2[r]
                c1[r] = x * s + y * t
                c2[r] = u * s + v * t
        idxs = [k for k, c in enumerate(work) if c[row] != 0]
        if idxs:
            col = work.pop(idxs[0])
            if col[row] < 0:
                col = [-v for v in col]
            for prev in out:
                q = prev[row] // col[row]
                if q:
                    for r in range(N):
                        prev[r] -= q * col[r]
            out.append(col)
        if not work:
            break
    return [tuple(c) for c in out]


def lattice_points_in_box(
    cols: list[tuple[int, ...]], N: int, lo: int, hi: int
) -> list[tuple[int, ...]]:
    """All vectors of the lattice spanned by echelon columns with every
    coordinate in [lo, hi]."""
    if lo > hi:
        return []
    if not cols:
        return [tuple([0] * N)] if lo <= 0 <= hi else []
    d = len(cols)
    pivots = [next(r for r in range(N) if c[r] != 0) for c in cols]
    if lo > 0 or hi < 0:
        if pivots[0] > 0:
            return []  # leading zero rows force coordinates outside the box
    out: list[tuple[int, ...]] = []
    partial = [0] * N

    def rec(i: int) -> None:
        if i == d:
            if all(lo <= partial[r] <= hi for r in range(pivots[-1] + 1, N)):
                out.append(tuple(partial))
            return
        p = pivots[i]
        col = cols[i]
        h = col[p]
        cmin = ceil_div(lo - partial[p], h)
        cmax = (hi - partial[p]) // h
        if cmin > cmax:
            return
        for r in range(p, N):
            partial[r] += cmin * col[r]
        c = cmin
        while True:
            nxt = pivots[i + 1] if i + 1 < d else N
            if all(lo <= partial[r] <= hi for r in range(p, nxt)):
                rec(i + 1)
            if c == cmax:
                break
            c += 1
            for r in range(p, N):
                partial[r] += col[r]
        for r in range(p, N):
            partial[r] -= cmax * col[r]

    rec(0)
    return out


def sylvester_solutions(A, B, lo: int, hi: int) -> list[Rows]:
    """Integer matrices X with A X = X B and every entry in [lo, hi]."""
    n = len(A)
    rows = []
    for i in range(n):
        for j in range(n):
            coef = [0] * (n * n)
            for k in range(n):
                coef[k * n + j] += A[i][k]
            for l in range(n):
                coef[i * n + l] -= B[l][j]
            rows.append(tuple(coef))
    ech = column_echelon(kernel_basis(tuple(rows)))
    pts = lattice_points_in_box(ech, n * n, lo, hi)
    return [
        tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)) for v in pts
    ]


def solve_right(R, C):
    """Solve R X = C over the rationals; None if R is singular.

    Returns rows of Fractions.
    """
    n = len(R)
    aug = [[Fraction(R[i][j]) for j in range(n)] + [Fraction(x) for x in C[i]] for i in range(n)]
    w = len(aug[0])
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:w]) for row in aug)
