import random

from lattes_sft.intlinalg import (
    charpoly,
    column_echelon,
    det,
    identity,
    kernel_basis,
    lattice_points_in_box,
    mat_mul,
    mat_pow,
    mat_sub,
    smith_diagonal,
    smith_normal_form,
    solve_right,
    sylvester_solutions,
    transpose,
    xgcd,
)


def rand_matrix(rng, n, lo=-5, hi=5):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n))


def test_xgcd():
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.randint(-40, 40), rng.randint(-40, 40)
        g, x, y = xgcd(a, b)
        assert g >= 0 and a * x + b * y == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_charpoly_matches_det_and_trace():
    rng = random.Random(5)
    for n in (1, 2, 3, 4):
        for _ in range(20):
            A = rand_matrix(rng, n)
            cs = charpoly(A)
            assert len(cs) == n + 1 and cs[-1] == 1
            assert cs[0] == (-1) ** n * det(A)
            assert cs[-2] == -sum(A[i][i] for i in range(n))
            # Cayley-Hamilton: p(A) = 0
            acc = tuple(tuple(0 for _ in range(n)) for _ in range(n))
            P = identity(n)
            for c in cs:
                acc = tuple(
                    tuple(acc[i][j] + c * P[i][j] for j in range(n)) for i in range(n)
                )
                P = mat_mul(P, A)
            assert all(v == 0 for row in acc for v in row)


def test_smith_normal_form_properties():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(25):
            M = rand_matrix(rng, n)
            D, U, V = smith_normal_form(M)
            assert mat_mul(U, mat_mul(M, V)) == D
            assert abs(det(U)) == 1 and abs(det(V)) == 1
            diag = [D[i][i] for i in range(n)]
            assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
            assert all(d >= 0 for d in diag)
            for a, b in zip(diag, diag[1:]):
                if a != 0:
                    assert b % a == 0
                else:
                    assert b == 0
            import math

            assert abs(det(M)) == math.prod(diag)


def test_smith_diagonal_known():
    assert smith_diagonal(((1, -2), (-1, 1))) == (1, 1)
    assert smith_diagonal(((-2,),)) == (2,)
    assert smith_diagonal(((0, 0), (0, 0))) == (0, 0)
    assert smith_diagonal(((2, 0), (0, 4))) == (2, 4)
    assert smith_diagonal(((4, 0), (0, 6))) == (2, 12)


def test_kernel_basis():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.choice((2, 3, 4))
        M = rand_matrix(rng, n, -3, 3)
        basis = kernel_basis(M)
        for v in basis:
            assert all(
                sum(M[i][j] * v[j] for j in range(n)) == 0 for i in range(n)
            )
        # saturation spot-check: a singular matrix has a nonzero kernel vector
        if det(M) == 0:
            assert basis


def test_column_echelon_and_box_enumeration():
    rng = random.Random(13)
    for _ in range(40):
        N = rng.choice((2, 3, 4))
        d = rng.randint(1, N)
        cols = [tuple(rng.randint(-3, 3) for _ in range(N)) for _ in range(d)]
        ech = column_echelon(cols)
        pivots = [next((r for r in range(N) if c[r] != 0), None) for c in ech]
        assert all(p is not None for p in pivots)
        assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
        # enumeration agrees with brute force over coefficient combinations
        lo, hi = 0, 3
        pts = set(lattice_points_in_box(ech, N, lo, hi))
        if len(ech) <= 3:
            import itertools

            span = range(-12, 13)
            brute = set()
            for combo in itertools.product(span, repeat=len(ech)):
                v = tuple(
                    sum(c * col[r] for c, col in zip(combo, ech)) for r in range(N)
                )
                if all(lo <= x <= hi for x in v):
                    brute.add(v)
            assert pts == brute


def test_box_enumeration_signed_window():
    rng = random.Random(23)
    import itertools

    for _ in range(25):
        N = rng.choice((3, 4))
        cols = [tuple(rng.randint(-2, 2) for _ in range(N)) for _ in range(2)]
        ech = column_echelon(cols)
        pts = set(lattice_points_in_box(ech, N, -2, 2))
        brute = set()
        for combo in itertools.product(range(-15, 16), repeat=len(ech)):
            v = tuple(
                sum(c * col[r] for c, col in zip(combo, ech)) for r in range(N)
            )
            if all(-2 <= x <= 2 for x in v):
                brute.add(v)
        assert pts == brute


def test_sylvester_solutions_satisfy_constraint():
    rng = random.Random(17)
    for _ in range(30):
        n = 2
        A = rand_matrix(rng, n, 0, 3)
        B = rand_matrix(rng, n, 0, 3)
        sols = sylvester_solutions(A, B, 0, 3)
        for X in sols:
            assert mat_mul(A, X) == mat_mul(X, B)
            assert all(0 <= v <= 3 for row in X for v in row)
        # zero matrix always qualifies
        assert tuple(tuple(0 for _ in range(n)) for _ in range(n)) in sols


def test_sylvester_solutions_complete_for_commutant():
    # commutant of ((0,1),(2,0)) in the box: x*I + y*A with x, y >= 0
    A = ((0, 1), (2, 0))
    sols = set(sylvester_solutions(A, A, 0, 4))
    expected = set()
    for x in range(5):
        for y in range(3):
            M = ((x, y), (2 * y, x))
            if all(0 <= v <= 4 for row in M for v in row):
                expected.add(M)
    assert sols == expected


def test_solve_right():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.choice((1, 2, 3))
        R = rand_matrix(rng, n)
        C = rand_matrix(rng, n)
        X = solve_right(R, C)
        if det(R) == 0:
            assert X is None
        else:
            RX = mat_mul(R, X)
            assert all(
                RX[i][j] == C[i][j] for i in range(n) for j in range(n)
            )


def test_mat_helpers():
    A = ((1, 2), (3, 4))
    assert transpose(A) == ((1, 3), (2, 4))
    assert mat_sub(A, A) == ((0, 0), (0, 0))
    assert mat_pow(A, 0) == identity(2)
    assert mat_pow(A, 3) == mat_mul(A, mat_mul(A, A))
