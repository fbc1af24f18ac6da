import random

from quandles.intmat import (
    hnf,
    hnf_transform,
    identity,
    in_row_span,
    left_kernel,
    mat_mul,
    mat_vec,
    right_kernel,
    snf_transform,
    solve,
    unimodular_inverse,
)


def test_hnf_transform_reproduces_input():
    a = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    h, u = hnf_transform(a)
    assert mat_mul(u, a) == h
    # canonical: positive pivots, entries above reduced
    pivots = []
    for row in h:
        nz = [j for j, x in enumerate(row) if x]
        if nz:
            pivots.append((nz[0], row[nz[0]]))
    assert all(p > 0 for _, p in pivots)
    cols = [c for c, _ in pivots]
    assert cols == sorted(cols)


def test_hnf_is_basis_independent():
    a = [[2, 4], [6, 8]]
    b = [[6, 8], [2, 4], [8, 12]]  # same lattice, extra dependent row
    assert hnf(a) == hnf(b)


def test_left_kernel_annihilates():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        for v in left_kernel(a):
            assert all(sum(v[i] * a[i][j] for i in range(m)) == 0 for j in range(n))


def test_right_kernel_annihilates():
    rng = random.Random(8)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        for v in right_kernel(a):
            assert all(sum(a[i][j] * v[j] for j in range(n)) == 0 for i in range(m))


def test_kernel_rank_plus_rank_is_dimension():
    a = [[6], [3]]
    assert left_kernel(a) == [[1, -2]]
    assert left_kernel([[5]]) == []
    assert left_kernel([[0], [0]]) == [[1, 0], [0, 1]]


def test_snf_transform_identity():
    rng = random.Random(9)
    for _ in range(300):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        d, u, v = snf_transform(a)
        assert mat_mul(mat_mul(u, a), v) == d
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        for x, y in zip(diag, diag[1:]):
            assert x >= 0 and y >= 0
            if x:
                assert y % x == 0
            else:
                assert y == 0


def test_unimodular_inverse_round_trip():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(1, 4)
        # random unimodular: product of elementary row ops on the identity
        u = identity(n)
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                q = rng.randint(-3, 3)
                u[i] = [a + q * b for a, b in zip(u[i], u[j])]
        w = unimodular_inverse(u)
        assert mat_mul(w, u) == identity(n)
        assert mat_mul(u, w) == identity(n)


def test_solve_consistent_and_inconsistent():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        x = [rng.randint(-5, 5) for _ in range(n)]
        b = mat_vec(a, x)
        sol = solve(a, b)
        assert sol is not None
        assert mat_vec(a, sol) == b
    assert solve([[2]], [1]) is None
    assert solve([[2, 0], [0, 3]], [4, 6]) == [2, 2]


def test_in_row_span():
    basis = hnf([[2, 0], [0, 3]])
    assert in_row_span(basis, [4, 3])
    assert not in_row_span(basis, [1, 0])
    assert in_row_span(basis, [0, 0])
