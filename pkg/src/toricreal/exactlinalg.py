"""Exact integer and rational linear algebra.

Vectors are tuples, matrices are tuples of row tuples.  Integer routines work
on Python ints, rational ones on `fractions.Fraction`; nothing here ever
touches a float.  Smith normal form pivoting is deterministic (smallest
nonzero absolute value, ties broken by lowest (row, col) index) so that every
downstream canonical form is reproducible across platforms.
"""

from fractions import Fraction
from math import gcd


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_is_zero(v):
    return all(a == 0 for a in v)


def vec_gcd(v):
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive_vector(v):
    """Scale a rational vector to a primitive integer vector, keeping direction.

    Raises ValueError on the zero vector.
    """
    fracs = [Fraction(a) for a in v]
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no primitive representative")
    denlcm = 1
    for f in fracs:
        denlcm = lcm(denlcm, f.denominator)
    ints = [int(f * denlcm) for f in fracs]
    g = vec_gcd(ints)
    return tuple(a // g for a in ints)


def canonical_sign(v):
    """Flip sign so the first nonzero coordinate is positive (for line normals)."""
    for a in v:
        if a != 0:
            return v if a > 0 else tuple(-x for x in v)
    return v


def lcm(a, b):
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(A, B):
    if not A or not B:
        return ()
    cols = len(B[0])
    Bt = list(zip(*B))
    return tuple(tuple(vec_dot(row, col) for col in Bt) for row in A)


def mat_vec(A, x):
    return tuple(vec_dot(row, x) for row in A)


def transpose(A):
    return tuple(zip(*A)) if A else ()


def mat_rational(A):
    return tuple(tuple(Fraction(a) for a in row) for row in A)


def _smallest_pivot(D, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(A):
    """Smith normal form D = U*A*V with U, V unimodular and d_i | d_{i+1}.

    Returns (D, U, V), all as tuples of tuples of ints.  Diagonal entries are
    nonnegative.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    U = [list(row) for row in identity_matrix(m)]
    V = [list(row) for row in identity_matrix(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row_dst += c * row_src
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        piv = _smallest_pivot(D, t, m, n)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if D[t][t] < 0:
            negate_row(t)
        dirty = True
        while dirty:
            dirty = False
            # clear column t
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t] != 0:
                        # remainder becomes the new, smaller pivot
                        swap_rows(t, i)
                        if D[t][t] < 0:
                            negate_row(t)
                        dirty = True
            # clear row t
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # divisibility: pivot must divide every remaining entry
        for i in range(t + 1, m):
            bad = next((j for j in range(t + 1, n) if D[i][j] % D[t][t] != 0), None)
            if bad is not None:
                add_row(i, t, 1)
                break
        else:
            t += 1

    D_t = tuple(tuple(row) for row in D)
    U_t = tuple(tuple(row) for row in U)
    V_t = tuple(tuple(row) for row in V)
    return D_t, U_t, V_t


def snf_diagonal(A):
    D, _, _ = smith_normal_form(A)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)))


def integer_kernel(A):
    """Basis of the saturated lattice kernel {x in Z^n : A*x = 0}.

    The returned tuple of integer vectors is a Z-basis; each vector is
    primitive because it is a column of a unimodular matrix.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return ()
    if m == 0:
        return tuple(identity_matrix(n))
    D, _, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    cols = transpose(V)
    return tuple(cols[j] for j in range(rank, n))


def integer_rank(A):
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    D, _, _ = smith_normal_form(A)
    return sum(1 for i in range(min(m, n)) if D[i][i] != 0)


def hermite_normal_form(A):
    """Row-style Hermite normal form H = U*A with U unimodular.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    Zero rows sink to the bottom.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = [list(row) for row in identity_matrix(m)]

    def add_row(src, dst, c):
        H[dst] = [a + c * b for a, b in zip(H[dst], H[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def swap(i, j):
        H[i], H[j] = H[j], H[i]
        U[i], U[j] = U[j], U[i]

    def negate(i):
        H[i] = [-a for a in H[i]]
        U[i] = [-a for a in U[i]]

    r = 0
    for col in range(n):
        # euclidean reduction on rows r..m-1 in this column
        while True:
            nz = [i for i in range(r, m) if H[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(H[i][col]), i))
            swap(r, piv)
            if H[r][col] < 0:
                negate(r)
            done = True
            for i in range(r + 1, m):
                if H[i][col] != 0:
                    q = H[i][col] // H[r][col]
                    add_row(r, i, -q)
                    if H[i][col] != 0:
                        done = False
            if done:
                break
        if r < m and H[r][col] != 0:
            for i in range(r):
                q = H[i][col] // H[r][col]
                if q != 0:
                    add_row(r, i, -q)
            r += 1
            if r == m:
                break
    return tuple(tuple(row) for row in H), tuple(tuple(row) for row in U)


def column_hermite(A):
    """Column-style HNF: returns H = A*V with V unimodular (canonical under
    right multiplication by GL(Z), i.e. under change of lattice basis)."""
    Ht, Ut = hermite_normal_form(transpose(A))
    return transpose(Ht), transpose(Ut)


def rational_rref(A):
    """Reduced row echelon form over Q.  Returns (R, pivots)."""
    R = [list(map(Fraction, row)) for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if R[i][col] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        scale = R[r][col]
        R[r] = [a / scale for a in R[r]]
        for i in range(m):
            if i != r and R[i][col] != 0:
                c = R[i][col]
                R[i] = [a - c * b for a, b in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in R), tuple(pivots)


def rational_rank(A):
    if not A:
        return 0
    _, pivots = rational_rref(A)
    return len(pivots)


def solve_rational(A, b):
    """One exact solution of A*x = b over Q.

    Free variables are set to zero; callers needing uniqueness must pass a
    full-rank system.  Raises NoSolution on inconsistency.
    """
    from .errors import NoSolution

    m = len(A)
    n = len(A[0]) if m else 0
    aug = [list(map(Fraction, row)) + [Fraction(bb)] for row, bb in zip(A, b)]
    R, pivots = rational_rref(aug)
    x = [Fraction(0)] * n
    for i, row in enumerate(R):
        lead = next((j for j in range(n + 1) if row[j] != 0), None)
        if lead is None:
            continue
        if lead == n:
            raise NoSolution("inconsistent linear system")
        x[lead] = row[n] - sum(row[j] * x[j] for j in range(lead + 1, n))
        # with RREF the trailing sum only involves free variables (all zero),
        # so this assignment is already final
    return tuple(x)


def solve_integer(A, b):
    """One solution of A*x = b with x integral, or None if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return tuple([0] * n)
    D, U, V = smith_normal_form(A)
    c = mat_vec(U, tuple(b))
    y = [0] * n
    r = min(m, n)
    for i in range(m):
        d = D[i][i] if i < r else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return mat_vec(V, tuple(y))


def integer_det(A):
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
