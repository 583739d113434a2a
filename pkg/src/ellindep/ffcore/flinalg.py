"""Dense linear algebra over an arbitrary FieldDescriptor (nested lists).

These routines favour clarity over speed; prime-field hot paths live in
``linalg`` and run on numpy arrays.
"""

from __future__ import annotations

from . import poly


def zeros(n, m):
    return [[0] * m for _ in range(n)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def from_ints(F, M):
    return [[F.embed(int(x)) for x in row] for row in M]


def mat_mul(F, A, B):
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * m
        for k, a in enumerate(row):
            if a:
                Bk = B[k]
                for j in range(m):
                    b = Bk[j]
                    if b:
                        acc[j] = F.add(acc[j], F.mul(a, b))
        out.append(acc)
    return out


def mat_vec(F, A, v):
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def mat_add(F, A, B):
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(F, A, B):
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(F, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def mat_add_scalar(F, A, c):
    out = [row[:] for row in A]
    for i in range(len(out)):
        out[i][i] = F.add(out[i][i], c)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def bracket(F, A, B):
    return mat_sub(F, mat_mul(F, A, B), mat_mul(F, B, A))


def lin_comb(F, coeffs, mats):
    """sum_i coeffs[i] * mats[i] for equally shaped matrices."""
    n, m = len(mats[0]), len(mats[0][0])
    out = zeros(n, m)
    for c, M in zip(coeffs, mats):
        if c:
            for i in range(n):
                row, Mi = out[i], M[i]
                for j in range(m):
                    if Mi[j]:
                        row[j] = F.add(row[j], F.mul(c, Mi[j]))
    return out


def rref(F, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F, A):
    return len(rref(F, A)[1]) if A else 0


def nullspace(F, A, ncols=None):
    """Basis (list of vectors) of {x : A x = 0}."""
    if not A:
        n = ncols or 0
        return [[int(i == j) for i in range(n)] for j in range(n)]
    R, pivots = rref(F, A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def solve(F, A, b):
    """Some x with A x = b, or None when inconsistent."""
    aug = [row[:] + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    n = len(A[0])
    if n in pivots:
        return None
    x = [0] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def column_space_coords(F, basis_cols, vectors):
    """Coordinates of each vector in terms of the column basis (raise if outside)."""
    A = transpose(basis_cols)
    out = []
    for v in vectors:
        x = solve(F, A, v)
        if x is None:
            raise ValueError("vector not in span")
        out.append(x)
    return out


def hessenberg(F, A):
    H = [row[:] for row in A]
    n = len(H)
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t_inv = F.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = F.mul(H[i][m - 1], t_inv)
            if not u:
                continue
            H[i] = [F.sub(x, F.mul(u, y)) for x, y in zip(H[i], H[m])]
            for row in H:
                row[m] = F.add(row[m], F.mul(u, row[i]))
    return H


def char_poly(F, A):
    """Characteristic polynomial det(xI - A), low degree first, monic."""
    n = len(A)
    H = hessenberg(F, A)
    ps = [[1]]
    for m in range(n):
        nxt = poly.mul(F, [F.neg(H[m][m]), 1], ps[m])
        prod = 1
        for i in range(m - 1, -1, -1):
            prod = F.mul(prod, H[i + 1][i])
            if not prod:
                break
            c = F.mul(prod, H[i][m])
            if c:
                nxt = poly.sub(F, nxt, poly.scalar_mul(F, c, ps[i]))
        ps.append(nxt)
    return ps[n]


def restrict(F, M, basis_cols):
    """Matrix of M on the invariant subspace spanned by basis_cols (list of vectors)."""
    images = [mat_vec(F, M, v) for v in basis_cols]
    return transpose(column_space_coords(F, basis_cols, images))
