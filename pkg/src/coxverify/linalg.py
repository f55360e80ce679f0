"""Small exact linear algebra over a field context.

Vectors are tuples of AlgReal; matrices are tuples of row tuples.  The
matrices here are tiny (rank of the group), so plain Gaussian
elimination with exact field division is used throughout.
"""

from __future__ import annotations

from .algebraic import AlgReal, FieldContext

Vector = tuple
Matrix = tuple


def identity(ctx: FieldContext, n: int) -> Matrix:
    return tuple(
        tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)
    )


def mat_vec(mat: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), start=row[0].ctx.zero) for row in mat)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0])
    k = len(b)
    zero = a[0][0].ctx.zero
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = zero
            for t in range(k):
                x = ai[t]
                if x:
                    acc = acc + x * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def transpose(mat: Matrix) -> Matrix:
    return tuple(zip(*mat))


def scalar_vec(c: AlgReal, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def dot(u: Vector, v: Vector) -> AlgReal:
    acc = u[0].ctx.zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def determinant(ctx: FieldContext, mat: Matrix) -> AlgReal:
    n = len(mat)
    rows = [list(r) for r in mat]
    det = ctx.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return ctx.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv_p = p.inverse()
        for r in range(col + 1, n):
            factor = rows[r][col] * inv_p
            if factor:
                for c in range(col, n):
                    rows[r][c] = rows[r][c] - factor * rows[col][c]
    return det


def leading_principal_minors(ctx: FieldContext, mat: Matrix) -> list[AlgReal]:
    """Determinants of the k-by-k upper-left blocks, k = 1..n."""
    return [
        determinant(ctx, tuple(row[: k + 1] for row in mat[: k + 1]))
        for k in range(len(mat))
    ]


def inverse(ctx: FieldContext, mat: Matrix) -> Matrix:
    n = len(mat)
    aug = [list(mat[i]) + [ctx.one if j == i else ctx.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def kernel_basis(ctx: FieldContext, mat: Matrix) -> tuple[Vector, ...]:
    """Basis of the null space, by Gaussian elimination with full pivoting."""
    n_rows = len(mat)
    n_cols = len(mat[0]) if n_rows else 0
    rows = [list(r) for r in mat]
    col_perm = list(range(n_cols))
    rank = 0
    for step in range(min(n_rows, n_cols)):
        pivot = None
        for r in range(step, n_rows):
            for c in range(step, n_cols):
                if rows[r][c]:
                    pivot = (r, c)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pr, pc = pivot
        rows[step], rows[pr] = rows[pr], rows[step]
        if pc != step:
            for row in rows:
                row[step], row[pc] = row[pc], row[step]
            col_perm[step], col_perm[pc] = col_perm[pc], col_perm[step]
        inv_p = rows[step][step].inverse()
        rows[step] = [x * inv_p for x in rows[step]]
        for r in range(n_rows):
            if r != step and rows[r][step]:
                f = rows[r][step]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[step])]
        rank += 1
    basis = []
    for free in range(rank, n_cols):
        vec = [ctx.zero] * n_cols
        vec[col_perm[free]] = ctx.one
        for r in range(rank):
            vec[col_perm[r]] = -rows[r][free]
        basis.append(tuple(vec))
    return tuple(basis)
