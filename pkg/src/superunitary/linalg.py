"""Small exact linear algebra helpers over Fraction."""

from fractions import Fraction


def nullspace(rows, ncols):
    """Basis of the kernel of the given row list (each of length ncols)."""
    mat = [list(r) for r in rows if any(r)]
    pivots = []  # (row index in reduced mat, column)
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for pr, pc in pivots:
            vec[pc] = -mat[pr][free]
        basis.append(vec)
    return basis


def mat_vec(rows, vec):
    return [sum(a * b for a, b in zip(row, vec)) for row in rows]


def quad_form(mat, vec):
    return sum(vec[i] * mat[i][j] * vec[j]
               for i in range(len(vec)) for j in range(len(vec)))
