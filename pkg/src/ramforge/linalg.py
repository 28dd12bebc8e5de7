"""Small exact linear algebra helpers.

Two customers: minimal-polynomial computation over a finite field (raw
integer vectors, incremental first-dependency search) and the quartic
coordinate solve, whose matrix entries are rational functions.  The generic
solver only assumes field-like operands with is_zero().
"""

from .errors import PreconditionError


class RelationTracker:
    """Finds the first linear dependency among successively added vectors.

    Vectors are raw-encoding lists over a galois.Field.  add() returns None
    while the span keeps growing; the first dependent vector returns the
    combination coefficients c_0..c_k (c_k == 1) with sum c_i * v_i == 0.
    """

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []  # (pivot index, reduced vector, combo over inputs)
        self.count = 0

    def add(self, vec):
        K = self.field
        if len(vec) != self.dim:
            raise PreconditionError("vector of wrong dimension")
        v = list(vec)
        combo = [0] * self.count + [1]
        for piv, u, cu in self.rows:
            c = v[piv]
            if c:
                for i in range(self.dim):
                    if u[i]:
                        v[i] = K.sub_raw(v[i], K.mul_raw(c, u[i]))
                for i in range(len(cu)):
                    if cu[i]:
                        combo[i] = K.sub_raw(combo[i], K.mul_raw(c, cu[i]))
        self.count += 1
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return combo
        inv = K.inv_raw(v[piv])
        v = [K.mul_raw(c, inv) for c in v]
        combo = [K.mul_raw(c, inv) for c in combo]
        self.rows.append((piv, v, combo))
        return None


def solve_square(matrix, rhs):
    """Solve M x = b by Gaussian elimination with first-nonzero pivoting.

    Entries must support +, -, *, /, and is_zero().  Raises on a singular
    matrix.
    """
    n = len(matrix)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next(
            (r for r in range(col, n) if not rows[r][col].is_zero()), None
        )
        if piv is None:
            raise PreconditionError("singular linear system")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv_lead = rows[col][col]
        rows[col] = [e / inv_lead for e in rows[col]]
        for r in range(n):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]
