"""Exact linear algebra: integer Hermite/Smith normal forms and generic
row reduction over a field domain.

All integer arithmetic is on unbounded Python ints; intermediate swell is
a performance concern only, mitigated by pivoting on the smallest nonzero
absolute value.
"""

from .errors import DimensionMismatchError


def hermite_normal_form(rows):
    """Unique row-style HNF of the row lattice.

    Pivots positive, entries above a pivot reduced into [0, pivot);
    zero rows dropped.  Idempotent.
    """
    work = [list(r) for r in rows]
    if not work:
        return []
    ncols = len(work[0])
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatchError("ragged matrix")
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(work)) if work[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(work[i][c]))
            work[r], work[piv] = work[piv], work[r]
            if work[r][c] < 0:
                work[r] = [-v for v in work[r]]
            done = True
            for i in range(r + 1, len(work)):
                if work[i][c] != 0:
                    q = work[i][c] // work[r][c]
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    if work[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(work) and work[r][c] != 0:
            for i in range(r):
                q = work[i][c] // work[r][c]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
            r += 1
    return [tuple(row) for row in work[:r]]


def hnf_pivots(hnf_rows):
    pivots = []
    for row in hnf_rows:
        for c, v in enumerate(row):
            if v != 0:
                pivots.append(c)
                break
    return pivots


def hnf_coordinates(hnf_rows, v):
    """Express v as an integer combination of HNF basis rows, or None."""
    v = list(v)
    coords = []
    for row in hnf_rows:
        p = next(c for c, val in enumerate(row) if val != 0)
        if v[p] % row[p] != 0:
            return None
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
        coords.append(q)
    if any(v):
        return None
    return coords


def lattice_contains(hnf_rows, v):
    return hnf_coordinates(hnf_rows, v) is not None


def smith_normal_form(matrix, transforms=False):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    With transforms=True also returns unimodular (U, V) such that
    U*M*V is the diagonal form.
    """
    a = [list(r) for r in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transforms else None
    v = [[int(i == j) for j in range(n)] for i in range(n)] if transforms else None

    def row_op(i, j, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        if transforms:
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        for row in a:
            row[i] -= q * row[j]
        if transforms:
            for row in v:
                row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if transforms:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if transforms:
            u[i] = [-x for x in u[i]]

    t = 0
    while t < m and t < n:
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            moved = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        moved = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        moved = True
            if not moved and all(a[i][t] == 0 for i in range(t + 1, m)) \
                    and all(a[t][j] == 0 for j in range(t + 1, n)):
                break
        if a[t][t] < 0:
            negate_row(t)
        # enforce divisibility d_t | every remaining entry
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, -1)  # add row i into row t, redo this pivot
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1
    factors = [a[i][i] for i in range(t)]
    if transforms:
        return factors, ([tuple(r) for r in u], [tuple(r) for r in v])
    return factors


def det(matrix):
    """Determinant of a square integer/rational matrix (fraction-free Bareiss)."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rref(rows, domain):
    """Reduced row echelon form over a field domain; zero rows dropped."""
    work = [[domain.coerce(v) for v in r] for r in rows]
    if not work:
        return []
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if not domain.is_zero(work[i][c])), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = domain.inv(work[r][c])
        work[r] = [domain.mul(inv, v) for v in work[r]]
        for i in range(len(work)):
            if i != r and not domain.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [domain.sub(a, domain.mul(f, b)) for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]]


def field_rank(rows, domain):
    return len(rref(rows, domain))


def field_solve(basis_rows, v, domain):
    """Express v as a combination of basis_rows over a field, or None."""
    if not basis_rows:
        return None if any(not domain.is_zero(x) for x in v) else []
    ncols = len(basis_rows[0])
    k = len(basis_rows)
    # augmented transpose system: sum c_i * basis_i = v
    aug = [[basis_rows[i][c] for i in range(k)] + [v[c]] for c in range(ncols)]
    red = rref(aug, domain)
    coords = [domain.zero] * k
    for row in red:
        piv = next((j for j in range(k + 1) if not domain.is_zero(row[j])), None)
        if piv is None:
            continue
        if piv == k:
            return None  # inconsistent
        coords[piv] = row[k]
        # rref guarantees other basis-columns in this row are reduced; any
        # non-pivot free column would signal dependence among basis rows,
        # which callers avoid by passing reduced bases
    return coords


def field_in_span(basis_rows, v, domain):
    return field_solve(basis_rows, v, domain) is not None


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols))
        for i in range(rows)
    ]
