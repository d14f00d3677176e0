"""Exact integer matrix routines: Hermite and Smith normal forms.

These are the workhorses behind finite abelian quotients: cohomology groups
and the classification group of scalar pairs both reduce to computing
``lattice / sublattice`` for full-rank integer lattices.  Everything here is
plain list-of-lists arithmetic over Python ints.

Conventions: matrices are lists of row lists; lattices are given by generator
rows and normalized to a row-style Hermite basis (row echelon, nonnegative
pivots, entries above a pivot reduced mod the pivot).
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hermite_basis(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form basis of the lattice spanned by ``rows``.

    Returns echelon rows with positive pivots; zero rows are dropped.  The
    result is a canonical basis of the row span, suitable for membership
    tests and index computations.
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    pivot_col_of_row: list[int] = []
    for vec in work:
        vec = _reduce_against(vec, basis, pivot_col_of_row, ncols)
        if vec is not None:
            _insert_row(vec, basis, pivot_col_of_row, ncols)
    _normalize(basis, pivot_col_of_row)
    return basis


def _leading(vec: list[int]) -> int:
    for j, x in enumerate(vec):
        if x:
            return j
    return len(vec)


def _reduce_against(vec, basis, pivots, ncols):
    """Eliminate vec against the current echelon basis; return residue or None."""
    vec = list(vec)
    i = 0
    while True:
        j = _leading(vec)
        if j >= ncols:
            return None
        # find basis row with this pivot column, if any
        try:
            i = pivots.index(j)
        except ValueError:
            return vec
        a = basis[i][j]
        b = vec[j]
        if b % a == 0:
            q = b // a
            for jj in range(j, ncols):
                vec[jj] -= q * basis[i][jj]
        else:
            x, y, g = xgcd(a, b)
            row_new = [x * basis[i][jj] + y * vec[jj] for jj in range(ncols)]
            coeff_b, coeff_a = a // g, -(b // g)
            vec = [coeff_a * basis[i][jj] + coeff_b * vec[jj] for jj in range(ncols)]
            basis[i] = row_new
        # loop: vec now has a later leading column (or is zero)


def _insert_row(vec, basis, pivots, ncols):
    j = _leading(vec)
    pos = 0
    while pos < len(pivots) and pivots[pos] < j:
        pos += 1
    basis.insert(pos, vec)
    pivots.insert(pos, j)


def _normalize(basis, pivots):
    """Make pivots positive and reduce entries above each pivot."""
    for i in range(len(basis)):
        if basis[i][pivots[i]] < 0:
            basis[i] = [-x for x in basis[i]]
    for i in reversed(range(len(basis))):
        p = pivots[i]
        a = basis[i][p]
        for ii in range(i):
            b = basis[ii][p]
            q = b // a
            if q:
                basis[ii] = [x - q * y for x, y in zip(basis[ii], basis[i])]


def lattice_index(basis: list[list[int]], ncols: int) -> int:
    """Index [Z^n : L] for a full-rank lattice basis in echelon form."""
    assert len(basis) == ncols, "lattice is not full rank"
    det = 1
    for i, row in enumerate(basis):
        det *= row[_leading(row)]
    return abs(det)


def solve_in_lattice(basis: list[list[int]], vec: list[int]) -> list[int] | None:
    """Coefficients c with sum(c_i * basis_i) == vec, or None.

    ``basis`` must be in echelon (Hermite) form.
    """
    vec = list(vec)
    ncols = len(vec)
    coeffs = [0] * len(basis)
    pivots = [_leading(r) for r in basis]
    for i, row in enumerate(basis):
        j = pivots[i]
        q, r = divmod(vec[j], row[j])
        if r != 0:
            return None
        coeffs[i] = q
        if q:
            for jj in range(j, ncols):
                vec[jj] -= q * row[jj]
    if any(vec):
        return None
    return coeffs


def smith_normal_form(A: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (S, U, V) with U*A*V == S diagonal, U and V unimodular.

    Diagonal entries of S are nonnegative and satisfy s1 | s2 | ... .
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(row) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i1, i2, x, y, z, w):
        # (row i1, row i2) <- (x*r1 + y*r2, z*r1 + w*r2) on S and U
        for M in (S, U):
            r1, r2 = M[i1], M[i2]
            for j in range(len(r1)):
                a, b = r1[j], r2[j]
                r1[j] = x * a + y * b
                r2[j] = z * a + w * b

    def col_op(j1, j2, x, y, z, w):
        for M in (S, V):
            for row in M:
                a, b = row[j1], row[j2]
                row[j1] = x * a + y * b
                row[j2] = z * a + w * b

    def clear_position(k):
        # repeat until S[k][j] == 0 for j > k and S[i][k] == 0 for i > k
        while True:
            # bring a nonzero entry to (k, k) if needed
            if S[k][k] == 0:
                found = False
                for i in range(k, m):
                    for j in range(k, n):
                        if S[i][j]:
                            if i != k:
                                row_op(k, i, 0, 1, 1, 0)
                            if j != k:
                                col_op(k, j, 0, 1, 1, 0)
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return
            for i in range(k + 1, m):
                a, b = S[k][k], S[i][k]
                if b == 0:
                    continue
                if b % a == 0:
                    row_op(k, i, 1, 0, -(b // a), 1)
                else:
                    x, y, g = xgcd(a, b)
                    row_op(k, i, x, y, -(b // g), a // g)
            if all(S[k][j] == 0 for j in range(k + 1, n)):
                if all(S[i][k] == 0 for i in range(k + 1, m)):
                    return
            for j in range(k + 1, n):
                a, b = S[k][k], S[k][j]
                if b == 0:
                    continue
                if b % a == 0:
                    col_op(k, j, 1, 0, -(b // a), 1)
                else:
                    x, y, g = xgcd(a, b)
                    col_op(k, j, x, y, -(b // g), a // g)
            if all(S[i][k] == 0 for i in range(k + 1, m)):
                if all(S[k][j] == 0 for j in range(k + 1, n)):
                    return

    r = min(m, n)
    for k in range(r):
        clear_position(k)

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for k in range(r - 1):
            a, b = S[k][k], S[k + 1][k + 1]
            if a and b and b % a != 0:
                # bring b into column k (below the diagonal), then re-clear:
                # the row gcd step leaves gcd(a, b) at position k
                col_op(k, k + 1, 1, 1, 0, 1)
                clear_position(k)
                changed = True
            elif a == 0 and b != 0:
                col_op(k, k + 1, 0, 1, 1, 0)
                row_op(k, k + 1, 0, 1, 1, 0)
                changed = True
    for k in range(r):
        if S[k][k] < 0:
            for M in (S, U):
                M[k] = [-x for x in M[k]]
    return S, U, V


def kernel_basis(A: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the integer kernel {x : A x == 0} (x as column vectors).

    Returned as a list of length-``ncols`` vectors.
    """
    if not A:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    S, U, V = smith_normal_form(A)
    m = len(A)
    r = 0
    for k in range(min(m, ncols)):
        if S[k][k] != 0:
            r += 1
    # kernel = V * (columns r..ncols-1 of identity)
    out = []
    for j in range(r, ncols):
        out.append([V[i][j] for i in range(ncols)])
    return out


def solve_integer(A: list[list[int]], b: list[int]) -> list[int] | None:
    """One integer solution x of A x == b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    S, U, V = smith_normal_form(A)
    c = [sum(U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = S[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    for i in range(n, m):
        if c[i] != 0:
            return None
    for i in range(min(m, n), m):
        if c[i] != 0:
            return None
    return [sum(V[i][k] * y[k] for k in range(n)) for i in range(n)]


def quotient_structure(
    big: list[list[int]], small_gens: list[list[int]], ncols: int
) -> tuple[list[int], list[list[int]]]:
    """Invariant factors and generator lifts of (lattice big)/(lattice small).

    ``big`` must be a full-rank Hermite basis; ``small_gens`` generate a
    finite-index sublattice of it.  Returns (factors, reps) where factors are
    the invariant factors > 1 in increasing order and reps are vectors in the
    ambient Z^ncols projecting to independent generators of the quotient,
    rep[i] having order factors[i].
    """
    # express each generator of the sublattice in coordinates of ``big``
    T = []
    for g in small_gens:
        c = solve_in_lattice(big, g)
        assert c is not None, "small lattice not contained in big lattice"
        T.append(c)
    nb = len(big)
    S, U, V = smith_normal_form(T) if T else ([], [], [[int(i == j) for j in range(nb)] for i in range(nb)])
    diag = []
    for k in range(nb):
        d = S[k][k] if T and k < min(len(T), nb) else 0
        diag.append(abs(d))
    # quotient in transformed coordinates z = x V is prod Z/diag[k]
    Vinv = _unimodular_inverse(V, nb)
    factors: list[int] = []
    reps: list[list[int]] = []
    for k in range(nb):
        d = diag[k]
        assert d != 0, "quotient is not finite"
        if d == 1:
            continue
        factors.append(d)
        coeff = Vinv[k]  # row k of V^-1: coordinates w.r.t. ``big``
        vec = [0] * ncols
        for i, c in enumerate(coeff):
            if c:
                for j in range(ncols):
                    vec[j] += c * big[i][j]
        reps.append(vec)
    order = sorted(range(len(factors)), key=lambda i: factors[i])
    return [factors[i] for i in order], [reps[i] for i in order]


def _unimodular_inverse(V: list[list[int]], n: int) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix."""
    if n == 0:
        return []
    aug = [list(V[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    basis = hermite_basis(aug, 2 * n)
    # V unimodular => hermite of [V | I] is [I | V^-1]
    for i in range(n):
        assert basis[i][i] == 1
    return [row[n:] for row in basis]
