"""Exact integer/rational linear algebra and an exact rational LP solver.

Everything here works over arbitrary-precision ints and `fractions.Fraction`;
no floating point is used anywhere.  Vectors are tuples, matrices are tuples
of row tuples, and vectors are treated as columns (``mat_vec(M, x)`` is M@x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, SingularSystem, ZeroVector

Vec = tuple
Mat = tuple


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def mat_vec(M, x):
    return tuple(dot(row, x) for row in M)


def mat_mul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(dot(row, c) for c in cols) for row in A)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M):
    return tuple(zip(*M))


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g == 0:
        raise ZeroVector("primitive() of the zero vector")
    return tuple(a // g for a in v)


def scale_to_primitive(v):
    """Scale a rational vector to a primitive integer vector, same direction."""
    denom = 1
    for a in v:
        if isinstance(a, Fraction):
            denom = denom * a.denominator // gcd(denom, a.denominator)
    ints = tuple(int(a * denom) for a in v)
    return primitive(ints)


def det(M):
    """Exact determinant of a square rational matrix (fraction-free for ints)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("det: matrix is not square")
    rows = [[Fraction(x) for x in row] for row in M]
    sign = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        for i in range(col + 1, n):
            f = rows[i][col] / rows[col][col]
            if f:
                for j in range(col, n):
                    rows[i][j] -= f * rows[col][j]
    result = Fraction(sign)
    for i in range(n):
        result *= rows[i][i]
    return result


def det_int(M):
    d = det(M)
    assert d.denominator == 1
    return int(d)


def unimodular_certificate(vectors):
    """Determinant of the matrix whose rows are the given integer vectors.

    The vectors form a basis of Z^n iff the result is +-1.
    """
    n = len(vectors)
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("need n vectors of dimension n")
    return det_int(tuple(tuple(v) for v in vectors))


def mat_inverse(M):
    """Exact inverse over Fraction; raises SingularSystem if det = 0."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise SingularSystem("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def unimodular_inverse(M):
    """Integer inverse of an integer matrix with determinant +-1."""
    inv = mat_inverse(M)
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row)
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def dual_basis(vectors):
    """Rational vectors u_1..u_n with <v_i, u_j> = delta_ij exactly."""
    inv = mat_inverse(tuple(tuple(v) for v in vectors))
    # u_j is the j-th column of the inverse of the matrix with rows v_i.
    return tuple(tuple(inv[i][j] for i in range(len(inv))) for j in range(len(inv)))


def rank(M):
    """Rank of a rational matrix (exact Gaussian elimination)."""
    if not M:
        return 0
    rows = [[Fraction(x) for x in row] for row in M]
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


# ---------------------------------------------------------------------------
# Smith / Hermite normal forms
# ---------------------------------------------------------------------------

def smith_decomposition(M):
    """Smith normal form with transforms: returns (factors, U, V) with
    D = U @ M @ V, U and V unimodular, D diagonal with d_1 | d_2 | ... >= 0.

    `factors` is the tuple of diagonal entries of D (length min(m, n)).
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(row) for row in M]
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
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
        # pick the nonzero entry of smallest absolute value in the submatrix
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0 and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if D[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, m):
            if D[i][t] != 0:
                q = D[i][t] // D[t][t]
                add_row(t, i, -q)
                if D[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if D[t][j] != 0:
                q = D[t][j] // D[t][t]
                add_col(t, j, -q)
                if D[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1

    factors = tuple(D[i][i] for i in range(min(m, n)))
    return factors, tuple(tuple(r) for r in U), tuple(tuple(r) for r in V)


def hermite_normal_form(M):
    """Row-style Hermite normal form of an integer matrix (rows generate the
    same lattice; pivots positive, entries above a pivot reduced mod pivot).
    Zero rows are dropped."""
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col] != 0 and (piv is None or abs(rows[i][col]) < abs(rows[piv][col])):
                piv = i
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        while True:
            done = True
            for i in range(r + 1, m):
                if rows[i][col] != 0:
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col] != 0:
                        rows[r], rows[i] = rows[i], rows[r]
                        done = False
            if done:
                break
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(r):
            q = rows[i][col] // rows[r][col]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in rows[:r] if any(row[:]))


def saturated_kernel_basis(F):
    """Basis of ker(F) cap Z^n as a saturated sublattice, for integer F (k x n).

    Returns a tuple of basis vectors (rows), canonicalized by Hermite form.
    """
    m = len(F)
    n = len(F[0])
    factors, _U, V = smith_decomposition(F)
    r = sum(1 for f in factors if f != 0)
    # kernel = span of columns r..n-1 of V
    cols = [tuple(V[i][j] for i in range(n)) for j in range(r, n)]
    if not cols:
        return ()
    return hermite_normal_form(tuple(cols))


# ---------------------------------------------------------------------------
# Exact rational LP (two-phase simplex, Bland's rule)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None = None
    witness: tuple | None = None


def _pivot(T, basis, leave, enter):
    row = T[leave]
    p = row[enter]
    T[leave] = [x / p for x in row]
    for i, other in enumerate(T):
        if i != leave and other[enter]:
            f = other[enter]
            T[i] = [a - f * b for a, b in zip(other, T[leave])]
    basis[leave] = enter


def _simplex(T, basis, ncols):
    """Minimize the last row of tableau T in place.  Bland's rule throughout."""
    m = len(T) - 1
    while True:
        enter = None
        for j in range(ncols):
            if T[-1][j] < 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(T, basis, leave, enter)


def lp_feasible_max(constraints, objective):
    """Maximize <objective, y> over {y : <normal_i, y> >= offset_i}.

    `constraints` is a list of (normal, offset) pairs.  Returns an LPResult
    with an exact optimum and a feasible witness point, or the degenerate
    verdict ("unbounded" / "infeasible").
    """
    n = len(objective)
    for normal, _off in constraints:
        if len(normal) != n:
            raise DimensionMismatch("constraint dimension differs from objective")
    m = len(constraints)
    # y = u - w with u, w >= 0; slack s_i: <a_i, u - w> - s_i = b_i
    ncols = 2 * n + m
    rows = []
    for i, (normal, off) in enumerate(constraints):
        row = [Fraction(x) for x in normal] + [Fraction(-x) for x in normal]
        row += [Fraction(-1) if j == i else Fraction(0) for j in range(m)]
        row.append(Fraction(off))
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)

    # Phase 1: artificial variable per row.
    T = []
    basis = []
    for i, row in enumerate(rows):
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        T.append(row[:-1] + art + [row[-1]])
        basis.append(ncols + i)
    obj1 = [Fraction(0)] * (ncols + m) + [Fraction(0)]
    for row in T:
        obj1 = [a - b for a, b in zip(obj1, row)]
    for j in range(ncols, ncols + m):
        obj1[j] = Fraction(0)
    T.append(obj1)
    _simplex(T, basis, ncols + m)
    if -T[-1][-1] != 0:
        return LPResult("infeasible")
    # Drive remaining artificials out of the basis.
    i = 0
    while i < len(basis):
        if basis[i] >= ncols:
            enter = next((j for j in range(ncols) if T[i][j] != 0), None)
            if enter is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, enter)
        i += 1
    # Phase 2: minimize -c.(u - w).
    T = [row[:ncols] + [row[-1]] for row in T[:-1]]
    cost = [Fraction(-c) for c in objective] + [Fraction(c) for c in objective]
    cost += [Fraction(0)] * m + [Fraction(0)]
    for i, b in enumerate(basis):
        if cost[b]:
            f = cost[b]
            cost = [a - f * x for a, x in zip(cost, T[i])]
    T.append(cost)
    status = _simplex(T, basis, ncols)
    if status == "unbounded":
        return LPResult("unbounded")
    sol = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        sol[b] = T[i][-1]
    y = tuple(sol[j] - sol[n + j] for j in range(n))
    value = sum(Fraction(c) * yj for c, yj in zip(objective, y))
    return LPResult("optimal", value, y)
