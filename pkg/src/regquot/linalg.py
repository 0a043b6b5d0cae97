"""Exact row-style linear algebra over the integers and the p-local integers.

Everything here works on plain lists.  Vectors are rows; a lattice is the
row span of a list of vectors.  Over the integers the canonical form is the
row Hermite normal form with non-negative entries above each pivot; over
Z_(p) rows are echelonized with p-power pivots (valuation pivoting), which
is the denominator-cleared normal form for a discrete valuation ring.
"""
from __future__ import annotations

from fractions import Fraction


def _sub_row(rows, i, j, q):
    rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]


def hnf_transform(rows, width):
    """Row Hermite form of ``rows``.

    Returns ``(H, T, pivots)`` with ``T`` unimodular, ``T * rows == H``,
    zero rows of ``H`` last, and ``pivots`` a list of ``(row, col)`` pairs.
    Entries above each pivot are reduced into ``[0, pivot)``.
    """
    m = len(rows)
    A = [[int(x) for x in row] for row in rows]
    T = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(width):
        if r == m:
            break
        found = False
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            if i0 != r:
                A[r], A[i0] = A[i0], A[r]
                T[r], T[i0] = T[i0], T[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    if q:
                        _sub_row(A, i, r, q)
                        _sub_row(T, i, r, q)
                    if A[i][c] != 0:
                        clean = False
            if clean:
                found = True
                break
        if not found:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            T[r] = [-x for x in T[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                _sub_row(A, i, r, q)
                _sub_row(T, i, r, q)
        pivots.append((r, c))
        r += 1
    return A, T, pivots


class IntLattice:
    """Row span of integer vectors with canonical coset representatives."""

    def __init__(self, rows, width):
        self.width = width
        self.nrows = len(rows)
        self.H, self.T, self.pivots = hnf_transform(rows, width)
        self.rank = len(self.pivots)

    def basis(self):
        return [self.H[r] for r, _ in self.pivots]

    def reduce(self, vec):
        """Canonical representative of ``vec`` modulo the lattice."""
        res = [int(x) for x in vec]
        for r, c in self.pivots:
            q = res[c] // self.H[r][c]
            if q:
                res = [a - q * b for a, b in zip(res, self.H[r])]
        return res

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def solve(self, vec):
        """Integer coefficients on the original rows giving ``vec``, or None."""
        res = [int(x) for x in vec]
        hcoef = [0] * len(self.H)
        for r, c in self.pivots:
            q = res[c] // self.H[r][c]
            if q:
                res = [a - q * b for a, b in zip(res, self.H[r])]
                hcoef[r] = q
        if any(res):
            return None
        out = [0] * self.nrows
        for r, q in enumerate(hcoef):
            if q:
                for j in range(self.nrows):
                    out[j] += q * self.T[r][j]
        return out


def kernel_basis(rows, width):
    """Basis of the left kernel lattice ``{x : x * rows == 0}``."""
    H, T, pivots = hnf_transform(rows, width)
    return [T[r] for r in range(len(pivots), len(rows))]


def snf_invariants(rows):
    """Invariant factors (positive, each dividing the next) of the row span."""
    A = [list(map(int, row)) for row in rows if any(row)]
    invs = []
    while A and A[0]:
        best = None
        for i, row in enumerate(A):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        A[0], A[bi] = A[bi], A[0]
        for row in A:
            row[0], row[bj] = row[bj], row[0]
        while True:
            dirty = False
            for i in range(1, len(A)):
                if A[i][0]:
                    q = A[i][0] // A[0][0]
                    if q:
                        _sub_row(A, i, 0, q)
                    if A[i][0]:
                        dirty = True
            if dirty:
                bi = min(
                    (i for i in range(len(A)) if A[i][0]),
                    key=lambda i: abs(A[i][0]),
                )
                A[0], A[bi] = A[bi], A[0]
                continue
            dirty = False
            for j in range(1, len(A[0])):
                if A[0][j]:
                    q = A[0][j] // A[0][0]
                    if q:
                        for row in A:
                            row[j] -= q * row[0]
                    if A[0][j]:
                        dirty = True
            if dirty:
                bj = min(
                    (j for j in range(len(A[0])) if A[0][j]),
                    key=lambda j: abs(A[0][j]),
                )
                for row in A:
                    row[0], row[bj] = row[bj], row[0]
                continue
            d = abs(A[0][0])
            off = None
            for i in range(1, len(A)):
                if any(x % d for x in A[i]):
                    off = i
                    break
            if off is None:
                break
            A[0] = [a + b for a, b in zip(A[0], A[off])]
        invs.append(abs(A[0][0]))
        A = [row[1:] for row in A[1:]]
        A = [row for row in A if any(row)]
    return invs


def lattice_intersection_rows(rows_a, rows_b, width):
    """Generating rows for the intersection of two integer row spans."""
    if not rows_a or not rows_b:
        return []
    stacked = [list(map(int, r)) for r in rows_a] + [list(map(int, r)) for r in rows_b]
    na = len(rows_a)
    gens = []
    for k in kernel_basis(stacked, width):
        vec = [0] * width
        for i in range(na):
            if k[i]:
                for j in range(width):
                    vec[j] += k[i] * rows_a[i][j]
        if any(vec):
            gens.append(vec)
    return gens


# -- p-local (discrete valuation ring) routines -----------------------


def pval(x, p) -> int | None:
    """p-adic valuation of a rational; None stands for +infinity (x == 0)."""
    x = Fraction(x)
    if x == 0:
        return None
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def p_part(n: int, p: int) -> int:
    n = abs(int(n))
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def canonical_residue(x, p, k) -> int:
    """Representative of ``x`` modulo ``p^k * Z_(p)`` in ``[0, p^k)``."""
    pk = p**k
    if pk == 1:
        return 0
    fr = Fraction(x)
    inv = pow(fr.denominator, -1, pk)
    return (fr.numerator * inv) % pk


class LocalLattice:
    """Span over Z_(p) of rational rows, echelonized with p-power pivots."""

    def __init__(self, rows, width, p):
        self.p = p
        self.width = width
        self.nrows = len(rows)
        E = [[Fraction(x) for x in row] for row in rows]
        m = len(E)
        U = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        pivots = []
        r = 0
        for c in range(width):
            if r == m:
                break
            cand = [(pval(E[i][c], p), i) for i in range(r, m) if E[i][c] != 0]
            if not cand:
                continue
            v, i0 = min(cand)
            if i0 != r:
                E[r], E[i0] = E[i0], E[r]
                U[r], U[i0] = U[i0], U[r]
            unit = E[r][c] / Fraction(p) ** v
            E[r] = [x / unit for x in E[r]]
            U[r] = [x / unit for x in U[r]]
            pk = Fraction(p) ** v
            for i in range(m):
                if i == r or E[i][c] == 0:
                    continue
                if i > r:
                    q = E[i][c] / pk
                else:
                    res = canonical_residue(E[i][c], p, v)
                    q = (E[i][c] - res) / pk
                if q:
                    E[i] = [a - q * b for a, b in zip(E[i], E[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            pivots.append((r, c, v))
            r += 1
        self.E, self.U, self.pivots = E, U, pivots
        self.rank = len(pivots)

    def _reduce_with_coeffs(self, vec):
        res = [Fraction(x) for x in vec]
        coeffs = [Fraction(0)] * len(self.E)
        for r, c, v in self.pivots:
            x = res[c]
            if x == 0:
                continue
            target = canonical_residue(x, self.p, v)
            q = (x - target) / Fraction(self.p) ** v
            if q:
                res = [a - q * b for a, b in zip(res, self.E[r])]
                coeffs[r] = q
        return res, coeffs

    def reduce(self, vec):
        res, _ = self._reduce_with_coeffs(vec)
        return res

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def solve(self, vec):
        """Z_(p) coefficients on the original rows giving ``vec``, or None."""
        res, coeffs = self._reduce_with_coeffs(vec)
        if any(res):
            return None
        out = [Fraction(0)] * self.nrows
        for r, q in enumerate(coeffs):
            if q:
                for j in range(self.nrows):
                    out[j] += q * self.U[r][j]
        return out


# -- denominator clearing ---------------------------------------------


def _lcm(a, b):
    from math import gcd

    return a // gcd(a, b) * b


def cleared_rows(rows):
    """Scale each row by the lcm of its denominators; returns integer rows."""
    out = []
    for row in rows:
        mult = 1
        for x in row:
            fr = Fraction(x)
            mult = _lcm(mult, fr.denominator)
        out.append([int(Fraction(x) * mult) for x in row])
    return out


def cleared_matrix(rows):
    """Scale the whole matrix by one common denominator multiple."""
    mult = 1
    for row in rows:
        for x in row:
            mult = _lcm(mult, Fraction(x).denominator)
    return [[int(Fraction(x) * mult) for x in row] for row in rows], mult
