"""Exact linear algebra and polynomial arithmetic over Z, Q and prime fields.

Everything here is exact: matrices carry arbitrary-precision integers (or
residues mod a prime), rational work goes through fractions.Fraction, and no
operation ever rounds.  Conventions fixed once for the whole package:

* lattices are stored by a row-style Hermite normal form (rows are basis
  vectors, basis upper triangular, entries above the diagonal reduced into
  [0, diagonal)), which makes the basis a canonical form;
* polynomials store coefficients in ascending degree with no trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from .errors import DimensionMismatch, NotAPower, SingularMatrix


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrices must have at least one row and column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)))

    def trace(self) -> int:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return IntMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def __mul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        bt = tuple(zip(*other.entries))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )

    def apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def pow(self, e: int) -> IntMatrix:
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        result = IntMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over the prime field F_p; entries reduced into [0, p)."""

    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrices must have at least one row and column")
        p = self.modulus
        object.__setattr__(
            self, "entries", tuple(tuple(x % p for x in row) for row in self.entries)
        )

    @classmethod
    def from_int(cls, m: IntMatrix, p: int) -> FpMatrix:
        return cls(p, m.entries)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __mul__(self, other: FpMatrix) -> FpMatrix:
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        p = self.modulus
        bt = tuple(zip(*other.entries))
        return FpMatrix(
            p,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt)
                for row in self.entries
            ),
        )

    def apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        p = self.modulus
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending, canonical (no trailing zeros)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if c == (0,):
            raise ValueError("zero polynomial is rejected at construction")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPoly) -> IntPoly:
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def pow(self, e: int) -> IntPoly:
        result = IntPoly((1,))
        for _ in range(e):
            result = result * self
        return result

    def evaluate_matrix(self, m: IntMatrix) -> IntMatrix:
        acc = IntMatrix.identity(m.rows).scale(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * m + IntMatrix.identity(m.rows).scale(c)
        return acc

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c:+d}")
            else:
                mono = "X" if i == 1 else f"X^{i}"
                if c == 1:
                    terms.append(f"+{mono}")
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c:+d}*{mono}")
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------
# lattices (full rank sublattices of Z^m in canonical row HNF)


@dataclass(frozen=True)
class Lattice:
    """Finite-index sublattice of Z^m: canonical row-HNF basis plus its index."""

    basis: IntMatrix
    index: int

    @property
    def dimension(self) -> int:
        return self.basis.rows

    def contains(self, v) -> bool:
        """Membership by forward substitution on the triangular HNF basis."""
        v = list(v)
        n = self.basis.rows
        if len(v) != n:
            raise DimensionMismatch("vector length does not match lattice rank")
        for i in range(n):
            d = self.basis[i, i]
            if v[i] % d != 0:
                return False
            c = v[i] // d
            if c:
                row = self.basis.row(i)
                v = [a - c * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)


def _row_hnf_square(rows: list[list[int]]) -> list[list[int]]:
    """In-place row HNF of a full-rank square integer matrix."""
    m = len(rows)
    for j in range(m):
        # clear column j below the pivot by gcd steps
        while True:
            nonzero = [i for i in range(j + 1, m) if rows[i][j] != 0]
            if not nonzero:
                break
            pivot = min(
                (i for i in range(j, m) if rows[i][j] != 0),
                key=lambda i: abs(rows[i][j]),
            )
            rows[j], rows[pivot] = rows[pivot], rows[j]
            for i in range(j + 1, m):
                if rows[i][j] != 0:
                    q = rows[i][j] // rows[j][j]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
        if rows[j][j] == 0:
            raise SingularMatrix("matrix is singular")
        if rows[j][j] < 0:
            rows[j] = [-a for a in rows[j]]
    # reduce entries above each diagonal
    for j in range(m):
        for i in range(j):
            q = rows[i][j] // rows[j][j]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
    return rows


def hnf(m: IntMatrix) -> Lattice:
    """Canonical lattice spanned by the rows of a full-rank square matrix."""
    if not m.is_square():
        raise DimensionMismatch("hnf expects a square matrix")
    rows = _row_hnf_square([list(r) for r in m.entries])
    basis = IntMatrix.from_rows(rows)
    index = 1
    for i in range(basis.rows):
        index *= basis[i, i]
    return Lattice(basis=basis, index=index)


def row_echelon_transform(m: IntMatrix) -> tuple[list[list[int]], list[list[int]]]:
    """Unimodular U with U*M in integer row echelon form; returns (H, U).

    Works for rectangular M; zero rows of H sit at the bottom and the matching
    rows of U span the integer row kernel of M (a saturated lattice).
    """
    rows = [list(r) for r in m.entries]
    n = len(rows)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivot_row = 0
    for j in range(m.cols):
        if pivot_row == n:
            break
        while True:
            cand = [i for i in range(pivot_row, n) if rows[i][j] != 0]
            if not cand:
                break
            best = min(cand, key=lambda i: abs(rows[i][j]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            u[pivot_row], u[best] = u[best], u[pivot_row]
            cleared = True
            for i in range(pivot_row + 1, n):
                if rows[i][j] != 0:
                    q = rows[i][j] // rows[pivot_row][j]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
                    if rows[i][j] != 0:
                        cleared = False
            if cleared:
                break
        if rows[pivot_row][j] != 0:
            if rows[pivot_row][j] < 0:
                rows[pivot_row] = [-a for a in rows[pivot_row]]
                u[pivot_row] = [-a for a in u[pivot_row]]
            pivot_row += 1
    return rows, u


def integer_row_kernel(m: IntMatrix) -> list[tuple[int, ...]]:
    """Z-basis of {v : v*M = 0}; the result is saturated by construction."""
    h, u = row_echelon_transform(m)
    return [tuple(u[i]) for i in range(len(h)) if all(x == 0 for x in h[i])]


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if not m.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    a = [list(r) for r in m.entries]
    n = m.rows
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


def _faddeev_leverrier(m: IntMatrix) -> tuple[list[int], IntMatrix]:
    """Charpoly coefficients (ascending) and the adjugate, both exact.

    The scalar divisions in the recursion are exact for integer input.  With
    charpoly = X^n + c_1 X^(n-1) + ... + c_n the adjugate is
    (-1)^(n+1) * (M^(n-1) + c_1 M^(n-2) + ... + c_(n-1) I).
    """
    n = m.rows
    coeffs_desc = [1]
    mk = m
    horner = IntMatrix.identity(n)  # accumulates M^(k-1) + c_1 M^(k-2) + ...
    for k in range(1, n + 1):
        ck = -mk.trace()
        assert ck % k == 0
        ck //= k
        coeffs_desc.append(ck)
        if k < n:
            horner = horner * m + IntMatrix.identity(n).scale(ck)
            mk = m * (mk + IntMatrix.identity(n).scale(ck))
    if n == 1:
        adj = IntMatrix.identity(1)
    else:
        adj = horner if n % 2 == 1 else -horner
    return list(reversed(coeffs_desc)), adj


def charpoly(m: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial, exact integer coefficients."""
    if not m.is_square():
        raise DimensionMismatch("charpoly of a non-square matrix")
    coeffs_asc, _ = _faddeev_leverrier(m)
    return IntPoly(tuple(coeffs_asc))


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate matrix: M * adjugate(M) = det(M) * identity, exactly."""
    if not m.is_square():
        raise DimensionMismatch("adjugate of a non-square matrix")
    if m.rows == 1:
        return IntMatrix.identity(1)
    coeffs_asc, adj = _faddeev_leverrier(m)
    return adj


def minpoly(m: IntMatrix) -> IntPoly:
    """Monic minimal polynomial of an integer matrix (integral by Gauss)."""
    if not m.is_square():
        raise DimensionMismatch("minpoly of a non-square matrix")
    n = m.rows
    powers = [IntMatrix.identity(n)]
    for d in range(1, n + 1):
        powers.append(powers[-1] * m)
        # solve sum_i c_i vec(M^i) = vec(M^d) over Q
        cols = [
            [Fraction(powers[i][r, c]) for i in range(d)]
            for r in range(n)
            for c in range(n)
        ]
        rhs = [Fraction(powers[d][r, c]) for r in range(n) for c in range(n)]
        sol = _solve_rational(cols, rhs)
        if sol is not None:
            coeffs = [-x for x in sol] + [Fraction(1)]
            assert all(x.denominator == 1 for x in coeffs)
            return IntPoly(tuple(int(x) for x in coeffs))
    raise AssertionError("Cayley-Hamilton guarantees degree <= n")


def _solve_rational(rows_of_cols, rhs):
    """Solve A x = b where A is given as list of rows over Fraction; None if none."""
    n_rows = len(rows_of_cols)
    n_cols = len(rows_of_cols[0]) if n_rows else 0
    a = [list(row) + [rhs[i]] for i, row in enumerate(rows_of_cols)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if a[i][n_cols] != 0:
            return None
    sol = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = a[i][n_cols]
    return sol


# ---------------------------------------------------------------------------
# kernels over Q and F_p


def kernel(m) -> list[tuple]:
    """Basis of the right null space of a matrix over Q or F_p.

    Accepts an FpMatrix (kernel over F_p), an IntMatrix, or a nested sequence
    of Fractions/ints (kernel over Q).
    """
    if isinstance(m, FpMatrix):
        return kernel_fp([list(r) for r in m.entries], m.modulus)
    if isinstance(m, IntMatrix):
        rows = [[Fraction(x) for x in r] for r in m.entries]
    else:
        rows = [[Fraction(x) for x in r] for r in m]
    return kernel_q(rows)


def kernel_q(rows: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    n_rows = len(rows)
    n_cols = len(rows[0])
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(tuple(v))
    return basis


def kernel_fp(rows: list[list[int]], p: int) -> list[tuple[int, ...]]:
    n_rows = len(rows)
    n_cols = len(rows[0])
    a = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] % p != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] % p != 0:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-a[i][fc]) % p
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# polynomial factorization (backed by sympy's Zassenhaus / finite-field code)


def factor_over_prime_field(coeffs: tuple[int, ...], p: int) -> list[tuple[tuple[int, ...], int]]:
    """Irreducible factors over F_p with multiplicity.

    Input and output polynomials use ascending coefficients reduced mod p.
    The leading-coefficient unit is distributed into the first factor's
    output tuple's scale being... (it is returned separately: see below).
    Returns (factors) whose product times the returned unit equals the input;
    since our callers pass monic polynomials the unit is always 1 and is not
    returned.
    """
    asc = [c % p for c in coeffs]
    while len(asc) > 1 and asc[-1] == 0:
        asc.pop()
    if asc == [0]:
        raise ValueError("zero polynomial")
    desc = list(reversed(asc))
    lc, factors = gf_factor([ZZ(c) for c in desc], p, ZZ)
    out = []
    for f_desc, mult in factors:
        f_asc = tuple(int(c) % p for c in reversed(f_desc))
        out.append((f_asc, int(mult)))
    if int(lc) % p != 1:
        # fold the unit into a degree-0 factor so the product is exact
        out.insert(0, ((int(lc) % p,), 1))
    return out


def factor_over_integers(f: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Factor into content and Z-irreducible factors with multiplicity.

    Returns (content, factors) with content * prod(g^e) == f exactly.
    """
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(f.coeffs))
    content, factors = sympy.Poly(expr, x, domain="ZZ").factor_list()
    out = []
    for poly, mult in factors:
        cs = poly.all_coeffs()  # descending
        out.append((IntPoly(tuple(int(c) for c in reversed(cs))), int(mult)))
    return int(content), out


def poly_kth_root(f: IntPoly, k: int) -> IntPoly:
    """Monic g with g^k == f, via unique factorization; NotAPower otherwise."""
    if k < 1:
        raise ValueError("k must be positive")
    if not f.is_monic():
        raise ValueError("poly_kth_root expects a monic polynomial")
    if f.degree % k != 0:
        raise NotAPower(f"degree {f.degree} not divisible by {k}")
    if k == 1:
        return f
    content, factors = factor_over_integers(f)
    if content != 1 or any(mult % k != 0 for _, mult in factors):
        raise NotAPower("polynomial is not a perfect k-th power")
    g = IntPoly((1,))
    for poly, mult in factors:
        g = g * poly.pow(mult // k)
    return g


# ---------------------------------------------------------------------------
# saturation


def saturate(vectors) -> IntMatrix:
    """Integer basis of (Q-span of the input vectors) intersected with Z^n.

    Input vectors may have Fraction or int entries; rows of the result form a
    Z-basis of the saturated lattice, HNF-normalized per subspace dimension.
    """
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    n = len(vecs[0])
    # null space of the span: columns u with V u = 0
    null = kernel_q([list(v) for v in vecs])
    if not null:
        return IntMatrix.identity(n)
    # clear denominators columnwise; N has null vectors as columns
    cleared = []
    for u in null:
        den = 1
        for x in u:
            den = den * x.denominator // _gcd(den, x.denominator)
        cleared.append(tuple(int(x * den) for x in u))
    ncols = IntMatrix.from_rows(list(zip(*cleared)))  # n x q
    rows = integer_row_kernel(ncols)
    # normalize the basis: row echelon + above-diagonal reduction on the
    # pivot columns for a deterministic representative
    basis = _reduce_rect_basis([list(r) for r in rows])
    return IntMatrix.from_rows(basis)


def _gcd(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def _reduce_rect_basis(rows: list[list[int]]) -> list[list[int]]:
    """Deterministic HNF-style form for a rectangular full-row-rank basis."""
    mat = IntMatrix.from_rows(rows)
    h, _ = row_echelon_transform(mat)
    h = [r for r in h if any(x != 0 for x in r)]
    # reduce above pivots
    pivots = []
    for r in h:
        pivots.append(next(j for j, x in enumerate(r) if x != 0))
    for idx in range(len(h)):
        for lower in range(idx + 1, len(h)):
            pj = pivots[lower]
            q = h[idx][pj] // h[lower][pj]
            if q:
                h[idx] = [a - q * b for a, b in zip(h[idx], h[lower])]
    return h


# ---------------------------------------------------------------------------
# Smith normal form


def snf(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_n of a nonsingular square matrix."""
    if not m.is_square():
        raise DimensionMismatch("snf of a non-square matrix")
    if det(m) == 0:
        raise SingularMatrix("matrix is singular")
    a = [list(r) for r in m.entries]
    n = m.rows
    diag = []
    for s in range(n):
        while True:
            # move the least nonzero entry of the trailing block to (s, s)
            best = None
            for i in range(s, n):
                for j in range(s, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            bi, bj = best
            if bi != s:
                a[s], a[bi] = a[bi], a[s]
            if bj != s:
                for row in a:
                    row[s], row[bj] = row[bj], row[s]
            if a[s][s] < 0:
                a[s] = [-x for x in a[s]]
            # clear the edging
            dirty = False
            for i in range(s + 1, n):
                if a[i][s] != 0:
                    q = a[i][s] // a[s][s]
                    a[i] = [x - q * y for x, y in zip(a[i], a[s])]
                    if a[i][s] != 0:
                        dirty = True
            for j in range(s + 1, n):
                if a[s][j] != 0:
                    q = a[s][j] // a[s][s]
                    for row in a:
                        row[j] -= q * row[s]
                    if a[s][j] != 0:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility into the trailing block
            offender = None
            for i in range(s + 1, n):
                for j in range(s + 1, n):
                    if a[i][j] % a[s][s] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[s] = [x + y for x, y in zip(a[s], a[offender])]
        diag.append(a[s][s])
    return tuple(diag)
