"""Decomposition of integral representations and the growth exponent k.

Three mutually cross-checking routes to the exponent live here:

* splitting the reduction mod p for primes p = 1 (mod |H|), where the prime
  field is a splitting field, giving k as the maximal constituent dimension;
* the character-table route (inner products against supplied irreducible
  characters);
* the commutant-matrix certificate for Q-irreducible representations, which
  checks det B = x^k together with x*Z^m inside Im B for commuting B.

Rational splitting is randomized (seeded); Q-irreducibility is certified by
a deterministic sweep over small commutant combinations followed by a run of
consecutive random draws whose minimal polynomials are all irreducible.  The
failure mode is a clean InconclusiveSplit, never a silently wrong split.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .errors import (
    BadPrime,
    CertificateFailed,
    InconclusiveSplit,
    InconsistentSplit,
    LengthMismatch,
    NotAPower,
    NotCommuting,
    NotInvariant,
    NotIrreducible,
    NotOrthonormal,
    PrimeSearchFailed,
    RfvaError,
    SingularMatrix,
    UnresolvedClassWord,
)
from .exactalg import (
    FpMatrix,
    IntMatrix,
    IntPoly,
    adjugate,
    charpoly,
    det,
    factor_over_integers,
    factor_over_prime_field,
    hnf,
    kernel_fp,
    kernel_q,
    poly_kth_root,
    row_echelon_transform,
    saturate,
)
from .grouprep import (
    ClassFunction,
    Rep,
    character_of_rep,
    close_group,
    conjugacy_classes,
)
from .grouprep import is_abelian_image as _group_is_abelian

DEFAULT_SEED = 0
CONSECUTIVE_IRREDUCIBLE = 20
SPLIT_TRY_BUDGET = 200
DEFAULT_PRIME_BOUND = 200_000


# ---------------------------------------------------------------------------
# small exact linear algebra over a field (p=None means Q)


def _fval(x, p):
    return Fraction(x) if p is None else x % p


def _finv(x, p):
    return 1 / x if p is None else pow(x, p - 2, p)


def _mat_mul(a, b, p):
    bt = list(zip(*b))
    if p is None:
        return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def _mat_add(a, b, p):
    if p is None:
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    return [[(x + y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, c, p):
    if p is None:
        return [[c * x for x in row] for row in a]
    return [[(c * x) % p for x in row] for row in a]


def _identity(n, p):
    one = _fval(1, p)
    zero = _fval(0, p)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _solve_columns(a_rows, rhs_cols, p):
    """Solve A X = B columnwise; returns X columns or raises if inconsistent."""
    n = len(a_rows)
    d = len(a_rows[0])
    q = len(rhs_cols)
    aug = [
        [_fval(x, p) for x in a_rows[i]] + [_fval(rhs_cols[j][i], p) for j in range(q)]
        for i in range(n)
    ]
    pivots = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = _finv(aug[r][c], p)
        aug[r] = [x * inv if p is None else (x * inv) % p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                if p is None:
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
                else:
                    aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if any(aug[i][d + j] != 0 for j in range(q)):
            raise RfvaError("inconsistent linear system (vector not in subspace)")
    zero = _fval(0, p)
    sols = [[zero] * d for _ in range(q)]
    for i, c in enumerate(pivots):
        for j in range(q):
            sols[j][c] = aug[i][d + j]
    return sols


def _mat_inverse(a, p):
    n = len(a)
    cols = _solve_columns(a, list(zip(*_identity(n, p))), p)
    return [list(row) for row in zip(*cols)]


def _kernel(rows, p):
    if p is None:
        return kernel_q([[Fraction(x) for x in r] for r in rows])
    return kernel_fp([[x % p for x in r] for r in rows], p)


def _poly_eval_matrix(coeffs, m, p):
    """Evaluate an ascending-coefficient polynomial at a square field matrix."""
    n = len(m)
    acc = _mat_scale(_identity(n, p), _fval(coeffs[-1], p), p)
    for c in reversed(coeffs[:-1]):
        acc = _mat_add(_mat_mul(acc, m, p), _mat_scale(_identity(n, p), _fval(c, p), p), p)
    return acc


def _matrix_minpoly(m, p):
    """Monic minimal polynomial (ascending coefficients) of a field matrix."""
    n = len(m)
    powers = [_identity(n, p)]
    for d in range(1, n + 1):
        powers.append(_mat_mul(powers[-1], m, p))
        a_rows = [
            [powers[i][r][c] for i in range(d)] for r in range(n) for c in range(n)
        ]
        rhs = [powers[d][r][c] for r in range(n) for c in range(n)]
        try:
            (sol,) = _solve_columns(a_rows, [rhs], p)
        except RfvaError:
            continue
        coeffs = [-x if p is None else (-x) % p for x in sol] + [_fval(1, p)]
        return coeffs
    raise AssertionError("minimal polynomial must have degree <= n")


# ---------------------------------------------------------------------------
# commutant bases


@dataclass(frozen=True)
class CommutantBasis:
    """Basis of {B : B g = g B for all generators g} over Q or F_p.

    Over Q the basis consists of integer matrices forming a Z-basis of the
    commutant intersected with the integer matrices.
    """

    field: object  # "Q" or a prime p
    matrices: tuple


def _commutation_system(generators, m):
    """Rows of the linear system (B g - g B = 0) in the m^2 unknowns vec(B)."""
    rows = []
    for g in generators:
        for i in range(m):
            for j in range(m):
                row = [0] * (m * m)
                for k in range(m):
                    row[i * m + k] += g[k, j]
                    row[k * m + j] -= g[i, k]
                rows.append(row)
    return rows


def commutant_basis(rep: Rep, p: int | None = None) -> CommutantBasis:
    """Solve the commutation system for all generators over Q or F_p."""
    m = rep.degree
    rows = _commutation_system(rep.generators, m)
    if p is None:
        vecs = kernel_q([[Fraction(x) for x in r] for r in rows])
        if not vecs:
            raise AssertionError("commutant always contains the identity")
        zbasis = saturate(vecs)
        mats = tuple(
            IntMatrix.from_rows(
                [zbasis.row(i)[r * m : (r + 1) * m] for r in range(m)]
            )
            for i in range(zbasis.rows)
        )
        for b in mats:
            assert all(b * g == g * b for g in rep.generators)
        return CommutantBasis(field="Q", matrices=mats)
    vecs = kernel_fp([[x % p for x in r] for r in rows], p)
    mats = tuple(
        FpMatrix(p, tuple(tuple(v[r * m + c] for c in range(m)) for r in range(m)))
        for v in vecs
    )
    return CommutantBasis(field=p, matrices=mats)


# ---------------------------------------------------------------------------
# generic invariant-subspace splitting over a field


class _ModuleSplitter:
    """Splits F^m (p prime) or Q^m (p=None) into irreducible invariant parts.

    Subspaces are tracked by bases of ambient vectors.  Splitting elements are
    drawn from the commutant of the restricted action; proper invariant
    subspaces obtained from polynomial kernels are completed to direct-sum
    decompositions by averaging a projection over the (finite) group.
    """

    def __init__(self, rep: Rep, p: int | None, rng: random.Random):
        self.rep = rep
        self.p = p
        self.rng = rng
        self.m = rep.degree

    # -- subspace plumbing

    def restrict(self, mat, basis):
        """Action of an ambient matrix on a subspace, in basis coordinates."""
        p = self.p
        a_rows = [[_fval(v[i], p) for v in basis] for i in range(self.m)]
        rhs = [[_fval(x, p) for x in mat.apply(tuple(v))] for v in basis]
        cols = _solve_columns(a_rows, rhs, p)
        return [list(row) for row in zip(*cols)]  # column t = coords of image of basis[t]

    def restricted_generators(self, basis):
        gens = self.rep.generators
        if self.p is not None:
            gens = tuple(FpMatrix.from_int(g, self.p) for g in gens)
        return [self.restrict(g, basis) for g in gens]

    def restricted_elements(self, basis):
        els = self.rep.elements
        if self.p is not None:
            els = tuple(FpMatrix.from_int(e, self.p) for e in els)
        return [self.restrict(e, basis) for e in els]

    def restricted_commutant(self, r_gens, d):
        rows = []
        for g in r_gens:
            for i in range(d):
                for j in range(d):
                    row = [_fval(0, self.p)] * (d * d)
                    for k in range(d):
                        row[i * d + k] += g[k][j]
                        row[k * d + j] -= g[i][k]
                    if self.p is not None:
                        row = [x % self.p for x in row]
                    rows.append(row)
        vecs = _kernel(rows, self.p)
        return [
            [list(v[r * d : (r + 1) * d]) for r in range(d)] for v in vecs
        ]

    def coords_to_ambient(self, coord_vecs, basis):
        out = []
        for cv in coord_vecs:
            vec = [_fval(0, self.p)] * self.m
            for c, bvec in zip(cv, basis):
                for i in range(self.m):
                    vec[i] += _fval(c, self.p) * _fval(bvec[i], self.p)
            if self.p is not None:
                vec = [x % self.p for x in vec]
            out.append(tuple(vec))
        return out

    def invariant_complement(self, basis, w_coords):
        """Invariant complement of span(w_coords) inside span(basis)."""
        p = self.p
        d = len(basis)
        e = len(w_coords)
        # extend W to a coordinate basis, project onto W along the extension
        ext = [[_fval(x, p) for x in w] for w in w_coords]
        for j in range(d):
            if len(ext) == d:
                break
            unit = [_fval(1 if i == j else 0, p) for i in range(d)]
            if _rank(ext + [unit], p) == len(ext) + 1:
                ext.append(unit)
        t_mat = [list(col) for col in zip(*ext)]  # columns are the new basis
        e_proj = [[_fval(1 if (i == j and i < e) else 0, p) for j in range(d)] for i in range(d)]
        t_inv = _mat_inverse(t_mat, p)
        proj0 = _mat_mul(_mat_mul(t_mat, e_proj, p), t_inv, p)
        # average over the group
        r_elements = self.restricted_elements(basis)
        inv_index = _inverse_index(self.rep)
        acc = [[_fval(0, p)] * d for _ in range(d)]
        for idx, r_h in enumerate(r_elements):
            r_hinv = r_elements[inv_index[idx]]
            acc = _mat_add(acc, _mat_mul(_mat_mul(r_h, proj0, p), r_hinv, p), p)
        scale = (
            Fraction(1, self.rep.order)
            if p is None
            else pow(self.rep.order % p, p - 2, p)
        )
        pbar = _mat_scale(acc, scale, p)
        comp_coords = _kernel(pbar, p)
        assert len(comp_coords) == d - e
        return comp_coords

    # -- splitting element candidates

    def candidate_stream(self, commutant):
        """Deterministic sweep first, then seeded random small combinations."""
        c = len(commutant)
        d = len(commutant[0])
        for z in commutant:
            yield z, False
        for i in range(c):
            for j in range(i + 1, c):
                yield _mat_add(commutant[i], commutant[j], self.p), False
                yield _mat_add(
                    commutant[i], _mat_scale(commutant[j], _fval(-1, self.p), self.p), self.p
                ), False
        hi = (self.p - 1) if self.p is not None else 10
        lo = 0 if self.p is not None else -10
        while True:
            coeffs = [self.rng.randint(lo, hi) for _ in range(c)]
            z = [[_fval(0, self.p)] * d for _ in range(d)]
            for cf, e in zip(coeffs, commutant):
                z = _mat_add(z, _mat_scale(e, _fval(cf, self.p), self.p), self.p)
            yield z, True

    def clear_denominators(self, z):
        """Scale a rational matrix to an integer one (reducibility-preserving)."""
        if self.p is not None:
            return z
        denom = 1
        for row in z:
            for x in row:
                denom = denom * x.denominator // _gcd_int(denom, x.denominator)
        return [[x * denom for x in row] for row in z]

    def factor_minpoly(self, z):
        coeffs = _matrix_minpoly(z, self.p)
        if self.p is None:
            assert all(x.denominator == 1 for x in coeffs), "restricted minpoly is integral"
            content, factors = factor_over_integers(IntPoly(tuple(int(x) for x in coeffs)))
            assert content == 1
            return [(f.coeffs, mult) for f, mult in factors]
        return factor_over_prime_field(tuple(coeffs), self.p)

    def split(self, basis):
        """Recursive full decomposition; returns a list of bases."""
        d = len(basis)
        if d == 1:
            return [list(basis)]
        r_gens = self.restricted_generators(basis)
        commutant = self.restricted_commutant(r_gens, d)
        if len(commutant) == 1:
            return [list(basis)]
        consecutive = 0
        tries = 0
        for z, is_random in self.candidate_stream(commutant):
            tries += 1
            if tries > SPLIT_TRY_BUDGET:
                break
            z = self.clear_denominators(z)
            factors = self.factor_minpoly(z)
            nontrivial = len(factors) > 1 or factors[0][1] > 1
            if not nontrivial:
                if is_random and len(factors[0][0]) > 1:
                    consecutive += 1
                    if consecutive >= CONSECUTIVE_IRREDUCIBLE and self.p is None:
                        return [list(basis)]
                continue
            consecutive = 0
            f0 = factors[0][0]
            fz = _poly_eval_matrix(list(f0), z, self.p)
            w_coords = _kernel(fz, self.p)
            if not (0 < len(w_coords) < d):
                continue
            comp_coords = self.invariant_complement(basis, w_coords)
            w_basis = self.coords_to_ambient(w_coords, basis)
            c_basis = self.coords_to_ambient(comp_coords, basis)
            return self.split(w_basis) + self.split(c_basis)
        raise InconclusiveSplit(
            "could not split or certify irreducibility within the retry budget"
        )


def _rank(rows, p):
    if not rows:
        return 0
    # kernel of the transpose gives the row dependencies
    return len(rows) - len(_kernel([list(col) for col in zip(*rows)], p))


@lru_cache(maxsize=None)
def _inverse_index(rep: Rep) -> tuple[int, ...]:
    out = []
    for e in rep.elements:
        out.append(rep.element_index(rep.inverse(e)))
    return tuple(out)


# ---------------------------------------------------------------------------
# splitting mod p


@dataclass(frozen=True)
class ConstituentGroup:
    """An isotypic group of irreducible constituents of equal dimension."""

    dimension: int
    multiplicity: int
    bases: tuple  # one subspace basis per copy


@dataclass(frozen=True)
class Constituents:
    field: object  # "Q" or the source prime p
    groups: tuple[ConstituentGroup, ...]

    @property
    def dimensions(self) -> tuple[int, ...]:
        """Sorted multiset of constituent dimensions (with multiplicity)."""
        dims = []
        for g in self.groups:
            dims.extend([g.dimension] * g.multiplicity)
        return tuple(sorted(dims))

    @property
    def subspaces(self):
        out = []
        for g in self.groups:
            for b in g.bases:
                out.append((g.dimension, b))
        return out


def split_mod_p(rep: Rep, p: int, seed: int = DEFAULT_SEED) -> Constituents:
    """Full decomposition of F_p^m into irreducible invariant subspaces.

    Requires p = 1 (mod |H|), which makes F_p a splitting field and the module
    semisimple.  Isotypic grouping is by the character of the restricted
    action (ordinary characters suffice because p does not divide |H|).
    """
    if not sympy.isprime(p):
        raise BadPrime(f"{p} is not prime")
    if rep.order > 1 and p % rep.order != 1:
        raise BadPrime(f"{p} is not congruent to 1 mod |H| = {rep.order}")
    splitter = _ModuleSplitter(rep, p, random.Random(seed))
    full = [tuple(1 if i == j else 0 for i in range(rep.degree)) for j in range(rep.degree)]
    parts = splitter.split(full)
    # verify and group by character on conjugacy-class representatives
    classes = conjugacy_classes(rep)
    keyed = {}
    order = []
    for basis in parts:
        d = len(basis)
        traces = []
        for ci in classes.representatives:
            r = splitter.restrict(FpMatrix.from_int(rep.elements[ci], p), basis)
            traces.append(sum(r[i][i] for i in range(d)) % p)
        key = (d, tuple(traces))
        if key not in keyed:
            keyed[key] = []
            order.append(key)
        keyed[key].append(tuple(tuple(v) for v in basis))
    groups = tuple(
        ConstituentGroup(dimension=key[0], multiplicity=len(keyed[key]), bases=tuple(keyed[key]))
        for key in order
    )
    total = sum(g.dimension * g.multiplicity for g in groups)
    assert total == rep.degree
    return Constituents(field=p, groups=groups)


# ---------------------------------------------------------------------------
# the exponent


def _primes_one_mod(n: int, bound: int):
    if n == 1:
        candidate = 2
        while candidate <= bound:
            if sympy.isprime(candidate):
                yield candidate
            candidate = sympy.nextprime(candidate)
        return
    candidate = n + 1
    while candidate <= bound:
        if sympy.isprime(candidate):
            yield candidate
        candidate += n

@dataclass(frozen=True)
class ExponentReport:
    k: int
    primes: tuple[int, ...]
    dimensions: tuple[int, ...]


@lru_cache(maxsize=None)
def exponent_report(
    rep: Rep,
    seed: int = DEFAULT_SEED,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    n_primes: int = 3,
) -> ExponentReport:
    """k = max constituent dimension, cross-checked over several primes.

    Uses the n_primes smallest primes congruent to 1 mod |H|; the constituent
    dimension multisets must agree across all of them (InconsistentSplit if
    they do not, which would indicate a bug rather than bad input).
    """
    primes = []
    for p in _primes_one_mod(rep.order, prime_bound):
        primes.append(p)
        if len(primes) == n_primes:
            break
    if len(primes) < n_primes:
        raise PrimeSearchFailed(
            f"fewer than {n_primes} primes = 1 mod {rep.order} below {prime_bound}"
        )
    dims = None
    for p in primes:
        cons = split_mod_p(rep, p, seed=seed)
        if dims is None:
            dims = cons.dimensions
        elif cons.dimensions != dims:
            raise InconsistentSplit(
                f"dimensions {cons.dimensions} at p={p} disagree with {dims}"
            )
    return ExponentReport(k=max(dims), primes=tuple(primes), dimensions=dims)


def exponent_k(rep: Rep, seed: int = DEFAULT_SEED, **kwargs) -> int:
    return exponent_report(rep, seed=seed, **kwargs).k


# ---------------------------------------------------------------------------
# rational splitting


@dataclass(frozen=True)
class QComponent:
    """An H-invariant direct summand K_i of Q^m, with an integral structure.

    The rows of basis_numerator, divided by denominator, form a Z-basis of
    the projected lattice P_i(Z^m); rep gives the H-action in that basis.
    """

    dimension: int
    basis_numerator: IntMatrix
    denominator: int
    rep: Rep


@dataclass(frozen=True)
class QSplit:
    components: tuple[QComponent, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(c.dimension for c in self.components))

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1


@lru_cache(maxsize=None)
def q_split(rep: Rep, seed: int = DEFAULT_SEED) -> QSplit:
    """Decompose Q^m into Q-irreducible invariant subspaces.

    Randomized (seeded) but certified: reducible subspaces are split by
    kernels of factored commutant minimal polynomials, and irreducibility is
    declared either deterministically (commutant of dimension one) or after a
    run of consecutive random commutant draws with irreducible minimal
    polynomial.  Raises InconclusiveSplit if neither happens in budget.
    """
    m = rep.degree
    splitter = _ModuleSplitter(rep, None, random.Random(seed))
    full = [tuple(Fraction(1 if i == j else 0) for i in range(m)) for j in range(m)]
    parts = splitter.split(full)
    if len(parts) == 1:
        comp = QComponent(
            dimension=m, basis_numerator=IntMatrix.identity(m), denominator=1, rep=rep
        )
        return QSplit(components=(comp,))
    all_vecs = [v for part in parts for v in part]
    assert len(all_vecs) == m
    s_mat = [[Fraction(all_vecs[j][i]) for j in range(m)] for i in range(m)]
    s_inv = _mat_inverse(s_mat, None)
    components = []
    offset = 0
    for part in parts:
        d = len(part)
        e_mat = [
            [Fraction(1 if (i == j and offset <= i < offset + d) else 0) for j in range(m)]
            for i in range(m)
        ]
        offset += d
        proj = _mat_mul(_mat_mul(s_mat, e_mat, None), s_inv, None)
        # the projection commutes with the action, so P(Z^m) is H-invariant
        denom = 1
        for row in proj:
            for x in row:
                denom = denom * x.denominator // _gcd_int(denom, x.denominator)
        int_rows = [[int(proj[i][j] * denom) for i in range(m)] for j in range(m)]
        h, _ = row_echelon_transform(IntMatrix.from_rows(int_rows))
        num_rows = [r for r in h if any(x != 0 for x in r)]
        assert len(num_rows) == d
        basis_num = IntMatrix.from_rows(num_rows)
        basis_vecs = [
            tuple(Fraction(x, denom) for x in basis_num.row(t)) for t in range(d)
        ]
        a_rows = [[basis_vecs[s][i] for s in range(d)] for i in range(m)]
        child_gens = []
        for g in rep.generators:
            rhs = []
            for bv in basis_vecs:
                img = [
                    sum(Fraction(g[i, j]) * bv[j] for j in range(m)) for i in range(m)
                ]
                rhs.append(img)
            cols = _solve_columns(a_rows, rhs, None)
            assert all(c.denominator == 1 for col in cols for c in col)
            child_gens.append(
                IntMatrix.from_rows(
                    [[int(cols[t][s]) for t in range(d)] for s in range(d)]
                )
            )
        child = close_group(child_gens, element_bound=rep.order + 1)
        assert rep.order % child.order == 0
        components.append(
            QComponent(
                dimension=d, basis_numerator=basis_num, denominator=denom, rep=child
            )
        )
    return QSplit(components=tuple(components))


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# character route


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible character table with classes referenced by generator words."""

    class_words: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CharacterDecomposition:
    k: int
    multiplicities: tuple[int, ...]
    chi: tuple[int, ...]  # character of the representation, in table class order
    identity_column: int


def inner_product(a, b, class_sizes) -> Fraction:
    """Standard character inner product <a, b> = (1/|H|) sum |C| a(C) b(C)."""
    va = a.values if isinstance(a, ClassFunction) else tuple(a)
    vb = b.values if isinstance(b, ClassFunction) else tuple(b)
    sizes = tuple(class_sizes)
    if not (len(va) == len(vb) == len(sizes)):
        raise LengthMismatch("class functions and sizes must have equal length")
    order = sum(sizes)
    return Fraction(sum(s * x * y for s, x, y in zip(sizes, va, vb)), order)


def k_from_character_table(rep: Rep, table: CharacterTable) -> CharacterDecomposition:
    """Decompose the trace character against a supplied irreducible table.

    Table classes are given by generator words; these are resolved against the
    BFS closure and matched (bijectively, with size agreement) to the computed
    conjugacy classes.  The rows must be orthonormal for the table sizes.
    k is the largest degree (value at the identity class) with multiplicity
    at least one.
    """
    classes = conjugacy_classes(rep)
    n_cls = len(classes)
    if len(table.class_words) != n_cls or len(table.class_sizes) != n_cls:
        raise UnresolvedClassWord(
            f"table has {len(table.class_words)} classes, group has {n_cls}"
        )
    col_to_class = []
    for w in table.class_words:
        try:
            el = rep.resolve_word(w)
            idx = rep.element_index(el)
        except (IndexError, KeyError) as exc:
            raise UnresolvedClassWord(f"cannot resolve class word {w}") from exc
        cls = next(ci for ci, mem in enumerate(classes.members) if idx in mem)
        col_to_class.append(cls)
    if len(set(col_to_class)) != n_cls:
        raise UnresolvedClassWord("class words do not hit every conjugacy class")
    for col, cls in enumerate(col_to_class):
        if table.class_sizes[col] != classes.sizes[cls]:
            raise UnresolvedClassWord(
                f"class size mismatch at column {col}: "
                f"table says {table.class_sizes[col]}, group says {classes.sizes[cls]}"
            )
    for i, r1 in enumerate(table.rows):
        for j, r2 in enumerate(table.rows):
            expected = 1 if i == j else 0
            if inner_product(r1, r2, table.class_sizes) != expected:
                raise NotOrthonormal(f"rows {i} and {j} are not orthonormal")
    chi_all = character_of_rep(rep, classes)
    chi = tuple(chi_all.values[cls] for cls in col_to_class)
    mults = []
    for row in table.rows:
        ip = inner_product(chi, row, table.class_sizes)
        if ip.denominator != 1 or ip < 0:
            raise NotOrthonormal(
                "representation character does not decompose over this table"
            )
        mults.append(int(ip))
    identity_idx = rep.element_index(IntMatrix.identity(rep.degree))
    identity_cls = next(ci for ci, mem in enumerate(classes.members) if identity_idx in mem)
    identity_col = col_to_class.index(identity_cls)
    residual = [
        c - sum(m * row[j] for m, row in zip(mults, table.rows))
        for j, c in enumerate(chi)
    ]
    if any(residual):
        raise NotOrthonormal("table rows do not span the representation character")
    k = max(row[identity_col] for m, row in zip(mults, table.rows) if m > 0)
    return CharacterDecomposition(
        k=k, multiplicities=tuple(mults), chi=chi, identity_column=identity_col
    )


def is_abelian_image(rep: Rep) -> bool:
    return _group_is_abelian(rep)


# ---------------------------------------------------------------------------
# invariant lattices from matrices and the commutant certificate


def conjugate_rep(rep: Rep, b: IntMatrix) -> Rep:
    """The action on the sublattice Im(B), i.e. B^-1 phi(.) B, when invariant."""
    d = det(b)
    if d == 0:
        raise SingularMatrix("conjugating matrix must be nonsingular")
    lat = hnf(b.transpose())
    adj = adjugate(b)
    new_gens = []
    for g in rep.generators:
        gb = g * b
        for j in range(rep.degree):
            if not lat.contains(gb.col(j)):
                raise NotInvariant("Im(B) is not invariant under the action")
        num = adj * gb
        assert all(
            num[i, j] % d == 0 for i in range(rep.degree) for j in range(rep.degree)
        )
        new_gens.append(
            IntMatrix.from_rows(
                [[num[i, j] // d for j in range(rep.degree)] for i in range(rep.degree)]
            )
        )
    return close_group(new_gens, element_bound=rep.order + 1)


@dataclass(frozen=True)
class Certificate:
    """Verified data of the commutant-matrix lemma for a Q-irreducible rep.

    f is the (degree n) minimal polynomial of B, the charpoly is f^k, x is the
    field norm of the eigenvalue, and the recorded checks witness
    det B = x^k, B*M = -f(0)*I for M = sum_{i>=1} a_i B^{i-1},
    Adj(B) = -(x^k/f(0))*M, and x*Z^m inside Im(B).
    """

    k: int
    n: int
    f: IntPoly
    x: int
    det: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def commutant_certificate(rep: Rep, b: IntMatrix, seed: int = DEFAULT_SEED) -> Certificate:
    """Check the constructive lemma for a matrix commuting with the action."""
    if b.rows != rep.degree or not b.is_square():
        raise NotCommuting("matrix degree does not match the representation")
    if any(b * g != g * b for g in rep.generators):
        raise NotCommuting("matrix does not commute with all generators")
    d = det(b)
    if d == 0:
        raise SingularMatrix("certificate requires a nonsingular matrix")
    if not q_split(rep, seed=seed).irreducible:
        raise NotIrreducible("the representation is not irreducible over Q")
    k = exponent_k(rep, seed=seed)
    cp = charpoly(b)
    try:
        f = poly_kth_root(cp, k)
    except NotAPower as exc:
        raise CertificateFailed(f"charpoly is not a k-th power: {exc}") from exc
    n = f.degree
    a0 = f(0)
    x = a0 if n % 2 == 0 else -a0
    m_dim = rep.degree
    ident = IntMatrix.identity(m_dim)
    m_mat = IntMatrix.from_rows([[0] * m_dim] * m_dim)
    b_pow = ident
    for i in range(1, n + 1):
        m_mat = m_mat + b_pow.scale(f.coeffs[i])
        b_pow = b_pow * b
    checks = []
    checks.append(("det_is_x_pow_k", d == x**k))
    checks.append(("b_times_m", b * m_mat == ident.scale(-a0)))
    assert x**k % a0 == 0
    checks.append(("adjugate", adjugate(b) == m_mat.scale(-(x**k // a0))))
    lat = hnf(b.transpose())
    x_units = all(
        lat.contains(tuple(x if i == j else 0 for i in range(m_dim)))
        for j in range(m_dim)
    )
    checks.append(("x_lattice_in_image", x_units))
    cert = Certificate(k=k, n=n, f=f, x=x, det=d, checks=tuple(checks))
    if not cert.passed:
        failed = [name for name, ok in cert.checks if not ok]
        raise CertificateFailed(f"certificate checks failed: {failed}", cert)
    return cert
