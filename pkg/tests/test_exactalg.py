import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rfva.errors import NotAPower
from rfva.exactalg import (
    IntMatrix,
    IntPoly,
    adjugate,
    charpoly,
    det,
    factor_over_integers,
    factor_over_prime_field,
    hnf,
    integer_row_kernel,
    kernel_fp,
    kernel_q,
    minpoly,
    poly_kth_root,
    row_echelon_transform,
    saturate,
    snf,
)

QUAT_B = IntMatrix.from_rows(
    [[1, -1, -2, 0], [1, 1, 0, 2], [2, 0, 1, -1], [0, -2, 1, 1]]
)


def square_matrices(n_max=4, bound=6):
    return st.integers(2, n_max).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    ).map(IntMatrix.from_rows)


def random_unimodular(rng, n, steps=12):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


# --- worked example values -------------------------------------------------


def test_quaternion_b_charpoly():
    assert charpoly(QUAT_B).coeffs == (36, -24, 16, -4, 1)


def test_quaternion_b_charpoly_is_square_of_f():
    f = IntPoly((6, -2, 1))
    assert f * f == charpoly(QUAT_B)


def test_quaternion_b_det_and_snf():
    assert det(QUAT_B) == 36
    assert snf(QUAT_B) == (1, 1, 6, 6)


def test_quaternion_b_adjugate():
    expected = QUAT_B.scale(-6) + IntMatrix.identity(4).scale(12)
    assert adjugate(QUAT_B) == expected


def test_quaternion_b_kth_root():
    assert poly_kth_root(charpoly(QUAT_B), 2) == IntPoly((6, -2, 1))


# --- properties ------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(square_matrices())
def test_adjugate_identity(m):
    assert m * adjugate(m) == IntMatrix.identity(m.rows).scale(det(m))


@settings(max_examples=60, deadline=None)
@given(square_matrices(n_max=3, bound=5))
def test_det_and_charpoly_against_sympy(m):
    sm = sympy.Matrix([list(r) for r in m.entries])
    assert det(m) == sm.det()
    cp = sympy.Poly(sm.charpoly().as_expr(), sympy.Symbol("lambda"))
    expected = tuple(int(c) for c in reversed(cp.all_coeffs()))
    assert charpoly(m).coeffs == expected


@settings(max_examples=40, deadline=None)
@given(square_matrices(n_max=3, bound=4))
def test_minpoly_annihilates_and_divides(m):
    f = minpoly(m)
    zero = IntMatrix.from_rows([[0] * m.rows] * m.rows)
    assert f.evaluate_matrix(m) == zero
    assert f.degree <= m.rows
    q, r = sympy.div(
        sympy.Poly(list(reversed(charpoly(m).coeffs)), sympy.Symbol("x")),
        sympy.Poly(list(reversed(f.coeffs)), sympy.Symbol("x")),
    )
    assert r.is_zero


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 3))
def test_hnf_canonical_under_unimodular(seed, n):
    rng = random.Random(seed)
    m = IntMatrix.from_rows(
        [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
    )
    if det(m) == 0:
        return
    u = random_unimodular(rng, n)
    assert hnf(u * m) == hnf(m)


def test_hnf_shape():
    lat = hnf(IntMatrix.from_rows([[2, 1], [0, 3]]))
    assert lat.index == 6
    b = lat.basis
    for i in range(2):
        assert b[i, i] > 0
        for j in range(i):
            assert b[i, j] == 0
        for j in range(i + 1, 2):
            assert 0 <= b[i, j] < b[j, j]


@settings(max_examples=50, deadline=None)
@given(square_matrices(n_max=3, bound=5))
def test_snf_divisibility_chain(m):
    d = det(m)
    if d == 0:
        return
    factors = snf(m)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0
    prod = 1
    for a in factors:
        prod *= a
    assert prod == abs(d)


def test_snf_coset_counting_oracle():
    # |Z^2 / L| computed by brute-force coset counting must match the index
    m = IntMatrix.from_rows([[2, 1], [0, 3]])
    factors = snf(m)
    index = factors[0] * factors[1]
    lat = hnf(m)
    box = 2 * index
    seen = {
        _coset_key(lat, (x, y)) for x in range(box) for y in range(box)
    }
    assert len(seen) == index


def _coset_key(lat, v):
    # canonical representative: reduce against the HNF rows
    v = list(v)
    for i in range(lat.dimension):
        d = lat.basis[i, i]
        c = v[i] // d
        row = lat.basis.row(i)
        v = [a - c * b for a, b in zip(v, row)]
    return tuple(v)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    st.integers(1, 3),
)
def test_factor_over_integers_roundtrip(c1, c2, extra):
    f = IntPoly((c1[0], c1[1], 1)) * IntPoly((c2[0], c2[1], 1))
    content, factors = factor_over_integers(f)
    rebuilt = IntPoly((content,))
    for poly, mult in factors:
        rebuilt = rebuilt * poly.pow(mult)
    assert rebuilt == f


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=3), st.integers(2, 3))
def test_poly_kth_root_roundtrip(tail, k):
    g = IntPoly(tuple(tail) + (1,))
    assert poly_kth_root(g.pow(k), k) == g


def test_poly_kth_root_rejects_non_powers():
    with pytest.raises(NotAPower):
        poly_kth_root(IntPoly((1, 2, 1)), 3)  # degree not divisible
    with pytest.raises(NotAPower):
        poly_kth_root(IntPoly((2, 3, 0, 0, 1)), 2)


def test_factor_over_prime_field():
    # X^2 + 1 splits mod 5 and is irreducible mod 7
    fs5 = factor_over_prime_field((1, 0, 1), 5)
    assert sorted(len(c) for c, _ in fs5) == [2, 2]
    fs7 = factor_over_prime_field((1, 0, 1), 7)
    assert len(fs7) == 1 and fs7[0][1] == 1


def test_kernels():
    vecs = kernel_q([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    assert len(vecs) == 1
    v = vecs[0]
    assert v[0] + 2 * v[1] == 0
    vp = kernel_fp([[1, 2], [2, 4]], 5)
    assert len(vp) == 1
    assert (vp[0][0] + 2 * vp[0][1]) % 5 == 0


def test_saturate_clears_index():
    # (2,0) and (0,2) span Q^2; saturation recovers Z^2
    basis = saturate([(Fraction(2), Fraction(0)), (Fraction(0), Fraction(2))])
    assert abs(det(basis)) == 1


def test_saturate_partial_span():
    basis = saturate([(Fraction(2), Fraction(4))])
    assert basis.rows == 1
    assert tuple(basis.row(0)) in ((1, 2), (-1, -2))


def test_integer_row_kernel_saturated():
    m = IntMatrix.from_rows([[2, 4], [1, 2]])
    ker = integer_row_kernel(m)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] * 2 + v[1] * 1 == 0 and v[0] * 4 + v[1] * 2 == 0
    from math import gcd

    assert gcd(v[0], v[1]) == 1


def test_row_echelon_transform_unimodular():
    m = IntMatrix.from_rows([[2, 4, 1], [4, 8, 3], [0, 0, 1]])
    h, u = row_echelon_transform(m)
    assert abs(det(IntMatrix.from_rows(u))) == 1
    assert IntMatrix.from_rows(u) * m == IntMatrix.from_rows(h)


def test_lattice_contains():
    lat = hnf(IntMatrix.from_rows([[2, 0], [0, 2]]))
    assert lat.contains((2, 4))
    assert not lat.contains((1, 0))
