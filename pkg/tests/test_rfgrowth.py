import math
import random

import pytest

from rfva.catalog import catalog_rep
from rfva.errors import (
    BudgetExceeded,
    InsufficientData,
    NotIrreducible,
    ZeroVector,
)
from rfva.lattice import FamilySpec, upper_bound_witness
from rfva.rfgrowth import (
    chebyshev_psi,
    divisibility,
    exponent_fit,
    lower_bound_certificate,
    rf_profile,
    smallest_valid_prime,
)

NU = FamilySpec("nu")


def test_divisibility_on_z_examples():
    assert divisibility((12,), NU) == 5
    assert divisibility((1,), NU) == 2
    assert divisibility((2,), NU) == 3


def test_divisibility_rejects_zero():
    with pytest.raises(ZeroVector):
        divisibility((0, 0), NU)


def test_divisibility_invariant_family():
    rot4 = catalog_rep("rot(4)")
    assert divisibility((1, 0), FamilySpec("inv", rot4)) == 2


def test_divisibility_budget_exceeded_carries_bound():
    # only the full lattice has index <= 1, and it contains everything
    with pytest.raises(BudgetExceeded) as exc:
        divisibility((1,), NU, index_budget=1)
    assert exc.value.upper_bound == 2


def test_divisibility_symmetry():
    rot4 = catalog_rep("rot(4)")
    spec = FamilySpec("inv", rot4)
    rng = random.Random(3)
    for _ in range(10):
        v = (rng.randint(-5, 5), rng.randint(-5, 5))
        if v == (0, 0):
            continue
        neg = tuple(-x for x in v)
        assert divisibility(v, spec) == divisibility(neg, spec)
        # the family is invariant, so the orbit has constant divisibility
        for g in rot4.elements:
            assert divisibility(g.apply(v), spec) == divisibility(v, spec)


def test_family_chain_monotonicity():
    # nu >= inv >= com as families, so the minima are ordered the other way
    q8 = catalog_rep("quaternion_paper")
    rng = random.Random(5)
    for _ in range(5):
        v = tuple(rng.randint(-4, 4) for _ in range(4))
        if all(x == 0 for x in v):
            continue
        d_nu = divisibility(v, NU, index_budget=40)
        d_inv = divisibility(v, FamilySpec("inv", q8), index_budget=40)
        d_com = divisibility(v, FamilySpec("com", q8), index_budget=200)
        assert d_nu <= d_inv <= d_com


def test_direct_sum_inequality():
    # block rep rot(4) + trivial(1): omitting one block omits the pair
    rep = catalog_rep("product(rot(4),trivial(1))")
    rot4 = catalog_rep("rot(4)")
    spec = FamilySpec("inv", rep)
    rng = random.Random(11)
    for _ in range(6):
        v1 = (rng.randint(-3, 3), rng.randint(-3, 3))
        v2 = (rng.randint(1, 5),)
        if v1 == (0, 0):
            continue
        d1 = divisibility(v1, FamilySpec("inv", rot4), index_budget=30)
        d2 = divisibility(v2, NU, index_budget=30)
        d = divisibility(v1 + v2, spec, index_budget=60)
        assert d <= min(d1, d2)


def test_surjection_inequality_via_witness():
    d4 = catalog_rep("d4_paper")
    rng = random.Random(13)
    for _ in range(10):
        v = tuple(rng.randint(-10, 10) for _ in range(3))
        if all(x == 0 for x in v):
            continue
        w = upper_bound_witness(d4, v)
        try:
            d = divisibility(v, FamilySpec("inv", d4), index_budget=30)
        except BudgetExceeded:
            continue
        assert d <= w.index


def test_rf_profile_on_z():
    prof = rf_profile(NU, 1, 6)
    assert prof.values == (2, 3, 3, 3, 3, 4)
    assert prof.values[-1] == 4
    assert not prof.partial


def test_rf_profile_monotone_and_witnessed():
    rot4 = catalog_rep("rot(4)")
    prof = rf_profile(FamilySpec("inv", rot4), 2, 4)
    assert all(a <= b for a, b in zip(prof.values, prof.values[1:]))
    for (vec, d), value in zip(prof.witnesses, prof.values):
        assert d == value
        assert divisibility(vec, prof.spec) == d


def test_rf_profile_rot4_radius_one():
    prof = rf_profile(FamilySpec("inv", catalog_rep("rot(4)")), 2, 1)
    assert prof.values == (2,)


def test_exponent_fit_constant_profile():
    prof = rf_profile(NU, 1, 40, radii=(3, 5, 10, 20, 30, 40))
    # replace by a constant to pin the zero-slope case
    from rfva.rfgrowth import RFProfile

    const = RFProfile(
        spec=NU,
        radii=prof.radii,
        values=(7,) * len(prof.radii),
        witnesses=prof.witnesses,
    )
    k_hat, _ = exponent_fit(const)
    assert abs(k_hat) < 1e-9


def test_exponent_fit_on_z():
    radii = (3, 10, 30, 100, 300, 1000, 3000)
    prof = rf_profile(NU, 1, 3000, radii=radii)
    k_hat, _ = exponent_fit(prof)
    assert 0.6 <= k_hat <= 1.5


def test_exponent_fit_insufficient_data():
    prof = rf_profile(NU, 1, 4)
    with pytest.raises(InsufficientData):
        exponent_fit(prof)


def test_lower_bound_certificate_quaternion():
    q8 = catalog_rep("quaternion_paper")
    report = lower_bound_certificate(q8, 4, samples=30)
    assert report.k == 2
    assert all(report.arithmetic_ok)
    assert all(report.enumeration_ok)
    assert report.certificates_passed == report.certificates_total == 30
    assert report.vectors[2] == (6, 0, 0, 0)  # lcm(1,2,3) e_1
    assert report.vectors[0] == (1, 0, 0, 0)  # s = 1 is vacuous


def test_lower_bound_needs_irreducible():
    with pytest.raises(NotIrreducible):
        lower_bound_certificate(catalog_rep("d4_paper"), 2, samples=5)


def test_smallest_valid_prime_examples():
    assert smallest_valid_prime(2520, 8) == 17
    assert smallest_valid_prime(1, 8) == 17
    assert smallest_valid_prime(17, 8) == 41
    assert smallest_valid_prime(6, 1) == 5


def test_chebyshev_psi_values():
    assert math.isclose(chebyshev_psi(10), math.log(2520), rel_tol=1e-12)
    assert math.isclose(chebyshev_psi(2), math.log(2), rel_tol=1e-12)
    assert math.isclose(chebyshev_psi(3), math.log(6), rel_tol=1e-12)
