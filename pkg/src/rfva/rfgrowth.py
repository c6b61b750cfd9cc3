"""Divisibility functions, RF profiles, and the lower-bound certificate.

D(v) is the minimal index of a family lattice omitting v; RF(r) is its
maximum over the punctured l1-ball of radius r (the word metric on Z^m with
standard generators, a free choice up to equivalence).  exponent_fit is a
diagnostic only: asymptotic equivalence cannot be decided from finite data.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np
import sympy

from .errors import (
    BudgetExceeded,
    InsufficientData,
    NotIrreducible,
    SearchBoundExceeded,
    ZeroVector,
)
from .exactalg import IntMatrix, det
from .grouprep import Rep
from .lattice import FamilySpec, enumerate_family
from .repdecomp import (
    DEFAULT_SEED,
    commutant_basis,
    commutant_certificate,
    exponent_k,
    q_split,
)

DEFAULT_INDEX_BUDGET = 10_000


@dataclass(frozen=True)
class RFProfile:
    """RF(r) samples with the maximizing vector and its divisibility per r."""

    spec: FamilySpec
    radii: tuple[int, ...]
    values: tuple[int, ...]
    witnesses: tuple[tuple[tuple[int, ...], int], ...]  # (vector, D(vector))
    partial: bool = False


@dataclass(frozen=True)
class LowerBoundReport:
    """Per-s verdicts for D_Com(v_s) >= s^k on a Q-irreducible rep."""

    k: int
    s_values: tuple[int, ...]
    vectors: tuple[tuple[int, ...], ...]
    arithmetic_ok: tuple[bool, ...]  # v_s in x*Z^m for every x <= s
    enumeration_ok: tuple[bool, ...]  # enumerated Com lattices omitting v_s have index >= s^k
    certificates_passed: int
    certificates_total: int


def _scalar_upper_bound(v):
    """Index of the smallest scalar lattice q*Z^m omitting v (always valid)."""
    g = 0
    for x in v:
        g = math.gcd(g, x)
    q = 2
    while g % q == 0:
        q += 1
    return q ** len(v)


def divisibility(v, spec: FamilySpec, index_budget: int = DEFAULT_INDEX_BUDGET) -> int:
    """min{ index(N) : N in the family, v not in N }, early exit in index order."""
    v = tuple(int(x) for x in v)
    if all(x == 0 for x in v):
        raise ZeroVector("divisibility of the zero vector is infinite by convention")
    for lat in enumerate_family(spec, len(v), index_budget):
        if not lat.contains(v):
            return lat.index
    raise BudgetExceeded(
        f"no omitting lattice of index <= {index_budget}",
        upper_bound=_scalar_upper_bound(v),
    )


def _ball_shell(m, r):
    """Vectors of l1-norm exactly r, one per +-v pair (first nonzero > 0)."""

    def rec(i, remaining, prefix, started):
        if i == m - 1:
            if started:
                for s in (remaining, -remaining) if remaining else (0,):
                    yield tuple(prefix + [s])
            elif remaining > 0:
                yield tuple(prefix + [remaining])
            return
        lo = 0 if not started else -remaining
        for a in range(lo, remaining + 1):
            yield from rec(i + 1, remaining - abs(a), prefix + [a], started or a != 0)

    if r == 0:
        return
    yield from rec(0, r, [], False)


def rf_profile(
    spec: FamilySpec,
    m: int,
    r_max: int,
    index_budget: int = DEFAULT_INDEX_BUDGET,
    radii=None,
) -> RFProfile:
    """Exact RF over l1-balls, using D(v) = D(-v) to halve the scan.

    On BudgetExceeded the profile computed so far is returned with
    partial=True.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    sample_radii = tuple(radii) if radii is not None else tuple(range(1, r_max + 1))
    out_r, out_v, out_w = [], [], []
    best = 0
    best_witness = None
    partial = False
    r_done = 0
    for r in sorted(sample_radii):
        try:
            for shell_r in range(r_done + 1, r + 1):
                for vec in _ball_shell(m, shell_r):
                    d = divisibility(vec, spec, index_budget)
                    if d > best:
                        best = d
                        best_witness = (vec, d)
            r_done = r
        except BudgetExceeded:
            partial = True
            break
        out_r.append(r)
        out_v.append(best)
        out_w.append(best_witness)
    return RFProfile(
        spec=spec,
        radii=tuple(out_r),
        values=tuple(out_v),
        witnesses=tuple(out_w),
        partial=partial,
    )


def exponent_fit(profile: RFProfile):
    """Diagnostic least-squares slope of log RF(r) against log log r.

    Requires at least 5 usable points spanning a factor of 10 in r.  Returns
    (k_hat, residual); no asymptotic claim is implied.
    """
    pts = [
        (r, v)
        for r, v in zip(profile.radii, profile.values)
        if r >= 3 and v >= 1
    ]
    if len(pts) < 5 or pts[-1][0] < 10 * pts[0][0]:
        raise InsufficientData(
            "need >= 5 points with radii spanning a factor of 10"
        )
    xs = np.log(np.log([float(r) for r, _ in pts]))
    ys = np.log([float(v) for _, v in pts])
    a = np.vstack([xs, np.ones_like(xs)]).T
    sol, res, _, _ = np.linalg.lstsq(a, ys, rcond=None)
    residual = float(res[0]) if len(res) else 0.0
    return float(sol[0]), residual


def lower_bound_certificate(
    rep: Rep,
    s_max: int,
    samples: int = 200,
    seed: int = DEFAULT_SEED,
    coefficient_box: int = 2,
    index_budget: int = DEFAULT_INDEX_BUDGET,
) -> LowerBoundReport:
    """Finite verification of D_Com(v_s) >= s^k for v_s = lcm(1..s) e_1.

    Three independent checks: lcm arithmetic (v_s lies in x Z^m for x <= s),
    sampled commutant certificates (det B = x^k and x Z^m inside Im B), and
    the box-enumerated Com family (every enumerated lattice omitting v_s has
    index >= s^k).  The last is over the enumerated family only.
    """
    if not q_split(rep, seed=seed).irreducible:
        raise NotIrreducible("the lower bound needs a Q-irreducible representation")
    k = exponent_k(rep, seed=seed)
    m = rep.degree
    basis = commutant_basis(rep).matrices
    rng = random.Random(seed)
    passed = 0
    total = 0
    while total < samples:
        coeffs = [rng.randint(-5, 5) for _ in basis]
        b = IntMatrix.from_rows([[0] * m] * m)
        for cf, e in zip(coeffs, basis):
            b = b + e.scale(cf)
        if det(b) == 0:
            continue
        total += 1
        cert = commutant_certificate(rep, b, seed=seed)
        if cert.passed and cert.det == cert.x**cert.k:
            passed += 1
    spec = FamilySpec("com", rep=rep, coefficient_box=coefficient_box)
    com_lattices = list(enumerate_family(spec, m, index_budget))
    s_values, vectors, arith, enum_ok = [], [], [], []
    for s in range(1, s_max + 1):
        l = math.lcm(*range(1, s + 1))
        v = tuple(l if i == 0 else 0 for i in range(m))
        s_values.append(s)
        vectors.append(v)
        arith.append(all(l % x == 0 for x in range(1, s + 1)))
        ok = all(lat.index >= s**k for lat in com_lattices if not lat.contains(v))
        enum_ok.append(ok)
    return LowerBoundReport(
        k=k,
        s_values=tuple(s_values),
        vectors=tuple(vectors),
        arithmetic_ok=tuple(arith),
        enumeration_ok=tuple(enum_ok),
        certificates_passed=passed,
        certificates_total=total,
    )


def smallest_valid_prime(m: int, n: int, bound: int = 10_000_000) -> int:
    """Least prime p with p = 1 mod n and p not dividing m."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if n == 1:
        p = 2
        while p <= bound:
            if m % p != 0:
                return p
            p = sympy.nextprime(p)
    else:
        p = 1 + n
        while p <= bound:
            if sympy.isprime(p) and m % p != 0:
                return p
            p += n
    raise SearchBoundExceeded(f"no prime = 1 mod {n} coprime to {m} below {bound}")


def chebyshev_psi(s: int) -> float:
    """log lcm(1..s), via the exact prime-power product, then one float log."""
    if s < 2:
        raise ValueError("chebyshev_psi needs s >= 2")
    lcm = 1
    for p in sympy.primerange(2, s + 1):
        pe = p
        while pe * p <= s:
            pe *= p
        lcm *= pe
    return math.log(lcm)
