"""Integer polynomial calculus, q-analogs, and brute-force oracles."""

from fractions import Fraction

import pytest

from f1kit.counting import (
    IntPolynomial,
    brute_count,
    brute_count_gl,
    brute_count_monoid_homs,
    brute_count_subspaces,
    compare_counts,
    gauss_binomial,
    gauss_factorial,
    gauss_number,
    torification_poly,
    vanishing_order_and_limit,
)
from f1kit.errors import NonDivisible, NotPrime, OutOfScale, ZeroPolynomial
from f1kit.monoids import FgAbelianGroup, PointedMonoid
from f1kit.schemes import Cell, Torification


def test_polynomial_ring_operations():
    p = IntPolynomial.of(1, 2)        # 1 + 2q
    q = IntPolynomial.of(0, 0, 3)     # 3q^2
    assert (p + q).coeffs == (1, 2, 3)
    assert (p * q).coeffs == (0, 0, 3, 6)
    assert (p - p).is_zero()
    assert p(10) == 21
    assert (p ** 3) == p * p * p
    assert IntPolynomial.zero().coeffs == ()
    assert IntPolynomial.one()(5) == 1
    assert IntPolynomial.q_power(3)(2) == 8
    assert IntPolynomial.qminus1_power(2)(3) == 4


def test_polynomial_pretty():
    assert IntPolynomial.of(0, 1).pretty() == "q"
    assert IntPolynomial.of(1).pretty() == "1"
    assert IntPolynomial.zero().pretty() == "0"
    assert IntPolynomial.of(-1, 0, 1).pretty() == "q^2 - 1"


def test_exact_division():
    a = gauss_factorial(4)
    b = gauss_factorial(2) * gauss_factorial(2)
    assert a.divexact(b) == gauss_binomial(4, 2)
    with pytest.raises(NonDivisible):
        IntPolynomial.of(0, 0, 1).divexact(IntPolynomial.of(1, 1))


def test_qminus1_basis_round_trip():
    p = IntPolynomial.of(3, -1, 4, 1)
    basis = p.in_qminus1_basis()
    assert IntPolynomial.from_qminus1_basis(basis) == p
    # value at q=1 is the constant coefficient in the shifted basis
    assert basis[0] == p(1)


def test_gauss_numbers():
    assert gauss_number(3).coeffs == (1, 1, 1)
    assert gauss_number(1).coeffs == (1,)
    assert gauss_factorial(3)(2) == 1 * 3 * 7
    assert gauss_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert gauss_binomial(4, 2)(2) == 35
    assert gauss_binomial(4, 2)(3) == 130
    assert gauss_binomial(5, 0)(7) == 1
    assert gauss_binomial(5, 5)(7) == 1
    # symmetry
    for n in range(7):
        for k in range(n + 1):
            assert gauss_binomial(n, k) == gauss_binomial(n, n - k)


def test_vanishing_order_and_limit():
    res = vanishing_order_and_limit(IntPolynomial.of(0, -1, 1) * IntPolynomial.of(-2, 2))
    # (q^2 - q)(2q - 2) = 2 q (q-1)^2
    assert res.rho == 2 and res.limit == 2
    res = vanishing_order_and_limit(IntPolynomial.of(7))
    assert res.rho == 0 and res.limit == 7
    with pytest.raises(ZeroPolynomial):
        vanishing_order_and_limit(IntPolynomial.zero())


def test_torification_poly_families():
    t = Torification((Cell(0, "a", 2), Cell(1, "b")))
    # (q-1)^0 q^2 + (q-1)^1
    assert torification_poly(t) == IntPolynomial.q_power(2) + IntPolynomial.of(-1, 1)
    # a family cell equals its expanded subset tori
    fam = Torification((Cell(1, "f", 2),))
    flat = Torification((Cell(1, ("f", 0)), Cell(2, ("f", 1)), Cell(2, ("f", 2)),
                         Cell(3, ("f", 3))))
    assert torification_poly(fam) == torification_poly(flat)


def test_brute_subspaces():
    assert brute_count_subspaces(2, 4, 2) == 35
    assert brute_count_subspaces(2, 4, 3) == 130
    assert brute_count_subspaces(0, 3, 5) == 1
    assert brute_count_subspaces(3, 3, 5) == 1
    assert brute_count_subspaces(1, 3, 2) == 7
    with pytest.raises(NotPrime):
        brute_count_subspaces(1, 2, 4)


def test_brute_gl():
    assert brute_count_gl(1, 3) == 2
    assert brute_count_gl(2, 2) == 6
    assert brute_count_gl(2, 3) == 48
    assert brute_count_gl(2, 5) == 480


def test_brute_monoid_homs():
    # orthant: q^d choices
    assert brute_count_monoid_homs(PointedMonoid.orthant(2), 3) == 9
    # torus: (q-1)^r
    assert brute_count_monoid_homs(PointedMonoid.torus(2), 3) == 4
    # group with torsion: gcd factors appear
    z6 = PointedMonoid.group_with_zero(FgAbelianGroup.from_orders([6]))
    assert brute_count_monoid_homs(z6, 3) == 2   # gcd(6, 2) characters
    assert brute_count_monoid_homs(z6, 5) == 2   # gcd(6, 4)
    z4 = PointedMonoid.group_with_zero(FgAbelianGroup.from_orders([4]))
    assert brute_count_monoid_homs(z4, 5) == 4   # full character group
    # numerical monoid <2,3>: homs still q (0 and the units)
    m = PointedMonoid.affine(1, [(2,), (3,)])
    assert brute_count_monoid_homs(m, 2) == 2
    assert brute_count_monoid_homs(m, 3) == 3
    assert brute_count_monoid_homs(m, 5) == 5


def test_brute_dispatch_and_compare():
    assert brute_count("subspaces", {"k": 2, "n": 4}, 2) == 35
    assert brute_count("gl", {"n": 2}, 3) == 48
    rep = compare_counts(gauss_binomial(4, 2), "subspaces", {"k": 2, "n": 4}, [2, 3])
    assert rep["equal"] is True
    assert rep["per_q"]["2"]["brute"] == 35
    bad = compare_counts(gauss_binomial(4, 2) + IntPolynomial.one(),
                         "subspaces", {"k": 2, "n": 4}, [2])
    assert bad["equal"] is False


def test_oracle_scale_guards():
    with pytest.raises(NotPrime):
        brute_count_gl(2, 6)
    with pytest.raises(OutOfScale):
        brute_count_gl(4, 7)
