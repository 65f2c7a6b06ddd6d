"""Prime spectra of pointed monoids: faces, ranks, specialization."""

from itertools import combinations

import pytest

from f1kit.counting import IntPolynomial
from f1kit.errors import TooManyGenerators
from f1kit.monoids import FgAbelianGroup, PointedMonoid, smash_product
from f1kit.spectrum import (
    disjoint_union,
    point_count_poly,
    rank_of_point,
    rank_subspace,
    space_report,
    spec,
)


def test_orthant_spectrum_is_the_subset_lattice():
    for d in range(5):
        s = spec(PointedMonoid.orthant(d))
        assert s.point_count() == 2 ** d
        faces = sorted(p.face for p in s.points)
        expected = sorted(
            sub for k in range(d + 1) for sub in combinations(range(d), k)
        )
        assert faces == expected
        # specialization is containment of faces
        by_id = {p.id: set(p.face) for p in s.points}
        pairs = {(i, j) for i in by_id for j in by_id if by_id[j] <= by_id[i]}
        assert set(s.specialization) == pairs


def test_orthant_point_ranks():
    s = spec(PointedMonoid.orthant(3))
    for p in s.points:
        assert rank_of_point(s, p.id) == len(p.face)
    assert s.min_rank() == 0


def test_torus_spectrum_single_point():
    s = spec(PointedMonoid.torus(2))
    assert s.point_count() == 1
    assert s.points[0].unit_group.rank == 2
    assert point_count_poly(PointedMonoid.torus(2)) == IntPolynomial.of(1, -2, 1)


def test_halfline_with_unit_direction():
    # generators e1, -e1, e2: faces are {} plus {e1, -e1} and everything
    m = PointedMonoid.affine(2, [(1, 0), (-1, 0), (0, 1)])
    s = spec(m)
    assert s.point_count() == 2
    ranks = sorted(p.unit_group.rank for p in s.points)
    assert ranks == [1, 2]
    assert point_count_poly(m) == IntPolynomial.of(0, -1, 1)  # (q-1) + (q-1)^2 = q^2 - q


def test_numerical_monoid_spectrum():
    # <2, 3> inside N: not saturated, still two faces ({} and all)
    m = PointedMonoid.affine(1, [(2,), (3,)])
    s = spec(m)
    assert s.point_count() == 2
    assert point_count_poly(m) == IntPolynomial.of(0, 1)  # 1 + (q - 1) = q


def test_point_count_poly_orthant_is_q_power():
    for d in range(5):
        assert point_count_poly(PointedMonoid.orthant(d)) == IntPolynomial.q_power(d)


def test_smash_spectrum_multiplies():
    a = PointedMonoid.orthant(1)
    b = PointedMonoid.affine(1, [(2,), (3,)])
    s = spec(smash_product(a, b))
    sa, sb = spec(a), spec(b)
    assert s.point_count() == sa.point_count() * sb.point_count()
    # rank is additive across the smash
    ranks = sorted(p.unit_group.rank for p in s.points)
    expect = sorted(pa.unit_group.rank + pb.unit_group.rank
                    for pa in sa.points for pb in sb.points)
    assert ranks == expect
    assert point_count_poly(smash_product(a, b)) == point_count_poly(a) * point_count_poly(b)


def test_group_with_zero_spectrum():
    g = PointedMonoid.group_with_zero(FgAbelianGroup.free(3))
    s = spec(g)
    assert s.point_count() == 1
    assert s.points[0].unit_group.rank == 3


def test_disjoint_union_offsets():
    s1 = spec(PointedMonoid.orthant(1))
    s2 = spec(PointedMonoid.torus(1))
    u = disjoint_union([s1, s2])
    assert u.point_count() == 3
    patches = sorted(p.patch for p in u.points)
    assert patches == [0, 0, 1]
    # no cross-patch specialization
    for i, j in u.specialization:
        assert u.points[i].patch == u.points[j].patch


def test_rank_subspace_idempotent():
    s = spec(PointedMonoid.orthant(2))
    r = rank_subspace(s)
    assert r.point_count() == 1
    assert rank_subspace(r).point_count() == r.point_count()


def test_spectrum_generator_cap():
    with pytest.raises(TooManyGenerators):
        spec(PointedMonoid.orthant(15))


def test_space_report_shape():
    rep = space_report(spec(PointedMonoid.orthant(1)))
    assert set(rep) == {"points", "specialization", "min_rank"}
    assert rep["min_rank"] == 0
    assert {p["rank"] for p in rep["points"]} == {0, 1}
