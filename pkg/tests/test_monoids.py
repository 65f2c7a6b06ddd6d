"""Pointed monoids, abelian group data, homs, smash products, membership."""

import pytest

from f1kit.errors import (
    InfiniteHomSet,
    MembershipUndecidedWithinBound,
    MixedTorsionSmash,
    ShapeMismatch,
)
from f1kit.linalg import Mat
from f1kit.monoids import (
    AFFINE,
    GROUP_WITH_ZERO,
    FgAbelianGroup,
    GroupHom,
    PointedMonoid,
    compose_hom,
    hom_count,
    member,
    monoid_from_json,
    monoid_to_json,
    smash_product,
    units_of,
    validate_hom,
)


def test_group_invariant_factors():
    g = FgAbelianGroup.from_orders([2, 4, 3])
    # Z/2 x Z/4 x Z/3 = Z/2 x Z/12 in invariant factor form
    assert g.torsion == (2, 12)
    assert g.order() == 24
    assert FgAbelianGroup.from_orders([1, 1]).is_trivial()
    assert FgAbelianGroup.free(3).rank == 3
    with pytest.raises(ShapeMismatch):
        FgAbelianGroup(0, (4, 2))  # not a divisibility chain
    with pytest.raises(InfiniteHomSet):
        FgAbelianGroup.free(1).order()


def test_hom_count_exact():
    z2 = FgAbelianGroup.from_orders([2])
    z4 = FgAbelianGroup.from_orders([4])
    z6 = FgAbelianGroup.from_orders([6])
    assert hom_count(z2, z4) == 2
    assert hom_count(z4, z2) == 2
    assert hom_count(z6, z6) == 6
    assert hom_count(FgAbelianGroup.free(2), z2) == 4
    assert hom_count(FgAbelianGroup.trivial(), z4) == 1
    with pytest.raises(InfiniteHomSet):
        hom_count(FgAbelianGroup.free(1), FgAbelianGroup.free(1))


def test_hom_validation_kills_torsion():
    z2 = FgAbelianGroup.from_orders([2])
    z = FgAbelianGroup.free(1)
    # the generator of Z/2 cannot map to 1 in Z
    bad = GroupHom(z2, z, Mat.from_rows(1, 1, [[1]]), Mat.zeros(0, 1))
    assert not validate_hom(bad).ok
    good = GroupHom(z2, z, Mat.zeros(1, 1), Mat.zeros(0, 1))
    assert validate_hom(good).ok
    # Z/2 -> Z/4 must land in the order-2 subgroup: x -> 2x works
    ok = GroupHom(z2, FgAbelianGroup.from_orders([4]), Mat.zeros(0, 1),
                  Mat.from_rows(1, 1, [[2]]))
    assert validate_hom(ok).ok
    odd = GroupHom(z2, FgAbelianGroup.from_orders([4]), Mat.zeros(0, 1),
                   Mat.from_rows(1, 1, [[1]]))
    assert not validate_hom(odd).ok


def test_hom_composition():
    a = FgAbelianGroup.free(2)
    b = FgAbelianGroup.free(3)
    c = FgAbelianGroup.free(1)
    f = GroupHom.on_free(a, b, Mat.from_rows(3, 2, [[1, 0], [0, 1], [1, 1]]))
    g = GroupHom.on_free(b, c, Mat.from_rows(1, 3, [[1, 1, 1]]))
    gf = compose_hom(g, f)
    assert gf.free_matrix == Mat.from_rows(1, 2, [[2, 2]])
    assert validate_hom(gf).ok
    i = GroupHom.identity(a)
    assert compose_hom(f, i).free_matrix == f.free_matrix


def test_affine_monoid_constructors():
    orthant = PointedMonoid.orthant(2)
    assert orthant.kind == AFFINE and orthant.generator_count() == 2
    torus = PointedMonoid.torus(2)
    assert torus.kind == GROUP_WITH_ZERO and torus.group == FgAbelianGroup.free(2)
    gwz = PointedMonoid.group_with_zero(FgAbelianGroup.from_orders([3]))
    assert gwz.kind == GROUP_WITH_ZERO
    with pytest.raises(ShapeMismatch):
        PointedMonoid.affine(2, [[1, 0, 0]])


def test_units_of_affine_monoids():
    # generators 3 and -2 of Z: everything is invertible
    m = PointedMonoid.affine(1, [[3], [-2]])
    assert units_of(m).rank == 1
    # N^2 has trivial units
    assert units_of(PointedMonoid.orthant(2)).is_trivial()
    # mixed: x invertible, y not
    mixed = PointedMonoid.affine(2, [[1, 0], [-1, 0], [0, 1]])
    assert units_of(mixed).rank == 1


def test_membership_decisions_and_bound():
    assert member(PointedMonoid.orthant(2), (5, 0))
    assert not member(PointedMonoid.orthant(2), (0, -1))
    # numerical monoid <2, 3>: 1 is not a member, 5 = 2 + 3 is
    numeric = PointedMonoid.affine(1, [[2], [3]])
    assert member(numeric, (5,))
    assert not member(numeric, (1,))
    # 2Z inside Z: the question "is 1 in <2, -2>" has a feasible rational
    # relaxation but no bounded integer witness, and must say so
    m = PointedMonoid.affine(1, [[2], [-2]])
    with pytest.raises(MembershipUndecidedWithinBound):
        member(m, (1,))


def test_smash_product_affine():
    a = PointedMonoid.orthant(1)
    b = PointedMonoid.orthant(2)
    s = smash_product(a, b)
    assert s.kind == AFFINE
    assert s.ambient_dim == 3
    assert s.generator_count() == 3
    # smashing with the trivial monoid changes nothing
    triv = PointedMonoid.group_with_zero(FgAbelianGroup.trivial())
    assert smash_product(a, triv).generators == a.generators


def test_smash_product_groups_and_mixed():
    g1 = PointedMonoid.group_with_zero(FgAbelianGroup.free(1))
    g2 = PointedMonoid.group_with_zero(FgAbelianGroup.free(2))
    s = smash_product(g1, g2)
    assert s.kind == GROUP_WITH_ZERO and s.group.rank == 3
    # a free group smashed with an affine monoid embeds as a torus block
    mixed = smash_product(g1, PointedMonoid.orthant(1))
    assert mixed.kind == AFFINE and mixed.ambient_dim == 2
    torsion = PointedMonoid.group_with_zero(FgAbelianGroup.from_orders([2]))
    with pytest.raises(MixedTorsionSmash):
        smash_product(torsion, PointedMonoid.orthant(1))


def test_monoid_json_round_trip():
    for m in (PointedMonoid.orthant(2),
              PointedMonoid.affine(2, [[1, 0], [1, 1], [0, 2]]),
              PointedMonoid.group_with_zero(FgAbelianGroup(1, (2,)))):
        again = monoid_from_json(monoid_to_json(m))
        assert again == m
