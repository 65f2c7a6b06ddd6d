"""Group models: tables, representations, cocycles, axiom checking."""

import pytest

from f1kit.errors import (
    AxiomsFailed,
    CocycleInvalid,
    OutOfScale,
    ShapeMismatch,
    ThetaNotHomomorphism,
)
from f1kit.linalg import Mat
from f1kit.groups import (
    Cocycle,
    ExtensionLaw,
    FiniteGroupTable,
    GroupModel,
    ThetaRep,
    check_action,
    check_group_axioms,
    constant_group,
    extension_model,
    f1_points_group,
    inversion_weak_morphism,
    law_weak_morphism,
    require_group,
    self_action,
    sigma_check,
    tables_isomorphic_by,
    torus_group,
    unit_weak_morphism,
    z_rank_group,
    z_rank_projection_is_hom,
)
from f1kit.schemes import check_weak


def sl2_model() -> GroupModel:
    w = FiniteGroupTable.cyclic(2, ("e", "s"))
    theta = ThetaRep(w, 1, (Mat.identity(1), Mat.from_rows(1, 1, [[-1]])))
    cocycle = Cocycle(w, 1, (((1,), (1,)), ((1,), (-1,))))
    return extension_model(ExtensionLaw(theta, cocycle), {"e": 1, "s": 2})


def test_table_build_and_validation():
    t = FiniteGroupTable.cyclic(4)
    assert t.order() == 4
    assert t.mul(1, 3) == 0
    assert t.inv(1) == 3
    # non-closed multiplication is rejected
    with pytest.raises(AxiomsFailed):
        FiniteGroupTable.build((0, 1), lambda a, b: a + b)
    # non-associative magma is rejected
    with pytest.raises(AxiomsFailed):
        FiniteGroupTable.build(tuple(range(3)), lambda a, b: min(a * b + 1, 2) % 3
                               if (a, b) != (0, 0) else 0)


def test_table_product():
    t = FiniteGroupTable.cyclic(2).product(FiniteGroupTable.cyclic(3))
    assert t.order() == 6
    iso = {x: x for x in t.elements}
    assert tables_isomorphic_by(iso, t, t)
    bad = dict(iso)
    keys = list(bad)
    bad[keys[0]], bad[keys[1]] = bad[keys[1]], bad[keys[0]]
    assert not tables_isomorphic_by(bad, t, t)


def test_theta_validation():
    w = FiniteGroupTable.cyclic(2, ("e", "s"))
    with pytest.raises(ThetaNotHomomorphism):
        ThetaRep(w, 1, (Mat.identity(1), Mat.from_rows(1, 1, [[2]]))).validate()
    with pytest.raises(ThetaNotHomomorphism):
        # s * s = e but M_s^2 is not the identity matrix for M_s = [[1]] shifted
        ThetaRep(w, 2, (Mat.identity(2),
                        Mat.from_rows(2, 2, [[1, 1], [0, 1]]))).validate()
    good = ThetaRep(w, 1, (Mat.identity(1), Mat.from_rows(1, 1, [[-1]])))
    good.validate()


def test_cocycle_validation():
    w = FiniteGroupTable.cyclic(2, ("e", "s"))
    theta = ThetaRep.trivial(w, 1)
    # normalization failure: c(e, s) != 1
    bad = Cocycle(w, 1, (((1,), (-1,)), ((1,), (1,))))
    with pytest.raises(CocycleInvalid):
        bad.validate(theta)
    # the sign cocycle of the weak model satisfies the identity
    Cocycle(w, 1, (((1,), (1,)), ((1,), (-1,)))).validate(theta)


def test_constant_and_torus_models():
    c = constant_group(FiniteGroupTable.cyclic(3, ("0", "1", "2")))
    assert c.kind == "strong"
    assert check_group_axioms(c).ok
    assert f1_points_group(c).order() == 3
    t = torus_group(2)
    assert t.r == 2 and t.w.order() == 1
    assert check_group_axioms(t).ok
    require_group(t)


def test_extension_model_shape_guards():
    w = FiniteGroupTable.cyclic(2, ("e", "s"))
    law = ExtensionLaw(ThetaRep.trivial(w, 1), Cocycle.trivial(w, 1))
    with pytest.raises(ShapeMismatch):
        extension_model(law, {"e": 1})           # missing a component
    with pytest.raises(ShapeMismatch):
        extension_model(law, {"e": 0, "s": 1})   # cell below the torus rank


def test_weak_model_axioms():
    g = sl2_model()
    assert g.kind == "weak"
    rep = check_group_axioms(g)
    assert rep.ok
    assert f1_points_group(g).order() == 2


def test_weak_model_z_rank_group_is_cyclic_4():
    g = sl2_model()
    table = z_rank_group(g)
    assert table.order() == 4
    orders = []
    for i in range(4):
        power, k = i, 1
        while power != table.identity:
            power = table.mul(power, i)
            k += 1
        orders.append(k)
    assert sorted(orders) == [1, 2, 4, 4]
    # and it is isomorphic to Z/4 under a canonical generator map
    z4 = FiniteGroupTable.cyclic(4)
    gen = next(i for i, k in enumerate(orders) if k == 4)
    f = {}
    power = table.identity
    for n in range(4):
        f[table.elements[power]] = z4.elements[n]
        power = table.mul(power, gen)
    assert tables_isomorphic_by(f, table, z4)


def test_weak_model_sigma_fails_at_s_s():
    rep = sigma_check(sl2_model())
    assert not rep.ok
    assert rep.witness == {"pair": ["s", "s"], "cocycle": [-1]}
    assert "section-not-homomorphism" in rep.notes


def test_strong_model_sigma_splits():
    c = constant_group(FiniteGroupTable.cyclic(2))
    rep = sigma_check(c)
    assert rep.ok and "section-splits" in rep.notes


def test_z_rank_projection():
    assert z_rank_projection_is_hom(sl2_model()).ok
    assert z_rank_projection_is_hom(torus_group(1)).ok


def test_z_rank_scale_guard():
    with pytest.raises(OutOfScale):
        z_rank_group(torus_group(13))


def test_law_morphisms_check_weak():
    g = sl2_model()
    law = check_weak(law_weak_morphism(g))
    assert law.ok and "not-strong" in law.notes
    assert check_weak(unit_weak_morphism(g)).ok
    assert check_weak(inversion_weak_morphism(g)).ok
    c = constant_group(FiniteGroupTable.cyclic(2))
    law_c = check_weak(law_weak_morphism(c))
    assert law_c.ok and "strong" in law_c.notes


def test_self_action_satisfies_action_axioms():
    for g in (sl2_model(), torus_group(2),
              constant_group(FiniteGroupTable.cyclic(3))):
        rep = check_action(g, g.rank_scheme, self_action(g))
        assert rep.ok, rep.witness


def test_broken_law_is_caught():
    # a cocycle that breaks normalization cannot even be built into a law;
    # instead break associativity by corrupting theta on a product model
    w = FiniteGroupTable.cyclic(3, ("e", "a", "b"))
    mats = (Mat.identity(1), Mat.from_rows(1, 1, [[-1]]), Mat.identity(1))
    with pytest.raises(ThetaNotHomomorphism):
        extension_model(ExtensionLaw(ThetaRep(w, 1, mats), Cocycle.trivial(w, 1)),
                        {"e": 1, "a": 1, "b": 1})
