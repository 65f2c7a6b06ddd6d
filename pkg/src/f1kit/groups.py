"""Group objects on torified models: extensions of finite groups by tori.

A model is determined by a finite component group W, a rank r, an
integral representation theta of W on the rank-r torus, and a 2-cocycle
of signs.  The multiplication on components (s, w) is

    (s, w) * (s', w') = (s * theta_w(s') * c(w, w'), w w')

with unit (+1, e) and the inverse forced by the cocycle.  The scheme
side carries the signs; the monoid side sees only exponents.  Axioms are
checked diagrammatically: associativity, both unit laws and both inverse
laws, componentwise with exact matrix and sign algebra, on both sides.

Everything is exhaustively checkable at desk scale; the catalog stores
laws as (theta, cocycle) and materializes per-pair morphism data only
when a check asks for it.
"""

from dataclasses import dataclass

from .errors import (
    AxiomsFailed,
    CocycleInvalid,
    OutOfScale,
    ShapeMismatch,
    ThetaNotHomomorphism,
    scale_cap,
)
from .linalg import Mat, det
from .monoids import FgAbelianGroup, GroupHom
from .report import Report
from .schemes import (
    Cell,
    F1Scheme,
    MonomialMap,
    RankScheme,
    StrongMorphismRk,
    Torification,
    WeakMorphism,
    apply_exponent_to_signs,
    from_torification,
    mul_signs,
    point_scheme,
    product_scheme,
    rank_part,
)

FULL_ASSOC_LIMIT = 128
FULL_PAIR_LIMIT = 150


@dataclass(frozen=True)
class FiniteGroupTable:
    """Finite group as an explicit multiplication table over labels."""

    elements: tuple
    mult: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]

    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.mult[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def index(self, label) -> int:
        return self.elements.index(label)

    @staticmethod
    def build(elements, mul, validate: bool | None = None) -> "FiniteGroupTable":
        """Assemble a table from labels and a label-level product.

        Identity and inverses are located and always verified (O(n^2));
        associativity is verified exhaustively (O(n^3)) when n is at most
        FULL_ASSOC_LIMIT or validate=True forces it, and skipped only for
        large tables coming from constructions checked elsewhere.
        """
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise AxiomsFailed("duplicate element labels")
        n = len(elements)
        try:
            table = tuple(
                tuple(index[mul(a, b)] for b in elements) for a in elements
            )
        except KeyError as bad:
            raise AxiomsFailed(f"product leaves the element set: {bad.args[0]!r}")
        identity = None
        for i in range(n):
            if all(table[i][j] == j and table[j][i] == j for j in range(n)):
                identity = i
                break
        if identity is None:
            raise AxiomsFailed("no two-sided identity")
        inverses = []
        for i in range(n):
            j = next((j for j in range(n)
                      if table[i][j] == identity and table[j][i] == identity), None)
            if j is None:
                raise AxiomsFailed(f"element {elements[i]!r} has no inverse")
            inverses.append(j)
        do_assoc = validate if validate is not None else n <= FULL_ASSOC_LIMIT
        if do_assoc:
            for a in range(n):
                ra = table[a]
                for b in range(n):
                    ab = ra[b]
                    rb = table[b]
                    for c in range(n):
                        if table[ab][c] != ra[rb[c]]:
                            raise AxiomsFailed(
                                f"associativity fails at "
                                f"({elements[a]!r}, {elements[b]!r}, {elements[c]!r})"
                            )
        return FiniteGroupTable(elements, table, identity, tuple(inverses))

    @staticmethod
    def trivial(label="e") -> "FiniteGroupTable":
        return FiniteGroupTable((label,), ((0,),), 0, (0,))

    @staticmethod
    def cyclic(n: int, labels=None) -> "FiniteGroupTable":
        if labels is None:
            labels = tuple("e" if i == 0 else f"g{i}" if i > 1 else "g" for i in range(n))
        labels = tuple(labels)
        if len(labels) != n:
            raise ShapeMismatch("need one label per element")
        pos = {l: i for i, l in enumerate(labels)}
        return FiniteGroupTable.build(labels, lambda a, b: labels[(pos[a] + pos[b]) % n])

    def product(self, other: "FiniteGroupTable") -> "FiniteGroupTable":
        labels = tuple((a, b) for a in self.elements for b in other.elements)
        sa, sb = self, other

        def mul(x, y):
            return (sa.elements[sa.mul(sa.index(x[0]), sa.index(y[0]))],
                    sb.elements[sb.mul(sb.index(x[1]), sb.index(y[1]))])

        return FiniteGroupTable.build(labels, mul, validate=False if self.order() * other.order() > FULL_ASSOC_LIMIT else None)


def tables_isomorphic_by(f: dict, a: FiniteGroupTable, b: FiniteGroupTable) -> bool:
    """Does the label dictionary define an isomorphism a -> b?"""
    if len(f) != a.order() or a.order() != b.order():
        return False
    try:
        image = [b.index(f[x]) for x in a.elements]
    except (KeyError, ValueError):
        return False
    if len(set(image)) != len(image):
        return False
    for i in range(a.order()):
        for j in range(a.order()):
            if b.mul(image[i], image[j]) != image[a.mul(i, j)]:
                return False
    return True


@dataclass(frozen=True)
class ThetaRep:
    """Integral representation of W on Z^r by unimodular matrices."""

    w: FiniteGroupTable
    r: int
    matrices: tuple[Mat, ...]

    def __post_init__(self):
        if len(self.matrices) != self.w.order():
            raise ShapeMismatch("need one matrix per group element")
        for m in self.matrices:
            if m.rows != self.r or m.cols != self.r:
                raise ShapeMismatch(f"theta matrices must be {self.r}x{self.r}")

    def matrix(self, i: int) -> Mat:
        return self.matrices[i]

    def validate(self, force: bool = False) -> None:
        """Unimodularity, identity at e, and the homomorphism law.

        The pairwise homomorphism check costs |W|^2 matrix products; it
        runs when |W| <= FULL_PAIR_LIMIT or force=True.  Catalog builders
        that produce matrices from a permutation action verify the law at
        the permutation level instead (see reductive helpers).
        """
        for i, m in enumerate(self.matrices):
            if det(m) not in (1, -1):
                raise ThetaNotHomomorphism(
                    f"matrix for {self.w.elements[i]!r} is not invertible over Z"
                )
        if not self.matrices[self.w.identity].is_identity():
            raise ThetaNotHomomorphism("identity element must act by the identity matrix")
        n = self.w.order()
        if n > FULL_PAIR_LIMIT and not force:
            return
        for i in range(n):
            for j in range(n):
                if self.matrices[i] * self.matrices[j] != self.matrices[self.w.mul(i, j)]:
                    raise ThetaNotHomomorphism(
                        f"matrix({self.w.elements[i]!r}) * matrix({self.w.elements[j]!r}) "
                        f"!= matrix of the product"
                    )

    @staticmethod
    def trivial(w: FiniteGroupTable, r: int) -> "ThetaRep":
        return ThetaRep(w, r, tuple(Mat.identity(r) for _ in range(w.order())))


@dataclass(frozen=True)
class Cocycle:
    """Sign-valued 2-cochain on W x W, one +-1 vector of length r per pair."""

    w: FiniteGroupTable
    r: int
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        n = self.w.order()
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ShapeMismatch("cocycle table must be |W| x |W|")
        for row in self.table:
            for v in row:
                if len(v) != self.r or any(s not in (1, -1) for s in v):
                    raise ShapeMismatch("cocycle values must be +-1 vectors of length r")

    def value(self, i: int, j: int) -> tuple[int, ...]:
        return self.table[i][j]

    def is_trivial(self) -> bool:
        return all(all(s == 1 for s in v) for row in self.table for v in row)

    @staticmethod
    def trivial(w: FiniteGroupTable, r: int) -> "Cocycle":
        one = (1,) * r
        return Cocycle(w, r, tuple(tuple(one for _ in range(w.order()))
                                   for _ in range(w.order())))

    def validate(self, theta: ThetaRep) -> None:
        """Normalization and the 2-cocycle identity, exhaustively.

        theta_w1(c(w2,w3)) * c(w1, w2w3) = c(w1,w2) * c(w1w2, w3).
        A trivial table satisfies everything and is skipped.
        """
        if self.is_trivial():
            return
        w = self.w
        n = w.order()
        e = w.identity
        one = (1,) * self.r
        for i in range(n):
            if self.value(e, i) != one or self.value(i, e) != one:
                raise CocycleInvalid(
                    f"normalization fails at {w.elements[i]!r}"
                )
        if n ** 3 > scale_cap(2_000_000):
            raise OutOfScale(f"cocycle identity over {n}^3 triples exceeds the cap")
        for i in range(n):
            mi = theta.matrix(i)
            for j in range(n):
                ij = w.mul(i, j)
                cij = self.value(i, j)
                for k in range(n):
                    lhs = mul_signs(apply_exponent_to_signs(mi, self.value(j, k)),
                                    self.value(i, w.mul(j, k)))
                    rhs = mul_signs(cij, self.value(ij, k))
                    if lhs != rhs:
                        raise CocycleInvalid(
                            f"cocycle identity fails at ({w.elements[i]!r}, "
                            f"{w.elements[j]!r}, {w.elements[k]!r})"
                        )


@dataclass(frozen=True)
class ExtensionLaw:
    """The scheme-side group law data: a representation and a sign cocycle."""

    theta: ThetaRep
    cocycle: Cocycle

    def __post_init__(self):
        if self.cocycle.w is not self.theta.w and self.cocycle.w != self.theta.w:
            raise ShapeMismatch("theta and cocycle must share the component group")
        if self.cocycle.r != self.theta.r:
            raise ShapeMismatch("theta and cocycle must share the rank")


TWISTED = "twisted"
PRODUCT = "product"


class GroupModel:
    """Torified group model: components W, rank r, law, cells.

    mo_law picks the monoid-side comultiplication: "twisted" uses the
    same theta-exponents as the scheme side (sign-free), "product" the
    plain product comultiplication.  kind is "strong" when the scheme
    side is induced by the monoid side, i.e. the cocycle is trivial and
    the monoid law is the twisted one.
    """

    def __init__(self, law: ExtensionLaw, cells: Torification, mo_law: str = TWISTED):
        if mo_law not in (TWISTED, PRODUCT):
            raise ShapeMismatch(f"unknown mo_law {mo_law!r}")
        self.law = law
        self.cells = cells
        self.mo_law = mo_law
        self.kind = "strong" if (law.cocycle.is_trivial() and mo_law == TWISTED) else "weak"
        self._rank_scheme = None

    @property
    def w(self) -> FiniteGroupTable:
        return self.law.theta.w

    @property
    def r(self) -> int:
        return self.law.theta.r

    @property
    def rank_scheme(self) -> RankScheme:
        if self._rank_scheme is None:
            free = FgAbelianGroup.free(self.r)
            self._rank_scheme = RankScheme(
                tuple((label, free) for label in self.w.elements)
            )
        return self._rank_scheme

    def scheme(self) -> F1Scheme:
        return from_torification(self.cells)

    # law accessors: exponent blocks [A | B] and signs for component pair (i, j)

    def law_blocks(self, side: str, i: int, j: int):
        if side == "z":
            return Mat.identity(self.r), self.law.theta.matrix(i), self.law.cocycle.value(i, j)
        if self.mo_law == TWISTED:
            return Mat.identity(self.r), self.law.theta.matrix(i), (1,) * self.r
        return Mat.identity(self.r), Mat.identity(self.r), (1,) * self.r

    def inversion_blocks(self, side: str, i: int):
        """Exponent and signs of the inversion on component i."""
        winv = self.w.inv(i)
        if side == "z" or self.mo_law == TWISTED:
            e = -self.law.theta.matrix(winv)
        else:
            e = -Mat.identity(self.r)
        if side == "z":
            signs = self.law.cocycle.value(winv, i)
        else:
            signs = (1,) * self.r
        return e, signs


def constant_group(table: FiniteGroupTable) -> GroupModel:
    """Rank-0 model: one point cell per element of the finite group."""
    theta = ThetaRep.trivial(table, 0)
    law = ExtensionLaw(theta, Cocycle.trivial(table, 0))
    cells = Torification(tuple(Cell(0, label, 0) for label in table.elements))
    return GroupModel(law, cells)


def torus_group(r: int) -> GroupModel:
    """The split torus of rank r as a one-component model."""
    w = FiniteGroupTable.trivial()
    law = ExtensionLaw(ThetaRep.trivial(w, r), Cocycle.trivial(w, r))
    return GroupModel(law, Torification((Cell(r, "e", 0),)))


def extension_model(law: ExtensionLaw, cell_dims: dict, mo_law: str = TWISTED) -> GroupModel:
    """Model from an extension law and total cell dimensions per component.

    cell_dims maps each element label of W to the total dimension of its
    cell; the cell is the refined torification of G_m^r x A^(d - r), so
    every dimension must be at least r.  theta and the cocycle are
    validated here; a broken theta surfaces as ThetaNotHomomorphism (and
    would equally fail the associativity diagram if smuggled past).
    """
    law.theta.validate()
    law.cocycle.validate(law.theta)
    r = law.theta.r
    cells = []
    for label in law.theta.w.elements:
        if label not in cell_dims:
            raise ShapeMismatch(f"no cell dimension for component {label!r}")
        d = int(cell_dims[label])
        if d < r:
            raise ShapeMismatch(f"cell dimension {d} below rank {r} at {label!r}")
        cells.append(Cell(r, label, d - r))
    return GroupModel(law, Torification(tuple(cells)), mo_law)


def direct_product(a: GroupModel, b: GroupModel) -> GroupModel:
    """Componentwise product model; cells multiply, laws act blockwise."""
    if a.mo_law != b.mo_law:
        raise ShapeMismatch("direct_product needs matching monoid-side laws")
    w = a.w.product(b.w)
    r = a.r + b.r
    mats = []
    table = []
    for la in range(a.w.order()):
        for lb in range(b.w.order()):
            mats.append(a.law.theta.matrix(la).block_diag(b.law.theta.matrix(lb)))
    theta = ThetaRep(w, r, tuple(mats))
    for la in range(a.w.order()):
        for lb in range(b.w.order()):
            row = []
            for ka in range(a.w.order()):
                for kb in range(b.w.order()):
                    row.append(a.law.cocycle.value(la, ka) + b.law.cocycle.value(lb, kb))
            table.append(tuple(row))
    law = ExtensionLaw(theta, Cocycle(w, r, tuple(table)))
    cells = []
    for ca in a.cells.cells:
        for cb in b.cells.cells:
            cells.append(Cell(ca.dim + cb.dim, (ca.label, cb.label), ca.affine + cb.affine))
    return GroupModel(law, Torification(tuple(cells)), a.mo_law)


def f1_points_group(g: GroupModel) -> FiniteGroupTable:
    """Group structure induced on minimal cells: the component group W.

    The multiplication of rank components is read off the component map
    of the law, which is W's own table; identity and inverses were fixed
    when the table was built.
    """
    part = rank_part(g.scheme())
    if part.labels() != g.w.elements:
        raise AxiomsFailed("rank components do not match the component group")
    return g.w


def _diagram_witness(side, name, labels, part):
    return {"side": side, "diagram": name, "at": list(labels), "part": part}


def check_group_axioms(g: GroupModel) -> Report:
    """All five group diagrams, on both sides, exhaustively.

    Associativity runs over all component triples; unit and inverse
    diagrams over all components.  Exponent blocks are compared with
    cached pairwise matrix products, signs with exact +-1 algebra, so a
    failure pinpoints the first offending diagram and components.
    """
    w = g.w
    n = w.order()
    checks = 0
    prod_cache: dict[tuple[int, int], Mat] = {}

    def mat_prod(i, j):
        if (i, j) not in prod_cache:
            prod_cache[(i, j)] = g.law.theta.matrix(i) * g.law.theta.matrix(j)
        return prod_cache[(i, j)]

    for side in ("mo", "z"):
        e = w.identity
        # unit diagrams: mu(e, a) = a = mu(a, e) with identity coordinates
        for a in range(n):
            checks += 2
            if w.mul(e, a) != a or w.mul(a, e) != a:
                return Report.failed(checks, _diagram_witness(side, "unit", [w.elements[a]], "component"))
            _, left_b, left_s = g.law_blocks(side, e, a)
            if not left_b.is_identity():
                return Report.failed(checks, _diagram_witness(side, "left-unit", [w.elements[a]], "exponent"))
            if any(s != 1 for s in left_s):
                return Report.failed(checks, _diagram_witness(side, "left-unit", [w.elements[a]], "signs"))
            right_a, _, right_s = g.law_blocks(side, a, e)
            if not right_a.is_identity():
                return Report.failed(checks, _diagram_witness(side, "right-unit", [w.elements[a]], "exponent"))
            if any(s != 1 for s in right_s):
                return Report.failed(checks, _diagram_witness(side, "right-unit", [w.elements[a]], "signs"))

        # inverse diagrams: mu(inv a, a) = e = mu(a, inv a) with trivial coordinates
        for a in range(n):
            checks += 2
            ai = w.inv(a)
            if w.mul(ai, a) != e or w.mul(a, ai) != e:
                return Report.failed(checks, _diagram_witness(side, "inverse", [w.elements[a]], "component"))
            inv_e, inv_s = g.inversion_blocks(side, a)
            la, lb, ls = g.law_blocks(side, ai, a)
            if not (la * inv_e + lb).is_zero():
                return Report.failed(checks, _diagram_witness(side, "left-inverse", [w.elements[a]], "exponent"))
            if mul_signs(ls, apply_exponent_to_signs(la, inv_s)) != (1,) * g.r:
                return Report.failed(checks, _diagram_witness(side, "left-inverse", [w.elements[a]], "signs"))
            ra, rb, rs = g.law_blocks(side, a, ai)
            if not (ra + rb * inv_e).is_zero():
                return Report.failed(checks, _diagram_witness(side, "right-inverse", [w.elements[a]], "exponent"))
            if mul_signs(rs, apply_exponent_to_signs(rb, inv_s)) != (1,) * g.r:
                return Report.failed(checks, _diagram_witness(side, "right-inverse", [w.elements[a]], "signs"))

        # associativity: blocks [A2A1 | A2B1 | B2] vs [A1' | B1'A2' | B1'B2']
        twisted = (side == "z") or (g.mo_law == TWISTED)
        for a in range(n):
            for b in range(n):
                ab = w.mul(a, b)
                sab = g.law_blocks(side, a, b)[2]
                for c in range(n):
                    checks += 1
                    labels = [w.elements[a], w.elements[b], w.elements[c]]
                    if w.mul(ab, c) != w.mul(a, w.mul(b, c)):
                        return Report.failed(checks, _diagram_witness(side, "associativity", labels, "component"))
                    bc = w.mul(b, c)
                    if twisted:
                        # A blocks are identities; exponent equality reduces to
                        # B(a,b)=theta_a matching and theta_ab = theta_a theta_b
                        lhs_mid = g.law.theta.matrix(a)
                        lhs_right = g.law.theta.matrix(ab)
                        rhs_mid = g.law.theta.matrix(a)
                        rhs_right = mat_prod(a, b)
                    else:
                        lhs_mid = lhs_right = Mat.identity(g.r)
                        rhs_mid = rhs_right = Mat.identity(g.r)
                    if lhs_mid != rhs_mid or lhs_right != rhs_right:
                        return Report.failed(checks, _diagram_witness(side, "associativity", labels, "exponent"))
                    lhs_s = mul_signs(sab, g.law_blocks(side, ab, c)[2])
                    theta_a = g.law.theta.matrix(a) if twisted else Mat.identity(g.r)
                    rhs_s = mul_signs(g.law_blocks(side, a, bc)[2],
                                      apply_exponent_to_signs(theta_a, g.law_blocks(side, b, c)[2]))
                    if lhs_s != rhs_s:
                        return Report.failed(checks, _diagram_witness(side, "associativity", labels, "signs"))
    return Report.passed(checks)


def require_group(g: GroupModel) -> None:
    r = check_group_axioms(g)
    if not r.ok:
        raise AxiomsFailed(f"group axioms fail: {r.witness}")


def law_weak_morphism(g: GroupModel) -> WeakMorphism:
    """The multiplication as an explicit morphism G x G -> G.

    Materializes |W|^2 components; intended for small models (checks,
    corpus tests).  The monoid side uses the model's comultiplication,
    the scheme side adds the cocycle signs.
    """
    rk = g.rank_scheme
    src = product_scheme(rk, rk)
    targets, comaps, exps, signs = [], [], [], []
    free2 = FgAbelianGroup.free(2 * g.r)
    free1 = FgAbelianGroup.free(g.r)
    for i, (la, _) in enumerate(rk.components):
        for j, (lb, _) in enumerate(rk.components):
            k = g.w.mul(i, j)
            targets.append(g.w.elements[k])
            a, b, _ = g.law_blocks("mo", i, j)
            comaps.append(GroupHom.on_free(free1, free2, a.hstack(b).transpose()))
            za, zb, zs = g.law_blocks("z", i, j)
            exps.append(za.hstack(zb))
            signs.append(zs)
    mo = StrongMorphismRk(src, rk, tuple(targets), tuple(comaps))
    z = MonomialMap(src, rk, tuple(targets), tuple(exps), tuple(signs))
    return WeakMorphism(mo, z)


def unit_weak_morphism(g: GroupModel) -> WeakMorphism:
    rk = g.rank_scheme
    pt = point_scheme()
    label = g.w.elements[g.w.identity]
    mo = StrongMorphismRk(pt, rk, (label,), (
        GroupHom.on_free(FgAbelianGroup.free(g.r), FgAbelianGroup.trivial(), Mat.zeros(0, g.r)),
    ))
    z = MonomialMap(pt, rk, (label,), (Mat.zeros(g.r, 0),), ((1,) * g.r,))
    return WeakMorphism(mo, z)


def inversion_weak_morphism(g: GroupModel) -> WeakMorphism:
    rk = g.rank_scheme
    targets, comaps, exps, signs = [], [], [], []
    free1 = FgAbelianGroup.free(g.r)
    for i, (la, _) in enumerate(rk.components):
        k = g.w.inv(i)
        targets.append(g.w.elements[k])
        mo_e, _ = g.inversion_blocks("mo", i)
        comaps.append(GroupHom.on_free(free1, free1, mo_e.transpose()))
        z_e, z_s = g.inversion_blocks("z", i)
        exps.append(z_e)
        signs.append(z_s)
    mo = StrongMorphismRk(rk, rk, tuple(targets), tuple(comaps))
    z = MonomialMap(rk, rk, tuple(targets), tuple(exps), tuple(signs))
    return WeakMorphism(mo, z)


def z_rank_group(g: GroupModel) -> FiniteGroupTable:
    """Integral points of the rank part: sign vectors extended by W.

    Elements are pairs (sign vector, component label); multiplication
    follows the extension law.  The order is 2^r |W|; a full table is
    materialized, so the size is guarded.
    """
    n = g.w.order()
    order = (1 << g.r) * n
    cap = scale_cap(4096)
    if order > cap:
        raise OutOfScale(f"z_rank_group of order {order} exceeds cap {cap}")
    sign_vecs = [tuple(1 - 2 * (bits >> k & 1) for k in range(g.r))
                 for bits in range(1 << g.r)]
    labels = [(s, lab) for s in sign_vecs for lab in g.w.elements]

    def mul(x, y):
        (s, la), (t, lb) = x, y
        i, j = g.w.index(la), g.w.index(lb)
        theta_t = apply_exponent_to_signs(g.law.theta.matrix(i), t)
        out = mul_signs(mul_signs(s, theta_t), g.law.cocycle.value(i, j))
        return (out, g.w.elements[g.w.mul(i, j)])

    return FiniteGroupTable.build(labels, mul,
                                  validate=None if order <= FULL_ASSOC_LIMIT else False)


def z_rank_projection_is_hom(g: GroupModel) -> Report:
    """The projection (s, w) -> w is a surjective hom with kernel 2^r."""
    table = z_rank_group(g)
    checks = 0
    for i, x in enumerate(table.elements):
        for j, y in enumerate(table.elements):
            checks += 1
            prod_label = table.elements[table.mul(i, j)]
            if prod_label[1] != g.w.elements[g.w.mul(g.w.index(x[1]), g.w.index(y[1]))]:
                return Report.failed(checks, {"pair": [x, y]})
    kernel = [x for x in table.elements if x[1] == g.w.elements[g.w.identity]]
    if len(kernel) != 1 << g.r:
        return Report.failed(checks, {"kernel_size": len(kernel)})
    return Report.passed(checks + 1)


def sigma_check(g: GroupModel) -> Report:
    """Does w -> (+1, w) split the extension on integral points?

    ok means the section is a group homomorphism, which happens exactly
    when the cocycle is trivial; otherwise the witness is the first pair
    whose product picks up a sign.  The section always lands in the
    correct component coset and always splits the projection; those two
    facts are verified alongside.
    """
    w = g.w
    n = w.order()
    checks = 0
    one = (1,) * g.r
    first_bad = None
    for i in range(n):
        for j in range(n):
            checks += 1
            c = g.law.cocycle.value(i, j)
            if c != one and first_bad is None:
                first_bad = {"pair": [w.elements[i], w.elements[j]], "cocycle": list(c)}
    # projection composed with the section is the identity on W: structural,
    # but assert it from the law's component map anyway
    for i in range(n):
        checks += 1
        if w.mul(w.identity, i) != i:
            return Report.failed(checks, {"component": w.elements[i]})
    if first_bad is not None:
        return Report.failed(checks, first_bad, ("section-not-homomorphism",))
    return Report.passed(checks, ("section-splits",))


def split_action_blocks(g: GroupModel, y: RankScheme, act: WeakMorphism, side: str, i: int, yc: int):
    """Exponent blocks [A | B] and signs of an action at ((i, yc))."""
    src = act.z_side.source if side == "z" else act.mo_side.source
    idx = src.index((g.w.elements[i], y.components[yc][0]))
    if side == "z":
        e = act.z_side.exponents[idx]
        signs = act.z_side.signs[idx]
        label = act.z_side.targets[idx]
    else:
        e = act.mo_side.comaps[idx].free_matrix.transpose()
        signs = (1,) * e.rows
        label = act.mo_side.targets[idx]
    a = e.col_slice(0, g.r)
    b = e.col_slice(g.r, e.cols)
    return a, b, signs, y.index(label)


def check_action(g: GroupModel, y: RankScheme, act: WeakMorphism) -> Report:
    """Action diagrams for act: G x Y -> Y, both sides, exhaustively.

    Verifies act(e, -) = id and act(mu(g1,g2), -) = act(g1, act(g2, -))
    with exact component, exponent-block and sign comparisons.
    """
    w = g.w
    n = w.order()
    m = len(y.components)
    expected_src = product_scheme(g.rank_scheme, y)
    if act.z_side.source != expected_src or act.z_side.target != y:
        return Report.failed(1, {"reason": "action must map G x Y to Y"})
    checks = 0
    for side in ("mo", "z"):
        e = w.identity
        for yc in range(m):
            checks += 1
            # composing with the unit kills the group block A, so only the
            # Y block and the signs are constrained
            a, b, signs, out = split_action_blocks(g, y, act, side, e, yc)
            ylabel = y.components[yc][0]
            if out != yc:
                return Report.failed(checks, _diagram_witness(side, "action-unit", [ylabel], "component"))
            if not b.is_identity():
                return Report.failed(checks, _diagram_witness(side, "action-unit", [ylabel], "exponent"))
            if any(s != 1 for s in signs):
                return Report.failed(checks, _diagram_witness(side, "action-unit", [ylabel], "signs"))
        for i in range(n):
            for j in range(n):
                ij = w.mul(i, j)
                la, lb, ls = g.law_blocks(side, i, j)
                for yc in range(m):
                    checks += 1
                    labels = [w.elements[i], w.elements[j], y.components[yc][0]]
                    aj, bj, sj, yj = split_action_blocks(g, y, act, side, j, yc)
                    ai, bi, si, yi = split_action_blocks(g, y, act, side, i, yj)
                    am, bm, sm, ym = split_action_blocks(g, y, act, side, ij, yc)
                    if ym != yi:
                        return Report.failed(checks, _diagram_witness(side, "action-associativity", labels, "component"))
                    # LHS: act after (mu x id); RHS: act after (id x act)
                    lhs = (am * la, am * lb, bm)
                    rhs = (ai, bi * aj, bi * bj)
                    if lhs != rhs:
                        return Report.failed(checks, _diagram_witness(side, "action-associativity", labels, "exponent"))
                    lhs_s = mul_signs(sm, apply_exponent_to_signs(am, ls))
                    rhs_s = mul_signs(si, apply_exponent_to_signs(bi, sj))
                    if lhs_s != rhs_s:
                        return Report.failed(checks, _diagram_witness(side, "action-associativity", labels, "signs"))
    return Report.passed(checks)


def self_action(g: GroupModel) -> WeakMorphism:
    """Left translation of the model on its own rank part."""
    return law_weak_morphism(g)
