"""Type-A catalog: GL(n), parabolic subgroups, Grassmannians, quotients.

Permutations are one-line tuples, 1-based: w = (w(1), ..., w(n)), with
(v w)(i) = v(w(i)).  The GL(n) model has component group S_n acting on
the rank-n torus by permutation matrices, trivial cocycle, and one cell
per w of total dimension n + n(n-1)/2 + l(w), where l is the inversion
count.  Parabolic models restrict the components to a block subgroup and
pad every cell by the dimension of the unipotent radical.  Grassmannian
cells are indexed by k-subsets of {1..n}; the projection from GL(n)
collapses each component w to the subset of positions sent into {1..k}.
"""

from itertools import combinations, permutations

from .counting import IntPolynomial
from .errors import (
    InvalidComposition,
    NotASubgroup,
    OutOfScale,
    ShapeMismatch,
    TypeNotMaximal,
    scale_cap,
)
from .linalg import Mat
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
    compose_weak,
    from_torification,
    product_scheme,
    rank_part,
)
from .groups import (
    Cocycle,
    ExtensionLaw,
    FiniteGroupTable,
    GroupModel,
    ThetaRep,
    check_action,
    extension_model,
)

Perm = tuple[int, ...]


def one_line_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n in one-line notation, lexicographic."""
    return tuple(permutations(range(1, n + 1)))


def perm_compose(v: Perm, w: Perm) -> Perm:
    """(v w)(i) = v(w(i))."""
    return tuple(v[w[i] - 1] for i in range(len(w)))


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def perm_length(w: Perm) -> int:
    """Inversion count l(w).

    >>> perm_length((3, 1, 2))
    2
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_matrix(w: Perm) -> Mat:
    """P(w) with P(w)_{ij} = 1 iff i = w(j); then P(v)P(w) = P(vw)."""
    n = len(w)
    return Mat.from_rows(n, n, [[1 if i + 1 == w[j] else 0 for j in range(n)]
                                for i in range(n)])


def symmetric_table(n: int) -> FiniteGroupTable:
    return FiniteGroupTable.build(one_line_perms(n), perm_compose)


def _permutation_theta(w: FiniteGroupTable, n: int) -> ThetaRep:
    """Theta from one-line permutation labels, verified at the label level.

    P is functorial in the permutation, so checking the table's own
    composition law on labels gives the matrix homomorphism law without
    |W|^2 matrix products; the cheap composition check runs here.
    """
    for i, u in enumerate(w.elements):
        for j, v in enumerate(w.elements):
            if w.elements[w.mul(i, j)] != perm_compose(u, v):
                raise ShapeMismatch("table does not multiply by composition")
    return ThetaRep(w, n, tuple(perm_matrix(p) for p in w.elements))


def gl_model(n: int) -> GroupModel:
    """The GL(n) model: strong, components S_n, rank n.

    Total cell dimension over component w is n + n(n-1)/2 + l(w): the
    rank-n torus times the refined affine cell of the Bruhat stratum.
    """
    cap = scale_cap(6)
    if not 1 <= n <= cap:
        raise OutOfScale(f"gl_model needs 1 <= n <= {cap}, got {n}")
    w = symmetric_table(n)
    theta = _permutation_theta(w, n)
    law = ExtensionLaw(theta, Cocycle.trivial(w, n))
    base = n + n * (n - 1) // 2
    dims = {p: base + perm_length(p) for p in w.elements}
    return extension_model(law, dims)


def _check_composition(n: int, parts) -> tuple[int, ...]:
    parts = tuple(int(k) for k in parts)
    if not parts or any(k <= 0 for k in parts) or sum(parts) != n:
        raise InvalidComposition(f"{parts} is not a composition of {n}")
    return parts


def block_perms(n: int, parts) -> tuple[Perm, ...]:
    """Embedded elements of S_{k_1} x ... x S_{k_r} inside S_n, sorted."""
    parts = _check_composition(n, parts)
    offsets = []
    off = 0
    for k in parts:
        offsets.append(off)
        off += k
    blocks = [tuple(permutations(range(o + 1, o + k + 1)))
              for o, k in zip(offsets, parts)]

    def embed(choice) -> Perm:
        out = []
        for b in choice:
            out.extend(b)
        return tuple(out)

    out = []

    def rec(i, acc):
        if i == len(blocks):
            out.append(embed(acc))
            return
        for b in blocks[i]:
            rec(i + 1, acc + [b])

    rec(0, [])
    return tuple(sorted(out))


def parabolic_model(n: int, parts) -> GroupModel:
    """Standard parabolic of type (k_1, ..., k_r) inside the GL(n) model.

    Components are the block permutations; each cell picks up the
    unipotent-radical dimension (n^2 - sum k_i^2)/2 on top of the block
    Bruhat dimensions, so the counting polynomial factors as
    q^dim_u * prod N_GL(k_i).
    """
    cap = scale_cap(6)
    if not 1 <= n <= cap:
        raise OutOfScale(f"parabolic_model needs 1 <= n <= {cap}, got {n}")
    parts = _check_composition(n, parts)
    elements = block_perms(n, parts)
    w = FiniteGroupTable.build(elements, perm_compose)
    theta = _permutation_theta(w, n)
    law = ExtensionLaw(theta, Cocycle.trivial(w, n))
    dim_u = (n * n - sum(k * k for k in parts)) // 2
    dim_b = sum(k * (k - 1) // 2 for k in parts)
    dims = {p: n + dim_b + perm_length(p) + dim_u for p in elements}
    return extension_model(law, dims)


def schubert_dim(subset: tuple[int, ...]) -> int:
    """Dimension of the Schubert cell of a sorted k-subset of {1..n}."""
    return sum(a - i for i, a in enumerate(subset, start=1))


def grassmannian_model(k: int, n: int) -> F1Scheme:
    """Grassmannian of k-planes: one refined affine cell per k-subset.

    Every cell has torus dimension 0, so all C(n, k) subsets are
    F1-points, and the counting polynomial is the Gauss binomial.
    """
    cap = scale_cap(8)
    if not 0 <= k <= n <= cap:
        raise OutOfScale(f"grassmannian_model needs 0 <= k <= n <= {cap}")
    cells = tuple(
        Cell(0, subset, schubert_dim(subset))
        for subset in combinations(range(1, n + 1), k)
    )
    return from_torification(Torification(cells))


def _require_subgroup(p: GroupModel, g: GroupModel) -> None:
    if p.r != g.r:
        raise NotASubgroup("subgroup model must share the torus rank")
    glabels = set(g.w.elements)
    for label in p.w.elements:
        if label not in glabels:
            raise NotASubgroup(f"component {label!r} not in the ambient model")
    for i, u in enumerate(p.w.elements):
        gi = g.w.index(u)
        if p.law.theta.matrix(i) != g.law.theta.matrix(gi):
            raise NotASubgroup(f"theta differs from the ambient model at {u!r}")
        for j, v in enumerate(p.w.elements):
            gj = g.w.index(v)
            if p.w.elements[p.w.mul(i, j)] != g.w.elements[g.w.mul(gi, gj)]:
                raise NotASubgroup(f"law differs from the ambient model at ({u!r}, {v!r})")


def lambda_action(p: GroupModel, g: GroupModel) -> WeakMorphism:
    """Left translation of a subgroup model on the ambient rank part.

    Component (u, w) goes to uw; torus coordinates multiply through the
    permutation action of u, with no signs, so the morphism is strong.
    """
    _require_subgroup(p, g)
    src = product_scheme(p.rank_scheme, g.rank_scheme)
    rk = g.rank_scheme
    r = g.r
    free1 = FgAbelianGroup.free(r)
    free2 = FgAbelianGroup.free(2 * r)
    targets, comaps, exps, signs = [], [], [], []
    for u in p.w.elements:
        gi = g.w.index(u)
        m_u = g.law.theta.matrix(gi)
        for wj in range(g.w.order()):
            targets.append(g.w.elements[g.w.mul(gi, wj)])
            e = Mat.identity(r).hstack(m_u)
            exps.append(e)
            signs.append((1,) * r)
            comaps.append(GroupHom.on_free(free1, free2, e.transpose()))
    mo = StrongMorphismRk(src, rk, tuple(targets), tuple(comaps))
    z = MonomialMap(src, rk, tuple(targets), tuple(exps), tuple(signs))
    return WeakMorphism(mo, z)


def coset_subset(w: Perm, k: int) -> tuple[int, ...]:
    """Positions sent into {1..k}: the subset attached to the coset of w."""
    return tuple(i + 1 for i, x in enumerate(w) if x <= k)


def coset_subset_bijection(k: int, n: int) -> dict[Perm, tuple[int, ...]]:
    """w -> subset, verified constant on block cosets and onto k-subsets.

    >>> coset_subset_bijection(2, 4)[(3, 4, 1, 2)]
    (3, 4)
    """
    if not 0 < k < n:
        raise TypeNotMaximal(f"need 0 < k < n, got k={k} n={n}")
    wp = block_perms(n, (k, n - k))
    out = {}
    fibers: dict[tuple[int, ...], int] = {}
    for w in one_line_perms(n):
        subset = coset_subset(w, k)
        out[w] = subset
        fibers[subset] = fibers.get(subset, 0) + 1
        for u in wp:
            if coset_subset(perm_compose(u, w), k) != subset:
                raise ShapeMismatch(f"subset not constant on the coset of {w}")
    expected = set(combinations(range(1, n + 1), k))
    if set(fibers) != expected or any(c != len(wp) for c in fibers.values()):
        raise ShapeMismatch("fibers are not uniform over all k-subsets")
    return out


def _recognize_two_block(p: GroupModel, g: GroupModel) -> int:
    """The k with components(p) = embedded S_k x S_(n-k), else raise."""
    n = g.r
    _require_subgroup(p, g)
    have = set(p.w.elements)
    for k in range(1, n):
        if set(block_perms(n, (k, n - k))) == have:
            return k
    raise TypeNotMaximal(
        "quotient needs a two-part parabolic (k, n-k); components do not match any"
    )


def projection_to_quotient(g: GroupModel, k: int) -> tuple[F1Scheme, WeakMorphism]:
    """Grassmannian quotient and the collapse morphism from the GL model."""
    n = g.r
    q = grassmannian_model(k, n)
    qrk = rank_part(q)
    free_n = FgAbelianGroup.free(n)
    targets, comaps, exps, signs = [], [], [], []
    for w in g.w.elements:
        subset = coset_subset(w, k)
        targets.append(subset)
        comaps.append(GroupHom.on_free(FgAbelianGroup.trivial(), free_n, Mat.zeros(n, 0)))
        exps.append(Mat.zeros(0, n))
        signs.append(())
    mo = StrongMorphismRk(g.rank_scheme, qrk, tuple(targets), tuple(comaps))
    z = MonomialMap(g.rank_scheme, qrk, tuple(targets), tuple(exps), tuple(signs))
    return q, WeakMorphism(mo, z)


def quotient_model(p: GroupModel, g: GroupModel) -> tuple[F1Scheme, WeakMorphism]:
    """Categorical quotient of the ambient model by a two-block parabolic.

    Recognizes k from the components of p, returns the Grassmannian
    model together with the projection.  Any other parabolic type raises
    TypeNotMaximal.
    """
    k = _recognize_two_block(p, g)
    return projection_to_quotient(g, k)


def _pr2_weak(p: GroupModel, g: GroupModel) -> WeakMorphism:
    """Second projection P x G -> G as a weak (indeed strong) morphism."""
    src = product_scheme(p.rank_scheme, g.rank_scheme)
    rk = g.rank_scheme
    r = g.r
    free1 = FgAbelianGroup.free(r)
    free2 = FgAbelianGroup.free(2 * r)
    targets, comaps, exps, signs = [], [], [], []
    for u in p.w.elements:
        for wlabel in g.w.elements:
            targets.append(wlabel)
            e = Mat.zeros(r, r).hstack(Mat.identity(r))
            exps.append(e)
            signs.append((1,) * r)
            comaps.append(GroupHom.on_free(free1, free2, e.transpose()))
    mo = StrongMorphismRk(src, rk, tuple(targets), tuple(comaps))
    z = MonomialMap(src, rk, tuple(targets), tuple(exps), tuple(signs))
    return WeakMorphism(mo, z)


def quotient_square_check(p: GroupModel, g: GroupModel) -> Report:
    """proj after lambda equals proj after pr2, as entire morphisms.

    This is the exhaustive coequalizer square over all |W_P| x |W|
    component pairs, compared with exact matrices and signs.
    """
    q, proj = quotient_model(p, g)
    lam = lambda_action(p, g)
    pr2 = _pr2_weak(p, g)
    left = compose_weak(proj, lam)
    right = compose_weak(proj, pr2)
    pairs = len(left.z_side.targets)
    for i in range(pairs):
        if left.z_side.targets[i] != right.z_side.targets[i]:
            return Report.failed(i + 1, {
                "pair": list(left.z_side.source.components[i][0]),
                "left": left.z_side.targets[i], "right": right.z_side.targets[i],
            })
    if left == right:
        return Report.passed(pairs)
    return Report.failed(pairs, {"reason": "coordinate data differs"})


def _coinvariant(f: WeakMorphism, p: GroupModel, g: GroupModel) -> bool:
    lam = lambda_action(p, g)
    pr2 = _pr2_weak(p, g)
    return compose_weak(f, lam) == compose_weak(f, pr2)


def _test_targets(n: int, k: int):
    """Deterministic family of factorization targets: stalk ranks 0..n."""
    from math import comb
    for m in range(n + 1):
        for comps in (1, comb(n, k)):
            yield RankScheme(tuple(
                (f"t{i}", FgAbelianGroup.free(m)) for i in range(comps)
            ))


def universality_check(p: GroupModel, g: GroupModel) -> Report:
    """The projection coequalizes: every coinvariant map factors once.

    Runs a programmatic family of targets (constant schemes and free
    stalks of rank up to n, one or C(n,k) components) and per target a
    family of coinvariant test morphisms with coset-constant components
    and signs; each must factor through the quotient uniquely.  A
    deliberately non-coinvariant control must be rejected.
    """
    k = _recognize_two_block(p, g)
    n = g.r
    _, proj = quotient_model(p, g)
    qrk = proj.z_side.target
    subsets = qrk.labels()
    coset_of = {w: coset_subset(w, k) for w in g.w.elements}
    checks = 0
    for target in _test_targets(n, k):
        m = target.components[0][1].rank
        ncomp = len(target.components)
        for variant in range(2):
            # coset-constant component assignment, sign alternating by variant
            targets, comaps, exps, signs = [], [], [], []
            free_m = FgAbelianGroup.free(m)
            free_n = FgAbelianGroup.free(n)
            for w in g.w.elements:
                ci = subsets.index(coset_of[w]) % ncomp
                targets.append(f"t{ci}")
                comaps.append(GroupHom.on_free(free_m, free_n, Mat.zeros(n, m)))
                exps.append(Mat.zeros(m, n))
                sign = -1 if (variant and ci % 2) else 1
                signs.append((sign,) * m)
            f = WeakMorphism(
                StrongMorphismRk(g.rank_scheme, target, tuple(targets), tuple(comaps)),
                MonomialMap(g.rank_scheme, target, tuple(targets), tuple(exps), tuple(signs)),
            )
            checks += 1
            if not _coinvariant(f, p, g):
                return Report.failed(checks, {"target_rank": m, "reason": "family member not coinvariant"})
            # factor through the quotient: forced on each fiber
            h_targets, h_comaps, h_exps, h_signs = [], [], [], []
            for subset in subsets:
                ws = [w for w in g.w.elements if coset_of[w] == subset]
                idxs = [g.w.index(w) for w in ws]
                vals = {(targets[i], signs[i]) for i in idxs}
                if len(vals) != 1:
                    return Report.failed(checks, {"subset": list(subset), "reason": "fiber not constant"})
                tlabel, sign = next(iter(vals))
                h_targets.append(tlabel)
                h_comaps.append(GroupHom.on_free(free_m, FgAbelianGroup.trivial(), Mat.zeros(0, m)))
                h_exps.append(Mat.zeros(m, 0))
                h_signs.append(sign)
            h = WeakMorphism(
                StrongMorphismRk(qrk, target, tuple(h_targets), tuple(h_comaps)),
                MonomialMap(qrk, target, tuple(h_targets), tuple(h_exps), tuple(h_signs)),
            )
            checks += 1
            if compose_weak(h, proj) != f:
                return Report.failed(checks, {"target_rank": m, "reason": "factorization does not recover the map"})
            # uniqueness: component and sign data on each quotient component
            # are pinned by any single fiber element, and exponents out of a
            # rank-0 source admit exactly one matrix shape
            checks += 1
    # negative control: a map separating two elements of one coset must be
    # caught as non-coinvariant; only meaningful when some fiber has > 1
    # element, i.e. when the parabolic has nontrivial components
    if p.w.order() > 1:
        big = next(s for s in subsets
                   if sum(1 for w in g.w.elements if coset_of[w] == s) > 1)
        marked = next(w for w in g.w.elements if coset_of[w] == big)
        target = RankScheme((("t0", FgAbelianGroup.trivial()), ("t1", FgAbelianGroup.trivial())))
        targets = tuple("t1" if w == marked else "t0" for w in g.w.elements)
        comaps = tuple(GroupHom.on_free(FgAbelianGroup.trivial(), FgAbelianGroup.free(n), Mat.zeros(n, 0))
                       for _ in g.w.elements)
        exps = tuple(Mat.zeros(0, n) for _ in g.w.elements)
        f_bad = WeakMorphism(
            StrongMorphismRk(g.rank_scheme, target, targets, comaps),
            MonomialMap(g.rank_scheme, target, targets, exps, ((),) * g.w.order()),
        )
        checks += 1
        if _coinvariant(f_bad, p, g):
            return Report.failed(checks, {"reason": "non-coinvariant control passed"})
    return Report.passed(checks)


def tau_morphism(g: GroupModel, k: int) -> tuple[RankScheme, WeakMorphism]:
    """Transported action of the model on the quotient components.

    Component (sigma, A) goes to sigma(A); all stalk data is trivial
    because quotient components are rank 0.
    """
    n = g.r
    q = grassmannian_model(k, n)
    qrk = rank_part(q)
    src = product_scheme(g.rank_scheme, qrk)
    free_n = FgAbelianGroup.free(n)
    targets, comaps, exps, signs = [], [], [], []
    for sigma in g.w.elements:
        for subset, _ in qrk.components:
            image = tuple(sorted(sigma[a - 1] for a in subset))
            targets.append(image)
            comaps.append(GroupHom.on_free(FgAbelianGroup.trivial(), free_n, Mat.zeros(n, 0)))
            exps.append(Mat.zeros(0, n))
            signs.append(())
    mo = StrongMorphismRk(src, qrk, tuple(targets), tuple(comaps))
    z = MonomialMap(src, qrk, tuple(targets), tuple(exps), tuple(signs))
    return qrk, WeakMorphism(mo, z)


def tau_check(g: GroupModel, k: int) -> Report:
    """Coset transport matches the subset action, and tau is an action.

    For every sigma and every w the coset of w sigma^(-1) must carry the
    subset sigma(subset(w)); on top of that the transported morphism
    satisfies the action diagrams on both sides.
    """
    n = g.r
    qrk, tau = tau_morphism(g, k)
    checks = 0
    for sigma in g.w.elements:
        inv = perm_inverse(sigma)
        for w in g.w.elements:
            checks += 1
            transported = coset_subset(perm_compose(w, inv), k)
            image = tuple(sorted(sigma[a - 1] for a in coset_subset(w, k)))
            if transported != image:
                return Report.failed(checks, {
                    "sigma": list(sigma), "w": list(w),
                    "transported": list(transported), "subset_action": list(image),
                })
    action = check_action(g, qrk, tau)
    if not action.ok:
        return Report.failed(checks + action.checks, action.witness)
    return Report.passed(checks + action.checks)


def gl_counting_identity(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Cell sum and the closed product formula, for exact comparison.

    Returns (sum over w of (q-1)^n q^(n(n-1)/2 + l(w)),
             prod over i < n of (q^n - q^i)).
    """
    lhs = IntPolynomial.zero()
    base = n * (n - 1) // 2
    for w in one_line_perms(n):
        lhs = lhs + IntPolynomial.qminus1_power(n) * IntPolynomial.q_power(base + perm_length(w))
    rhs = IntPolynomial.one()
    for i in range(n):
        rhs = rhs * (IntPolynomial.q_power(n) - IntPolynomial.q_power(i))
    return lhs, rhs
