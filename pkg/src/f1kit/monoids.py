"""Pointed monoids, their unit groups, and abelian-group bookkeeping.

Two families of commutative pointed monoids (absorbing 0, unit 1) cover
everything downstream:

* Affine: the submonoid of (Z^d, +) generated by finitely many lattice
  vectors, with a base point 0 adjoined.  Multiplicative notation in the
  geometry corresponds to additive exponent vectors here.
* GroupWithZero: {0} u H for a finitely generated abelian group H.

Abelian groups appear as unit groups and as stalks, so the module also
carries a small invariant-factor representation for them together with
homomorphisms given on generators.
"""

from dataclasses import dataclass
from math import gcd
from fractions import Fraction

from .errors import (
    InfiniteHomSet,
    MembershipUndecidedWithinBound,
    MixedTorsionSmash,
    ShapeMismatch,
)
from .linalg import Mat, feasible, rank
from .report import Report


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, t_i >= 2.

    >>> FgAbelianGroup.from_orders([2, 3]).torsion
    (6,)
    >>> FgAbelianGroup(1, (2, 4)).order()
    Traceback (most recent call last):
        ...
    f1kit.errors.InfiniteHomSet: group has positive rank
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ShapeMismatch("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ShapeMismatch(f"torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ShapeMismatch("torsion orders must be >= 2")

    @staticmethod
    def free(r: int) -> "FgAbelianGroup":
        return FgAbelianGroup(r, ())

    @staticmethod
    def trivial() -> "FgAbelianGroup":
        return FgAbelianGroup(0, ())

    @staticmethod
    def from_orders(orders) -> "FgAbelianGroup":
        """Normalize a list of cyclic orders into invariant factors."""
        primes: dict[int, list[int]] = {}
        for m in orders:
            if m < 1:
                raise ShapeMismatch("cyclic orders must be positive")
            d = 2
            while d * d <= m:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                if e:
                    primes.setdefault(d, []).append(e)
                d += 1
            if m > 1:
                primes.setdefault(m, []).append(1)
        if not primes:
            return FgAbelianGroup(0, ())
        depth = max(len(v) for v in primes.values())
        factors = [1] * depth
        for p, exps in primes.items():
            exps = sorted(exps)
            exps = [0] * (depth - len(exps)) + exps
            for i, e in enumerate(exps):
                factors[i] *= p ** e
        return FgAbelianGroup(0, tuple(f for f in factors if f > 1))

    def is_finite(self) -> bool:
        return self.rank == 0

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int:
        if self.rank > 0:
            raise InfiniteHomSet("group has positive rank")
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def generator_count(self) -> int:
        return self.rank + len(self.torsion)

    def direct_sum(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        merged = FgAbelianGroup.from_orders(list(self.torsion) + list(other.torsion))
        return FgAbelianGroup(self.rank + other.rank, merged.torsion)


def hom_count(a: FgAbelianGroup, h: FgAbelianGroup) -> int:
    """Number of homomorphisms a -> h, exactly.

    For finite h this is |h|^rank(a) * prod gcd(m_i, t_j) over torsion
    orders m_i of a and t_j of h.  A positive-rank h is still fine when a
    is pure torsion (the free part of h receives nothing); the count is
    infinite only when both ranks are positive.

    >>> hom_count(FgAbelianGroup(0, (2,)), FgAbelianGroup(0, (4,)))
    2
    >>> hom_count(FgAbelianGroup(2, ()), FgAbelianGroup(0, (2,)))
    4
    """
    if h.rank > 0 and a.rank > 0:
        raise InfiniteHomSet(
            f"hom set is a free module of rank {a.rank * h.rank} plus torsion"
        )
    total = h.order() ** a.rank if h.rank == 0 else 1
    for m in a.torsion:
        for t in h.torsion:
            total *= gcd(m, t)
    return total


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism candidate given by images of all source generators.

    Source generators are ordered free-first then torsion.  Column j of
    free_matrix (shape target-rank x generator-count) is the free part of
    the image of generator j; column j of torsion_block (shape
    target-torsion-count x generator-count) is its torsion part, stored
    reduced modulo the target orders.  Candidates that violate the order
    relations exist on purpose; validate_hom flags them.
    """

    source: FgAbelianGroup
    target: FgAbelianGroup
    free_matrix: Mat
    torsion_block: Mat

    def __post_init__(self):
        n = self.source.generator_count()
        if self.free_matrix.rows != self.target.rank or self.free_matrix.cols != n:
            raise ShapeMismatch(
                f"free_matrix must be {self.target.rank}x{n}, "
                f"got {self.free_matrix.rows}x{self.free_matrix.cols}"
            )
        if (self.torsion_block.rows != len(self.target.torsion)
                or self.torsion_block.cols != n):
            raise ShapeMismatch(
                f"torsion_block must be {len(self.target.torsion)}x{n}, "
                f"got {self.torsion_block.rows}x{self.torsion_block.cols}"
            )
        reduced = tuple(
            tuple(x % t for x in row)
            for row, t in zip(self.torsion_block.data, self.target.torsion)
        )
        object.__setattr__(self, "torsion_block",
                           Mat(self.torsion_block.rows, self.torsion_block.cols, reduced))

    @staticmethod
    def on_free(source: FgAbelianGroup, target: FgAbelianGroup, matrix: Mat) -> "GroupHom":
        """Hom between free groups from a plain integer matrix."""
        if source.torsion or target.torsion:
            raise ShapeMismatch("on_free needs torsion-free source and target")
        return GroupHom(source, target, matrix, Mat.zeros(0, source.rank))

    @staticmethod
    def identity(g: FgAbelianGroup) -> "GroupHom":
        n = g.generator_count()
        free = Mat.identity(g.rank).hstack(Mat.zeros(g.rank, len(g.torsion)))
        tors = Mat.zeros(len(g.torsion), g.rank).hstack(Mat.identity(len(g.torsion)))
        assert free.cols == n and tors.cols == n
        return GroupHom(g, g, free, tors)


def validate_hom(f: GroupHom) -> Report:
    """Check that the stated generator images define a homomorphism.

    The only condition is that the image of each torsion generator of
    order m is killed by m in the target: its free part must vanish and
    m times its torsion part must reduce to zero.

    >>> z = FgAbelianGroup.free(1)
    >>> z2 = FgAbelianGroup(0, (2,))
    >>> bad = GroupHom(z2, z, Mat.from_rows(1, 1, [[1]]), Mat.zeros(0, 1))
    >>> validate_hom(bad).ok
    False
    """
    checks = 0
    for k, m in enumerate(f.source.torsion):
        j = f.source.rank + k
        checks += 1
        free_col = tuple(f.free_matrix.data[i][j] for i in range(f.free_matrix.rows))
        if any(m * x != 0 for x in free_col):
            return Report.failed(checks, {
                "generator": j, "order": m,
                "reason": "free part of image not killed", "free_part": list(free_col),
            })
        for i, t in enumerate(f.target.torsion):
            if (m * f.torsion_block.data[i][j]) % t != 0:
                return Report.failed(checks, {
                    "generator": j, "order": m,
                    "reason": f"image component of order {t} not killed",
                })
    return Report.passed(max(checks, 1))


def compose_hom(g: GroupHom, f: GroupHom) -> GroupHom:
    """g after f.  Both arguments must be valid homs on matching groups."""
    if f.target != g.source:
        raise ShapeMismatch("compose_hom needs f.target == g.source")
    stacked = f.free_matrix.vstack(f.torsion_block)
    return GroupHom(f.source, g.target,
                    g.free_matrix * stacked, g.torsion_block * stacked)


AFFINE = "affine"
GROUP_WITH_ZERO = "group_with_zero"


@dataclass(frozen=True)
class PointedMonoid:
    kind: str
    ambient_dim: int = 0
    generators: tuple[tuple[int, ...], ...] = ()
    group: FgAbelianGroup | None = None

    def __post_init__(self):
        if self.kind == AFFINE:
            seen = set()
            for g in self.generators:
                if len(g) != self.ambient_dim:
                    raise ShapeMismatch(f"generator {g} not of length {self.ambient_dim}")
                if all(x == 0 for x in g):
                    raise ShapeMismatch("the zero vector is not a generator (it is the unit)")
                if g in seen:
                    raise ShapeMismatch(f"duplicate generator {g}")
                seen.add(g)
        elif self.kind == GROUP_WITH_ZERO:
            if self.group is None:
                raise ShapeMismatch("group_with_zero needs a group")
        else:
            raise ShapeMismatch(f"unknown monoid kind {self.kind!r}")

    @staticmethod
    def affine(ambient_dim: int, generators) -> "PointedMonoid":
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        return PointedMonoid(AFFINE, ambient_dim, gens, None)

    @staticmethod
    def orthant(d: int) -> "PointedMonoid":
        """N^d with zero adjoined: the coordinate monoid of A^d."""
        basis = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
        return PointedMonoid.affine(d, basis)

    @staticmethod
    def torus(r: int) -> "PointedMonoid":
        """Z^r with zero adjoined: the coordinate monoid of G_m^r."""
        return PointedMonoid.group_with_zero(FgAbelianGroup.free(r))

    @staticmethod
    def group_with_zero(group: FgAbelianGroup) -> "PointedMonoid":
        return PointedMonoid(GROUP_WITH_ZERO, 0, (), group)

    def is_trivial(self) -> bool:
        """True for {0, 1} in either representation."""
        if self.kind == AFFINE:
            return not self.generators
        return self.group.is_trivial()

    def generator_count(self) -> int:
        if self.kind == AFFINE:
            return len(self.generators)
        return self.group.generator_count()


def group_as_affine(g: FgAbelianGroup) -> PointedMonoid:
    """Embed a free group as the lattice monoid on +- basis vectors."""
    if g.torsion:
        raise MixedTorsionSmash(
            f"torsion {g.torsion} cannot embed in a lattice monoid"
        )
    gens = []
    for i in range(g.rank):
        e = tuple(1 if j == i else 0 for j in range(g.rank))
        gens.append(e)
        gens.append(tuple(-x for x in e))
    return PointedMonoid.affine(g.rank, gens)


def smash_product(a: PointedMonoid, b: PointedMonoid) -> PointedMonoid:
    """Smash product: base points identified, everything else pairs off.

    For affine operands this is the block concatenation of generators in
    Z^(da+db); for two groups with zero it is {0} u (H + H'); a mixed pair
    first embeds the (necessarily free) group as a +-basis lattice monoid.
    Smashing with {0, 1} returns the other operand unchanged.
    """
    if a.is_trivial():
        return b
    if b.is_trivial():
        return a
    if a.kind == GROUP_WITH_ZERO and b.kind == GROUP_WITH_ZERO:
        return PointedMonoid.group_with_zero(a.group.direct_sum(b.group))
    if a.kind == GROUP_WITH_ZERO:
        a = group_as_affine(a.group)
    if b.kind == GROUP_WITH_ZERO:
        b = group_as_affine(b.group)
    da, db = a.ambient_dim, b.ambient_dim
    gens = [g + (0,) * db for g in a.generators]
    gens += [(0,) * da + h for h in b.generators]
    return PointedMonoid.affine(da + db, gens)


def _member(m: PointedMonoid, target: tuple[int, ...], *, bound: int | None = None) -> bool:
    """Decide target in the affine monoid by LP screen plus bounded search.

    An infeasible rational relaxation certifies False.  Otherwise a
    depth-first search over coefficient vectors looks for an integer
    witness, trying 0..bound for each coefficient.  At every node an
    exact feasibility query asks whether the leading coefficient could
    rationally exceed the bound; if no visited node allows that, the
    truncation loses nothing and exhaustion certifies False.  If some
    node does allow it (as for generator sets spanning a line, where
    coefficients can grow without limit), exhaustion raises
    MembershipUndecidedWithinBound rather than guessing.
    """
    gens = m.generators
    k = len(gens)
    d = m.ambient_dim
    if all(x == 0 for x in target):
        return True
    if k == 0:
        return False
    if bound is None:
        maxabs = max(abs(x) for g in gens for x in g)
        maxabs = max(maxabs, max(abs(x) for x in target))
        bound = 10 * maxabs * k

    def relax(start: int, residual: tuple[int, ...], floor_first: bool = False) -> bool:
        nvars = k - start
        cons = []
        for coord in range(d):
            coeffs = tuple(Fraction(gens[j][coord]) for j in range(start, k))
            cons.append((coeffs, Fraction(-residual[coord]), "eq"))
        for j in range(nvars):
            unit = tuple(Fraction(1 if i == j else 0) for i in range(nvars))
            cons.append((unit, Fraction(0), "ge"))
        if floor_first:
            unit = tuple(Fraction(1 if i == 0 else 0) for i in range(nvars))
            cons.append((unit, Fraction(-(bound + 1)), "ge"))
        return feasible(cons, nvars)

    if not relax(0, target):
        return False

    dead: set[tuple[int, tuple[int, ...]]] = set()
    truncated = False

    def dfs(start: int, residual: tuple[int, ...]) -> bool:
        nonlocal truncated
        if all(x == 0 for x in residual):
            return True
        if start == k:
            return False
        key = (start, residual)
        if key in dead:
            return False
        if not relax(start, residual):
            dead.add(key)
            return False
        if relax(start, residual, floor_first=True):
            truncated = True
        g = gens[start]
        current = residual
        for c in range(bound + 1):
            if dfs(start + 1, current):
                return True
            current = tuple(x - y for x, y in zip(current, g))
        dead.add(key)
        return False

    if dfs(0, target):
        return True
    if truncated:
        raise MembershipUndecidedWithinBound(
            f"no representation of {target} with coefficients <= {bound}, "
            "but the rational relaxation is feasible beyond the bound"
        )
    return False


def member(m: PointedMonoid, target) -> bool:
    """Is the lattice vector an element of the affine monoid?

    >>> member(PointedMonoid.orthant(2), (3, 1))
    True
    >>> member(PointedMonoid.orthant(2), (-1, 0))
    False
    """
    if m.kind != AFFINE:
        raise ShapeMismatch("membership is a lattice question; needs an affine monoid")
    target = tuple(int(x) for x in target)
    if len(target) != m.ambient_dim:
        raise ShapeMismatch(f"vector of length {len(target)} in ambient dimension {m.ambient_dim}")
    return _member(m, target)


def invertible_generators(m: PointedMonoid) -> tuple[int, ...]:
    """Indices of generators whose inverse lies in the monoid."""
    if m.kind != AFFINE:
        return tuple(range(m.generator_count()))
    out = []
    for i, g in enumerate(m.generators):
        neg = tuple(-x for x in g)
        if _member(m, neg):
            out.append(i)
    return tuple(out)


def units_of(m: PointedMonoid) -> FgAbelianGroup:
    """Unit group of the monoid.

    For a group with zero this is the group itself.  For an affine monoid
    the units form the sublattice spanned by the generators that are
    invertible; the result records its rank (the lattice is free).

    >>> units_of(PointedMonoid.affine(2, [(1, 0), (-1, 0), (0, 1)]))
    FgAbelianGroup(rank=1, torsion=())
    """
    if m.kind == GROUP_WITH_ZERO:
        return m.group
    idx = invertible_generators(m)
    if not idx:
        return FgAbelianGroup.trivial()
    rows = [m.generators[i] for i in idx]
    return FgAbelianGroup.free(rank(Mat.from_rows(len(rows), m.ambient_dim, rows)))


def monoid_to_json(m: PointedMonoid) -> dict:
    if m.kind == AFFINE:
        return {
            "kind": AFFINE,
            "ambient_dim": m.ambient_dim,
            "generators": [list(g) for g in m.generators],
        }
    return {
        "kind": GROUP_WITH_ZERO,
        "rank": m.group.rank,
        "torsion": list(m.group.torsion),
    }


def monoid_from_json(data: dict) -> PointedMonoid:
    kind = data.get("kind")
    if kind == AFFINE:
        return PointedMonoid.affine(int(data["ambient_dim"]), data["generators"])
    if kind == GROUP_WITH_ZERO:
        group = FgAbelianGroup(int(data.get("rank", 0)),
                               tuple(int(t) for t in data.get("torsion", [])))
        return PointedMonoid.group_with_zero(group)
    raise ShapeMismatch(f"unknown monoid kind {kind!r}")
