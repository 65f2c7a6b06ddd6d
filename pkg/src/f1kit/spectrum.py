"""Prime spectra of pointed monoids.

Primes of a pointed monoid are complements of faces: a subset S of the
generators spans a face exactly when some rational functional vanishes
on S and is strictly positive on the rest.  The spectrum of an affine
monoid is therefore a finite poset of faces; a group with zero has the
single empty face.  Each point carries the unit group of its stalk (the
sublattice spanned by the face), whose rank is the local torus dimension.
"""

from dataclasses import dataclass
from fractions import Fraction

from .counting import IntPolynomial
from .errors import ShapeMismatch, TooManyGenerators, scale_cap
from .linalg import Mat, feasible, rank
from .monoids import AFFINE, GROUP_WITH_ZERO, FgAbelianGroup, PointedMonoid


@dataclass(frozen=True)
class MoPoint:
    """One prime: the face it corresponds to and the stalk unit group."""
    id: int
    patch: int
    face: tuple[int, ...]
    unit_group: FgAbelianGroup


@dataclass(frozen=True)
class MoSpace:
    """Finite monoid spectrum: patches, points, and specialization order.

    specialization holds pairs (i, j) meaning point j lies in the closure
    of point i (prime_i contained in prime_j, face_i containing face_j).
    The relation is reflexive; pairs never cross patches.
    """

    patches: tuple[PointedMonoid, ...]
    points: tuple[MoPoint, ...]
    specialization: tuple[tuple[int, int], ...]

    def point_count(self) -> int:
        return len(self.points)

    def min_rank(self) -> int:
        return min(p.unit_group.rank for p in self.points)


def _is_face(gens, subset_mask: int, d: int) -> bool:
    """Feasibility of: functional zero on the subset, >= 1 off it."""
    cons = []
    for j, g in enumerate(gens):
        coeffs = tuple(Fraction(x) for x in g)
        if subset_mask >> j & 1:
            cons.append((coeffs, Fraction(0), "eq"))
        else:
            cons.append((coeffs, Fraction(-1), "ge"))
    return feasible(cons, d)


def spec(m: PointedMonoid) -> MoSpace:
    """Spectrum of a single monoid, points ordered lex by face subset.

    >>> s = spec(PointedMonoid.orthant(2))
    >>> [p.face for p in s.points]
    [(), (0,), (0, 1), (1,)]
    >>> [p.unit_group.rank for p in s.points]
    [0, 1, 2, 1]
    """
    if m.kind == GROUP_WITH_ZERO:
        point = MoPoint(0, 0, (), m.group)
        return MoSpace((m,), (point,), ((0, 0),))

    gens = m.generators
    k = len(gens)
    cap = scale_cap(14)
    if k > cap:
        raise TooManyGenerators(f"{k} generators exceed the face enumeration cap {cap}")
    d = m.ambient_dim

    faces = []
    for mask in range(1 << k):
        if _is_face(gens, mask, d):
            faces.append(mask)
    subsets = sorted(tuple(j for j in range(k) if mask >> j & 1) for mask in faces)

    points = []
    mask_to_id = {}
    for i, subset in enumerate(subsets):
        rows = [gens[j] for j in subset]
        r = rank(Mat.from_rows(len(rows), d, rows)) if rows else 0
        points.append(MoPoint(i, 0, subset, FgAbelianGroup.free(r)))
        mask = 0
        for j in subset:
            mask |= 1 << j
        mask_to_id[mask] = i

    pairs = []
    for mask, i in mask_to_id.items():
        sub = mask
        while True:
            if sub in mask_to_id:
                pairs.append((i, mask_to_id[sub]))
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return MoSpace((m,), tuple(points), tuple(sorted(pairs)))


def disjoint_union(spaces) -> MoSpace:
    """Concatenate spectra; points and patches reindex, order preserved."""
    patches: list[PointedMonoid] = []
    points: list[MoPoint] = []
    pairs: list[tuple[int, int]] = []
    for s in spaces:
        patch_off = len(patches)
        point_off = len(points)
        patches.extend(s.patches)
        for p in s.points:
            points.append(MoPoint(p.id + point_off, p.patch + patch_off,
                                  p.face, p.unit_group))
        for i, j in s.specialization:
            pairs.append((i + point_off, j + point_off))
    return MoSpace(tuple(patches), tuple(points), tuple(pairs))


def rank_of_point(s: MoSpace, point_id: int) -> int:
    """Rank of the unit group of the stalk at the given point."""
    if not 0 <= point_id < len(s.points):
        raise ShapeMismatch(f"no point {point_id} in a space of {len(s.points)} points")
    return s.points[point_id].unit_group.rank


def rank_subspace(s: MoSpace) -> MoSpace:
    """Discrete subspace of minimal-rank points, stalks kept.

    Each minimal point becomes its own group-with-zero patch, so applying
    the operation twice is the identity on the result.
    """
    rho = s.min_rank()
    sub = []
    for p in s.points:
        if p.unit_group.rank == rho:
            sub.append(spec(PointedMonoid.group_with_zero(p.unit_group)))
    return disjoint_union(sub)


def point_count_poly(m: PointedMonoid) -> IntPolynomial:
    """Counting polynomial sum over faces of (q-1)^(face rank).

    For affine monoids this equals the number of monoid homs into a
    q-element field for every prime power q (each face contributes the
    characters of the free lattice it spans).  For a group with zero the
    formula reads the free rank only; torsion units would contribute
    gcd factors that are not polynomial in q.
    """
    s = spec(m)
    out = IntPolynomial.zero()
    for p in s.points:
        out = out + IntPolynomial.qminus1_power(p.unit_group.rank)
    return out


def space_report(s: MoSpace) -> dict:
    """JSON-able summary: faces, ranks, specialization pairs, min rank."""
    return {
        "points": [
            {"patch": p.patch, "face": list(p.face), "rank": p.unit_group.rank}
            for p in s.points
        ],
        "specialization": [[i, j] for i, j in s.specialization],
        "min_rank": s.min_rank(),
    }
