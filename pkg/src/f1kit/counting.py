"""Counting polynomials, q-analogs, and brute-force oracles.

All coefficients and evaluations are exact Python integers.  The central
identity is that a disjoint union of split tori of dimensions d_i counts
sum_i (q-1)^d_i points over a q-element field, and that writing a count
in the (q-1) basis reads off the vanishing order at q = 1 together with
the leading value.

The brute-force counters at the bottom recount small instances by raw
enumeration over an actual prime field, with no shared formulas, so they
can serve as oracles for the polynomial calculus.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .errors import NonDivisible, NotPrime, OutOfScale, ZeroPolynomial, scale_cap
from .linalg import Mat, det, feasible, kernel_basis
from .monoids import AFFINE, GROUP_WITH_ZERO, PointedMonoid


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in q, coefficients ascending, trimmed.

    >>> p = IntPolynomial.of(1, 1) * IntPolynomial.of(-1, 1)
    >>> p
    IntPolynomial.of(-1, 0, 1)
    >>> p(3)
    8
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return IntPolynomial(tuple(c))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def q_power(k: int) -> "IntPolynomial":
        return IntPolynomial((0,) * k + (1,))

    @staticmethod
    def qminus1_power(k: int) -> "IntPolynomial":
        return (IntPolynomial.of(-1, 1)) ** k

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial.of(*(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.of(*out)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, q: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def __repr__(self) -> str:
        return f"IntPolynomial.of{self.coeffs!r}" if self.coeffs else "IntPolynomial.zero()"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(f"{head}q" if i == 1 else f"{head}q^{i}")
        return " + ".join(terms).replace("+ -", "- ")

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient; raises NonDivisible on any remainder."""
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        dcoeffs = other.coeffs
        dd = len(dcoeffs) - 1
        lead = Fraction(dcoeffs[-1])
        qout: list[Fraction] = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            f = rem[i] / lead
            if f:
                qout[i - dd] = f
                for j, c in enumerate(dcoeffs):
                    rem[i - dd + j] -= f * c
        if any(r != 0 for r in rem):
            raise NonDivisible(f"{self.pretty()} not divisible by {other.pretty()}")
        if any(f.denominator != 1 for f in qout):
            raise NonDivisible("quotient is not integral")
        return IntPolynomial.of(*(int(f) for f in qout))

    def in_qminus1_basis(self) -> tuple[int, ...]:
        """Coefficients b_j with p = sum b_j (q-1)^j, by synthetic division.

        >>> IntPolynomial.of(0, 0, 1).in_qminus1_basis()
        (1, 2, 1)
        """
        cur = list(self.coeffs)
        out = []
        while cur:
            desc = list(reversed(cur))
            run = [desc[0]]
            for c in desc[1:]:
                run.append(c + run[-1])
            out.append(run.pop())
            cur = list(reversed(run))
        return tuple(out)

    @staticmethod
    def from_qminus1_basis(coeffs) -> "IntPolynomial":
        shift = IntPolynomial.of(-1, 1)
        result = IntPolynomial.zero()
        for b in reversed(tuple(coeffs)):
            result = result * shift + IntPolynomial.of(b)
        return result


@dataclass(frozen=True)
class LimitResult:
    """Vanishing order at q = 1 and the value of p / (q-1)^rho there."""
    rho: int
    limit: int


def vanishing_order_and_limit(p: IntPolynomial) -> LimitResult:
    """Order of vanishing at q = 1 and the limit of p(q)/(q-1)^rho.

    >>> vanishing_order_and_limit(IntPolynomial.of(1, -2, 1))
    LimitResult(rho=2, limit=1)
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes to every order")
    basis = p.in_qminus1_basis()
    rho = next(i for i, b in enumerate(basis) if b != 0)
    return LimitResult(rho, basis[rho])


def gauss_number(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("gauss_number needs n >= 0")
    return IntPolynomial.of(*([1] * n))


def gauss_factorial(n: int) -> IntPolynomial:
    """[n]_q! = [1]_q ... [n]_q."""
    out = IntPolynomial.one()
    for i in range(1, n + 1):
        out = out * gauss_number(i)
    return out


def gauss_binomial(n: int, k: int) -> IntPolynomial:
    """Gauss binomial [n k]_q via exact polynomial division.

    >>> gauss_binomial(4, 2).coeffs
    (1, 1, 2, 1, 1)
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k} n={n}")
    return gauss_factorial(n).divexact(gauss_factorial(k) * gauss_factorial(n - k))


def torification_poly(t) -> IntPolynomial:
    """Counting polynomial of a torification: sum (q-1)^dim q^affine.

    Accepts anything with a .cells attribute or a bare iterable of cells;
    each cell contributes (q-1)^dim, and a cell standing for a refined
    affine family of extra dimension a contributes (q-1)^dim q^a, which
    equals the sum over its 2^a subset tori.
    """
    cells = getattr(t, "cells", t)
    out = IntPolynomial.zero()
    for c in cells:
        affine = getattr(c, "affine", 0)
        out = out + IntPolynomial.qminus1_power(c.dim) * IntPolynomial.q_power(affine)
    return out


def _require_prime(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise NotPrime(f"brute counting needs a prime field size, got {q}")
    cap = scale_cap(5)
    if q > cap:
        raise OutOfScale(f"brute counting capped at q <= {cap}, got {q}")


def _require_work(amount: int) -> None:
    cap = scale_cap(4_000_000)
    if amount > cap:
        raise OutOfScale(f"enumeration of size {amount} exceeds cap {cap}")


def brute_count_subspaces(k: int, n: int, q: int) -> int:
    """Count k-dim subspaces of F_q^n by enumerating reduced echelon forms.

    Every subspace has a unique reduced row echelon basis, so the count
    is the number of valid RREF matrices.  Enumeration is literal: pick
    pivot columns, fill every free position with every field value.
    """
    _require_prime(q)
    if not 0 <= k <= n:
        return 0
    total = 0
    for pivots in combinations(range(n), k):
        free_positions = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivots
        ]
        _require_work(q ** len(free_positions))
        for values in product(range(q), repeat=len(free_positions)):
            # materialize the matrix to keep the count honest
            m = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                m[i][p] = 1
            for (i, j), v in zip(free_positions, values):
                m[i][j] = v
            total += 1
    return total


def brute_count_gl(n: int, q: int) -> int:
    """Count invertible n x n matrices over F_q by full enumeration."""
    _require_prime(q)
    _require_work(q ** (n * n))
    total = 0
    for entries in product(range(q), repeat=n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if det(Mat.from_rows(n, n, rows)) % q != 0:
            total += 1
    return total


def _face_condition_holds(gens, subset: frozenset, kernel: list[tuple[int, ...]]) -> bool:
    """No kernel vector is nonnegative off the subset and positive somewhere.

    Violation means a relation equates a product of off-subset generators
    (which must map to 0) with a product of subset generators (which maps
    to a unit), so no assignment supported on the subset can be a hom.
    """
    k = len(gens)
    off = [j for j in range(k) if j not in subset]
    if not off or not kernel:
        return True
    m = len(kernel)
    cons = []
    for j in off:
        coeffs = tuple(Fraction(v[j]) for v in kernel)
        cons.append((coeffs, Fraction(0), "ge"))
    total = tuple(Fraction(sum(v[j] for j in off)) for v in kernel)
    cons.append((total, Fraction(-1), "ge"))
    return not feasible(cons, m)


def brute_count_monoid_homs(m: PointedMonoid, q: int) -> int:
    """Count monoid homs M -> (F_q, *) by enumerating generator images.

    An assignment sends each generator to a field element, zero allowed.
    It extends to a hom iff every additive relation among generators maps
    to an equality in F_q; relations come from the integer kernel of the
    generator matrix, with zero values handled by the support condition.
    """
    _require_prime(q)
    if m.kind == GROUP_WITH_ZERO:
        g = m.group
        count = 1
        for _ in range(g.rank):
            count *= q - 1
        for t in g.torsion:
            count *= sum(1 for y in range(1, q) if pow(y, t, q) == 1)
        return count

    gens = m.generators
    k = len(gens)
    d = m.ambient_dim
    _require_work(q ** k)
    matrix = Mat.from_rows(d, k, list(zip(*gens))) if k else Mat.zeros(d, 0)
    full_kernel = kernel_basis(matrix)

    face_ok: dict[frozenset, bool] = {}
    support_kernel: dict[frozenset, list[tuple[int, ...]]] = {}

    def data_for(subset: frozenset):
        if subset not in face_ok:
            face_ok[subset] = _face_condition_holds(gens, subset, full_kernel)
            cols = sorted(subset)
            sub = Mat.from_rows(d, len(cols), [[gens[j][i] for j in cols] for i in range(d)])
            support_kernel[subset] = kernel_basis(sub)
        return face_ok[subset], support_kernel[subset]

    total = 0
    for assignment in product(range(q), repeat=k):
        support = frozenset(j for j, x in enumerate(assignment) if x != 0)
        ok, relations = data_for(support)
        if not ok:
            continue
        cols = sorted(support)
        values = [assignment[j] for j in cols]
        good = True
        for rel in relations:
            acc = 1
            for x, e in zip(values, rel):
                if e:
                    acc = (acc * pow(x, e, q)) % q
            if acc != 1:
                good = False
                break
        if good:
            total += 1
    return total


BRUTE_KINDS = ("subspaces", "gl", "monoid_homs")


def brute_count(kind: str, params: dict, q: int) -> int:
    """Dispatch to a brute-force counter; kind picks the enumeration."""
    if kind == "subspaces":
        return brute_count_subspaces(int(params["k"]), int(params["n"]), q)
    if kind == "gl":
        return brute_count_gl(int(params["n"]), q)
    if kind == "monoid_homs":
        return brute_count_monoid_homs(params["monoid"], q)
    raise ValueError(f"unknown brute kind {kind!r}")


def compare_counts(poly: IntPolynomial, kind: str, params: dict, qs) -> dict:
    """Evaluate a counting polynomial against brute enumeration.

    Returns a JSON-able report: per q the polynomial value, the brute
    value, and whether they agree exactly; overall equality under "equal".
    """
    per_q = {}
    all_equal = True
    for q in qs:
        pv = poly(q)
        bv = brute_count(kind, params, q)
        per_q[str(q)] = {"poly": pv, "brute": bv, "equal": pv == bv}
        all_equal = all_equal and pv == bv
    return {"poly_q": list(poly.coeffs), "per_q": per_q, "equal": all_equal}
