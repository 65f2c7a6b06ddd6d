"""Exact linear algebra on small dense matrices.

Everything here is loop-based and exact: integer matrices as immutable
row tuples, Fraction arithmetic where division is needed, no floats ever.
The three nontrivial kernels are Bareiss determinants, integer kernel
bases via unimodular column reduction, and Fourier-Motzkin feasibility
for linear systems over the rationals.  Sizes are desk scale (tens of
rows, not thousands); clarity beats asymptotics throughout.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ShapeMismatch


@dataclass(frozen=True)
class Mat:
    """Dense integer matrix with explicit shape.

    The shape is stored so that empty matrices (0 x c or r x 0) compose
    correctly; those show up constantly as comaps of rank-0 stalks.

    >>> Mat.identity(2) * Mat.from_rows(2, 1, [[3], [4]])
    Mat(rows=2, cols=1, data=((3,), (4,)))
    """

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ShapeMismatch(f"{self.rows} rows declared, {len(self.data)} given")
        for row in self.data:
            if len(row) != self.cols:
                raise ShapeMismatch(f"{self.cols} cols declared, row of length {len(row)} given")

    @staticmethod
    def from_rows(rows: int, cols: int, entries) -> "Mat":
        return Mat(rows, cols, tuple(tuple(int(x) for x in row) for row in entries))

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Mat":
        return Mat(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = tuple(zip(*other.data)) if other.data else ((),) * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.data
        )
        return Mat(self.rows, other.cols, out)

    def __add__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch(f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}")
        return Mat(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)
        ))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.data))

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else ((),) * self.cols)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Mat(self.rows, self.cols + other.cols,
                   tuple(a + b for a, b in zip(self.data, other.data)))

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal col counts")
        return Mat(self.rows + other.rows, self.cols, self.data + other.data)

    def block_diag(self, other: "Mat") -> "Mat":
        top = self.hstack(Mat.zeros(self.rows, other.cols))
        bottom = Mat.zeros(other.rows, self.cols).hstack(other)
        return top.vstack(bottom)

    def col_slice(self, start: int, stop: int) -> "Mat":
        return Mat(self.rows, stop - start, tuple(row[start:stop] for row in self.data))

    def apply(self, vector: tuple[int, ...]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vector)} for {self.rows}x{self.cols}")
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.data)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0) for i, row in enumerate(self.data) for j, x in enumerate(row)
        )


def det(m: Mat) -> int:
    """Determinant by fraction-free Bareiss elimination.

    >>> det(Mat.from_rows(2, 2, [[2, 1], [7, 4]]))
    1
    """
    if m.rows != m.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: Mat) -> int:
    """Rank over Q by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m.data]
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m.rows:
            break
    return r


def kernel_basis(m: Mat) -> list[tuple[int, ...]]:
    """Basis of the full integer kernel {v in Z^cols : m v = 0}.

    Column-reduces m with unimodular integer operations while carrying an
    identity block underneath; the carried columns under the zeroed part
    form a lattice basis of the kernel (saturated by construction).

    >>> kernel_basis(Mat.from_rows(1, 2, [[2, -4]]))
    [(2, 1)]
    """
    n = m.cols
    cols = [list(col) + [1 if i == j else 0 for i in range(n)]
            for j, col in enumerate(zip(*m.data))] if m.rows else \
           [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    top = m.rows
    p = 0
    for r in range(top):
        # clear row r across columns p.. by gcd steps, leave one pivot
        while True:
            live = [j for j in range(p, len(cols)) if cols[j][r] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda j: abs(cols[j][r]))
            a, b = live[0], live[1]
            q = cols[b][r] // cols[a][r]
            cols[b] = [x - q * y for x, y in zip(cols[b], cols[a])]
        live = [j for j in range(p, len(cols)) if cols[j][r] != 0]
        if live:
            cols[p], cols[live[0]] = cols[live[0]], cols[p]
            p += 1
    return [tuple(col[top:]) for col in cols[p:]]


# Linear constraints for the feasibility kernel: (coeffs, const, rel)
# encodes  coeffs . x + const  REL  0  with rel one of "eq", "ge", "gt".

Constraint = tuple[tuple[Fraction, ...], Fraction, str]


def _norm(coeffs, const, rel) -> Constraint:
    lcm = 1
    for c in list(coeffs) + [const]:
        d = c.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    ints = [int(c * lcm) for c in coeffs] + [int(const * lcm)]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    g = max(g, 1)
    vals = [Fraction(x, g) for x in ints]
    return (tuple(vals[:-1]), vals[-1], rel)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def feasible(constraints: list[tuple], nvars: int) -> bool:
    """Decide whether a rational solution of the constraint system exists.

    Each constraint is (coeffs, const, rel): coeffs . x + const REL 0.
    Equalities are removed by exact substitution, the rest by
    Fourier-Motzkin elimination; strictness propagates through combined
    constraints, so mixed strict/weak systems are decided correctly.

    >>> one = Fraction(1)
    >>> feasible([((one,), Fraction(-1), "ge"), ((-one,), Fraction(2), "gt")], 1)
    True
    >>> feasible([((one,), Fraction(0), "gt"), ((-one,), Fraction(0), "ge")], 1)
    False
    """
    eqs: list[Constraint] = []
    ineqs: list[Constraint] = []
    for coeffs, const, rel in constraints:
        c = (tuple(Fraction(x) for x in coeffs), Fraction(const), rel)
        if len(c[0]) != nvars:
            raise ShapeMismatch("constraint width does not match variable count")
        (eqs if rel == "eq" else ineqs).append(c)

    # substitute equalities away
    while eqs:
        coeffs, const, _ = eqs.pop()
        j = next((i for i, c in enumerate(coeffs) if c != 0), None)
        if j is None:
            if const != 0:
                return False
            continue
        cj = coeffs[j]

        def subst(con: Constraint) -> Constraint:
            a, b, rel = con
            if a[j] == 0:
                return con
            f = a[j] / cj
            new = tuple(x - f * c for x, c in zip(a, coeffs))
            return (new[:j] + (Fraction(0),) + new[j + 1:], b - f * const, rel)

        eqs = [subst(c) for c in eqs]
        ineqs = [subst(c) for c in ineqs]

    live = list(range(nvars))
    while True:
        # constants drop out as soon as they appear
        remaining = []
        for a, b, rel in ineqs:
            if all(a[j] == 0 for j in live):
                if rel == "ge" and b < 0:
                    return False
                if rel == "gt" and b <= 0:
                    return False
            else:
                remaining.append((a, b, rel))
        ineqs = list({_norm(a, b, rel) for a, b, rel in remaining})
        if not live or not ineqs:
            return True
        # eliminate the variable with the cheapest pos x neg product
        def cost(j):
            pos = sum(1 for a, _, _ in ineqs if a[j] > 0)
            neg = sum(1 for a, _, _ in ineqs if a[j] < 0)
            return pos * neg

        j = min(live, key=cost)
        pos = [c for c in ineqs if c[0][j] > 0]
        neg = [c for c in ineqs if c[0][j] < 0]
        rest = [c for c in ineqs if c[0][j] == 0]
        combined = []
        for pa, pb, prel in pos:
            for na, nb, nrel in neg:
                s, t = -na[j], pa[j]
                a = tuple(s * x + t * y for x, y in zip(pa, na))
                b = s * pb + t * nb
                rel = "gt" if (prel == "gt" or nrel == "gt") else "ge"
                combined.append((a, b, rel))
        ineqs = rest + combined
        live.remove(j)
