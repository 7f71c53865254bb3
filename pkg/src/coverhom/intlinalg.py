"""Exact integer and rational linear algebra on small dense matrices.

Matrix entries are arbitrary-precision Python ints and vector coordinates
are fractions.Fraction, so equality with zero is always decidable.
Floating point is rejected at every constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainError

__all__ = [
    "IntMatrix",
    "SnfResult",
    "RationalVector",
    "snf",
    "det",
    "rank",
    "abelianized_b1",
    "block_diag",
    "in_row_lattice",
    "same_row_lattice",
]


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"integer required, got {value!r}")
    return value


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError(f"floating point rejected, got {value!r}; use int, str or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix. Zero rows or columns are legal."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        ent = tuple(_as_int(e) for e in self.entries)
        if len(ent) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(ent)}"
            )
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = [tuple(r) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged rows")
            if cols is not None and cols != width:
                raise DimensionError("explicit column count disagrees with row width")
            cols = width
        elif cols is None:
            cols = 0
        return cls(len(data), cols, tuple(e for r in data for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index ({i},{j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        if not 0 <= i < self.rows:
            raise DimensionError(f"row {i} outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    __matmul__ = mul

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entry(i, i) for i in range(min(self.rows, self.cols)))


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    """Block-diagonal sum of the given matrices (empty input gives the 0x0 matrix)."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            grid[r0 + i][c0 : c0 + b.cols] = list(b.row(i))
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(rows, cols, tuple(e for row in grid for e in row))


@dataclass(frozen=True)
class RationalVector:
    """Vector of exact rationals; Fraction keeps them normalized."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_as_fraction(c) for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def dot(self, other: Sequence[int]) -> Fraction:
        if len(other) != len(self.coords):
            raise DimensionError(f"dot of length {len(self.coords)} with length {len(other)}")
        return sum((c * _as_fraction(x) for c, x in zip(self.coords, other)), Fraction(0))


@dataclass(frozen=True)
class SnfResult:
    """Decomposition u @ a @ v = d with u, v unimodular and d the divisor diagonal."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def __post_init__(self):
        u, d, v = self.u, self.d, self.v
        if u.rows != u.cols or v.rows != v.cols:
            raise DimensionError("transforms must be square")
        if d.rows != u.rows or d.cols != v.rows:
            raise DimensionError("diagonal factor has wrong shape")
        if abs(det(u)) != 1 or abs(det(v)) != 1:
            raise DomainError("transforms must be unimodular")
        diag = d.diagonal()
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j and d.entry(i, j) != 0:
                    raise DomainError("middle factor is not diagonal")
        for x in diag:
            if x < 0:
                raise DomainError("diagonal entries must be nonnegative")
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                raise DomainError("zero diagonal entry precedes a nonzero one")
            if a != 0 and b % a != 0:
                raise DomainError("diagonal divisor chain broken")

    @property
    def divisors(self) -> tuple[int, ...]:
        return self.d.diagonal()


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form via gcd row/column reduction.

    Returns SnfResult(u, d, v) with u @ a @ v == d, |det u| = |det v| = 1,
    and the diagonal of d equal to the divisor sequence of a.
    """
    m, n = a.rows, a.cols
    d = a.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def combine_rows(i, j, x, y, z, w):
        # (row_i, row_j) <- (x*row_i + y*row_j, z*row_i + w*row_j), det = 1
        di, dj = d[i], d[j]
        d[i] = [x * p + y * q for p, q in zip(di, dj)]
        d[j] = [z * p + w * q for p, q in zip(di, dj)]
        ui, uj = u[i], u[j]
        u[i] = [x * p + y * q for p, q in zip(ui, uj)]
        u[j] = [z * p + w * q for p, q in zip(ui, uj)]

    def add_col(dst, src, f):
        for r in d:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    def combine_cols(i, j, x, y, z, w):
        for r in d:
            r[i], r[j] = x * r[i] + y * r[j], z * r[i] + w * r[j]
        for r in v:
            r[i], r[j] = x * r[i] + y * r[j], z * r[i] + w * r[j]

    def clear_column(t):
        for i in range(t + 1, m):
            if d[i][t] == 0:
                continue
            p, q = d[t][t], d[i][t]
            if q % p == 0:
                add_row(i, t, -(q // p))
            else:
                g, x, y = _xgcd(p, q)
                combine_rows(t, i, x, y, -(q // g), p // g)

    def clear_row(t):
        for j in range(t + 1, n):
            if d[t][j] == 0:
                continue
            p, q = d[t][t], d[t][j]
            if q % p == 0:
                add_col(j, t, -(q // p))
            else:
                g, x, y = _xgcd(p, q)
                combine_cols(t, j, x, y, -(q // g), p // g)

    size = min(m, n)
    t = 0
    while t < size:
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                e = d[i][j]
                if e != 0 and (piv is None or abs(e) < abs(d[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            # Alternate clears; |pivot| shrinks whenever a Bezout step fires,
            # so the loop terminates.
            while True:
                clear_column(t)
                clear_row(t)
                if all(d[i][t] == 0 for i in range(t + 1, m)):
                    break
            # Pivot must divide the whole trailing block for the divisor chain.
            offender = None
            p = d[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    for i in range(size):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    res = SnfResult(
        IntMatrix.from_rows(u, cols=m),
        IntMatrix.from_rows(d, cols=n),
        IntMatrix.from_rows(v, cols=n),
    )
    assert res.u.mul(a).mul(res.v).entries == res.d.entries
    return res


def det(a: IntMatrix) -> int:
    """Exact determinant (Bareiss elimination); the 0x0 matrix has det 1."""
    if a.rows != a.cols:
        raise DimensionError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: IntMatrix) -> int:
    """Rank over the rationals, by Fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in a.row(i)] for i in range(a.rows)]
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r]
        for i in range(r + 1, a.rows):
            if rows[i][c]:
                f = rows[i][c] / lead[c]
                rows[i] = [x - f * y for x, y in zip(rows[i], lead)]
        r += 1
        if r == a.rows:
            break
    return r


def abelianized_b1(generators: int, relators: Sequence[Sequence[int]]) -> int:
    """First Betti number of the abelianized presentation.

    generators - rank(relator matrix); relator vectors are exponent sums
    and must all have length equal to the generator count.
    """
    if generators < 0:
        raise DomainError("generator count must be nonnegative")
    rel = []
    for vec in relators:
        v = tuple(_as_int(x) for x in vec)
        if len(v) != generators:
            raise DimensionError(
                f"relator of length {len(v)} in a presentation with {generators} generators"
            )
        rel.append(v)
    if not rel:
        return generators
    return generators - rank(IntMatrix.from_rows(rel))


def in_row_lattice(vec: Sequence[int], a: IntMatrix) -> bool:
    """Whether vec is an integer combination of a's rows."""
    x = tuple(_as_int(e) for e in vec)
    if len(x) != a.cols:
        raise DimensionError(f"vector of length {len(x)} against {a.rows}x{a.cols} matrix")
    if a.rows == 0:
        return all(e == 0 for e in x)
    res = snf(a)
    # y @ a = x has an integer solution iff x @ v is divisible by the diagonal.
    w = [sum(x[i] * res.v.entry(i, j) for i in range(a.cols)) for j in range(a.cols)]
    size = min(a.rows, a.cols)
    for j, wj in enumerate(w):
        dj = res.d.entry(j, j) if j < size else 0
        if dj == 0:
            if wj != 0:
                return False
        elif wj % dj != 0:
            return False
    return True


def same_row_lattice(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether two integer matrices generate the same row lattice."""
    if a.cols != b.cols:
        raise DimensionError("row lattices live in different ambient ranks")
    return all(in_row_lattice(a.row(i), b) for i in range(a.rows)) and all(
        in_row_lattice(b.row(i), a) for i in range(b.rows)
    )
