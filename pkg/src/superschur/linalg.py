"""Exact dense linear algebra over Q and F_p.

Vectors are tuples (or lists) of field scalars, matrices are sequences of
row sequences. Rank over the rationals uses fraction-free Bareiss
elimination on an integerized copy; everything else is plain exact
Gauss-Jordan, which is valid over any field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch
from .fields import Field


def zero_vector(field: Field, n: int) -> list:
    z = field.zero
    return [z] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, u):
    return [c * a for a in u]


def vec_is_zero(u) -> bool:
    return not any(u)


def rref(rows):
    """Reduced row echelon form.

    Returns (pivot_rows, pivot_columns); zero rows are dropped, leading
    entries are 1 and pivot columns are cleared above and below, so the
    result is the canonical representation of the row space.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        lead = work[r][c]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def _bareiss_rank(m: list[list[int]]) -> int:
    nr = len(m)
    nc = len(m[0]) if m else 0
    prev = 1
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nr:
            break
    return r


def mat_rank(rows, field: Field) -> int:
    """Exact rank: fraction-free over Q, plain elimination over F_p."""
    work = [r for r in rows if any(r)]
    if not work:
        return 0
    if field.is_rational:
        ints = []
        for row in work:
            den = 1
            for x in row:
                d = Fraction(x).denominator
                den = den * d // gcd(den, d)
            ints.append([int(x * den) for x in row])
        return _bareiss_rank(ints)
    return len(rref(work)[0])


def nullspace(rows, ncols: int, field: Field) -> list[tuple]:
    """Basis of the right kernel, one vector per free column."""
    rr, piv = rref(rows)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = zero_vector(field, ncols)
        v[f] = field.one
        for row, p in zip(rr, piv):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def reduce_vector(vec, pivot_rows, pivots):
    """Reduce vec modulo the row space given by an rref basis."""
    v = list(vec)
    for row, p in zip(pivot_rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_row_space(vec, pivot_rows, pivots) -> bool:
    return vec_is_zero(reduce_vector(vec, pivot_rows, pivots))


@dataclass(frozen=True)
class LinearMap:
    """A matrix acting on coordinate columns: (codomain dim) x (domain dim)."""

    field: Field
    rows: tuple  # tuple of row tuples, len(rows) = codomain dim

    @property
    def codomain_dim(self) -> int:
        return len(self.rows)

    @property
    def domain_dim(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def apply(self, vec):
        if len(vec) != self.domain_dim:
            raise DimensionMismatch(
                f"vector of length {len(vec)} fed to map with domain {self.domain_dim}"
            )
        return [sum((r[j] * vec[j] for j in range(len(vec)) if vec[j]), self.field.zero)
                for r in self.rows]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def rank(self) -> int:
        return mat_rank(self.rows, self.field)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.codomain_dim != self.domain_dim:
            raise DimensionMismatch("composition shape mismatch")
        z = self.field.zero
        out = []
        for r in self.rows:
            nz = [j for j, x in enumerate(r) if x]
            out.append(tuple(
                sum((r[j] * other.rows[j][c] for j in nz), z)
                for c in range(other.domain_dim)
            ))
        return LinearMap(self.field, tuple(out))

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)
