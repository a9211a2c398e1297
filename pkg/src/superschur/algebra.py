"""Lie superalgebras by graded structure constants, with exact arithmetic.

A superalgebra here is a finite homogeneous basis (even vectors first,
then odd), together with a table of brackets on canonical index pairs:

    even-even  (i, j) with i < j        target in the even block
    even-odd   (i, j), i even, j odd    target in the odd block
    odd-odd    (i, j) with i <= j       target in the even block

The full bilinear bracket is the super-skew completion,
[y, x] = -(-1)^{|x||y|} [x, y]; odd-odd brackets are symmetric and the
even diagonal is forced to zero. The graded Jacobi identity is used in
its adjoint-derivation form

    [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConflictingEntry,
    DimensionMismatch,
    EvenDiagonal,
    FieldMismatch,
    GradingViolation,
    NotAnIdeal,
    NotGraded,
)
from .fields import Field
from .linalg import (
    LinearMap,
    nullspace,
    reduce_vector,
    rref,
    zero_vector,
)

EVEN = 0
ODD = 1


@dataclass(frozen=True)
class SuperDim:
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __str__(self):
        return f"({self.even}|{self.odd})"


@dataclass(frozen=True)
class BasisVector:
    index: int
    parity: int
    label: str


def default_labels(dims: SuperDim) -> list[str]:
    return [f"e{i + 1}" for i in range(dims.even)] + [f"f{j + 1}" for j in range(dims.odd)]


def _sign(pi: int, pj: int) -> int:
    """Super-skew flip sign: [y,x] = sign * [x,y] for |x| = pi, |y| = pj."""
    return 1 if (pi and pj) else -1


class BracketTable:
    """Canonical nonzero bracket entries, pair (i, j) -> coordinate tuple."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict):
        self.entries = dict(entries)

    def items(self):
        return self.entries.items()

    def get(self, pair):
        return self.entries.get(pair)

    def __eq__(self, other):
        return isinstance(other, BracketTable) and self.entries == other.entries

    def __len__(self):
        return len(self.entries)


def complete_table(field: Field, dims: SuperDim, entries) -> BracketTable:
    """Canonicalize sparse bracket input into a BracketTable.

    Pairs listed in the wrong order are rewritten with the super-skew
    sign; duplicates must agree; targets must respect the grading.
    """
    m, total = dims.even, dims.total

    def parity(i):
        return EVEN if i < m else ODD

    seen: dict = {}
    for (i, j), coords in entries:
        if not (0 <= i < total and 0 <= j < total):
            raise DimensionMismatch(f"basis index out of range in pair ({i}, {j})")
        coords = tuple(field.of(c) for c in coords)
        if len(coords) != total:
            raise DimensionMismatch(f"target vector for ({i}, {j}) has length {len(coords)}")
        pi, pj = parity(i), parity(j)
        if i == j and pi == EVEN:
            if any(coords):
                raise EvenDiagonal(f"[{i}, {i}] must vanish for an even basis vector")
            continue
        flip = (pi == EVEN and pj == EVEN and i > j) or \
               (pi == ODD and pj == EVEN) or \
               (pi == ODD and pj == ODD and i > j)
        if flip:
            s = field.of(_sign(pi, pj))
            i, j = j, i
            coords = tuple(s * c for c in coords)
        block = (pi + pj) % 2
        for k, c in enumerate(coords):
            if c and parity(k) != block:
                raise GradingViolation(
                    f"[{i}, {j}] has parity-{block} defect at coordinate {k}"
                )
        if (i, j) in seen:
            if seen[(i, j)] != coords:
                raise ConflictingEntry(f"pair ({i}, {j}) given twice with different values")
            continue
        seen[(i, j)] = coords
    return BracketTable({p: v for p, v in seen.items() if any(v)})


@dataclass(frozen=True)
class Superalgebra:
    field: Field
    dims: SuperDim
    basis: tuple
    table: BracketTable
    name: str = ""

    @classmethod
    def from_entries(cls, field, dims, entries, name="", labels=None) -> "Superalgebra":
        labels = list(labels) if labels is not None else default_labels(dims)
        if len(labels) != dims.total or len(set(labels)) != dims.total:
            raise DimensionMismatch("need one distinct label per basis vector")
        basis = tuple(
            BasisVector(i, EVEN if i < dims.even else ODD, labels[i])
            for i in range(dims.total)
        )
        return cls(field, dims, basis, complete_table(field, dims, entries), name)

    def parity(self, i: int) -> int:
        return EVEN if i < self.dims.even else ODD

    def label(self, i: int) -> str:
        return self.basis[i].label

    def bracket_basis(self, i: int, j: int):
        """[b_i, b_j] as a dense coordinate tuple (signed canonical lookup)."""
        pi, pj = self.parity(i), self.parity(j)
        if i == j and pi == EVEN:
            return None
        flip = (pi == pj and i > j) or (pi == ODD and pj == EVEN)
        if flip:
            entry = self.table.get((j, i))
            if entry is None:
                return None
            s = self.field.of(_sign(pi, pj))
            return tuple(s * c for c in entry)
        return self.table.get((i, j))

    def active_indices(self) -> list[int]:
        """Indices whose adjoint action is not identically zero."""
        act = set()
        for (i, j) in self.table.entries:
            act.add(i)
            act.add(j)
        return sorted(act)

    def is_abelian(self) -> bool:
        return len(self.table) == 0

    def __str__(self):
        return f"{self.name or 'superalgebra'} {self.dims} over {self.field}"


def bracket(L: Superalgebra, x, y) -> list:
    """Bilinear super-skew extension of the table to coordinate vectors."""
    total = L.dims.total
    if len(x) != total or len(y) != total:
        raise DimensionMismatch("bracket arguments must have full length")
    out = zero_vector(L.field, total)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            t = L.bracket_basis(i, j)
            if t is None:
                continue
            c = xi * yj
            for k, v in enumerate(t):
                if v:
                    out[k] = out[k] + c * v
    return out


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple
    labels: tuple
    lhs: tuple
    rhs: tuple

    def __str__(self):
        x, y, z = self.labels
        return (f"Jacobi fails at ({x}, {y}, {z}): "
                f"[{x},[{y},{z}]] = {list(self.lhs)} but "
                f"[[{x},{y}],{z}] + sign*[{y},[{x},{z}]] = {list(self.rhs)}")


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def validate(L: Superalgebra) -> ValidationReport:
    """Check the graded Jacobi identity on all basis triples.

    Triples containing an index with identically zero adjoint action are
    skipped: every term of the defect then contains a vanishing bracket.
    """
    act = L.active_indices()
    total = L.dims.total
    violations = []
    zero = L.field.zero

    def addinto(acc, coeff, vec):
        for k, v in enumerate(vec):
            if v:
                acc[k] = acc[k] + coeff * v

    for x in act:
        px = L.parity(x)
        for y in act:
            sgn = L.field.of(-1) if (px and L.parity(y)) else L.field.one
            for z in act:
                lhs = [zero] * total
                t = L.bracket_basis(y, z)
                if t is not None:
                    for l, c in enumerate(t):
                        if c:
                            u = L.bracket_basis(x, l)
                            if u is not None:
                                addinto(lhs, c, u)
                rhs = [zero] * total
                t = L.bracket_basis(x, y)
                if t is not None:
                    for l, c in enumerate(t):
                        if c:
                            u = L.bracket_basis(l, z)
                            if u is not None:
                                addinto(rhs, c, u)
                t = L.bracket_basis(x, z)
                if t is not None:
                    for l, c in enumerate(t):
                        if c:
                            u = L.bracket_basis(y, l)
                            if u is not None:
                                addinto(rhs, sgn * c, u)
                if lhs != rhs:
                    violations.append(JacobiViolation(
                        (x, y, z),
                        (L.label(x), L.label(y), L.label(z)),
                        tuple(lhs), tuple(rhs),
                    ))
    return ValidationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class GradedSubspace:
    """A graded subspace in canonical form: one rref basis per parity block.

    Even rows live in the first `dims.even` coordinates, odd rows in the
    last `dims.odd`. Reduced form is unique, so equality of subspaces is
    dataclass equality.
    """

    field: Field
    dims: SuperDim
    even_rows: tuple
    odd_rows: tuple

    @classmethod
    def from_vectors(cls, field, dims, vectors) -> "GradedSubspace":
        m = dims.even
        ev, od = [], []
        for v in vectors:
            if len(v) != dims.total:
                raise DimensionMismatch("subspace vector has wrong length")
            head, tail = list(v[:m]), list(v[m:])
            he, ho = any(head), any(tail)
            if he and ho:
                raise NotGraded(f"vector {list(v)} is not parity homogeneous")
            if he:
                ev.append(head)
            elif ho:
                od.append(tail)
        er, _ = rref(ev)
        orr, _ = rref(od)
        return cls(field, dims, tuple(er), tuple(orr))

    @classmethod
    def zero(cls, field, dims) -> "GradedSubspace":
        return cls(field, dims, (), ())

    @classmethod
    def full(cls, field, dims) -> "GradedSubspace":
        one, z = field.one, field.zero
        ev = tuple(tuple(one if i == k else z for i in range(dims.even))
                   for k in range(dims.even))
        od = tuple(tuple(one if i == k else z for i in range(dims.odd))
                   for k in range(dims.odd))
        return cls(field, dims, ev, od)

    @property
    def dim(self) -> SuperDim:
        return SuperDim(len(self.even_rows), len(self.odd_rows))

    def is_zero(self) -> bool:
        return not self.even_rows and not self.odd_rows

    def full_vectors(self) -> list[tuple]:
        """Basis vectors embedded in full (m+n)-coordinates, evens first."""
        m, n = self.dims.even, self.dims.odd
        z = self.field.zero
        out = [tuple(r) + (z,) * n for r in self.even_rows]
        out += [(z,) * m + tuple(r) for r in self.odd_rows]
        return out

    def _pivots(self, rows):
        return [next(c for c, x in enumerate(r) if x) for r in rows]

    def contains_vector(self, v) -> bool:
        m = self.dims.even
        head, tail = list(v[:m]), list(v[m:])
        if any(head):
            head = reduce_vector(head, self.even_rows, self._pivots(self.even_rows))
            if any(head):
                return False
        if any(tail):
            tail = reduce_vector(tail, self.odd_rows, self._pivots(self.odd_rows))
            if any(tail):
                return False
        return True

    def contains(self, other: "GradedSubspace") -> bool:
        return all(self.contains_vector(v) for v in other.full_vectors())


def subspace_sum(a: GradedSubspace, b: GradedSubspace) -> GradedSubspace:
    if a.dims != b.dims:
        raise DimensionMismatch("subspaces of different ambient spaces")
    return GradedSubspace.from_vectors(a.field, a.dims, a.full_vectors() + b.full_vectors())


def intersection_dim(a: GradedSubspace, b: GradedSubspace) -> int:
    s = subspace_sum(a, b)
    return a.dim.total + b.dim.total - s.dim.total


def product_subspace(L: Superalgebra, a: GradedSubspace, b: GradedSubspace) -> GradedSubspace:
    """Span of all brackets [a_i, b_j]; the square bracket on subspaces."""
    if a.dims != L.dims or b.dims != L.dims:
        raise DimensionMismatch("subspace does not live in this superalgebra")
    vecs = []
    for u in a.full_vectors():
        for v in b.full_vectors():
            w = bracket(L, u, v)
            if any(w):
                vecs.append(w)
    return GradedSubspace.from_vectors(L.field, L.dims, vecs)


def derived_subspace(L: Superalgebra) -> GradedSubspace:
    full = GradedSubspace.full(L.field, L.dims)
    return product_subspace(L, full, full)


def lower_central_series(L: Superalgebra) -> list[GradedSubspace]:
    """C^0 = L, C^{i+1} = [L, C^i]; stops when two consecutive terms agree."""
    full = GradedSubspace.full(L.field, L.dims)
    series = [full]
    while True:
        nxt = product_subspace(L, full, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_nilpotent(L: Superalgebra) -> bool:
    return lower_central_series(L)[-1].is_zero()


def component_series(L: Superalgebra):
    """The two descending component sequences, each driven by ad of the even part."""
    z = L.field.zero
    one = L.field.one
    m, n = L.dims.even, L.dims.odd
    even_part = GradedSubspace(
        L.field, L.dims,
        tuple(tuple(one if i == k else z for i in range(m)) for k in range(m)), (),
    )
    odd_part = GradedSubspace(
        L.field, L.dims, (),
        tuple(tuple(one if i == k else z for i in range(n)) for k in range(n)),
    )
    out = []
    for start in (even_part, odd_part):
        series = [start]
        while True:
            nxt = product_subspace(L, even_part, series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
        out.append(series)
    return out[0], out[1]


def nilpotent_by_components(L: Superalgebra) -> bool:
    ev, od = component_series(L)
    return ev[-1].is_zero() and od[-1].is_zero()


def center(L: Superalgebra) -> GradedSubspace:
    """Joint kernel of all adjoint maps ad(b_j)."""
    total = L.dims.total
    rows = []
    for j in range(total):
        cols = [L.bracket_basis(i, j) for i in range(total)]
        for k in range(total):
            row = [c[k] if c is not None else L.field.zero for c in cols]
            if any(row):
                rows.append(row)
    basis = nullspace(rows, total, L.field)
    return GradedSubspace.from_vectors(L.field, L.dims, basis)


def quotient(L: Superalgebra, ideal: GradedSubspace):
    """Quotient by a graded ideal, on the complement of its pivot coordinates.

    Returns (quotient superalgebra, projection LinearMap). Surviving basis
    vectors keep their labels.
    """
    if ideal.dims != L.dims:
        raise DimensionMismatch("ideal does not live in this superalgebra")
    full = GradedSubspace.full(L.field, L.dims)
    if not ideal.contains(product_subspace(L, full, ideal)):
        raise NotAnIdeal("subspace is not closed under bracketing with the algebra")
    m = L.dims.even
    rows = ideal.full_vectors()
    pivots = [next(c for c, x in enumerate(r) if x) for r in rows]
    keep = [i for i in range(L.dims.total) if i not in set(pivots)]
    pos = {b: t for t, b in enumerate(keep)}
    new_m = sum(1 for i in keep if i < m)
    new_dims = SuperDim(new_m, len(keep) - new_m)

    def project(vec):
        red = reduce_vector(vec, rows, pivots)
        return [red[b] for b in keep]

    entries = []
    for a_idx, i in enumerate(keep):
        for j in keep[a_idx:]:
            t = L.bracket_basis(i, j)
            if t is None or not any(t):
                continue
            img = project(t)
            if any(img):
                entries.append(((pos[i], pos[j]), img))
    q = Superalgebra.from_entries(
        L.field, new_dims, entries,
        name=f"{L.name}/K" if L.name else "quotient",
        labels=[L.label(i) for i in keep],
    )
    unit = GradedSubspace.full(L.field, L.dims).full_vectors()
    cols = [project(unit[k]) for k in range(L.dims.total)]
    proj = LinearMap(L.field, tuple(
        tuple(cols[k][r] for k in range(L.dims.total)) for r in range(len(keep))
    ))
    return q, proj


def direct_sum(a: Superalgebra, b: Superalgebra) -> Superalgebra:
    """Block-diagonal sum; basis vectors are relabeled canonically."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    dims = SuperDim(a.dims.even + b.dims.even, a.dims.odd + b.dims.odd)

    def embed(src: Superalgebra, offset_even: int, offset_odd: int):
        def conv(i):
            if i < src.dims.even:
                return offset_even + i
            return dims.even + offset_odd + (i - src.dims.even)
        return conv

    ca = embed(a, 0, 0)
    cb = embed(b, a.dims.even, a.dims.odd)
    entries = []
    for src, conv in ((a, ca), (b, cb)):
        for (i, j), coords in src.table.items():
            vec = zero_vector(a.field, dims.total)
            for k, c in enumerate(coords):
                if c:
                    vec[conv(k)] = c
            entries.append(((conv(i), conv(j)), vec))
    name = f"{a.name or 'A'}+{b.name or 'B'}"
    return Superalgebra.from_entries(a.field, dims, entries, name=name)
