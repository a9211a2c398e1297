"""Schur multiplier dimension and the explicit tail (central) extension.

Adjoin one central tail generator s(i, j) per canonical bracket pair and
impose the graded Jacobi identity on all canonical triples. The defect of
each triple is a linear combination of tails (the relation map); the
multiplier is the quotient of the pair space by the brackets themselves
and by those relations:

    dim M(L) = dim C2 - dim L^2 - rank(relations).

The same data yields a concrete central extension E of L by the surviving
tails W with [b_i, b_j]_E = [b_i, b_j]_L + s(i, j) mod relations; then
E/W is L again, W is central, and E^2 meets W in a copy of M(L).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algebra import (
    EVEN,
    GradedSubspace,
    SuperDim,
    Superalgebra,
    derived_subspace,
    is_nilpotent,
)
from .errors import NotNilpotent
from .linalg import LinearMap, reduce_vector, rref, zero_vector


@dataclass(frozen=True)
class PairSpace:
    """Indexed basis of the degree-2 graded chain space.

    Pairs are ordered: even-even (i < j), even-odd (all), odd-odd (i <= j).
    The dimension is C(m,2) + mn + C(n+1,2) = ((m+n)^2 + n - m) / 2, which
    is exactly the multiplier dimension of the abelian (m|n) superalgebra.
    """

    dims: SuperDim
    pairs: tuple
    index: dict
    parities: tuple

    @classmethod
    def of(cls, L: Superalgebra) -> "PairSpace":
        m, total = L.dims.even, L.dims.total
        pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
        pairs += [(i, j) for i in range(m) for j in range(m, total)]
        pairs += [(i, j) for i in range(m, total) for j in range(i, total)]
        index = {p: t for t, p in enumerate(pairs)}
        parities = tuple((L.parity(i) + L.parity(j)) % 2 for i, j in pairs)
        mt, n = L.dims.even, L.dims.odd
        assert len(pairs) == ((mt + n) ** 2 + (n - mt)) // 2
        return cls(L.dims, tuple(pairs), index, parities)

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def signed_tail(self, L: Superalgebra, i: int, j: int):
        """Tail index and sign for the ordered pair (i, j); None on the even diagonal."""
        if i == j and L.parity(i) == EVEN:
            return None
        if (i, j) in self.index:
            return self.index[(i, j)], 1
        return self.index[(j, i)], (1 if (L.parity(i) and L.parity(j)) else -1)


@dataclass(frozen=True)
class TripleSpace:
    """Canonical graded triples: strictly increasing even indices, weakly
    increasing odd indices. These span all Jacobi relations because the
    defect is super-alternating in its three slots."""

    dims: SuperDim
    triples: tuple

    @classmethod
    def of(cls, L: Superalgebra) -> "TripleSpace":
        m, total = L.dims.even, L.dims.total
        ev = range(m)
        od = range(m, total)
        triples = [(i, j, k) for i in ev for j in ev if j > i for k in ev if k > j]
        triples += [(i, j, k) for i in ev for j in ev if j > i for k in od]
        triples += [(i, j, k) for i in ev for j in od for k in od if k >= j]
        triples += [(i, j, k) for i in od for j in od if j >= i for k in od if k >= j]
        return cls(L.dims, tuple(triples))

    @property
    def dim(self) -> int:
        return len(self.triples)


def boundary2(L: Superalgebra, pspace: PairSpace | None = None) -> LinearMap:
    """Pair (i, j) -> [b_i, b_j]; its rank is dim L^2."""
    ps = pspace or PairSpace.of(L)
    total = L.dims.total
    z = L.field.zero
    cols = []
    for (i, j) in ps.pairs:
        t = L.bracket_basis(i, j)
        cols.append(t if t is not None else (z,) * total)
    rows = tuple(tuple(cols[c][r] for c in range(ps.dim)) for r in range(total))
    return LinearMap(L.field, rows)


def relations3(L: Superalgebra, pspace: PairSpace | None = None,
               tspace: TripleSpace | None = None) -> LinearMap:
    """Jacobi-defect tail vectors, one column per canonical triple.

    For the triple (x, y, z) the column collects the tails of
    [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] in the tail extension,
    writing s(b, a) = -(-1)^{|a||b|} s(a, b). Composing with boundary2
    gives zero exactly, because L itself satisfies the Jacobi identity.
    """
    ps = pspace or PairSpace.of(L)
    ts = tspace or TripleSpace.of(L)
    z = L.field.zero
    minus_one = L.field.of(-1)
    cols = []
    for (x, y, z_i) in ts.triples:
        col = [z] * ps.dim

        def add_tail(a, b, coeff):
            t = ps.signed_tail(L, a, b)
            if t is not None:
                idx, s = t
                col[idx] = col[idx] + (coeff if s == 1 else -coeff)

        t = L.bracket_basis(y, z_i)
        if t is not None:
            for l, c in enumerate(t):
                if c:
                    add_tail(x, l, c)
        t = L.bracket_basis(x, y)
        if t is not None:
            for l, c in enumerate(t):
                if c:
                    add_tail(l, z_i, -c)
        sgn = minus_one if (L.parity(x) and L.parity(y)) else L.field.one
        t = L.bracket_basis(x, z_i)
        if t is not None:
            for l, c in enumerate(t):
                if c:
                    add_tail(y, l, -(sgn * c))
        cols.append(col)
    rows = tuple(tuple(cols[c][r] for c in range(ts.dim)) for r in range(ps.dim))
    return LinearMap(L.field, rows)


def gamma_in_scope(L: Superalgebra, dim_derived: int) -> bool:
    """The defect invariant is defined for derived codimension 2,
    total dimension at least 4 and at least one odd direction."""
    m, n = L.dims.even, L.dims.odd
    return dim_derived == m + n - 2 and m + n >= 4 and n >= 1


@dataclass(frozen=True)
class MultiplierReport:
    dim_c2: int
    dim_derived: int
    rank_relations: int
    dim_multiplier: int
    gamma: int | None
    timing: float

    def __str__(self):
        g = "undefined" if self.gamma is None else str(self.gamma)
        return (f"dim C2 = {self.dim_c2}, dim L^2 = {self.dim_derived}, "
                f"rank relations = {self.rank_relations}, "
                f"dim M = {self.dim_multiplier}, gamma = {g}")


def multiplier_dimension(L: Superalgebra) -> MultiplierReport:
    """Multiplier dimension by exact rank arithmetic (nilpotent L only)."""
    if not is_nilpotent(L):
        raise NotNilpotent(f"{L} is not nilpotent")
    t0 = time.perf_counter()
    ps = PairSpace.of(L)
    d2 = boundary2(L, ps)
    d3 = relations3(L, ps)
    dim_derived = d2.rank()
    rank_rel = d3.rank()
    dim_mult = ps.dim - dim_derived - rank_rel
    m, n = L.dims.even, L.dims.odd
    gamma = m + 2 * n - 2 - dim_mult if gamma_in_scope(L, dim_derived) else None
    return MultiplierReport(ps.dim, dim_derived, rank_rel, dim_mult, gamma,
                            time.perf_counter() - t0)


@dataclass(frozen=True)
class TailExtension:
    """Central extension E of L by the surviving tails W.

    `projection` maps E-coordinates onto L-coordinates; its kernel is W.
    E^2 intersects W in a copy of the multiplier of L.
    """

    algebra: Superalgebra
    kernel: GradedSubspace
    projection: LinearMap


def _fresh_labels(existing, count, stem="t"):
    out = []
    k = 1
    used = set(existing)
    while len(out) < count:
        cand = f"{stem}{k}"
        if cand not in used:
            out.append(cand)
            used.add(cand)
        k += 1
    return out


def tail_extension(L: Superalgebra) -> TailExtension:
    """Build E = L + tails with [b_i, b_j]_E = [b_i, b_j]_L + s(i, j) mod relations."""
    if not is_nilpotent(L):
        raise NotNilpotent(f"{L} is not nilpotent")
    ps = PairSpace.of(L)
    d3 = relations3(L, ps)
    cols = [tuple(d3.rows[r][c] for r in range(ps.dim)) for c in range(d3.domain_dim)]
    im_rows, im_piv = rref(cols)
    free = [t for t in range(ps.dim) if t not in set(im_piv)]
    free_even = [t for t in free if ps.parities[t] == EVEN]
    free_odd = [t for t in free if ps.parities[t] == 1]
    w0, w1 = len(free_even), len(free_odd)
    m, n = L.dims.even, L.dims.odd
    dims_e = SuperDim(m + w0, n + w1)

    # E coordinates: L evens, even tails, L odds, odd tails
    tail_pos = {}
    for k, t in enumerate(free_even):
        tail_pos[t] = m + k
    for k, t in enumerate(free_odd):
        tail_pos[t] = dims_e.even + n + k

    def embed_l(idx):
        return idx if idx < m else dims_e.even + (idx - m)

    z = L.field.zero
    entries = []
    for t_idx, (i, j) in enumerate(ps.pairs):
        vec = zero_vector(L.field, dims_e.total)
        tl = L.bracket_basis(i, j)
        if tl is not None:
            for k, c in enumerate(tl):
                if c:
                    vec[embed_l(k)] = c
        unit = zero_vector(L.field, ps.dim)
        unit[t_idx] = L.field.one
        red = reduce_vector(unit, im_rows, im_piv)
        for t, c in enumerate(red):
            if c:
                vec[tail_pos[t]] = vec[tail_pos[t]] + c
        if any(vec):
            entries.append(((embed_l(i), embed_l(j)), vec))

    l_labels = [L.label(i) for i in range(L.dims.total)]
    t_labels = _fresh_labels(l_labels, w0 + w1)
    labels = ([l_labels[i] for i in range(m)] + t_labels[:w0]
              + [l_labels[m + j] for j in range(n)] + t_labels[w0:])
    ext = Superalgebra.from_entries(
        L.field, dims_e, entries,
        name=f"E({L.name})" if L.name else "tail extension", labels=labels,
    )
    kernel_vecs = []
    for t in free:
        v = zero_vector(L.field, dims_e.total)
        v[tail_pos[t]] = L.field.one
        kernel_vecs.append(v)
    kernel = GradedSubspace.from_vectors(L.field, dims_e, kernel_vecs)
    proj_rows = []
    for r in range(L.dims.total):
        row = [z] * dims_e.total
        row[embed_l(r)] = L.field.one
        proj_rows.append(tuple(row))
    return TailExtension(ext, kernel, LinearMap(L.field, tuple(proj_rows)))


def multiplier_in_extension(L: Superalgebra, ext: TailExtension) -> int:
    """dim(E^2 intersect W), which equals the multiplier dimension."""
    from .algebra import intersection_dim

    e2 = derived_subspace(ext.algebra)
    return intersection_dim(e2, ext.kernel)
