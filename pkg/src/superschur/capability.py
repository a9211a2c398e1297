"""Capability via the epicenter of the tail extension, the monomorphism
dimension criterion, and the gamma defect invariant.

A central element x lies in the epicenter exactly when its canonical lift
commutes with the whole tail extension, i.e. when for every basis index j
the tail vector sum_i x_i s(i, j) falls inside the relation span. Every
verdict is cross-checked against the independent dimension criterion

    K inside Z*(L)  <=>  dim M(L) = dim M(L/K) - dim(K meet L^2)

on each basis-aligned central line; any disagreement raises CrossCheckError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    GradedSubspace,
    Superalgebra,
    bracket,
    center,
    derived_subspace,
    is_nilpotent,
    quotient,
)
from .errors import CrossCheckError, NotCentral, NotNilpotent, WrongDimension
from .homology import (
    MultiplierReport,
    PairSpace,
    multiplier_dimension,
    relations3,
)
from .linalg import nullspace, reduce_vector, rref, zero_vector


def mono_criterion(L: Superalgebra, K: GradedSubspace) -> bool:
    """Dimension form of the monomorphism test for a central graded line K.

    True means K sits inside the epicenter (the multiplier survives the
    quotient by K unchanged up to the K-part of L^2).
    """
    if K.dim.total != 1:
        raise WrongDimension(f"K must be one-dimensional, got {K.dim}")
    gen = K.full_vectors()[0]
    full = GradedSubspace.full(L.field, L.dims)
    for v in full.full_vectors():
        if any(bracket(L, gen, v)):
            raise NotCentral("K is not contained in the center")
    m_l = multiplier_dimension(L).dim_multiplier
    h, _ = quotient(L, K)
    m_h = multiplier_dimension(h).dim_multiplier
    k_in_sq = 1 if derived_subspace(L).contains_vector(gen) else 0
    return m_l == m_h - k_in_sq


@dataclass(frozen=True)
class GeneratorCheck:
    """Cross-check record for one basis-aligned central line."""

    description: str
    mono: bool
    in_epicenter: bool


@dataclass(frozen=True)
class EpicenterReport:
    epicenter: GradedSubspace
    capable: bool
    per_generator: tuple

    def __str__(self):
        return (f"epicenter dim = {self.epicenter.dim}, capable = {self.capable}, "
                f"{len(self.per_generator)} generator check(s)")


def _epicenter_subspace(L: Superalgebra) -> GradedSubspace:
    ps = PairSpace.of(L)
    d3 = relations3(L, ps)
    cols = [tuple(d3.rows[r][c] for r in range(ps.dim)) for c in range(d3.domain_dim)]
    im_rows, im_piv = rref(cols)
    total = L.dims.total
    z = L.field.zero
    rows = []
    # centrality: [x, b_j] = 0 for all j
    for j in range(total):
        cols_j = [L.bracket_basis(i, j) for i in range(total)]
        for k in range(total):
            row = [c[k] if c is not None else z for c in cols_j]
            if any(row):
                rows.append(row)
    # lift condition: sum_i x_i s(i, j) lies in the relation span, each j
    for j in range(total):
        reduced = []
        for i in range(total):
            t = ps.signed_tail(L, i, j)
            v = zero_vector(L.field, ps.dim)
            if t is not None:
                idx, s = t
                v[idx] = L.field.one if s == 1 else -L.field.one
            reduced.append(reduce_vector(v, im_rows, im_piv))
        for t in range(ps.dim):
            row = [reduced[i][t] for i in range(total)]
            if any(row):
                rows.append(row)
    basis = nullspace(rows, total, L.field)
    return GradedSubspace.from_vectors(L.field, L.dims, basis)


def epicenter(L: Superalgebra) -> EpicenterReport:
    """Epicenter with built-in double reporting.

    Each homogeneous basis vector of the center spans a graded central
    line; for each one the monomorphism criterion must match membership in
    the computed epicenter, otherwise CrossCheckError is raised.
    """
    if not is_nilpotent(L):
        raise NotNilpotent(f"{L} is not nilpotent")
    epi = _epicenter_subspace(L)
    zc = center(L)
    if not zc.contains(epi):
        raise CrossCheckError("epicenter escaped the center")
    checks = []
    for v in zc.full_vectors():
        k = GradedSubspace.from_vectors(L.field, L.dims, [v])
        mono = mono_criterion(L, k)
        member = epi.contains_vector(v)
        desc = _describe_line(L, v)
        if mono != member:
            raise CrossCheckError(
                f"criteria disagree on {desc} of {L.name or L}: "
                f"mono={mono}, epicenter membership={member}"
            )
        checks.append(GeneratorCheck(desc, mono, member))
    return EpicenterReport(epi, epi.dim.total == 0, tuple(checks))


def _describe_line(L: Superalgebra, v) -> str:
    terms = []
    for i, c in enumerate(v):
        if c:
            terms.append(L.label(i) if c == L.field.one else f"{c}*{L.label(i)}")
    return "<" + " + ".join(terms) + ">"


@dataclass(frozen=True)
class GammaVerdict:
    in_scope: bool
    gamma: int | None
    class_match: str | None
    report: MultiplierReport

    def __str__(self):
        if not self.in_scope:
            return "gamma undefined (out of scope)"
        return f"gamma = {self.gamma}, class match = {self.class_match or 'none'}"


GAMMA_CLASS_NAMES = ("(2|2)_4", "(2|2)_6", "(1|3)_1", "(3|2)_13", "(2|3)_18")

_fingerprint_cache: dict = {}


def fingerprint(L: Superalgebra, report: MultiplierReport | None = None) -> tuple:
    """Invariant fingerprint: superdims of L, L^2 and Z(L), dim M, gamma."""
    rep = report or multiplier_dimension(L)
    d = derived_subspace(L).dim
    zc = center(L).dim
    return (L.dims.even, L.dims.odd, d.even, d.odd, zc.even, zc.odd,
            rep.dim_multiplier, rep.gamma)


def _class_fingerprints() -> dict:
    if not _fingerprint_cache:
        from .catalog import get

        for name in GAMMA_CLASS_NAMES:
            _fingerprint_cache[name] = fingerprint(get(name))
    return _fingerprint_cache


def gamma(L: Superalgebra) -> GammaVerdict:
    """Gamma defect with a fingerprint match against the named gamma = 2 list."""
    if not is_nilpotent(L):
        raise NotNilpotent(f"{L} is not nilpotent")
    rep = multiplier_dimension(L)
    in_scope = rep.gamma is not None
    match = None
    if in_scope:
        fp = fingerprint(L, rep)
        for name, ref in _class_fingerprints().items():
            if fp == ref:
                match = name
                break
    return GammaVerdict(in_scope, rep.gamma, match, rep)


@dataclass(frozen=True)
class LowGammaEntry:
    name: str
    gamma: int | None
    skipped: str | None


@dataclass(frozen=True)
class LowGammaScan:
    entries: tuple
    offenders: tuple  # (name, gamma) with gamma in {0, 1}

    @property
    def checked(self) -> int:
        return sum(1 for e in self.entries if e.skipped is None)


def verify_no_low_gamma(instances) -> LowGammaScan:
    """Assert gamma >= 2 over the given instances.

    Out-of-scope instances are recorded as skipped with a reason; gamma in
    {0, 1} occurrences are collected as offenders (findings against the
    classification statements), never raised.
    """
    entries = []
    offenders = []
    for L in instances:
        name = L.name or str(L)
        if not is_nilpotent(L):
            entries.append(LowGammaEntry(name, None, "not nilpotent"))
            continue
        rep = multiplier_dimension(L)
        if rep.gamma is None:
            m, n = L.dims.even, L.dims.odd
            reason = (f"out of scope: dim L^2 = {rep.dim_derived} != {m + n - 2}"
                      if m + n >= 4 and n >= 1 else
                      f"out of scope: total dim {m + n} < 4 or no odd part")
            entries.append(LowGammaEntry(name, None, reason))
            continue
        entries.append(LowGammaEntry(name, rep.gamma, None))
        if rep.gamma in (0, 1):
            offenders.append((name, rep.gamma))
    return LowGammaScan(tuple(entries), tuple(offenders))
