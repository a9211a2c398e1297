"""Built-in catalog of named small nilpotent Lie superalgebras.

Brackets are transcribed verbatim from the source table, coefficients
included. `expected_multiplier_dim` carries the resolved golden value
(confirmed by an independent brute-force oracle); where that differs
from the printed table value, `printed_multiplier_dim` keeps the printed
number so the verifier can surface the discrepancy.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import SuperDim, Superalgebra, derived_subspace
from .errors import ScopeWarning, UnknownName
from .fields import Field, RATIONALS


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dims: SuperDim
    brackets: tuple  # ((label, label), ((coeff, label), ...)), ...
    expected_multiplier_dim: int
    printed_multiplier_dim: int
    tags: tuple


def _entry(name, m, n, brackets, expected, printed=None, tags=("table1",)):
    return CatalogEntry(name, SuperDim(m, n), tuple(brackets), expected,
                        printed if printed is not None else expected, tuple(tags))


_GAMMA2_TAGS = ("table1", "gamma2-list")

_ENTRIES = {
    e.name: e for e in (
        _entry("(2|2)_1", 2, 2, [
            (("f1", "f1"), ((1, "e1"),)),
            (("f2", "f2"), ((1, "e2"),)),
        ], 1),
        _entry("(2|2)_4", 2, 2, [
            (("f1", "f2"), ((1, "e1"),)),
            (("f2", "f2"), ((1, "e2"),)),
        ], 2, tags=_GAMMA2_TAGS),
        _entry("(2|2)_6", 2, 2, [
            (("e2", "f2"), ((1, "f1"),)),
            (("f2", "f2"), ((1, "e1"),)),
        ], 2, tags=_GAMMA2_TAGS),
        _entry("(1|3)_1", 1, 3, [
            (("e1", "f2"), ((1, "f1"),)),
            (("e1", "f3"), ((1, "f2"),)),
        ], 3, tags=_GAMMA2_TAGS),
        _entry("(1|4)_7", 1, 4, [
            (("e1", "f2"), ((1, "f1"),)),
            (("e1", "f3"), ((1, "f2"),)),
            (("e1", "f4"), ((1, "f3"),)),
        ], 3),
        _entry("(3|2)_5", 3, 2, [
            (("f1", "f1"), ((1, "e2"),)),
            (("f1", "f2"), ((1, "e1"),)),
            (("f2", "f2"), ((1, "e3"),)),
        ], 2),
        _entry("(3|2)_13", 3, 2, [
            (("e1", "e2"), ((1, "e3"),)),
            (("e1", "f2"), ((1, "f1"),)),
            (("f1", "f2"), ((1, "e3"),)),
            (("f2", "f2"), ((2, "e2"),)),
        ], 3, tags=_GAMMA2_TAGS),
        _entry("(2|3)_18", 2, 3, [
            (("e1", "f3"), ((1, "f1"),)),
            (("e2", "f2"), ((1, "f1"),)),
            (("f2", "f2"), ((2, "e1"),)),
            (("f2", "f3"), ((-1, "e2"),)),
        ], 2, tags=_GAMMA2_TAGS),
        # As printed, (2|3)_19 is carried onto (2|3)_18 by the basis
        # permutation e1<->e2, f2<->f3, so its true multiplier dimension
        # is 2 even though the printed table says 3.
        _entry("(2|3)_19", 2, 3, [
            (("e1", "f3"), ((1, "f1"),)),
            (("e2", "f2"), ((1, "f1"),)),
            (("f2", "f3"), ((-1, "e1"),)),
            (("f3", "f3"), ((2, "e2"),)),
        ], 2, printed=3),
        _entry("(2|3)_22", 2, 3, [
            (("e1", "f2"), ((1, "f1"),)),
            (("e1", "f3"), ((1, "f2"),)),
            (("f3", "f3"), ((1, "e2"),)),
        ], 3),
        _entry("(2|3)_23", 2, 3, [
            (("e1", "f2"), ((1, "f1"),)),
            (("e1", "f3"), ((1, "f2"),)),
            (("f1", "f3"), ((-1, "e2"),)),
            (("f2", "f2"), ((1, "e2"),)),
        ], 2),
    )
}

TABLE1_ORDER = (
    "(2|2)_1", "(2|2)_4", "(2|2)_6", "(1|3)_1", "(1|4)_7", "(3|2)_5",
    "(3|2)_13", "(2|3)_18", "(2|3)_19", "(2|3)_22", "(2|3)_23",
)


def names(tag: str | None = None) -> list[str]:
    """Catalog names, optionally filtered by tag, in table order."""
    return [n for n in TABLE1_ORDER if tag is None or tag in _ENTRIES[n].tags]


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownName(f"no catalog entry named {name!r}") from None


def _labels(dims: SuperDim) -> list[str]:
    return [f"e{i + 1}" for i in range(dims.even)] + [f"f{j + 1}" for j in range(dims.odd)]


def _build(field: Field, dims: SuperDim, brackets, name: str) -> Superalgebra:
    labels = _labels(dims)
    pos = {lbl: i for i, lbl in enumerate(labels)}
    entries = []
    for (la, lb), terms in brackets:
        vec = [Fraction(0)] * dims.total
        for coeff, lc in terms:
            vec[pos[lc]] += Fraction(coeff)
        entries.append(((pos[la], pos[lb]), vec))
    return Superalgebra.from_entries(field, dims, entries, name=name, labels=labels)


def get(name: str, field: Field = RATIONALS) -> Superalgebra:
    """Instantiate a catalog entry over the given field."""
    e = entry(name)
    return _build(field, e.dims, e.brackets, e.name)


def data_path(name: str) -> Path:
    """Path of the shipped presentation file for a catalog entry."""
    m = re.match(r"\((\d+)\|(\d+)\)_(\d+)$", entry(name).name)
    return Path(__file__).parent / "data" / f"{m.group(1)}_{m.group(2)}_{m.group(3)}.lsa"


def abelian(m: int, n: int, field: Field = RATIONALS) -> Superalgebra:
    return Superalgebra.from_entries(field, SuperDim(m, n), [],
                                     name=f"abelian({m}|{n})")


def heisenberg3(field: Field = RATIONALS) -> Superalgebra:
    """The (3|0) Heisenberg algebra, a classical sanity fixture."""
    return _build(field, SuperDim(3, 0), ((("e1", "e2"), ((1, "e3"),)),),
                  "heisenberg3")


def family_4_2(alpha2, alpha4, field: Field = RATIONALS) -> Superalgebra:
    """Two-parameter (4|2) central extensions of (3|2)_13 by a line <e4>.

    The graded Jacobi identity on (e1, f2, f2) forces the e4-corrections
    of [e1, e2] and [f1, f2] to coincide, so both carry alpha4 here. In
    the valid family e4 lands in the derived subalgebra exactly when
    alpha2 is nonzero; otherwise the instance degenerates (derived
    dimension 3) and a ScopeWarning is emitted.
    """
    a2 = field.of(alpha2)
    a4 = field.of(alpha4)
    dims = SuperDim(4, 2)
    labels = _labels(dims)
    z = field.zero
    e3 = labels.index("e3")
    e4 = labels.index("e4")
    e2 = labels.index("e2")
    f1 = labels.index("f1")

    def vec(*pairs):
        v = [z] * dims.total
        for idx, c in pairs:
            v[idx] = v[idx] + c
        return v

    entries = [
        ((0, 1), vec((e3, field.one), (e4, a4))),          # [e1, e2]
        ((0, e3), vec((e4, a2))),                          # [e1, e3]
        ((f1, f1), vec((e4, a2))),                         # [f1, f1]
        ((0, labels.index("f2")), vec((f1, field.one))),   # [e1, f2]
        ((f1, labels.index("f2")), vec((e3, field.one), (e4, a4))),  # [f1, f2]
        ((labels.index("f2"), labels.index("f2")), vec((e2, field.of(2)))),  # [f2, f2]
    ]
    L = Superalgebra.from_entries(field, dims, entries,
                                  name=f"(4|2)[{alpha2},{alpha4}]", labels=labels)
    if derived_subspace(L).dim.total < 4:
        warnings.warn(
            f"(4|2) family parameters ({alpha2}, {alpha4}) fall outside the "
            f"derived-codimension-2 scope (dim L^2 < 4)",
            ScopeWarning, stacklevel=2,
        )
    return L
