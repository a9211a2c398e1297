from fractions import Fraction

import pytest

from superschur import (
    GradedSubspace,
    SuperDim,
    Superalgebra,
    abelian,
    center,
    epicenter,
    gamma,
    get,
    heisenberg3,
    mono_criterion,
    names,
    verify_no_low_gamma,
)
from superschur.capability import GAMMA_CLASS_NAMES, fingerprint
from superschur.errors import NotCentral, NotNilpotent, WrongDimension
from superschur.fields import RATIONALS


def _line(L, index):
    v = [Fraction(0)] * L.dims.total
    v[index] = Fraction(1)
    return GradedSubspace.from_vectors(L.field, L.dims, [v])


# --- mono criterion ---------------------------------------------------------

def test_mono_abelian_2_0():
    # M(L) = 1, M(L/K) = 0, K not in L^2: 1 != 0 so K escapes the epicenter
    L = abelian(2, 0)
    assert mono_criterion(L, _line(L, 1)) is False


def test_mono_abelian_1_0_whole():
    L = abelian(1, 0)
    assert mono_criterion(L, _line(L, 0)) is True


def test_mono_2_2_4_e1():
    L = get("(2|2)_4")
    assert mono_criterion(L, _line(L, 0)) is False


def test_mono_rejects_non_central():
    L = get("(2|2)_4")
    with pytest.raises(NotCentral):
        mono_criterion(L, _line(L, 2))  # f1 is not central here


def test_mono_rejects_wrong_dimension():
    L = abelian(2, 0)
    with pytest.raises(WrongDimension):
        mono_criterion(L, GradedSubspace.full(RATIONALS, L.dims))


# --- epicenter --------------------------------------------------------------

def test_epicenter_abelian_1_0_is_everything():
    rep = epicenter(abelian(1, 0))
    assert not rep.capable
    assert rep.epicenter.dim == SuperDim(1, 0)


def test_epicenter_abelian_2_0_is_zero():
    rep = epicenter(abelian(2, 0))
    assert rep.capable and rep.epicenter.is_zero()


def test_epicenter_abelian_0_1_is_zero():
    # capable: the (1|1) algebra [f,f] = e has center <e> and quotient (0|1)
    rep = epicenter(abelian(0, 1))
    assert rep.capable


@pytest.mark.parametrize("m,n", [(2, 0), (0, 2), (1, 1), (2, 2), (3, 1)])
def test_epicenter_abelian_total_at_least_2_capable(m, n):
    assert epicenter(abelian(m, n)).capable


@pytest.mark.parametrize("name", GAMMA_CLASS_NAMES)
def test_named_gamma2_algebras_are_capable(name):
    rep = epicenter(get(name))
    assert rep.capable and rep.epicenter.is_zero()


def test_epicenter_2_3_23_not_capable():
    rep = epicenter(get("(2|3)_23"))
    assert not rep.capable
    assert rep.epicenter.dim == SuperDim(1, 0)
    # the epicenter is the central line <e2>
    v = [Fraction(0)] * 5
    v[1] = Fraction(1)
    assert rep.epicenter.contains_vector(v)


def test_epicenter_2_2_1_not_capable():
    rep = epicenter(get("(2|2)_1"))
    assert not rep.capable
    assert rep.epicenter.dim == SuperDim(2, 0)


def test_epicenter_inside_center_everywhere():
    for name in names():
        L = get(name)
        rep = epicenter(L)
        assert center(L).contains(rep.epicenter)


def test_cross_check_runs_on_every_center_line():
    for name in names():
        L = get(name)
        rep = epicenter(L)  # raises CrossCheckError on any disagreement
        assert len(rep.per_generator) == center(L).dim.total
        for chk in rep.per_generator:
            assert chk.mono == chk.in_epicenter


def test_epicenter_requires_nilpotent():
    L = Superalgebra.from_entries(RATIONALS, SuperDim(1, 1),
                                  [((0, 1), [Fraction(0), Fraction(1)])])
    with pytest.raises(NotNilpotent):
        epicenter(L)


# --- gamma ------------------------------------------------------------------

GAMMA_GOLDEN = {
    "(2|2)_1": 3, "(2|2)_4": 2, "(2|2)_6": 2, "(1|3)_1": 2, "(1|4)_7": 4,
    "(3|2)_5": 3, "(3|2)_13": 2, "(2|3)_18": 4, "(2|3)_19": 4,
    "(2|3)_22": 3, "(2|3)_23": 4,
}


def test_gamma_catalog_values():
    for name, g in GAMMA_GOLDEN.items():
        v = gamma(get(name))
        assert v.in_scope, name
        assert v.gamma == g, name
        m, n = get(name).dims.even, get(name).dims.odd
        assert v.gamma == m + 2 * n - 2 - v.report.dim_multiplier


def test_gamma_class_match_positive():
    for name in ("(2|2)_4", "(2|2)_6", "(1|3)_1", "(3|2)_13"):
        v = gamma(get(name))
        assert v.gamma == 2 and v.class_match == name


def test_gamma_class_match_none_for_2_3_22():
    v = gamma(get("(2|3)_22"))
    assert v.gamma == 3 and v.class_match is None


def test_gamma_18_matches_itself():
    v = gamma(get("(2|3)_18"))
    assert v.gamma == 4 and v.class_match == "(2|3)_18"


def test_gamma_19_matches_18_fingerprint():
    # the printed rows are the same algebra up to basis permutation
    v = gamma(get("(2|3)_19"))
    assert v.class_match == "(2|3)_18"
    assert fingerprint(get("(2|3)_19")) == fingerprint(get("(2|3)_18"))


def test_gamma_out_of_scope():
    v = gamma(abelian(2, 2))
    assert not v.in_scope and v.gamma is None and v.class_match is None
    v = gamma(heisenberg3())  # n = 0
    assert not v.in_scope


def test_gamma_never_negative_in_scope():
    for name in names():
        v = gamma(get(name))
        assert v.gamma is None or v.gamma >= 0


# --- low-gamma sweep --------------------------------------------------------

def test_verify_no_low_gamma_on_catalog():
    scanrep = verify_no_low_gamma([get(name) for name in names()])
    assert scanrep.offenders == ()
    assert scanrep.checked == len(names())  # all rows are in scope


def test_verify_no_low_gamma_skips_out_of_scope():
    scanrep = verify_no_low_gamma([abelian(2, 2), get("(2|2)_4")])
    assert scanrep.checked == 1
    assert scanrep.entries[0].skipped is not None
    assert "out of scope" in scanrep.entries[0].skipped
