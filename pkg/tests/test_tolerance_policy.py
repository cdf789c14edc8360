from pytest import raises

from pymatchstick import DEFAULT_TOLERANCES, TolerancePolicy

from .common import eq_, ok_


def test_defaults():
    eq_(DEFAULT_TOLERANCES.snap_tol, 1e-3)
    eq_(DEFAULT_TOLERANCES.unit_tol_raw, 5e-2)
    eq_(DEFAULT_TOLERANCES.unit_tol_refined, 1e-9)
    eq_(DEFAULT_TOLERANCES.rank_tol, 1e-8)
    eq_(DEFAULT_TOLERANCES.sep_warn, 1e-3)
    eq_(DEFAULT_TOLERANCES.sep_fail, 1e-9)
    eq_(DEFAULT_TOLERANCES.angle_tol, 1e-6)


def test_with_overrides_ignores_none():
    tol = DEFAULT_TOLERANCES.with_overrides(sep_warn=1e-2, snap_tol=None)
    eq_(tol.sep_warn, 1e-2)
    eq_(tol.snap_tol, DEFAULT_TOLERANCES.snap_tol)
    ok_(tol != DEFAULT_TOLERANCES)


def test_unknown_override():
    with raises(ValueError):
        DEFAULT_TOLERANCES.with_overrides(colour=1.0)


def test_rejects_non_positive():
    with raises(ValueError):
        TolerancePolicy(snap_tol=0.0)


def test_rejects_inverted_separations():
    with raises(ValueError):
        TolerancePolicy(sep_warn=1e-10, sep_fail=1e-9)


def test_policies_hash_equal():
    eq_(hash(TolerancePolicy()), hash(DEFAULT_TOLERANCES))
    eq_(TolerancePolicy(), DEFAULT_TOLERANCES)
