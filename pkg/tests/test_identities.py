from fractions import Fraction

import pytest

from daehee import identities
from daehee.errors import DaeheeError, UnknownIdentityError
from daehee.sequences import bernoulli_poly

F = Fraction
SAMPLES = [F(0), F(1), F(-1), F(1, 2), F(-3, 7), F(22, 7)]


def _instance(check, **params):
    for inst in check.instances:
        if dict(inst.params) == params:
            return inst
    raise AssertionError(f"no instance {params}")


def test_thm4_hand_instance():
    check = identities.verify("thm4-inverse", 2)
    assert check.status == "PASS"
    # D_1 S2(2,1) + D_2 S2(2,2) = -1/2 + 2/3 = 1/6 = B_2
    inst = _instance(check, m=2)
    assert inst.lhs == inst.rhs == F(1, 6)


def test_thm8_hand_instance():
    check = identities.verify("thm8-reciprocal", 2)
    assert check.status == "PASS"
    # D_2/2! = 1/3 = C(1,0) D^_1/1! + C(1,1) D^_2/2! = 1/2 - 1/6
    inst = _instance(check, n=2, side="first")
    assert inst.lhs == F(1, 3)


def test_thm8_has_no_zero_instance():
    assert identities.verify("thm8-reciprocal", 0).instances == []
    assert identities.verify("thm8-reciprocal", 0).passed


def test_thm7_reflection_hand_instance():
    check = identities.verify("thm7-reflection", 1, [0])
    assert check.status == "PASS"
    inst = _instance(check, m=1, x=F(0))
    assert inst.lhs == F(1, 2) == -bernoulli_poly(1, 0)


def test_degenerate_all_pass():
    checks = identities.verify_all(0, [0])
    assert [c.id for c in checks] == identities.catalog_ids()
    assert all(c.passed for c in checks)


def test_empty_samples_default_to_zero():
    check = identities.verify("cor3-stirling", 3, [])
    assert check.x_samples == [F(0)]
    assert len(check.instances) == 4


def test_catalog_covers_every_entry():
    assert set(identities.catalog_ids()) == {
        "thm1-stirling", "cor3-stirling", "thm2-norlund", "thm4-inverse", "rem-thm4-poly",
        "thm5-stirling", "thm6-stirling", "thm7-inverse", "thm7-reflection",
        "rem-thm7-norlund", "thm8-reciprocal", "eq11-norlund", "eq22-rising", "eq3-shift-gf",
    }


def test_full_suite_n12():
    checks = identities.verify_all(12, [0, 1, -1, F(1, 2), F(-3, 7)])
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


@pytest.mark.parametrize("key", identities.catalog_ids())
def test_each_identity_to_25(key):
    assert identities.verify(key, 25, SAMPLES).passed


def test_eq11_exponents():
    check = identities.verify("eq11-norlund", 4, [F(1, 2)])
    exps = sorted({dict(i.params)["exponent"] for i in check.instances})
    assert exps == [-2, -1, 0, 1, 2, 3]


def test_odd_bernoulli_at_half_vanish():
    for m in (1, 3, 5, 7):
        assert bernoulli_poly(m, F(1, 2)) == 0


def test_failure_is_reported_with_both_sides(monkeypatch):
    def broken(ctx, xs):
        yield identities._inst(1, 2, n=0, x=F(1, 2))

    monkeypatch.setitem(identities.CATALOG, "thm1-stirling", ("broken", broken))
    check = identities.verify("thm1-stirling", 0)
    assert check.status == "FAIL"
    assert check.to_dict()["failures"] == [{"n": 0, "x": "1/2", "lhs": "1", "rhs": "2"}]


def test_unknown_id():
    with pytest.raises(UnknownIdentityError) as exc:
        identities.verify("nosuch", 2)
    assert "thm4-inverse" in str(exc.value)
    with pytest.raises(UnknownIdentityError):
        identities.verify_all(2, ids=["thm1-stirling", "nosuch"])


def test_truncation_too_small():
    with pytest.raises(DaeheeError):
        identities.verify("thm1-stirling", 10, trunc=11)
    assert identities.working_trunc(5) == 32
    assert identities.working_trunc(40) == 42


def test_concurrent_run_matches_serial():
    serial = identities.verify_all(8, [F(1, 2)])
    threaded = identities.verify_all(8, [F(1, 2)], workers=4)
    assert [c.to_dict() for c in serial] == [c.to_dict() for c in threaded]
