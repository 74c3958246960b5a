import pytest

from invseq import verify
from invseq.errors import ResourceLimit, UnknownCheck

EXPECTED_NAMES = {
    "thm-1.2", "thm-1.3", "conj-1.1", "cor-1.4", "prop-1.5", "thm-1.6",
    "prop-2.2", "prop-2.3", "prop-2.4", "prop-2.5", "lemma-2.7", "lemma-2.8",
    "fact-star", "eq-ascexpand", "prop-3.1", "prop-3.2", "prop-3.7",
    "lemma-3.3", "lemma-3.4", "lemma-3.8", "oeis-a098746", "oeis-schroeder",
    "oeis-fine", "gf-cubic", "ms-equi", "nonsym-ca", "nonsym-abc",
}


def test_registry_names():
    assert set(verify.check_names()) == EXPECTED_NAMES


@pytest.mark.parametrize("maxN", [1, 6])
def test_check_all_passes(maxN):
    results = verify.check_all(maxN)
    assert [r.name for r in results] == verify.check_names()
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


def test_default_ranges_pass():
    for name in ("thm-1.3", "prop-2.2", "oeis-a098746"):
        r = verify.check(name)
        assert r.passed and r.n_range == (1, verify.REGISTRY[name].default_max)


def test_check_examples():
    assert verify.check("thm-1.3", 7).passed
    r = verify.check("oeis-a098746", 6)
    assert r.passed and r.counterexample is None


def test_unknown_and_limit():
    with pytest.raises(UnknownCheck):
        verify.check("nope")
    with pytest.raises(ResourceLimit):
        verify.check("thm-1.3", 99)


def test_witness_checks_report_location():
    r = verify.check("nonsym-ca", 1)
    assert r.passed and "n=4" in r.detail
    assert verify.witness_of("ABC") == (4, [1, 9, 10, 1])
    assert verify.witness_of("BC") is None


def test_checks_are_order_independent():
    names = ["gf-cubic", "prop-2.3", "lemma-3.3"]
    a = [r.to_dict() for r in verify.check_all(5, names)]
    b = [r.to_dict() for r in reversed(verify.check_all(5, list(reversed(names))))]
    for x, y in zip(a, b):
        x.pop("elapsed"), y.pop("elapsed")
    assert a == b


def test_failure_report_shape(monkeypatch):
    monkeypatch.setitem(verify.REGISTRY, "always-bad", verify.Check("always-bad", "t", 3, lambda n: ((0,) * n, 1, 2) if n >= 2 else None))
    r = verify.check("always-bad")
    assert r.status == "fail" and r.failing_n == 2
    assert r.to_dict()["counterexample"] == {"input": [0, 0], "expected": 1, "got": 2}
