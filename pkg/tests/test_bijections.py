import pytest

import oracles
from invseq import bijections as bij
from invseq.bijections import (
    ALPHA_DOMAIN,
    ALPHA_IMAGE,
    Gamma,
    Gamma_map,
    alpha,
    beta,
    commute_check,
    gamma_inv,
    gamma_map,
    move,
    psi,
    psi_inv,
)
from invseq.errors import NotInClass, NotMovable
from invseq.patterns import CORNER, GAMMA_DOMAIN, PSI_IMAGE, class_members, is_member
from invseq.stats import asc, asc_set, descent_tops, peaks, roles, special_unfixed

FIG = (0, 0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6)
FIG_ROWS = [
    FIG,
    (0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6, 11),
    (0, 0, 2, 3, 3, 0, 3, 3, 3, 4, 6, 11),
    (0, 1, 2, 3, 3, 0, 3, 3, 3, 4, 6, 11),
    (0, 1, 2, 3, 0, 3, 3, 3, 4, 6, 9, 11),
    (0, 1, 2, 3, 0, 3, 3, 4, 6, 7, 9, 11),
    (0, 1, 2, 3, 0, 3, 4, 5, 6, 7, 9, 11),
    (0, 1, 2, 3, 0, 3, 3, 4, 5, 7, 9, 11),
    (0, 1, 2, 3, 0, 3, 3, 3, 5, 7, 9, 11),
]
FIG_FINAL = (0, 1, 2, 3, 0, 0, 0, 0, 5, 7, 9, 11)


def test_alpha_beta_examples():
    assert alpha((0, 1, 0, 0)) == (0, 1, 1, 0)
    assert beta((0, 1, 1, 0)) == (0, 1, 0, 0)
    with pytest.raises(NotInClass):
        alpha((0, 1, 1, 0, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_alpha_is_an_asc_preserving_bijection(n):
    image = set()
    for e in class_members(ALPHA_DOMAIN, n):
        t = alpha(e)
        assert is_member(ALPHA_IMAGE, t)
        assert asc_set(t) == asc_set(e)
        assert beta(t) == e
        image.add(t)
    assert image == set(class_members(ALPHA_IMAGE, n))
    assert {alpha(e) for e in class_members("A", n)} == set(class_members("C", n))


def test_psi_worked_example():
    e = (0, 1, 0, 2, 1, 3, 3, 2, 3, 4, 3)
    assert psi(e) == (0, 1, 0, 2, 0, 3, 3, 0, 0, 4, 0)
    assert psi_inv(psi(e)) == e


@pytest.mark.parametrize("n", range(1, 9))
def test_psi_is_a_bijection(n):
    image = {}
    for e in class_members(GAMMA_DOMAIN, n):
        t = psi(e)
        assert is_member(PSI_IMAGE, t)
        assert psi_inv(t) == e
        image[t] = e
    assert set(image) == set(class_members(PSI_IMAGE, n))


def test_fig_trace_rows():
    b, trace = Gamma(FIG, traced=True)
    assert trace.states == FIG_ROWS
    assert b == FIG_ROWS[-1]
    assert trace.final == b
    assert psi(b) == FIG_FINAL == gamma_map(FIG)
    assert gamma_inv(FIG_FINAL) == FIG
    d = trace.to_dict()
    assert d["steps"][0] == {"mover": 1, "direction": "right", "from": 1, "to": 12, "valueBefore": 0, "valueAfter": 11}
    assert [s["mover"] for s in d["steps"]] == [1, 2, 3, 6, 8, 9, 12, 11]
    assert len(d["states"]) == 9


def test_single_moves():
    e1, trace = move(FIG, 1)
    assert e1 == FIG_ROWS[1] and trace.steps[0].landing == 12
    assert move((0, 0), 1)[0] == (0, 1)
    with pytest.raises(NotMovable):
        move(FIG, 4)
    assert commute_check(FIG, 1, 2)
    with pytest.raises(ValueError):
        commute_check(FIG, 1, 1)


def test_small_gamma_cases():
    assert Gamma_map((0,)) == (0,) and gamma_map((0,)) == (0,)
    assert Gamma_map(Gamma_map((0, 0, 0))) == (0, 0, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_gamma_contract(n):
    dom = list(class_members(GAMMA_DOMAIN, n))
    corner = set(class_members(CORNER, n))
    images = set()
    for e in dom:
        b = Gamma_map(e)
        assert Gamma_map(b) == e
        assert descent_tops(b) == descent_tops(e)
        _, tr, tl = roles(e)
        _, tr_b, tl_b = roles(b)
        assert (len(tr_b), len(tl_b)) == (len(tl), len(tr))
        assert len(peaks(b)) - len(special_unfixed(b)) == len(peaks(e)) - len(special_unfixed(e))
        if e in corner:
            assert b in corner
        t = psi(b)
        assert asc(t) == n - 1 - asc(e)
        assert oracles.descent_top_multiset(t) == oracles.descent_top_multiset(e)
        images.add(t)
    assert images == set(class_members(PSI_IMAGE, n))


@pytest.mark.parametrize("n", range(2, 7))
def test_moves_commute(n):
    for e in class_members(GAMMA_DOMAIN, n):
        fix, tr, tl = roles(e)
        mov = sorted(tr + tl)
        for a in mov:
            for b in mov:
                if a < b:
                    assert commute_check(e, a, b), (e, a, b)


def test_replay_rejects_mismatched_trace():
    _, trace = Gamma(FIG)
    with pytest.raises(bij.InternalInvariant):
        bij.replay((0,) * 12, trace.steps)
