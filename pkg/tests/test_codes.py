import pytest
from hypothesis import given, strategies as st

import oracles
from invseq.codes import (
    LabeledInterval,
    b_code,
    b_decode,
    b_preimages,
    initial_slice,
    lehmer,
    lehmer_inv,
    slice_invariants_hold,
    slices,
)
from invseq.errors import NoPreimage
from invseq.patterns import class_members
from invseq.stats import asc_set, des_set

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)

SLICES = [
    [((0, 7), 0)],
    [((7, 7), 0), ((0, 5), 1)],
    [((7, 7), 0), ((2, 5), 1), ((0, 0), 2)],
    [((7, 7), 0), ((4, 5), 1), ((2, 2), 2), ((0, 0), 3)],
    [((7, 7), 0), ((4, 5), 1), ((0, 0), 4)],
    [((7, 7), 0), ((4, 4), 4), ((0, 0), 5)],
    [((7, 7), 0), ((0, 0), 6)],
]


def test_lehmer_example():
    assert lehmer((3, 1, 2)) == (0, 1, 1)
    assert lehmer_inv((0, 1, 1)) == (3, 1, 2)


@given(perms)
def test_lehmer_round_trip_and_des_to_asc(p):
    e = lehmer(p)
    assert e == oracles.lehmer(p)
    assert lehmer_inv(e) == p
    assert des_set(p) == asc_set(e)


def test_b_code_worked_example():
    p = (6, 1, 3, 2, 5, 4, 7)
    assert [[iv.as_tuple() for iv in sl] for sl in slices(p)] == SLICES
    assert b_code(p) == (0, 1, 1, 2, 1, 4, 0)
    assert b_decode((0, 1, 1, 2, 1, 4, 0)) == p
    assert initial_slice(3) == (LabeledInterval(0, 3, 0),)


def test_b_code_identity_and_first_letter():
    assert b_code((1, 2, 3, 4))[0] == 0
    with pytest.raises(ValueError):
        LabeledInterval(3, 2, 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_b_code_is_bijective(n):
    codes = {b_code(p) for p in oracles.all_perms(n)}
    assert codes == set(oracles.all_invseqs(n))


@given(perms)
def test_slice_invariants(p):
    assert slice_invariants_hold(p)
    assert b_preimages(b_code(p)) == [p]


def test_b_decode_without_preimage():
    with pytest.raises(NoPreimage):
        b_decode((0, 5))


@pytest.mark.parametrize("n", range(1, 8))
def test_code_images(n):
    assert {lehmer(p) for p in class_members("S-BC", n)} == set(class_members("BC", n))
    assert {lehmer(p) for p in class_members("S-ABC", n)} == set(class_members("ABC", n))
    assert {b_code(p) for p in class_members("S-T", n)} == set(class_members("T", n))
