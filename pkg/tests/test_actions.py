import pytest

import oracles
from invseq.actions import (
    UnionFind,
    foata_strehl,
    gamma_via_orbits,
    has_no_double_fall,
    is_mfs_invariant,
    mfs,
    mfs_orbits,
)
from invseq.errors import NotInvariant
from invseq.patterns import class_members
from invseq.poly import gamma_extract, poly_from_values
from invseq.stats import des


def test_foata_strehl_example():
    assert foata_strehl((4, 6, 8, 3, 2, 5, 7, 1), 3) == (3, 4, 6, 8, 2, 5, 7, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_actions_are_involutions(n):
    for p in oracles.all_perms(n):
        for a in range(1, n + 1):
            assert foata_strehl(foata_strehl(p, a), a) == p
            assert mfs(mfs(p, a), a) == p


def test_mfs_fixes_peaks_and_valleys():
    assert mfs((2, 3, 1), 3) == (2, 3, 1)
    assert mfs((1, 2, 3), 2) == (1, 3, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_full_symmetric_group_gives_eulerian_gamma(n):
    dec = mfs_orbits(oracles.all_perms(n))
    gam = dec.gamma_vector()
    assert oracles.expand_gamma(gam, n - 1) == oracles.eulerian(n)
    assert sum(len(o.members) for o in dec.orbits) == len(oracles.all_perms(n))
    for o in dec.orbits:
        assert has_no_double_fall(o.representative)
        assert oracles.expand_gamma([0] * des(o.representative) + [1], n - 1) == o.des_polynomial()


def test_s3_orbits():
    dec = mfs_orbits(oracles.all_perms(3))
    assert len(dec.orbits) == 3
    assert dec.gamma_vector() == [1, 2]


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("name", ["S-BC", "S-T"])
def test_invariant_classes(name, n):
    members = list(class_members(name, n))
    assert is_mfs_invariant(members) is None
    h = poly_from_values(des(p) for p in members)
    assert gamma_via_orbits(members) == gamma_extract(h, n - 1)


def test_non_invariant_class_is_reported():
    members = list(class_members("S-ABC", 4))
    p, a, image = is_mfs_invariant(members)
    assert image not in members and mfs(p, a) == image
    with pytest.raises(NotInvariant):
        mfs_orbits(members)


def test_union_find():
    uf = UnionFind(range(5))
    uf.union(3, 1)
    uf.union(4, 3)
    assert uf.find(4) == 1 and uf.find(2) == 2
