"""Acceptance suite: eleven criteria, all exact, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v -s`` to see the lines
inline; they are also printed during a normal ``pytest -v`` run.
"""
from contextlib import contextmanager

import pytest

import oracles
from invseq import bijections, codes, verify
from invseq.actions import foata_strehl
from invseq.patterns import count_members
from invseq.poly import cubic_residual, dist_poly, fine_binomial_coefficients, is_symmetric
from invseq.stats import profile
from test_mutation import MUTANTS

FIG = (0, 0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6)


@contextmanager
def criterion(capsys, k, text):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\nACCEPTANCE {k:>2} FAIL  {text}")
        raise
    with capsys.disabled():
        print(f"\nACCEPTANCE {k:>2} PASS  {text}")


def _passes(name, maxN):
    r = verify.check(name, maxN)
    assert r.passed, r.to_dict()
    assert r.n_range == (1, maxN)


def test_01_counting_a098746(capsys):
    with criterion(capsys, 1, "|I_n| for (>,-,>), (>=,!=,>), (>,!=,>=) match A098746 for n = 1..10"):
        for name in ("C", "A", "B"):
            assert [count_members(name, n) for n in range(1, 11)] == oracles.A098746


def test_02_cubic_generating_function(capsys):
    with criterion(capsys, 2, "cubic_residual(10) is the zero series"):
        res = cubic_residual(10)
        assert res.order == 10 and res.is_zero()


def test_03_worked_examples(capsys):
    with criterion(capsys, 3, "worked examples reproduced exactly"):
        p = profile(FIG)
        assert p.pk_set == (5, 8)
        assert p.va_set == (4, 7, 10)
        assert p.sf_set == ()
        assert p.su_set == (8,)
        assert p.fix_set == (4, 5, 7, 10)
        assert p.tr_set == (1, 2, 3, 6, 8, 9)
        assert p.tl_set == (11, 12)
        assert p.asc_set == oracles.asc_positions(FIG)
        assert p.des_set == oracles.des_positions(FIG)
        assert p.dt == oracles.descent_top_multiset(FIG)

        assert bijections.Gamma_map(FIG) == (0, 1, 2, 3, 0, 3, 3, 3, 5, 7, 9, 11)
        assert bijections.gamma_map(FIG) == (0, 1, 2, 3, 0, 0, 0, 0, 5, 7, 9, 11)
        assert bijections.psi((0, 1, 0, 2, 1, 3, 3, 2, 3, 4, 3)) == (0, 1, 0, 2, 0, 3, 3, 0, 0, 4, 0)

        perm = (6, 1, 3, 2, 5, 4, 7)
        assert codes.b_code(perm) == (0, 1, 1, 2, 1, 4, 0)
        assert [[iv.as_tuple() for iv in sl] for sl in codes.slices(perm)] == [
            [((0, 7), 0)],
            [((7, 7), 0), ((0, 5), 1)],
            [((7, 7), 0), ((2, 5), 1), ((0, 0), 2)],
            [((7, 7), 0), ((4, 5), 1), ((2, 2), 2), ((0, 0), 3)],
            [((7, 7), 0), ((4, 5), 1), ((0, 0), 4)],
            [((7, 7), 0), ((4, 4), 4), ((0, 0), 5)],
            [((7, 7), 0), ((0, 0), 6)],
        ]
        assert foata_strehl((4, 6, 8, 3, 2, 5, 7, 1), 3) == (3, 4, 6, 8, 2, 5, 7, 1)


def test_04_asc_set_equidistribution(capsys):
    with criterion(capsys, 4, "set-valued Asc equidistribution and alpha keeps Asc, n <= 8"):
        _passes("thm-1.2", 8)


def test_05_gamma_bijection(capsys):
    with criterion(capsys, 5, "gamma bijection complements asc and keeps Dt, n <= 8"):
        _passes("thm-1.3", 8)


def test_06_involution_and_commuting_moves(capsys):
    with criterion(capsys, 6, "Gamma involution with (Dt,tr,tl,pk-su) swap n <= 8; moves commute n <= 6"):
        _passes("lemma-2.8", 8)
        _passes("lemma-2.7", 6)


def test_07_gamma_restricts(capsys):
    with criterion(capsys, 7, "Gamma stabilizes (>,-,>=) with symmetric (asc, Dt), n <= 8"):
        _passes("cor-1.4", 8)


def test_08_gamma_positivity(capsys):
    with criterion(capsys, 8, "gamma-vectors on (>,-,>=) and (>,!=,>) equal the no-double-ascent counts, n <= 8"):
        _passes("prop-1.5", 8)
        _passes("thm-1.6", 8)


def test_09_codes_actions_and_counts(capsys):
    with criterion(capsys, 9, "code images, MFS invariance, orbit gamma, Fine and Schroeder counts, n <= 7"):
        for name in ("prop-3.1", "prop-3.2", "prop-3.7", "lemma-3.4", "lemma-3.8", "lemma-3.3"):
            _passes(name, 7)
        fine = [1, 1, 2, 6, 21, 79, 311, 1265]
        assert [count_members("ABC", n) for n in range(8)] == fine
        assert fine_binomial_coefficients(7) == fine
        for name in ("AB", "BC", "CA"):
            assert [count_members(name, n) for n in range(1, 7)] == [1, 2, 6, 22, 90, 394]


def test_10_negative_findings(capsys):
    with criterion(capsys, 10, "asc polynomials on (>=,-,>) and the five-pattern class are not symmetric"):
        for name, check in (("CA", "nonsym-ca"), ("ABC", "nonsym-abc")):
            found = verify.witness_of(name, 7)
            assert found is not None
            n, coeffs = found
            assert n <= 7 and coeffs == dist_poly(name, n).to_list()
            assert not is_symmetric(dist_poly(name, n), n - 1)
            assert verify.check(check).passed


def test_11_mutation_gate(capsys):
    with criterion(capsys, 11, f"each of {len(MUTANTS)} off-by-one mutants in psi, moves and slices is caught at n <= 6"):
        for module, attr, mutant in MUTANTS:
            with pytest.MonkeyPatch.context() as mp:
                mp.setattr(bijections, "DEBUG_CHECKS", False)
                mp.setattr(module, attr, mutant)
                failed = [r for r in verify.check_all(6) if not r.passed]
            assert failed, f"{mutant.__name__} survived"
            assert all(r.failing_n <= 6 for r in failed)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
