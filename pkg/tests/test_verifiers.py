from math import comb

import pytest

from primeplaces.ap import APWitness, all_3aps, find_kap
from primeplaces.errors import DomainError
from primeplaces.verifiers import (
    Statement,
    power_3ap_roots,
    square_3ap_search,
    verify_no_4_square_ap,
    verify_no_cube_ap,
    verify_no_power_ap,
)

from oracles import power_ap_triples


@pytest.mark.parametrize("B", [1, 2, 3, 10, 100])
def test_cube_verifier(B):
    rep = verify_no_cube_ap(B)
    assert rep.statement is Statement.NO_CUBE_AP3
    assert rep.counterexamples == ()
    assert rep.triples_checked == comb(B, 3)
    assert rep.holds


def test_cube_verifier_larger():
    rep = verify_no_cube_ap(1000)
    assert rep.holds and rep.triples_checked == comb(1000, 3)


def test_power_verifier_matches_cube_verifier():
    a, b = verify_no_power_ap(3, 200), verify_no_cube_ap(200)
    assert (a.counterexamples, a.triples_checked) == (b.counterexamples, b.triples_checked)


@pytest.mark.parametrize("n, B", [(4, 100), (5, 50), (6, 40), (7, 30)])
def test_power_verifier(n, B):
    rep = verify_no_power_ap(n, B)
    assert rep.holds and rep.triples_checked == comb(B, 3)
    assert rep.statement is Statement.NO_POWER_AP3


def test_power_verifier_big_integer_path():
    # 2 * 40^12 overflows int64, forcing the exact Python-int path
    rep = verify_no_power_ap(12, 40)
    assert rep.holds and rep.triples_checked == comb(40, 3)


def test_power_verifier_domain():
    with pytest.raises(DomainError):
        verify_no_power_ap(2, 10)
    with pytest.raises(DomainError):
        verify_no_cube_ap(0)


def test_scan_agrees_with_triple_loop():
    for n in (1, 2, 3):
        assert power_3ap_roots(n, 40)[0] == power_ap_triples(n, 40)


def test_primitive_and_full_scans_agree():
    for n, B in [(2, 120), (3, 150), (4, 80)]:
        full, _ = power_3ap_roots(n, B)
        prim, _ = power_3ap_roots(n, B, primitive_only=True)
        assert bool(full) == bool(prim)
        assert set(prim) <= set(full)
        # every full solution is a multiple of a primitive one
        from math import gcd
        for x, y, z in full:
            g = gcd(x, y)
            assert (x // g, y // g, z // g) in prim


def test_threaded_scan_matches():
    assert power_3ap_roots(2, 300, threads=3) == power_3ap_roots(2, 300)


def test_four_square_verifier():
    for B in (1, 3, 100, 1000):
        rep = verify_no_4_square_ap(B)
        assert rep.statement is Statement.NO_FOUR_SQUARE_AP and rep.holds
        assert rep.triples_checked == comb(B, 3)


def test_square_3ap_search_examples():
    assert square_3ap_search(7) == [APWitness(1, 24, 3)]
    assert square_3ap_search(4) == []
    expected = sorted(APWitness(x * x, y * y - x * x) for x, y, _ in power_ap_triples(2, 35))
    assert square_3ap_search(35) == expected
    assert [(w.a, w.d) for w in expected] == [
        (1, 24), (4, 96), (9, 216), (16, 384), (25, 600),
        (49, 120), (49, 240), (196, 480), (289, 336)]


def test_square_progressions_rediscovered_by_find_kap():
    B = 60
    squares = {i * i for i in range(1, B + 1)}
    found = set(square_3ap_search(B))
    for w in found:
        assert w.lies_in(squares)
    assert set(all_3aps(squares)) == found
    assert find_kap(squares, 3) == min(found)
